#pragma once

// Function-spec files: a JSON document listing the dimension and the harmonic
// components of a finite Peter-Weyl sum.
//
//   {
//     "n": 2,
//     "components": [
//       { "p": 1, "q": 1,
//         "terms": [ { "alpha": [1,0], "beta": [0,1], "re": 1.0, "im": 0.0 } ] }
//     ]
//   }
//
// Validation is strict: unknown fields are rejected, exponent vectors must
// have length n, and every component must be exactly harmonic of its labelled
// bidegree (no silent projection).

#include <string>

#include "mhb/mh_function.hpp"

namespace mhb {

MhFunction parse_function_spec(const std::string& json_text);
MhFunction load_function_spec(const std::string& path);

}  // namespace mhb
