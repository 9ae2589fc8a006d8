#pragma once

#include <string>

#include "schwlab/harmonic.hpp"

namespace schwlab {

// JSON descriptions of maps, the CLI's input format. Unknown fields are
// rejected. Complex scalars are either a number (real) or [re, im].
//
// Evaluator descriptions:
//   {"poly": [c0, c1, ...]}                     polynomial, coeffs by degree
//   {"const": c}
//   {"mobius": {"a": c, "b": c, "c": c, "d": c}}
//   {"blaschke": {"zeros": [c, ...], "eta": c}}
//   {"log" | "exp": <desc>}
//   {"power": {"base": <desc>, "alpha": x}}
//   {"sum" | "product" | "quotient": [<desc>, <desc>]}
//   {"compose": [<outer>, <inner>]}
//
// Map descriptions:
//   {"kind": "f_alpha", "alpha": x}
//   {"kind": "shear", "F": [c0, c1, ...], "omega": <desc>}
//   {"kind": "harmonic_mobius", "mobius": {...}, "c": c}
//   {"kind": "affine", "base": <map>, "a": c}
//   {"kind": "holomorphic", "h": <desc>}
//   {"kind": "parts", "h": <desc>, "g": <desc>}
EvaluatorPtr evaluator_from_json_text(const std::string& text);
HarmonicMap map_from_json_text(const std::string& text);

} // namespace schwlab
