#pragma once

#include <string>

#include "schwlab/criteria.hpp"
#include "schwlab/geometry.hpp"
#include "schwlab/norm.hpp"

namespace schwlab {

// Hand-rolled JSON emission: numbers carry 17 significant digits and keys a
// fixed order, so identical inputs produce byte-identical reports.
std::string json_number(double v);
std::string json_complex(Complex z); // [re, im]

std::string to_json(const GridSpec& grid);
std::string to_json(const NormEstimate& estimate);
std::string to_json(const CriterionVerdict& verdict);
std::string to_json(const InjectivityReport& report);

std::string verdict_name(ScanVerdict verdict);

} // namespace schwlab
