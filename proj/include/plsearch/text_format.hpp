#pragma once

#include <string>

namespace plsearch {

/// Six significant digits, printf "%.6g" style, used in every CSV and report.
std::string format_g6(double value);

}  // namespace plsearch
