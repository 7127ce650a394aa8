#pragma once

#include <array>
#include <string>

#include "hpm/bigfloat.hpp"

namespace hpm::testing {

/// Published Thomas-Fermi values u(x) and -u'(x) as printed.
struct TableEntry {
  const char* x;
  const char* u;
  const char* minus_uprime;
};

inline constexpr std::array<TableEntry, 13> kReferenceTable{{
    {"1", "0.424008", "0.273989"},
    {"5", "0.078808", "0.023560"},
    {"10", "0.024315", "0.0046028"},
    {"20", "0.005786", "0.00064727"},
    {"30", "0.002257", "0.00018069"},
    {"40", "0.001114", "0.00006969"},
    {"50", "0.000633", "0.00003251"},
    {"60", "0.000394", "0.0000172"},
    {"70", "0.0002626", "0.000009964"},
    {"80", "0.0001838", "0.000006172"},
    {"90", "0.0001338", "0.000004029"},
    {"100", "0.0001005", "0.000002743"},
    {"1000", "0.000000137", "0.00000000040"},
}};

/// |value - printed| within one unit of the printed value's last digit.
inline bool within_last_digit(const BigFloat& value, const std::string& printed) {
  const auto point = printed.find('.');
  const long decimals = point == std::string::npos ? 0 : static_cast<long>(printed.size() - point - 1);
  const Precision p = value.precision();
  const BigFloat unit = BigFloat::pow10(-decimals, p);
  return abs(value - BigFloat::parse(printed, p)) <= unit;
}

}  // namespace hpm::testing
