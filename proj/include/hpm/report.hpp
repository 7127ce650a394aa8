#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hpm/hankel.hpp"
#include "hpm/pade.hpp"
#include "hpm/series.hpp"

namespace hpm::report {

// Machine-readable output shared by the CLI and the regression tests.
// Every number is written as a decimal string at the full precision of the
// value; JSON objects keep insertion order so identical inputs give
// byte-identical reports.

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Column order of the convergence CSV.
inline constexpr const char* kFigureColumns = "D,d,root_s,two_f2,delta,log10_delta";

Json symbolic_series_json(const SymbolicSeries& series);
Json numeric_series_json(const NumericSeries& series);

/// {"d", "D", "root_s", "two_f2", "precision_used", "skipped"}
Json slope_json(const RootSequence& seq);

/// slope_json plus "records" and, when enough data exists, "fit".
Json sequence_json(const RootSequence& seq, int fit_min, int fit_max);

Json fit_json(const ConvergenceFit& fit);
Json pade_json(const PadeApproximant& P);

/// Rows as {"x", "u", "minus_uprime"} or {"x", "error"}. A positive
/// `significant` rounds the printed values to that many digits.
Json table_json(const std::vector<TableRow>& rows, int significant = 0);
std::string table_csv(const std::vector<TableRow>& rows, int significant = 0);

/// One row per record with a defined delta (D >= 3), sorted by D then d.
/// Throws InsufficientData if any sequence has fewer than two records.
std::string figure_csv(const std::vector<RootSequence>& sequences);

}  // namespace hpm::report
