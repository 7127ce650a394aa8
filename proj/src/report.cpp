#include "hpm/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "hpm/error.hpp"

namespace hpm::report {

namespace {

std::string render(const BigFloat& x, int significant) {
  return significant > 0 ? x.to_string(significant) : x.to_string();
}

/// Abscissae are exact inputs; drop the padding zeros.
std::string abscissa(const BigFloat& x) {
  std::string text = x.to_string();
  if (text.find('.') == std::string::npos || text.find('e') != std::string::npos) return text;
  text.erase(text.find_last_not_of('0') + 1);
  if (text.back() == '.') text.pop_back();
  return text;
}

Json record_json(const RootRecord& rec) {
  Json j;
  j["D"] = rec.D;
  j["root_s"] = rec.root_s.to_string();
  j["two_f2"] = rec.two_f2().to_string();
  if (rec.delta) {
    j["delta"] = rec.delta->to_string();
    j["log10_delta"] = rec.delta->is_zero() ? std::string("-inf") : log10(*rec.delta).to_string();
  } else {
    j["delta"] = nullptr;
    j["log10_delta"] = nullptr;
  }
  j["precision_used"] = rec.precision_used;
  return j;
}

}  // namespace

Json symbolic_series_json(const SymbolicSeries& series) {
  Json coeffs = Json::array();
  for (int j = 0; j <= series.nmax; ++j) {
    Json c;
    c["j"] = j;
    c["poly"] = series[j].to_string();
    Json powers = Json::array();
    for (const auto& r : series[j].coeffs()) powers.push_back(r.get_str());
    c["coeffs"] = std::move(powers);
    coeffs.push_back(std::move(c));
  }
  Json out;
  out["nmax"] = series.nmax;
  out["symbolic"] = true;
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json numeric_series_json(const NumericSeries& series) {
  Json coeffs = Json::array();
  for (int j = 0; j <= series.nmax; ++j) coeffs.push_back(Json{{"j", j}, {"value", series[j].to_string()}});
  Json out;
  out["nmax"] = series.nmax;
  out["symbolic"] = false;
  out["slope_s"] = series.slope_s.to_string();
  out["precision"] = series.precision.digits();
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json slope_json(const RootSequence& seq) {
  const RootRecord& last = seq.last();
  Json j;
  j["d"] = seq.d;
  j["D"] = last.D;
  j["root_s"] = last.root_s.to_string();
  j["two_f2"] = last.two_f2().to_string();
  j["precision_used"] = last.precision_used;
  j["skipped"] = seq.skipped;
  return j;
}

Json fit_json(const ConvergenceFit& fit) {
  Json j;
  j["slope_per_D"] = fit.slope_per_D;
  j["level"] = fit.level;
  j["Dmin"] = fit.Drange.first;
  j["Dmax"] = fit.Drange.second;
  j["points"] = fit.points;
  return j;
}

Json sequence_json(const RootSequence& seq, int fit_min, int fit_max) {
  Json j = slope_json(seq);
  Json records = Json::array();
  for (const auto& rec : seq.records) records.push_back(record_json(rec));
  j["records"] = std::move(records);
  try {
    j["fit"] = fit_json(convergence_fit(seq, fit_min, fit_max));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InsufficientData) throw;
    j["fit"] = nullptr;
  }
  return j;
}

Json pade_json(const PadeApproximant& P) {
  Json j;
  j["M"] = P.M;
  j["N"] = P.N;
  j["slope_s"] = P.slope_s.to_string();
  j["two_f2"] = (P.slope_s * 2).to_string();
  j["precision"] = P.precision.digits();
  Json a = Json::array();
  for (const auto& v : P.a) a.push_back(v.to_string());
  Json b = Json::array();
  for (const auto& v : P.b) b.push_back(v.to_string());
  j["a"] = std::move(a);
  j["b"] = std::move(b);
  return j;
}

Json table_json(const std::vector<TableRow>& rows, int significant) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["x"] = abscissa(row.x);
    if (row.value) {
      j["u"] = render(row.value->u, significant);
      j["minus_uprime"] = render(-row.value->uprime, significant);
    } else {
      j["error"] = row.error;
    }
    out.push_back(std::move(j));
  }
  return out;
}

std::string table_csv(const std::vector<TableRow>& rows, int significant) {
  std::ostringstream os;
  os << "x,u,minus_uprime,error\n";
  for (const auto& row : rows) {
    os << abscissa(row.x) << ",";
    if (row.value) {
      os << render(row.value->u, significant) << "," << render(-row.value->uprime, significant) << ",\n";
    } else {
      os << ",," << row.error << "\n";
    }
  }
  return os.str();
}

std::string figure_csv(const std::vector<RootSequence>& sequences) {
  std::vector<std::tuple<int, int, const RootRecord*>> rows;
  for (const auto& seq : sequences) {
    if (seq.records.size() < 2) {
      throw Error(ErrorKind::InsufficientData, "sequence d=" + std::to_string(seq.d) + " has fewer than 2 records");
    }
    for (const auto& rec : seq.records) {
      if (rec.D >= 3 && rec.delta) rows.emplace_back(rec.D, seq.d, &rec);
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::ostringstream os;
  os << kFigureColumns << "\n";
  for (const auto& [D, d, rec] : rows) {
    os << D << "," << d << "," << rec->root_s.to_string() << "," << rec->two_f2().to_string() << ","
       << rec->delta->to_string() << ","
       << (rec->delta->is_zero() ? std::string("-inf") : log10(*rec->delta).to_string()) << "\n";
  }
  return os.str();
}

}  // namespace hpm::report
