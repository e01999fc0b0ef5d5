#include "gairy/io.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace gairy {
namespace {

using nlohmann::json;

std::string grid_label(const Comparison& c) { return c.long_time ? "t" : "n"; }

std::string exponent_text(double v) {
  if (!std::isfinite(v)) return "";
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

int round_trip_digits(const Real& x) {
  return 1 + static_cast<int>(std::ceil(static_cast<double>(x.bits()) * 0.30102999566398120));
}

std::string decimal(const Real& x, int digits) { return x.str(digits); }

std::string moment_table_to_json(const MomentTable& table) {
  json doc;
  doc["lambda"] = table.params.lambda_text();
  doc["t"] = table.params.t_text();
  doc["digits"] = table.digits;
  json mu = json::array();
  for (const auto& m : table.mu) mu.push_back(m.str(round_trip_digits(m)));
  doc["mu"] = std::move(mu);
  return doc.dump(2) + "\n";
}

MomentTable moment_table_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("moment table is not valid JSON: ") + e.what());
  }
  for (const char* key : {"lambda", "t", "digits", "mu"}) {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("moment table lacks '") + key + "'");
  }
  if (!doc["lambda"].is_string() || !doc["t"].is_string() || !doc["mu"].is_array()) {
    throw std::invalid_argument("moment table: lambda and t must be strings, mu an array of strings");
  }
  MomentTable table{WeightParams(doc["lambda"].get<std::string>(), doc["t"].get<std::string>()),
                    doc["digits"].get<int>(), {}, 0.0, 0};
  if (table.digits < 15) throw std::invalid_argument("moment table digits must be at least 15");
  PrecisionScope scope(table.digits);
  for (const auto& v : doc["mu"]) {
    if (!v.is_string()) throw std::invalid_argument("moment values must be decimal strings");
    table.mu.emplace_back(v.get<std::string>());
  }
  if (table.mu.size() < 3) throw std::invalid_argument("moment table needs at least mu_0..mu_2");
  return table;
}

std::string recurrence_to_csv(const RecurrenceTable& table, int digits) {
  std::ostringstream os;
  os << "n,alpha,beta,h,p\n";
  for (int n = 0; n <= table.nmax; ++n) {
    os << n << ',' << decimal(table.alpha[n], digits) << ',' << decimal(table.beta[n], digits) << ','
       << decimal(table.h[n], digits) << ',' << decimal(table.p[n], digits) << '\n';
  }
  return os.str();
}

std::string recurrence_to_json(const RecurrenceTable& table, int digits) {
  json doc;
  doc["lambda"] = table.params.lambda_text();
  doc["t"] = table.params.t_text();
  doc["digits"] = digits;
  doc["nmax"] = table.nmax;
  auto column = [&](const std::vector<Real>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(decimal(x, digits));
    return a;
  };
  doc["alpha"] = column(table.alpha);
  doc["beta"] = column(table.beta);
  doc["h"] = column(table.h);
  doc["p"] = column(table.p);
  doc["logD"] = column(table.log_hankel());
  return doc.dump(2) + "\n";
}

std::string comparison_to_csv(const Comparison& c, int digits) {
  std::ostringstream os;
  os << grid_label(c) << ",exact,series,error,local_exponent\n";
  for (const auto& r : c.rows) {
    os << decimal(r.grid, 12) << ',' << decimal(r.exact, digits) << ',' << decimal(r.series, digits)
       << ',' << decimal(r.error, 6) << ',' << exponent_text(r.local_exponent) << '\n';
  }
  os << "expected_exponent,,,," << exponent_text(c.truncation_order) << '\n';
  os << "fitted_exponent,,,," << exponent_text(c.fitted_exponent) << '\n';
  return os.str();
}

std::string comparison_to_json(const Comparison& c, const WeightParams& params, int digits) {
  json doc;
  doc["quantity"] = std::string(to_string(c.quantity));
  doc["regime"] = c.long_time ? std::string("long_time_") + std::string(to_string(c.direction))
                              : std::string("large_n");
  doc["lambda"] = params.lambda_text();
  if (!c.long_time) doc["t"] = params.t_text();
  doc["order"] = c.order;
  doc["expected_exponent"] = exponent_text(c.truncation_order);
  doc["fitted_exponent"] = exponent_text(c.fitted_exponent);
  doc["exponent_matches"] = c.exponent_matches();
  doc["outside_derivation_regime"] = c.outside_regime;
  json rows = json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{grid_label(c), decimal(r.grid, 12)},
                    {"exact", decimal(r.exact, digits)},
                    {"series", decimal(r.series, digits)},
                    {"error", decimal(r.error, 6)},
                    {"local_exponent", exponent_text(r.local_exponent)}});
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string equilibrium_header() { return "n,X,Y,a,b,A,residual1,residual2\n"; }

std::string equilibrium_row(const EquilibriumSupport& s, int digits) {
  std::ostringstream os;
  os << decimal(s.n, 12) << ',' << decimal(s.X, digits) << ',' << decimal(s.Y, digits) << ','
     << decimal(s.a, digits) << ',' << decimal(s.b, digits) << ',' << decimal(s.A_mult, digits)
     << ',' << decimal(s.residual1, 6) << ',' << decimal(s.residual2, 6) << '\n';
  return os.str();
}

}  // namespace gairy
