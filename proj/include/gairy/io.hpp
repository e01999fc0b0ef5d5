#pragma once

// Decimal-string interchange: CSV tables and JSON documents. Binary floats
// never appear in any output.

#include <string>
#include <string_view>

#include "gairy/compare.hpp"
#include "gairy/equilibrium.hpp"
#include "gairy/recurrence.hpp"

namespace gairy {

/// Enough significant digits to reproduce x bit for bit.
int round_trip_digits(const Real& x);

/// Scientific decimal with `digits` significant digits.
std::string decimal(const Real& x, int digits);

/// {"lambda", "t", "digits", "mu": [...]}; mu at full stored precision.
std::string moment_table_to_json(const MomentTable& table);
MomentTable moment_table_from_json(std::string_view text);

/// Header n,alpha,beta,h,p; rows n = 0..nmax.
std::string recurrence_to_csv(const RecurrenceTable& table, int digits);
/// Adds p(nmax+1) and ln D_n next to the CSV columns.
std::string recurrence_to_json(const RecurrenceTable& table, int digits);

std::string comparison_to_csv(const Comparison& c, int digits);
std::string comparison_to_json(const Comparison& c, const WeightParams& params, int digits);

std::string equilibrium_header();
std::string equilibrium_row(const EquilibriumSupport& s, int digits);

}  // namespace gairy
