#include "gairy/series.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "gairy/special.hpp"

namespace gairy {
namespace {

using S = SpecialConstant;

// Large n, v = n.
const SeriesTable kX{{
                         {"4", -1, 1, 3},
                         {"4*t/3", -2, -1, 3},
                         {"2*l/3", -1, -2, 3},
                         {"-2*l*t/9", -2, -4, 3},
                         {"-2*(t^3 - 90*l^2)/405", -1, -5, 3},
                         {"2*t*(t^3 + 720*l^2)/1215", -2, -7, 3},
                     },
                     -8, 3};

const SeriesTable kY{{
                         {"5*l/3", -1, -2, 3},
                         {"5*l*t/3", -2, -4, 3},
                         {"-5*l^2/9", -1, -5, 3},
                         {"4*l*t^2/27", 0, -2, 1},
                         {"-10*l^2*t/9", -2, -7, 3},
                         {"5*l*(13*t^3 + 15*l^2)/486", -1, -8, 3},
                         {"-4*l^2*t^2/27", 0, -3, 1},
                     },
                     -10, 3};

const SeriesTable kA{{
                         {"-2/3", 0, 1, 1, true},
                         {"2*(1 + ln(10))/3", 0, 1, 1},
                         {"-2*t", -1, 1, 3},
                         {"-l/3", 0, 0, 1, true},
                         {"l*ln(10)/3", 0, 0, 1},
                         {"-t^2/3", -2, -1, 3},
                         {"-l*t/3", -1, -2, 3},
                         {"-l^2/2", 0, -1, 1},
                         {"l*t^2/18", -2, -4, 3},
                         {"t*(t^3 - 360*l^2)/1620", -1, -5, 3},
                     },
                     -2, 1};

const SeriesTable kAlpha{{
                             {"2", -1, 1, 3},
                             {"2*t/3", -2, -1, 3},
                             {"(l + 1)/3", -1, -2, 3},
                             {"-(l + 1)*t/9", -2, -4, 3},
                             {"-(t^3 - 45*(l - 1)*(2*l + 1))/405", -1, -5, 3},
                             {"t*(t^3 + 30*(24*l^2 + 3*l - 4))/1215", -2, -7, 3},
                             {"(l + 1)*(t^3 - 15*(7*l^2 - l - 2))/486", -1, -8, 3},
                         },
                         -3, 1};

const SeriesTable kBeta{{
                            {"1", -2, 2, 3},
                            {"t/15", 0, 0, 1},
                            {"l/3", -2, -1, 3},
                            {"t^2/90", -1, -2, 3},
                            {"-(t^3 + 180*l^2 - 45)/405", -2, -4, 3},
                            {"-l*t^2/270", -1, -5, 3},
                            {"-2*t*(15*l^2 - 4)/405", 0, -2, 1},
                            {"l*(2*t^3 + 345*l^2 - 90)/1215", -2, -7, 3},
                            {"t^2*(t^3 - 3600*l^2 + 870)/36450", -1, -8, 3},
                        },
                        -3, 1};

const SeriesTable kP{{
                         {"-3/2", -1, 4, 3},
                         {"-t", -2, 2, 3},
                         {"-l", -1, 1, 3},
                         {"-t^2/30", 0, 0, 1},
                         {"-l*t/3", -2, -1, 3},
                         {"-(t^3 - 90*l^2 + 15)/270", -1, -2, 3},
                         {"t*(t^3 + 720*l^2 - 180)/1620", -2, -4, 3},
                         {"l*(t^3 - 105*l^2 + 15)/810", -1, -5, 3},
                     },
                     -2, 1};

const SeriesTable kLogD{{
                            {"1/3", 0, 2, 1, true},
                            {"-(1/2 + ln(10)/3)", 0, 2, 1},
                            {"3*t/2", -1, 4, 3},
                            {"l/3", 0, 1, 1, true},
                            {"ln(2*pi) - l*(1 + ln(10))/3", 0, 1, 1},
                            {"t^2/2", -2, 2, 3},
                            {"l*t", -1, 1, 3},
                            {"(3*l^2 - 1)/6", 0, 0, 1, true},
                            {"1", 0, 0, 1, false, S::c0},
                            {"l*t^2/6", -2, -1, 3},
                            {"t*(t^3 - 360*l^2 + 60)/1080", -1, -2, 3},
                            {"l*(8*l^2 - 3)/36", 0, -1, 1},
                            {"-t^2*(t^3 + 1800*l^2 - 450)/8100", -2, -4, 3},
                            {"-l*t*(t^3 - 420*l^2 + 60)/3240", -1, -5, 3},
                        },
                        -2, 1};

const SeriesTable kLogH{{
                            {"2/3", 0, 1, 1, true},
                            {"-2*(1 + ln(10))/3", 0, 1, 1},
                            {"2*t", -1, 1, 3},
                            {"(l + 1)/3", 0, 0, 1, true},
                            {"ln(2*pi) - (l + 1)*ln(10)/3", 0, 0, 1},
                            {"t^2/3", -2, -1, 3},
                            {"(l + 1)*t/3", -1, -2, 3},
                            {"(9*l^2 + 3*l - 1)/18", 0, -1, 1},
                            {"-(l + 1)*t^2/18", -2, -4, 3},
                            {"-(t^4 - 180*(l - 1)*(2*l + 1)*t)/1620", -1, -5, 3},
                        },
                        -2, 1};

// t -> +inf, v = t.
const SeriesTable kAlphaPlus{{
                                 {"1", 0, 1, 2},
                                 {"-(2*n - 2*l + 1)/4", 0, -1, 1},
                                 {"-(12*n^2 + 12*n*(1 - 4*l) + 12*l^2 - 24*l + 5)/32", 0, -5, 2},
                             },
                             -4, 1};
const SeriesTable kBetaPlus{{
                                {"n/2", 0, -1, 2},
                                {"n*(n - 2*l)/4", 0, -2, 1},
                                {"5*n*(4*n^2 - 24*n*l + 12*l^2 + 1)/64", 0, -7, 2},
                            },
                            -5, 1};
const SeriesTable kPPlus{{
                             {"-n", 0, 1, 2},
                             {"n*(n - 2*l)/4", 0, -1, 1},
                             {"n*(4*n^2 - 24*n*l + 12*l^2 + 1)/32", 0, -5, 2},
                         },
                         -4, 1};
const SeriesTable kLogDPlus{{
                                {"2*n/3", 0, 3, 2},
                                {"-n*(n - 2*l)/4", 0, 0, 1, true},
                                {"1", 0, 0, 1, false, S::C1_tilde},
                                {"n*(4*n^2 - 24*n*l + 12*l^2 + 1)/48", 0, -3, 2},
                            },
                            -3, 1};
const SeriesTable kLogHPlus{{
                                {"2/3", 0, 3, 2},
                                {"-(2*n - 2*l + 1)/4", 0, 0, 1, true},
                                {"1", 0, 0, 1, false, S::C1_hat},
                                {"(12*n^2 + 12*n*(1 - 4*l) + 12*l^2 - 24*l + 5)/48", 0, -3, 2},
                            },
                            -3, 1};

// t -> -inf, v = t for powers and -t inside the logarithm.
const SeriesTable kAlphaMinus{{
                                  {"-(2*n + l + 1)", 0, -1, 1},
                                  {"-(2*n + l + 1)*(10*n^2 + 10*n*(l + 1) + (l + 2)*(l + 3))", 0, -4, 1},
                              },
                              -7, 1};
const SeriesTable kBetaMinus{{
                                 {"n*(n + l)", 0, -2, 1},
                                 {"4*n*(n + l)*(5*n^2 + 5*n*l + l^2 + 1)", 0, -5, 1},
                             },
                             -8, 1};
const SeriesTable kPMinus{{
                              {"n*(n + l)", 0, -1, 1},
                              {"n*(n + l)*(5*n^2 + 5*n*l + l^2 + 1)", 0, -4, 1},
                          },
                          -7, 1};
const SeriesTable kLogDMinus{{
                                 {"-n*(n + l)", 0, 0, 1, true},
                                 {"1", 0, 0, 1, false, S::C2_tilde},
                                 {"n*(n + l)*(5*n^2 + 5*n*l + l^2 + 1)/3", 0, -3, 1},
                             },
                             -6, 1};
const SeriesTable kLogHMinus{{
                                 {"-(2*n + l + 1)", 0, 0, 1, true},
                                 {"1", 0, 0, 1, false, S::C2_hat},
                                 {"(2*n + l + 1)*(10*n^2 + 10*n*(l + 1) + (l + 2)*(l + 3))/3", 0, -3, 1},
                             },
                             -6, 1};

// Recursive-descent evaluator for the coefficient strings.
class CoefParser {
 public:
  CoefParser(std::string_view s, const Real& n, const Real& l, const Real& t)
      : s_(s), n_(n), l_(l), t_(t) {}

  Real parse() {
    Real v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("coefficient '") + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Real expr() {
    Real v = term();
    while (true) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  Real term() {
    Real v = unary();
    while (true) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) v = v / unary();
      else return v;
    }
  }
  Real unary() {
    if (eat('-')) return -unary();
    return power();
  }
  Real power() {
    Real base = primary();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    return pow(base, std::stol(std::string(s_.substr(start, pos_ - start))));
  }
  Real primary() {
    skip();
    if (eat('(')) {
      Real v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Real(std::stol(std::string(s_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view id = s_.substr(start, pos_ - start);
    if (id == "n") return n_;
    if (id == "l") return l_;
    if (id == "t") return t_;
    if (id == "pi") return const_pi();
    if (id == "ln") {
      if (!eat('(')) fail("ln needs '('");
      Real v = expr();
      if (!eat(')')) fail("missing ')'");
      return log(v);
    }
    fail("unknown symbol");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const Real& n_;
  const Real& l_;
  const Real& t_;
};

const std::map<Quantity, std::string_view> kNames = {
    {Quantity::alpha, "alpha"}, {Quantity::beta, "beta"},     {Quantity::p, "p"},
    {Quantity::lnD, "lnD"},     {Quantity::lnh, "lnh"},       {Quantity::A_mult, "A_mult"},
    {Quantity::X, "X"},         {Quantity::Y, "Y"}};

Real special_value(SpecialConstant s, const Real& n, const WeightParams& params,
                   const PrecisionContext& ctx) {
  Real lambda = params.lambda();
  switch (s) {
    case S::none:
      return Real(0);
    case S::c0:
      return constant_c0(params, ctx);
    case S::C1_tilde:
      return n / 2 * log(const_pi()) - n * (n - 1) / 2 * const_log2() +
             log_barnes_g(n + 1, ctx);
    case S::C2_tilde:
      return log_barnes_g(n + 1, ctx) + log_barnes_g(n + lambda + 1, ctx) -
             log_barnes_g(lambda + 1, ctx);
    case S::C1_hat:
      return log(const_pi()) / 2 - n * const_log2() + log_gamma(n + 1, ctx);
    case S::C2_hat:
      return log_gamma(n + 1, ctx) + log_gamma(n + lambda + 1, ctx);
  }
  return Real(0);
}

struct Evaluation {
  Real value;
  double truncation_order;
};

Evaluation evaluate(const SeriesTable& table, int order, const Real& n, const Real& v,
                    const WeightParams& params, const PrecisionContext& ctx) {
  const int size = static_cast<int>(table.terms.size());
  if (order < 0 || order > size) {
    throw std::invalid_argument("series order must be between 0 and " + std::to_string(size));
  }
  if (order == 0) order = size;
  Real lambda = params.lambda();
  Real t = params.t();
  Real kappa = cbrt(Real(10));
  Real log_v = log(abs(v));
  Real sum(0);
  for (int i = 0; i < order; ++i) {
    const SeriesTerm& term = table.terms[i];
    if (term.special != S::none) {
      sum += special_value(term.special, n, params, ctx);
      continue;
    }
    Real c = eval_coefficient(term.coef, n, lambda, t);
    if (term.kappa_power != 0) c = c * pow(kappa, static_cast<long>(term.kappa_power));
    if (term.num != 0) {
      c = term.den == 1 ? c * pow(v, static_cast<long>(term.num))
                        : c * exp(log_v * term.num / term.den);
    }
    if (term.log_var) c = c * log_v;
    sum += c;
  }
  double next = order < size ? table.terms[order].exponent()
                             : static_cast<double>(table.remainder_num) / table.remainder_den;
  return {sum, next};
}

}  // namespace

std::string_view to_string(Quantity q) { return kNames.at(q); }

Quantity parse_quantity(std::string_view name) {
  for (const auto& [q, s] : kNames) {
    if (s == name) return q;
  }
  throw std::invalid_argument("unknown quantity '" + std::string(name) +
                              "' (alpha, beta, p, lnD, lnh, A_mult, X, Y)");
}

std::string_view to_string(Direction d) { return d == Direction::plus ? "plus" : "minus"; }

Direction parse_direction(std::string_view name) {
  if (name == "plus") return Direction::plus;
  if (name == "minus") return Direction::minus;
  throw std::invalid_argument("direction must be 'plus' or 'minus'");
}

const SeriesTable& large_n_table(Quantity q) {
  switch (q) {
    case Quantity::alpha: return kAlpha;
    case Quantity::beta: return kBeta;
    case Quantity::p: return kP;
    case Quantity::lnD: return kLogD;
    case Quantity::lnh: return kLogH;
    case Quantity::A_mult: return kA;
    case Quantity::X: return kX;
    case Quantity::Y: return kY;
  }
  throw std::invalid_argument("unknown quantity");
}

const SeriesTable& long_time_table(Quantity q, Direction d) {
  const bool plus = d == Direction::plus;
  switch (q) {
    case Quantity::alpha: return plus ? kAlphaPlus : kAlphaMinus;
    case Quantity::beta: return plus ? kBetaPlus : kBetaMinus;
    case Quantity::p: return plus ? kPPlus : kPMinus;
    case Quantity::lnD: return plus ? kLogDPlus : kLogDMinus;
    case Quantity::lnh: return plus ? kLogHPlus : kLogHMinus;
    default:
      throw std::invalid_argument("no long-time expansion for " + std::string(to_string(q)));
  }
}

Real eval_coefficient(std::string_view expr, const Real& n, const Real& lambda, const Real& t) {
  return CoefParser(expr, n, lambda, t).parse();
}

Real constant_c0(const WeightParams& params, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working_digits);
  Real l = params.lambda();
  Real t = params.t();
  return t * t * t / 90 + 2 * zeta_prime_minus_one(ctx) - log_barnes_g(l + 1, ctx) +
         l / 2 * log(2 * const_pi()) - log(Real(3)) / 24 -
         (4 * l * l - 1) / 8 * log(Real(5) / 3);
}

SeriesValue series_largeN(Quantity q, const Real& n, const WeightParams& params, int order,
                          const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working_digits);
  if (!(n >= 1)) throw std::invalid_argument("series_largeN: n must be at least 1");
  if (!(params.lambda() > -1)) throw DomainError("lambda must exceed -1");
  Evaluation e = evaluate(large_n_table(q), order, n, n, params, ctx);
  int used = order == 0 ? static_cast<int>(large_n_table(q).terms.size()) : order;
  return {q, n, params, used, e.value, e.truncation_order, params.lambda() < 0};
}

SeriesValue series_longtime(Quantity q, int n, const WeightParams& params, Direction d, int order,
                            const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working_digits);
  if (n < 0) throw std::invalid_argument("series_longtime: n must be non-negative");
  if (!(params.lambda() > -1)) throw DomainError("lambda must exceed -1");
  Real t = params.t();
  if (d == Direction::plus ? !(t > 0) : !(t < 0)) {
    throw std::invalid_argument("series_longtime: direction '" + std::string(to_string(d)) +
                                "' needs t of matching sign");
  }
  const SeriesTable& table = long_time_table(q, d);
  Evaluation e = evaluate(table, order, Real(n), t, params, ctx);
  int used = order == 0 ? static_cast<int>(table.terms.size()) : order;
  return {q, Real(n), params, used, e.value, e.truncation_order, false};
}

}  // namespace gairy
