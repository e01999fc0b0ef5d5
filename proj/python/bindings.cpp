#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "gairy/compare.hpp"
#include "gairy/equilibrium.hpp"
#include "gairy/io.hpp"
#include "gairy/pipeline.hpp"
#include "gairy/quadrature.hpp"
#include "gairy/special.hpp"
#include "gairy/verify.hpp"

namespace py = pybind11;
using namespace gairy;

namespace {

PrecisionContext context(int digits) {
  if (digits < 15) throw std::invalid_argument("digits must be at least 15");
  return PrecisionContext::for_target(digits);
}

std::vector<std::string> column(const std::vector<Real>& v, int digits) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(decimal(x, digits));
  return out;
}

py::dict recurrence(const std::string& lambda, const std::string& t, int nmax, int digits) {
  ExactSolution s = [&] {
    py::gil_scoped_release release;
    return solve_exact(WeightParams(lambda, t), nmax, context(digits));
  }();
  PrecisionScope scope(s.ctx.working_digits);
  py::dict d;
  d["lambda"] = lambda;
  d["t"] = t;
  d["nmax"] = nmax;
  d["alpha"] = column(s.recurrence.alpha, digits);
  d["beta"] = column(s.recurrence.beta, digits);
  d["h"] = column(s.recurrence.h, digits);
  d["p"] = column(s.recurrence.p, digits);
  d["logD"] = column(s.recurrence.log_hankel(), digits);
  d["working_digits"] = s.ctx.working_digits;
  return d;
}

std::string moments(const std::string& lambda, const std::string& t, int nmax, int digits) {
  py::gil_scoped_release release;
  return moment_table_to_json(solve_exact(WeightParams(lambda, t), nmax, context(digits)).moments);
}

std::string recurrence_from_moments(const std::string& json, int nmax, int digits) {
  py::gil_scoped_release release;
  MomentTable m = moment_table_from_json(json);
  PrecisionContext ctx = context(digits).with_working(m.digits);
  return recurrence_to_csv(build_recurrence(m, nmax, ctx), digits);
}

py::list verify(const std::string& lambda, const std::string& t, int nmax, int digits, bool toda,
                std::optional<std::string> step) {
  std::vector<VerifyRow> rows;
  {
    py::gil_scoped_release release;
    VerifyOptions opt{toda, std::move(step)};
    rows = verify_suite(WeightParams(lambda, t), nmax, context(digits), opt);
  }
  py::list out;
  for (const auto& r : rows) {
    py::dict d;
    d["identity"] = r.identity;
    d["n"] = r.n;
    d["residual"] = r.residual.str(6);
    d["tolerance"] = r.tolerance.str(3);
    d["ok"] = r.ok();
    out.append(d);
  }
  return out;
}

std::string series(const std::string& quantity, const std::string& n, const std::string& lambda,
                   const std::string& t, int order, bool long_time, int digits) {
  PrecisionContext ctx = context(digits);
  PrecisionScope scope(ctx.working_digits);
  Quantity q = parse_quantity(quantity);
  WeightParams p(lambda, t);
  if (!long_time) return decimal(series_largeN(q, Real(n), p, order, ctx).value, digits);
  Direction d = p.t() > 0 ? Direction::plus : Direction::minus;
  return decimal(series_longtime(q, std::stoi(n), p, d, order, ctx).value, digits);
}

std::string asymptotics(const std::string& quantity, const std::string& lambda,
                        const std::vector<std::string>& t, const std::vector<int>& n, int order,
                        bool long_time, int digits) {
  py::gil_scoped_release release;
  Quantity q = parse_quantity(quantity);
  PrecisionContext ctx = context(digits);
  if (long_time) {
    if (n.size() != 1) throw std::invalid_argument("long-time comparison takes a single n");
    Comparison c = compare_longtime(q, n.front(), WeightParams(lambda, t.front()), t, order, ctx);
    return comparison_to_json(c, WeightParams(lambda, t.front()), digits);
  }
  if (t.size() != 1) throw std::invalid_argument("large-n comparison takes a single t");
  WeightParams p(lambda, t.front());
  return comparison_to_json(compare_asymptotics(q, p, n, order, ctx), p, digits);
}

py::dict equilibrium(const std::string& n, const std::string& lambda, const std::string& t, int digits) {
  PrecisionContext ctx = context(digits);
  PrecisionScope scope(ctx.working_digits);
  EquilibriumSupport s = solve_endpoints(Real(n), WeightParams(lambda, t), ctx);
  py::dict d;
  d["n"] = n;
  d["X"] = decimal(s.X, digits);
  d["Y"] = decimal(s.Y, digits);
  d["a"] = decimal(s.a, digits);
  d["b"] = decimal(s.b, digits);
  d["A"] = decimal(s.A_mult, digits);
  d["residual1"] = s.residual1.str(6);
  d["residual2"] = s.residual2.str(6);
  return d;
}

template <class F>
std::string special(const std::string& x, int digits, F f) {
  PrecisionContext ctx = context(digits);
  PrecisionScope scope(ctx.working_digits);
  return decimal(f(Real(x), ctx), digits);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arbitrary-precision moments, recurrences and asymptotics for x^lambda exp(-x^3/3 + t x).";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);

  m.def("recurrence", &recurrence, py::arg("lam"), py::arg("t"), py::arg("nmax"), py::arg("digits") = 30,
        "Certified alpha, beta, h, p and ln D_n as decimal strings.");
  m.def("moments", &moments, py::arg("lam"), py::arg("t"), py::arg("nmax"), py::arg("digits") = 30,
        "Moment table mu_0..mu_{2 nmax + 2} as a JSON document.");
  m.def("recurrence_from_moments", &recurrence_from_moments, py::arg("moments_json"), py::arg("nmax"),
        py::arg("digits") = 30, "Recurrence CSV built from a stored moment table.");
  m.def("verify", &verify, py::arg("lam"), py::arg("t"), py::arg("nmax"), py::arg("digits") = 30,
        py::arg("toda") = false, py::arg("step") = py::none(), "Identity residuals, one dict per row.");
  m.def("series", &series, py::arg("quantity"), py::arg("n"), py::arg("lam"), py::arg("t"),
        py::arg("order") = 0, py::arg("long_time") = false, py::arg("digits") = 30,
        "Truncated large-n or long-time expansion.");
  m.def("asymptotics", &asymptotics, py::arg("quantity"), py::arg("lam"), py::arg("t"), py::arg("n"),
        py::arg("order") = 0, py::arg("long_time") = false, py::arg("digits") = 30,
        "Exact-vs-series comparison as a JSON document.");
  m.def("equilibrium", &equilibrium, py::arg("n"), py::arg("lam"), py::arg("t"), py::arg("digits") = 30,
        "Endpoints of the equilibrium support and the Lagrange multiplier.");
  m.def("log_gamma", [](const std::string& x, int digits) { return special(x, digits, log_gamma); },
        py::arg("x"), py::arg("digits") = 30);
  m.def("log_barnes_g", [](const std::string& x, int digits) { return special(x, digits, log_barnes_g); },
        py::arg("x"), py::arg("digits") = 30);
  m.def("zeta_prime_minus_one", [](int digits) {
        PrecisionContext ctx = context(digits);
        PrecisionScope scope(ctx.working_digits);
        return decimal(zeta_prime_minus_one(ctx), digits);
      }, py::arg("digits") = 30);
}
