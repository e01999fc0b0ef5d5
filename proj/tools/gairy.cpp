// gairy: tables, identity checks and asymptotic diagnostics for the
// generalized Airy weight x^lambda exp(-x^3/3 + t x) on (0, inf).

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "gairy/compare.hpp"
#include "gairy/equilibrium.hpp"
#include "gairy/io.hpp"
#include "gairy/pipeline.hpp"
#include "gairy/quadrature.hpp"
#include "gairy/verify.hpp"

namespace {

using namespace gairy;

constexpr int kUsageError = 2;
constexpr int kNumericalError = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int digits = 30;
  std::string format = "csv";
  std::string output;
};

int default_digits() {
  if (const char* env = std::getenv("GAIRY_DIGITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "gairy: ignoring GAIRY_DIGITS='" << env << "'\n";
    }
  }
  return 30;
}

void add_common(CLI::App* cmd, Common& c,
                std::vector<std::string> formats = {"csv", "json"}) {
  cmd->add_option("--digits", c.digits, "Decimal digits of output accuracy (>= 15; default $GAIRY_DIGITS or 30)")
      ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->default_str(formats.front());
  cmd->add_option("-o,--output", c.output, "Write to this file instead of stdout");
}

WeightParams make_params(const std::string& lambda, const std::string& t) {
  try {
    WeightParams p(lambda, t);
    if (!(p.lambda() > -1)) throw UsageError("--lambda must exceed -1 (got " + lambda + ")");
    return p;
  } catch (const std::invalid_argument&) {
    throw UsageError("--lambda and --t must be decimal numbers (got '" + lambda + "', '" + t + "')");
  }
}

PrecisionContext make_ctx(const Common& c) {
  if (c.digits < 15) throw UsageError("--digits must be at least 15");
  return PrecisionContext::for_target(c.digits);
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw UsageError("cannot write '" + c.output + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs one numerical stage, tagging failures with its name.
template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const QuadratureError& e) {
    throw std::runtime_error(std::string(name) + ": " + e.what());
  } catch (const PrecisionError& e) {
    throw std::runtime_error(std::string(name) + ": " + e.what());
  } catch (const DomainError& e) {
    throw std::runtime_error(std::string(name) + ": " + e.what());
  }
}

std::string verify_csv(const std::vector<VerifyRow>& rows, const WeightParams& p, bool header) {
  std::ostringstream os;
  if (header) os << "identity_name,n,lambda,t,residual\n";
  for (const auto& r : rows) {
    os << r.identity << ',' << r.n << ',' << p.lambda_text() << ',' << p.t_text() << ','
       << decimal(r.residual, 6) << '\n';
  }
  return os.str();
}

std::string verify_json_rows(const std::vector<VerifyRow>& rows, const WeightParams& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "    {\"identity_name\": \"" << r.identity << "\", \"n\": " << r.n << ", \"lambda\": \""
       << p.lambda_text() << "\", \"t\": \"" << p.t_text() << "\", \"residual\": \""
       << decimal(r.residual, 6) << "\", \"tolerance\": \"" << decimal(r.tolerance, 3)
       << "\", \"ok\": " << (r.ok() ? "true" : "false") << '}' << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  return os.str();
}

int report_failures(const std::vector<VerifyRow>& rows, const WeightParams& p) {
  int failed = 0;
  for (const auto& r : rows) {
    if (!r.ok()) {
      if (failed++ < 10) {
        std::cerr << "gairy: " << r.identity << " n=" << r.n << " lambda=" << p.lambda_text()
                  << " t=" << p.t_text() << " residual " << decimal(r.residual, 3)
                  << " exceeds " << decimal(r.tolerance, 3) << '\n';
      }
    }
  }
  return failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "High-precision moments, recurrence coefficients, Hankel determinants and\n"
      "asymptotic diagnostics for the weight x^lambda exp(-x^3/3 + t x) on (0, inf)."};
  app.require_subcommand(1);
  Common common;
  common.digits = default_digits();

  std::string lambda, t;
  int nmax = 0;

  auto* moments = app.add_subcommand("moments", "Certified moment table mu_0..mu_{2 nmax + 2} as JSON");
  moments->add_option("--lambda", lambda, "Exponent lambda > -1")->required();
  moments->add_option("--t", t, "Parameter t")->required();
  moments->add_option("--nmax", nmax, "Largest polynomial degree the table must support")
      ->required()->check(CLI::NonNegativeNumber);
  add_common(moments, common, {"json"});

  std::string from_moments;
  auto* recurrence = app.add_subcommand(
      "recurrence", "Recurrence table. CSV columns: n,alpha,beta,h,p (rows n = 0..nmax)");
  auto* rec_lambda = recurrence->add_option("--lambda", lambda, "Exponent lambda > -1");
  auto* rec_t = recurrence->add_option("--t", t, "Parameter t");
  recurrence->add_option("--nmax", nmax, "Largest degree")->check(CLI::NonNegativeNumber);
  auto* rec_from = recurrence->add_option("--from-moments", from_moments,
                                          "Build from a JSON table written by 'moments'");
  rec_from->excludes(rec_lambda)->excludes(rec_t);
  add_common(recurrence, common);

  bool toda = false;
  std::string h_step;
  auto* verify = app.add_subcommand(
      "verify",
      "Identity residuals. CSV columns: identity_name,n,lambda,t,residual.\n"
      "Exit status 1 when any residual exceeds its tolerance:\n"
      "  s11..sum_rule, dieq1, dieq2, pn, Hn, ode_x1..ode_x5: 10^-(digits-10)\n"
      "  beta_ldl (Stieltjes vs LDL, relative): 10^-(digits-5)\n"
      "  toda_alpha, toda_beta, hna, dpn, Hn (with --toda): 1e8 h^2\n"
      "  richardson_* (|residual(h)/residual(h/2) - 4|): 0.5");
  verify->add_option("--lambda", lambda, "Exponent lambda > -1")->required();
  verify->add_option("--t", t, "Parameter t")->required();
  verify->add_option("--nmax", nmax, "Largest degree (identities run for n = 1..nmax-1)")
      ->required()->check(CLI::Range(2, 400));
  verify->add_flag("--toda", toda, "Add central-difference checks of the t-flow");
  verify->add_option("--step", h_step, "Finite-difference step (default 10^-(digits/4))");
  add_common(verify, common);

  std::string quantity = "alpha";
  std::vector<std::string> t_list;
  std::vector<int> n_list;
  int order = 0;
  bool series_only = false;
  bool force_long_time = false;
  auto* asymptotics = app.add_subcommand(
      "asymptotics",
      "Exact values against truncated expansions.\n"
      "One t and several n: large-n expansion. One n and several t: long-time expansion.\n"
      "CSV columns: n|t,exact,series,error,local_exponent; footer rows give the\n"
      "expected and least-squares fitted error exponents.");
  asymptotics->add_option("--quantity", quantity, "alpha, beta, p, lnD, lnh, A_mult, X or Y")
      ->capture_default_str();
  asymptotics->add_option("--lambda", lambda, "Exponent lambda > -1")->required();
  asymptotics->add_option("--t", t_list, "t value or comma-separated list")->required()->delimiter(',');
  asymptotics->add_option("--n", n_list, "n value or comma-separated list")->required()->delimiter(',');
  asymptotics->add_option("--order", order, "Retained terms (0 = all printed terms)")
      ->check(CLI::NonNegativeNumber);
  asymptotics->add_flag("--long-time", force_long_time, "Use the t -> +/-inf expansion even for a single t");
  asymptotics->add_flag("--series-only", series_only, "Skip the exact side; print series values");
  add_common(asymptotics, common);

  std::vector<std::string> n_values;
  auto* equilibrium = app.add_subcommand(
      "equilibrium", "Endpoint solver. CSV columns: n,X,Y,a,b,A,residual1,residual2");
  equilibrium->add_option("--lambda", lambda, "Exponent lambda >= 0")->required();
  equilibrium->add_option("--t", t, "Parameter t")->required();
  equilibrium->add_option("--n", n_values, "n (real, >= 1) or comma-separated list")
      ->required()->delimiter(',');
  add_common(equilibrium, common, {"csv"});

  std::vector<std::string> lambda_list;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* sweep = app.add_subcommand("sweep", "Run 'verify' over a (lambda, t) grid in parallel");
  sweep->add_option("--lambda", lambda_list, "Comma-separated lambda values")->required()->delimiter(',');
  sweep->add_option("--t", t_list, "Comma-separated t values")->required()->delimiter(',');
  sweep->add_option("--nmax", nmax, "Largest degree")->required()->check(CLI::Range(2, 400));
  sweep->add_flag("--toda", toda, "Include the t-flow checks");
  sweep->add_option("--jobs", jobs, "Worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  add_common(sweep, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    PrecisionContext ctx = make_ctx(common);
    const int digits = common.digits;

    if (*moments) {
      WeightParams p = make_params(lambda, t);
      auto s = stage("moments", [&] { return solve_exact(p, nmax, ctx); });
      emit(common, moment_table_to_json(s.moments));
      return 0;
    }

    if (*recurrence) {
      std::optional<RecurrenceTable> table;
      if (!from_moments.empty()) {
        MomentTable m = moment_table_from_json(read_file(from_moments));
        if (!(m.params.lambda() > -1)) throw UsageError("moment table has lambda <= -1");
        int top = (m.jmax() - 2) / 2;
        if (recurrence->count("--nmax") == 0) nmax = top;
        if (nmax > top) throw UsageError("moment table supports nmax <= " + std::to_string(top));
        PrecisionContext file_ctx = ctx.with_working(m.digits);
        table = stage("recurrence", [&] { return build_recurrence(m, nmax, file_ctx); });
      } else {
        if (lambda.empty() || t.empty()) throw UsageError("recurrence needs --lambda and --t, or --from-moments");
        if (recurrence->count("--nmax") == 0) throw UsageError("recurrence needs --nmax");
        WeightParams p = make_params(lambda, t);
        table = stage("recurrence", [&] { return solve_exact(p, nmax, ctx).recurrence; });
      }
      emit(common, common.format == "csv" ? recurrence_to_csv(*table, digits)
                                          : recurrence_to_json(*table, digits));
      return 0;
    }

    if (*verify) {
      WeightParams p = make_params(lambda, t);
      VerifyOptions opt;
      opt.toda = toda;
      if (!h_step.empty()) {
        try {
          PrecisionScope scope(30);
          if (!(Real(h_step) > 0)) throw UsageError("--step must be positive");
        } catch (const std::invalid_argument&) {
          throw UsageError("--step must be a decimal number");
        }
        opt.h_step = h_step;
      }
      auto rows = stage("verify", [&] { return verify_suite(p, nmax, ctx, opt); });
      if (common.format == "csv") {
        emit(common, verify_csv(rows, p, true));
      } else {
        emit(common, "{\n  \"rows\": [\n" + verify_json_rows(rows, p) + "  ]\n}\n");
      }
      return report_failures(rows, p) == 0 ? 0 : kNumericalError;
    }

    if (*asymptotics) {
      Quantity q;
      try {
        q = parse_quantity(quantity);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (t_list.size() > 1 && n_list.size() > 1) {
        throw UsageError("give either several n (large-n) or several t (long-time), not both");
      }
      const bool long_time = t_list.size() > 1 || force_long_time;
      if (long_time && n_list.size() != 1) throw UsageError("long-time comparisons take a single --n");
      WeightParams p = make_params(lambda, t_list.front());
      if (p.lambda() < 0 && !long_time) {
        std::cerr << "gairy: lambda < 0 lies outside the regime the large-n expansions were derived for\n";
      }
      if (series_only) {
        std::ostringstream os;
        os << (long_time ? "t" : "n") << ",series,truncation_order\n";
        if (long_time) {
          for (const auto& tv : t_list) {
            WeightParams at = make_params(lambda, tv);
            Direction d = at.t_double() > 0 ? Direction::plus : Direction::minus;
            auto sv = stage("series", [&] { return series_longtime(q, n_list.front(), at, d, order, ctx); });
            os << tv << ',' << decimal(sv.value, digits) << ',' << sv.truncation_order << '\n';
          }
        } else {
          for (int n : n_list) {
            auto sv = stage("series", [&] { return series_largeN(q, Real(n), p, order, ctx); });
            os << n << ',' << decimal(sv.value, digits) << ',' << sv.truncation_order << '\n';
          }
        }
        emit(common, os.str());
        return 0;
      }
      Comparison c = long_time
          ? stage("asymptotics", [&] { return compare_longtime(q, n_list.front(), p, t_list, order, ctx); })
          : stage("asymptotics", [&] { return compare_asymptotics(q, p, n_list, order, ctx); });
      emit(common, common.format == "csv" ? comparison_to_csv(c, digits)
                                          : comparison_to_json(c, p, digits));
      return 0;
    }

    if (*equilibrium) {
      WeightParams p = make_params(lambda, t);
      if (p.lambda() < 0) throw UsageError("equilibrium solver requires lambda >= 0");
      std::ostringstream os;
      os << equilibrium_header();
      for (const auto& nv : n_values) {
        Real n;
        try {
          PrecisionScope scope(ctx.working_digits);
          n = Real(nv);
        } catch (const std::invalid_argument&) {
          throw UsageError("--n values must be decimal numbers");
        }
        if (!(n >= 1)) throw UsageError("--n values must be at least 1");
        auto s = stage("equilibrium", [&] { return solve_endpoints(n, p, ctx); });
        os << equilibrium_row(s, digits);
      }
      emit(common, os.str());
      return 0;
    }

    if (*sweep) {
      std::vector<WeightParams> grid;
      for (const auto& l : lambda_list) {
        for (const auto& tv : t_list) grid.push_back(make_params(l, tv));
      }
      if (!mpfr_buildopt_tls_p()) jobs = 1;
      jobs = std::min<unsigned>(jobs, static_cast<unsigned>(grid.size()));
      std::vector<std::vector<VerifyRow>> results(grid.size());
      std::vector<std::string> errors(grid.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
          try {
            VerifyOptions opt;
            opt.toda = toda;
            results[i] = verify_suite(grid[i], nmax, ctx, opt);
          } catch (const std::exception& e) {
            errors[i] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();

      std::string text = common.format == "csv" ? "identity_name,n,lambda,t,residual\n"
                                                : "{\n  \"rows\": [\n";
      int failed = 0;
      bool numerical = false;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!errors[i].empty()) {
          std::cerr << "gairy: sweep at lambda=" << grid[i].lambda_text() << " t=" << grid[i].t_text()
                    << " failed: " << errors[i] << '\n';
          numerical = true;
          continue;
        }
        failed += report_failures(results[i], grid[i]);
        if (common.format == "csv") {
          text += verify_csv(results[i], grid[i], false);
        } else {
          std::string rows = verify_json_rows(results[i], grid[i]);
          if (text.size() > 14 && !rows.empty()) {
            text.insert(text.size() - 1, ",");
          }
          text += rows;
        }
      }
      if (common.format == "json") text += "  ]\n}\n";
      emit(common, text);
      return failed == 0 && !numerical ? 0 : kNumericalError;
    }
  } catch (const UsageError& e) {
    std::cerr << "gairy: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gairy: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "gairy: numerical failure in " << e.what() << '\n';
    return kNumericalError;
  }
  return 0;
}
