#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pzeta/alpha.hpp"
#include "pzeta/empirical.hpp"
#include "pzeta/errors.hpp"
#include "pzeta/prime_zeta.hpp"
#include "pzeta/sieve.hpp"
#include "pzeta/stieltjes.hpp"
#include "verify.hpp"

namespace pzeta::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxSieveLimit = 100000000000ULL;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

struct Context {
  RunConfig cfg;
  PrecisionPolicy policy;

  StieltjesTable stieltjes() const {
    if (cfg.stieltjes_data) return load_stieltjes(*cfg.stieltjes_data, policy);
    return bundled_stieltjes(policy);
  }

  PrimeSieve sieve(std::uint64_t limit) const {
    if (limit < 2) throw DomainError("sieve limit must be at least 2");
    if (limit > kMaxSieveLimit) throw DomainError("sieve limit too large");
    if (cfg.sieve_cache && std::filesystem::exists(*cfg.sieve_cache)) {
      PrimeSieve cached = PrimeSieve::load(*cfg.sieve_cache);
      if (cached.limit() >= limit) return cached;
    }
    PrimeSieve s = PrimeSieve::build(limit, PrimeSieve::kDefaultSegmentBits, cfg.threads);
    if (cfg.sieve_cache) s.save(*cfg.sieve_cache);
    return s;
  }

  std::string value(const Real& x) const { return to_decimal(x, cfg.digits); }
};

struct Row {
  std::string key;  // "n" or "s"
  std::string key_value;
  std::string value;
  std::string method;
  std::string tolerance;
  std::vector<std::pair<std::string, std::string>> extra;
};

void emit(const std::vector<Row>& rows, Format format, std::ostream& out) {
  if (rows.empty()) return;
  switch (format) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json o;
        o[r.key] = r.key == "n" ? json(std::stoul(r.key_value)) : json(r.key_value);
        o["value"] = r.value;
        o["method"] = r.method;
        o["tolerance"] = r.tolerance;
        for (const auto& [k, v] : r.extra) {
          const bool integral = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
          o[k] = integral ? json(std::stoul(v)) : json(v);
        }
        arr.push_back(std::move(o));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << rows[0].key << ",value,method,tolerance";
      for (const auto& [k, v] : rows[0].extra) out << ',' << k;
      out << '\n';
      for (const auto& r : rows) {
        out << r.key_value << ',' << r.value << ',' << r.method << ',' << r.tolerance;
        for (const auto& [k, v] : r.extra) out << ',' << v;
        out << '\n';
      }
      break;
    }
    case Format::text: {
      std::size_t wv = 5;
      for (const auto& r : rows) wv = std::max(wv, r.value.size());
      for (const auto& r : rows) {
        out << r.key_value << "  ";
        out << r.value << std::string(wv - r.value.size(), ' ') << "  " << r.method << "  +/- " << r.tolerance;
        for (const auto& [k, v] : r.extra) out << "  " << k << '=' << v;
        out << '\n';
      }
      break;
    }
  }
}

struct AlphaArgs {
  std::size_t n_max = 10;
  std::optional<std::string> method;
  std::optional<std::string> x_max;
  std::optional<std::string> T;
  std::optional<std::string> convergence;
};

int cmd_alpha(const Context& ctx, const AlphaArgs& a, std::ostream& out) {
  const AlphaMethod method = parse_alpha_method(a.method.value_or(ctx.cfg.method.value_or("mobius")));
  if (a.convergence && method != AlphaMethod::limit) throw DomainError("--convergence applies to --method limit");
  if (a.x_max && method != AlphaMethod::limit) throw DomainError("--x-max applies to --method limit");
  if (a.T && method != AlphaMethod::integral) throw DomainError("--T applies to --method integral");
  const int digits = ctx.cfg.digits;
  std::vector<Row> rows;
  auto row = [&](std::size_t n, const Real& v, const Real& tol, int certified) {
    rows.push_back({"n", std::to_string(n), ctx.value(v), std::string(to_string(method)), to_sci(tol),
                    {{"certified_digits", std::to_string(certified)}}});
  };

  switch (method) {
    case AlphaMethod::mobius: {
      const MobiusSeries series(a.n_max, ctx.policy, ctx.stieltjes(), ctx.cfg.threads);
      for (std::size_t n = 0; n <= a.n_max; ++n) {
        const AlphaEntry e = series.alpha(n);
        row(n, e.value, e.tolerance, std::min(e.certified_digits, digits));
      }
      break;
    }
    case AlphaMethod::limit: {
      const std::uint64_t x = a.x_max ? parse_count(*a.x_max) : ctx.cfg.sieve_limit;
      const PrimeSieve sieve = ctx.sieve(x);
      const auto series = convergence_series(a.n_max, default_checkpoints(x), sieve, ctx.policy, ctx.cfg.threads);
      if (a.convergence) write_file(*a.convergence, convergence_csv(series, digits));
      for (const auto& s : series) {
        const Checkpoint& c = s.checkpoints.back();
        row(s.n, c.estimate, c.tolerance, certified_digits(c.estimate, c.tolerance, digits));
      }
      break;
    }
    case AlphaMethod::integral: {
      const Real T = make_real(a.T.value_or("1e6"), ctx.policy);
      if (!(T >= Real(2L, ctx.policy.working_bits()))) throw DomainError("--T must be at least 2");
      Real fl(ctx.policy.working_bits());
      mpfr_floor(fl.get(), T.get());
      const PrimeSieve sieve = ctx.sieve(std::max<std::uint64_t>(2, mpfr_get_uj(fl.get(), MPFR_RNDZ)));
      for (std::size_t n = 0; n <= a.n_max; ++n) {
        const IntegralEstimate e = alpha_integral(n, T, sieve, ctx.policy);
        row(n, e.value, e.tail_model, certified_digits(e.value, e.tail_model, digits));
      }
      break;
    }
  }
  emit(rows, ctx.cfg.format, out);
  return kOk;
}

struct PrimeZetaArgs {
  std::string s;
  std::optional<std::string> method;
  std::size_t terms = 10;
  std::optional<std::string> T;
  std::optional<std::size_t> derivative;
};

int cmd_primezeta(const Context& ctx, const PrimeZetaArgs& a, std::ostream& out) {
  const Real s = make_real(a.s, ctx.policy);
  const PrimeZetaMethod method = parse_prime_zeta_method(a.method.value_or(ctx.cfg.method.value_or("mobius")));
  if (a.derivative) {
    if (method != PrimeZetaMethod::direct) throw DomainError("--derivative is available for --method direct");
    const PrimeSieve sieve = ctx.sieve(ctx.cfg.sieve_limit);
    const Real v = prime_zeta_derivative(*a.derivative, s, sieve, ctx.policy);
    const PrimeZetaValue base = prime_zeta_direct(s, sieve, ctx.policy);
    emit({{"s", a.s, ctx.value(v), "direct", to_sci(base.error_estimate), {{"m", std::to_string(*a.derivative)}}}},
         ctx.cfg.format, out);
    return kOk;
  }
  PrimeZetaValue v;
  switch (method) {
    case PrimeZetaMethod::direct:
      v = prime_zeta_direct(s, ctx.sieve(ctx.cfg.sieve_limit), ctx.policy);
      break;
    case PrimeZetaMethod::mobius:
      v = prime_zeta_mobius(s, ctx.policy);
      break;
    case PrimeZetaMethod::series: {
      if (!(s > Real(1L, ctx.policy.working_bits()))) {
        throw DomainError("series route: s must exceed 1 (branch cut (1/2, 1])");
      }
      const MobiusSeries series(a.terms + 1, ctx.policy, ctx.stieltjes(), ctx.cfg.threads);
      std::vector<Real> alpha;
      for (std::size_t n = 0; n <= a.terms + 1; ++n) alpha.push_back(series.alpha(n).value);
      v = prime_zeta_series(s, alpha, a.terms);
      break;
    }
    case PrimeZetaMethod::remainder_integral: {
      const Real T = make_real(a.T.value_or("1e6"), ctx.policy);
      if (!(T >= Real(2L, ctx.policy.working_bits()))) throw DomainError("--T must be at least 2");
      Real fl(ctx.policy.working_bits());
      mpfr_floor(fl.get(), T.get());
      v = prime_zeta_remainder_integral(s, T, ctx.sieve(mpfr_get_uj(fl.get(), MPFR_RNDZ)), ctx.policy);
      break;
    }
  }
  emit({{"s", a.s, ctx.value(v.value), std::string(to_string(v.method)), to_sci(v.error_estimate), {}}},
       ctx.cfg.format, out);
  return kOk;
}

int cmd_verify(const Context& ctx, const std::optional<std::string>& report, std::ostream& out) {
  const PrimeSieve sieve = ctx.sieve(ctx.cfg.sieve_limit);
  VerifyInputs in{ctx.policy, ctx.stieltjes(), !ctx.cfg.stieltjes_data,
                  ctx.cfg.stieltjes_data ? read_file(*ctx.cfg.stieltjes_data) : std::string(bundled_stieltjes_text()),
                  &sieve, ctx.cfg.threads};
  const auto checks = run_verify(in);
  if (report) write_file(*report, verify_csv(checks));
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;

  switch (ctx.cfg.format) {
    case Format::csv:
      out << verify_csv(checks);
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& c : checks) {
        arr.push_back({{"check", c.name},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"residual", to_sci(c.residual, 3)},
                       {"tolerance", to_sci(c.tolerance, 3)},
                       {"pass", c.pass}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::text:
      for (const auto& c : checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  residual " << to_sci(c.residual, 3) << "  tol "
            << to_sci(c.tolerance, 3) << '\n';
      }
      out << (checks.size() - failed) << '/' << checks.size() << " checks passed\n";
      break;
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw ParseError("unknown format '" + std::string(text) + "'");
}

std::uint64_t parse_count(std::string_view text) {
  const PrecisionPolicy p(30);
  const Real v = make_real(trim(text), p);
  Real fl(v.precision());
  mpfr_floor(fl.get(), v.get());
  if (!(fl == v) || v.sign() < 0) throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'");
  if (v > Real::from_uint(kMaxSieveLimit, 128)) throw ParseError("integer too large: '" + std::string(text) + "'");
  return mpfr_get_uj(v.get(), MPFR_RNDZ);
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  static const char* known[] = {"digits", "sieve_limit", "format", "threads", "method", "sieve_cache", "stieltjes_data"};
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    kv[key] = value;
  }
  return kv;
}

void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) {
    if (k == "digits") {
      cfg.digits = static_cast<int>(parse_count(v));
    } else if (k == "sieve_limit") {
      cfg.sieve_limit = parse_count(v);
    } else if (k == "format") {
      cfg.format = parse_format(v);
    } else if (k == "threads") {
      cfg.threads = static_cast<unsigned>(parse_count(v));
    } else if (k == "method") {
      cfg.method = v;
    } else if (k == "sieve_cache") {
      cfg.sieve_cache = v;
    } else if (k == "stieltjes_data") {
      cfg.stieltjes_data = v;
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Series coefficients of the prime zeta function about s = 1"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pzeta 1.0");

  std::optional<int> digits;
  std::optional<std::string> sieve_limit, format, config, sieve_cache, stieltjes_data;
  std::optional<unsigned> threads;
  app.add_option("--digits", digits, "Target decimal digits (default 30)");
  app.add_option("--sieve-limit", sieve_limit, "Largest integer sieved (default 1e8)");
  app.add_option("--format", format, "text, json or csv");
  app.add_option("--config", config, "File of key=value lines");
  app.add_option("--threads", threads, "Worker threads, 0 = all cores (default 1)");
  app.add_option("--sieve-cache", sieve_cache, "Binary sieve cache file, created if missing");
  app.add_option("--stieltjes-data", stieltjes_data, "Stieltjes constants file replacing the bundled table");

  AlphaArgs alpha_args;
  auto* alpha = app.add_subcommand("alpha", "Coefficients alpha_0..alpha_N");
  alpha->fallthrough();
  alpha->add_option("--n-max", alpha_args.n_max, "Largest n")->check(CLI::Range(0, 64));
  alpha->add_option("--method", alpha_args.method, "mobius, limit or integral");
  alpha->add_option("--x-max", alpha_args.x_max, "Prime-sum cutoff for the limit method");
  alpha->add_option("--T", alpha_args.T, "Integration cutoff for the integral method (default 1e6)");
  alpha->add_option("--convergence", alpha_args.convergence, "Write the limit checkpoints as CSV");

  PrimeZetaArgs pz_args;
  auto* pz = app.add_subcommand("primezeta", "P(s) on the real axis");
  pz->fallthrough();
  pz->add_option("--s", pz_args.s, "Argument s > 1")->required();
  pz->add_option("--method", pz_args.method, "direct, mobius, series or integral");
  pz->add_option("--terms", pz_args.terms, "Series terms N (default 10)")->check(CLI::Range(0, 62));
  pz->add_option("--T", pz_args.T, "Cutoff for the integral method (default 1e6)");
  pz->add_option("--derivative", pz_args.derivative, "Return sum_p log^m p / p^s (direct method)");

  std::optional<std::string> report;
  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  verify->fallthrough();
  verify->add_option("--report", report, "CSV report path");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << "pzeta 1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    RunConfig cfg;
    if (config) apply_config(cfg, parse_config_text(read_file(*config)));
    if (digits) cfg.digits = *digits;
    if (sieve_limit) cfg.sieve_limit = parse_count(*sieve_limit);
    if (format) cfg.format = parse_format(*format);
    if (threads) cfg.threads = *threads;
    if (sieve_cache) cfg.sieve_cache = sieve_cache;
    if (stieltjes_data) cfg.stieltjes_data = stieltjes_data;
    if (cfg.digits < 1 || cfg.digits > 1000) throw DomainError("--digits must be in 1..1000");

    const Context ctx{cfg, PrecisionPolicy(cfg.digits)};
    if (alpha->parsed()) return cmd_alpha(ctx, alpha_args, out);
    if (pz->parsed()) return cmd_primezeta(ctx, pz_args, out);
    return cmd_verify(ctx, report, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedOrder& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace pzeta::cli
