#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "aft/aft.hpp"

namespace aft::cli {

namespace {

using nlohmann::ordered_json;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string command_name(Command c) {
  switch (c) {
    case Command::kMobius: return "mobius";
    case Command::kFourier: return "fourier";
    case Command::kTaylor: return "taylor";
    case Command::kZtrans: return "ztrans";
    case Command::kStep: return "step";
    case Command::kMuRegular: return "muregular";
    case Command::kDavenport: return "davenport";
    case Command::kFilterbank: return "filterbank";
    case Command::kBench: return "bench";
    case Command::kDiagnosePnt: return "diagnose-pnt";
  }
  return "?";
}

std::int64_t default_sieve_limit() {
  if (const char* env = std::getenv("AFT_SIEVE_LIMIT")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v >= 1 && v <= 100'000'000) return v;
    throw ValidationError("AFT_SIEVE_LIMIT must be an integer in [1, 1e8]");
  }
  return 10'000'000;
}

/// Sieve size for a job that needs mu(k) up to `needed`.
std::int64_t resolve_limit(const JobConfig& config, std::int64_t needed) {
  const std::int64_t cap = config.limit > 0 ? config.limit : default_sieve_limit();
  if (needed > cap) {
    throw ValidationError("K*max(n) = " + std::to_string(needed) +
                          " exceeds the sieve limit " + std::to_string(cap));
  }
  if (config.limit > 0) return config.limit;
  return std::max<std::int64_t>(needed, 64);
}

TruncationPolicy make_policy(const JobConfig& config, int default_k = 32) {
  if (config.adaptive_tol > 0.0) {
    return TruncationPolicy::adaptive(config.adaptive_tol,
                                      config.k_max > 0 ? config.k_max : 256);
  }
  return TruncationPolicy::fixed(config.k_fixed > 0 ? config.k_fixed : default_k);
}

struct CatalogRef {
  std::string name;
  std::string args;
};

CatalogRef parse_catalog(const std::string& spec) {
  constexpr const char* kPrefix = "catalog:";
  if (spec.rfind(kPrefix, 0) != 0) {
    throw ValidationError("--signal must look like catalog:NAME or catalog:NAME(ARGS)");
  }
  std::string body = spec.substr(std::string(kPrefix).size());
  const auto open = body.find('(');
  if (open == std::string::npos) return {body, ""};
  if (body.back() != ')') throw ValidationError("unbalanced parentheses in --signal");
  return {body.substr(0, open), body.substr(open + 1, body.size() - open - 2)};
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("could not parse ") + what + ": '" + s + "'");
  }
}

std::vector<double> read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    values.push_back(parse_double(line, "sample"));
  }
  if (values.empty()) throw ValidationError("input file '" + path + "' holds no samples");
  return values;
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open spec file '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw ValidationError("bad JSON in '" + path + "': " + e.what());
  }
}

HarmonicSignal load_harmonic_file(const std::string& path) {
  const auto j = read_json_file(path);
  HarmonicSignal f;
  try {
    f.amplitudes = j.at("amplitudes").get<std::vector<double>>();
    f.phases = j.at("phases").get<std::vector<double>>();
  } catch (const std::exception& e) {
    throw ValidationError("harmonic spec '" + path + "': " + e.what());
  }
  f.validate();
  return f;
}

MuRegularSpec load_muregular_file(const std::string& path) {
  const auto j = read_json_file(path);
  MuRegularSpec spec;
  try {
    spec.mu_param = j.at("mu_param").get<double>();
    for (const auto& pair : j.at("coeffs")) {
      spec.coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  } catch (const std::exception& e) {
    throw ValidationError("muregular spec '" + path + "': " + e.what());
  }
  spec.validate();
  return spec;
}

/// trigpoly args: semicolon-separated n:a:b triples.
PeriodicSignal parse_trigpoly(const std::string& args) {
  std::vector<TrigTerm> terms;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    std::stringstream ts(item);
    std::string n_str, a_str, b_str;
    if (!std::getline(ts, n_str, ':') || !std::getline(ts, a_str, ':') ||
        !std::getline(ts, b_str, ':')) {
      throw ValidationError("trigpoly terms must look like n:a:b");
    }
    terms.push_back(TrigTerm{static_cast<int>(parse_double(n_str, "trigpoly index")),
                             parse_double(a_str, "trigpoly a"),
                             parse_double(b_str, "trigpoly b")});
  }
  if (terms.empty()) throw ValidationError("trigpoly needs at least one n:a:b term");
  return PeriodicSignal::trig_poly(std::move(terms));
}

PeriodicSignal periodic_from_config(const JobConfig& config) {
  if (!config.input_file.empty()) {
    return PeriodicSignal::from_samples(read_sample_file(config.input_file))
        .with_mean_removed();
  }
  if (config.signal.empty()) {
    throw ValidationError("fourier needs --signal or --file");
  }
  const auto ref = parse_catalog(config.signal);
  if (ref.name == "cos") return PeriodicSignal::cosine();
  if (ref.name == "sin") return PeriodicSignal::sine();
  if (ref.name == "cosk") {
    return PeriodicSignal::cosine_k(static_cast<int>(parse_double(ref.args, "cosk degree")));
  }
  if (ref.name == "trigpoly") return parse_trigpoly(ref.args);
  if (ref.name == "harmonic") {
    const auto f = load_harmonic_file(ref.args);
    std::vector<Harmonic> hs;
    for (int n = 1; n <= f.n_band(); ++n) {
      hs.push_back(Harmonic{n, f.amplitudes[static_cast<std::size_t>(n - 1)],
                            f.phases[static_cast<std::size_t>(n - 1)]});
    }
    return PeriodicSignal::harmonics(hs);
  }
  throw ValidationError("signal '" + ref.name +
                        "' is not a periodic catalog entry (cos, sin, cosk, trigpoly, harmonic)");
}

void require_indices(const JobConfig& config) {
  if (config.indices.empty()) throw ValidationError("--n must list at least one index");
  for (int n : config.indices) {
    if (n < 1) throw ValidationError("--n entries must be positive");
  }
}

void put_complex(ordered_json& rec, const char* re_key, const char* im_key,
                 std::complex<double> v) {
  rec[re_key] = v.real();
  rec[im_key] = v.imag();
}

template <typename T>
void put_result_tail(ordered_json& rec, const CoefficientResult<T>& r) {
  if (r.bound) {
    rec["bound"] = *r.bound;
  } else {
    rec["bound"] = nullptr;
  }
  rec["additions"] = r.additions;
  rec["multiplications"] = r.multiplications;
  rec["converged"] = r.converged;
  if (!r.converged) {
    if constexpr (std::is_same_v<T, double>) {
      rec["partial_prev"] = r.last_partials[0];
      rec["partial_last"] = r.last_partials[1];
    } else {
      put_complex(rec, "partial_prev_re", "partial_prev_im", r.last_partials[0]);
      put_complex(rec, "partial_last_re", "partial_last_im", r.last_partials[1]);
    }
  }
}

// ---- command bodies -------------------------------------------------------

std::vector<ordered_json> run_mobius(const JobConfig& config) {
  if (config.queries.empty()) throw ValidationError("mobius needs --query");
  const std::int64_t needed = *std::max_element(config.queries.begin(), config.queries.end());
  const auto table = build_mobius_table(config.limit > 0 ? config.limit
                                                         : std::max<std::int64_t>(needed, 64));
  std::vector<ordered_json> records;
  for (std::int64_t q : config.queries) {
    ordered_json rec;
    rec["n"] = q;
    rec["mu"] = table.mu(q);
    rec["mertens"] = table.mertens(q);
    rec["mertens_ratio"] = table.mertens_ratio(q);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ordered_json> run_fourier(const JobConfig& config) {
  require_indices(config);
  auto f = periodic_from_config(config);
  if (!f.mean_removed()) f = f.with_mean_removed();
  const int max_n = *std::max_element(config.indices.begin(), config.indices.end());
  std::vector<ordered_json> records;

  if (!config.irrational.empty()) {
    // single-irrational sampling form; --K plays the role of the term count N
    const double x = irrational_by_name(config.irrational);
    const std::int64_t n_terms = config.k_fixed > 0 ? config.k_fixed : 1000;
    const auto table = build_mobius_table(resolve_limit(config, n_terms));
    for (int n : config.indices) {
      const auto res = wintner_coeff_irrational(f, n, x, n_terms, table);
      const auto oracle = quadrature_fourier(f, n, QuadratureSpec{1 << 14});
      const std::complex<double> truth{oracle.a / 2.0, -oracle.b / 2.0};
      ordered_json rec;
      rec["n"] = n;
      put_complex(rec, "c_re", "c_im", res.value);
      rec["n_terms"] = res.n_terms;
      put_complex(rec, "half_re", "half_im", res.value_at_half);
      put_complex(rec, "oracle_re", "oracle_im", truth);
      rec["abs_error"] = std::abs(res.value - truth);
      records.push_back(std::move(rec));
    }
    return records;
  }

  const auto policy = make_policy(config);
  const auto table = build_mobius_table(
      resolve_limit(config, static_cast<std::int64_t>(policy.k_cap()) * max_n));
  for (int n : config.indices) {
    const auto ca = aft_cosine(f, n, policy, table);
    const auto sa = aft_sine(f, n, policy, table);
    const auto oracle = quadrature_fourier(
        f, n, QuadratureSpec{std::max<std::int64_t>(1 << 14, std::bit_ceil(static_cast<std::uint64_t>(8 * n)))});
    ordered_json rec;
    rec["n"] = n;
    rec["a_n"] = ca.value;
    rec["b_n"] = sa.value;
    rec["k_used"] = std::max(ca.k_used, sa.k_used);
    if (ca.bound) {
      rec["bound"] = *ca.bound;
    } else {
      rec["bound"] = nullptr;
    }
    rec["additions"] = ca.additions + sa.additions;
    rec["multiplications"] = ca.multiplications + sa.multiplications;
    rec["oracle_a"] = oracle.a;
    rec["oracle_b"] = oracle.b;
    rec["abs_error"] = std::max(std::abs(ca.value - oracle.a), std::abs(sa.value - oracle.b));
    rec["approximate"] = ca.approximate || sa.approximate;
    rec["converged"] = ca.converged && sa.converged;
    if (!ca.converged || !sa.converged) {
      rec["partial_prev"] = (ca.converged ? sa : ca).last_partials[0];
      rec["partial_last"] = (ca.converged ? sa : ca).last_partials[1];
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ordered_json> run_taylor(const JobConfig& config) {
  require_indices(config);
  const auto ref = parse_catalog(config.signal.empty() ? "catalog:?" : config.signal);
  if (ref.name != "geom_disk") {
    throw ValidationError("taylor expects --signal catalog:geom_disk(rho)");
  }
  const double rho = parse_double(ref.args, "geom_disk rho");
  const auto f = BoundaryFunction::geometric(rho);
  const auto policy = make_policy(config, 40);
  const int max_n = *std::max_element(config.indices.begin(), config.indices.end());
  const auto table = build_mobius_table(
      resolve_limit(config, static_cast<std::int64_t>(policy.k_cap()) * max_n));
  std::vector<ordered_json> records;
  for (int n : config.indices) {
    const auto res = config.radius > 0.0
                         ? taylor_coeff_radius(f, n, config.radius, policy, table)
                         : taylor_coeff_unit(f, n, policy, table);
    const auto oracle = quadrature_taylor(
        f, n, 1.0, QuadratureSpec{std::max<std::int64_t>(1 << 12, std::bit_ceil(static_cast<std::uint64_t>(8 * n)))});
    ordered_json rec;
    rec["n"] = n;
    put_complex(rec, "value_re", "value_im", res.value);
    rec["k_used"] = res.k_used;
    put_result_tail(rec, res);
    put_complex(rec, "oracle_re", "oracle_im", oracle);
    rec["abs_error"] = std::abs(res.value - oracle);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ordered_json> run_ztrans(const JobConfig& config) {
  require_indices(config);
  const auto ref = parse_catalog(config.signal.empty() ? "catalog:?" : config.signal);
  if (ref.name != "geom_disk") {
    throw ValidationError("ztrans expects --signal catalog:geom_disk(a), giving X(z) = a/(z-a)");
  }
  const double pole = parse_double(ref.args, "geom_disk a");
  const auto x_fn = BoundaryFunction::z_pole(pole);
  const auto policy = make_policy(config, 40);
  const int max_n = *std::max_element(config.indices.begin(), config.indices.end());
  const auto table = build_mobius_table(
      resolve_limit(config, static_cast<std::int64_t>(policy.k_cap()) * max_n));
  // oracle sees g(theta) = X(e^{-i theta}) = sum c_j e^{i j theta}
  const auto mirrored = BoundaryFunction::from_function(
      [&x_fn](double, double theta) { return x_fn.at(1.0, -theta); });
  std::vector<ordered_json> records;
  for (int n : config.indices) {
    const auto res = inverse_z(x_fn, n, pole, policy, table);
    const auto oracle = quadrature_taylor(
        mirrored, n, 1.0, QuadratureSpec{std::max<std::int64_t>(1 << 12, std::bit_ceil(static_cast<std::uint64_t>(8 * n)))});
    ordered_json rec;
    rec["n"] = n;
    put_complex(rec, "value_re", "value_im", res.value);
    rec["k_used"] = res.k_used;
    put_result_tail(rec, res);
    put_complex(rec, "oracle_re", "oracle_im", oracle);
    rec["abs_error"] = std::abs(res.value - oracle);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ordered_json> run_step(const JobConfig& config) {
  require_indices(config);
  const auto ref = parse_catalog(config.signal.empty() ? "catalog:?" : config.signal);
  if (ref.name != "step") throw ValidationError("step expects --signal catalog:step(b)");
  const double b = parse_double(ref.args, "step breakpoint");
  const auto f = normalize_step(EvenStepFunction::indicator(b));
  const std::int64_t k_terms = config.k_fixed > 0 ? config.k_fixed : 1000;
  const int max_n = *std::max_element(config.indices.begin(), config.indices.end());
  const auto table = build_mobius_table(resolve_limit(config, k_terms * max_n));
  std::vector<ordered_json> records;
  for (int n : config.indices) {
    const auto res = step_cosine_coeff(f, n, k_terms, table);
    const double truth = 2.0 / (n * std::numbers::pi) * std::sin(n * b);
    ordered_json rec;
    rec["n"] = n;
    rec["a_n"] = res.value;
    rec["k_used"] = res.k_used;
    rec["bound"] = nullptr;
    rec["additions"] = res.additions;
    rec["multiplications"] = res.multiplications;
    rec["oracle_a"] = truth;
    rec["abs_error"] = std::abs(res.value - truth);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ordered_json> run_muregular(const JobConfig& config) {
  require_indices(config);
  const auto ref = parse_catalog(config.signal.empty() ? "catalog:?" : config.signal);
  if (ref.name != "muregular") {
    throw ValidationError("muregular expects --signal catalog:muregular(spec.json)");
  }
  auto spec = load_muregular_file(ref.args);
  if (config.mu_param > 0.0) spec.mu_param = config.mu_param;
  const auto f = make_boundary(spec);
  const auto policy = make_policy(config, 40);
  const int n_max = *std::max_element(config.indices.begin(), config.indices.end());
  const auto table = build_mobius_table(
      resolve_limit(config, static_cast<std::int64_t>(policy.k_cap()) * n_max));
  const auto coeffs = muregular_coeffs_recursive(f, spec.mu_param, n_max, policy, table);
  std::vector<ordered_json> records;
  for (int n : config.indices) {
    const auto& c = coeffs[static_cast<std::size_t>(n - 1)];
    const std::complex<double> truth =
        static_cast<std::size_t>(n) < spec.coeffs.size()
            ? spec.coeffs[static_cast<std::size_t>(n)]
            : std::complex<double>{};
    ordered_json rec;
    rec["n"] = n;
    put_complex(rec, "value_re", "value_im", c.value);
    rec["k_used"] = c.k_used;
    rec["bound"] = nullptr;
    rec["additions"] = c.additions;
    rec["multiplications"] = c.multiplications;
    rec["error_budget"] = c.error_budget;
    put_complex(rec, "oracle_re", "oracle_im", truth);
    rec["abs_error"] = std::abs(c.value - truth);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ordered_json> run_davenport(const JobConfig& config) {
  std::vector<std::int64_t> ks;
  for (int d : config.checkpoints) {
    if (d < 1 || d > 8) throw ValidationError("--checkpoints expects decade exponents in [1, 8]");
    std::int64_t k = 1;
    for (int i = 0; i < d; ++i) k *= 10;
    ks.push_back(k);
  }
  if (ks.empty()) ks.push_back(config.k_fixed > 0 ? config.k_fixed : 1000);
  const std::int64_t needed = *std::max_element(ks.begin(), ks.end());
  const auto table = build_mobius_table(resolve_limit(config, needed));
  const double target = -std::sin(kTwoPi * config.theta) / std::numbers::pi;
  std::vector<ordered_json> records;
  for (const auto& [k, partial] : davenport_checkpoints(config.theta, ks, table)) {
    ordered_json rec;
    rec["K"] = k;
    rec["partial"] = partial;
    rec["target"] = target;
    rec["abs_error"] = std::abs(partial - target);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ordered_json> run_filterbank(const JobConfig& config) {
  require_indices(config);
  const auto ref = parse_catalog(config.signal.empty() ? "catalog:?" : config.signal);
  if (ref.name != "harmonic") {
    throw ValidationError("filterbank expects --signal catalog:harmonic(spec.json)");
  }
  const auto f = load_harmonic_file(ref.args);
  const auto table = build_mobius_table(resolve_limit(config, std::max(f.n_band(), 64)));
  OpCountLedger ledger;
  std::vector<ordered_json> records;
  for (int n : config.indices) {
    const OpCountLedger before = ledger;
    const auto got = recover_amplitude_phase(f, n, table, ledger);
    const bool in_band = n <= f.n_band();
    const double a_true = in_band ? f.amplitudes[static_cast<std::size_t>(n - 1)] : 0.0;
    const double ph_true = in_band ? f.phases[static_cast<std::size_t>(n - 1)] : 0.0;
    const std::complex<double> want =
        std::polar(std::abs(a_true), a_true < 0 ? ph_true + std::numbers::pi : ph_true);
    ordered_json rec;
    rec["n"] = n;
    rec["amplitude"] = got.amplitude;
    rec["phase"] = got.phase;
    rec["degenerate"] = got.degenerate;
    rec["additions"] = ledger.additions - before.additions;
    rec["multiplications"] = ledger.multiplications - before.multiplications;
    rec["oracle_amplitude"] = std::abs(a_true);
    rec["abs_error"] = std::abs(std::polar(got.amplitude, got.phase) - want);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ordered_json> run_bench(const JobConfig& config) {
  const int band = config.indices.empty() ? 8 : config.indices.front();
  if (band < 1 || band > 4096) throw ValidationError("bench band must be in [1, 4096]");
  const auto table = build_mobius_table(resolve_limit(config, std::max(band, 64)));
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> amp(0.2, 2.0);
  std::uniform_real_distribution<double> ph(-std::numbers::pi, std::numbers::pi - 1e-9);
  HarmonicSignal f;
  for (int n = 0; n < band; ++n) {
    f.amplitudes.push_back(amp(rng));
    f.phases.push_back(ph(rng));
  }
  const auto report = benchmark_vs_dft(f, table);
  ordered_json rec;
  rec["n_band"] = report.n_band;
  rec["aft_additions"] = report.aft.additions;
  rec["aft_multiplications"] = report.aft.multiplications;
  rec["aft_samples"] = report.aft.samples_used;
  rec["dft_additions"] = report.dft.additions;
  rec["dft_multiplications"] = report.dft.multiplications;
  rec["dft_samples"] = report.dft.samples_used;
  rec["dft_length"] = report.dft_length;
  rec["max_deviation"] = report.max_deviation;
  return {rec};
}

std::vector<ordered_json> run_diagnose_pnt(const JobConfig& config) {
  const std::int64_t k_terms = config.k_fixed > 0 ? config.k_fixed : 10000;
  const double theta = config.theta_set ? config.theta : 1e-4;
  const auto table = build_mobius_table(resolve_limit(config, k_terms));
  const auto report = pnt_chain_report(table, k_terms, theta);
  ordered_json rec;
  rec["K"] = report.k_terms;
  rec["theta"] = report.theta;
  rec["davenport_partial"] = report.davenport_value;
  rec["mu_over_n_partial"] = report.mu_over_n_value;
  rec["mertens"] = report.mertens_value;
  rec["mertens_ratio"] = report.mertens_ratio;
  rec["small_theta_guard"] = report.small_theta_guard;
  rec["linear_identity_dev"] = report.linear_identity_dev;
  rec["half_mu_over_n_abs"] = report.half_mu_over_n_abs;
  rec["epsilon_bound"] = report.epsilon_bound;
  return {rec};
}

// ---- output ---------------------------------------------------------------

std::string csv_cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render(const JobConfig& config, const std::vector<ordered_json>& records) {
  if (config.format == OutputFormat::kJson) {
    ordered_json envelope;
    envelope["schema"] = "aft-kit/1";
    envelope["command"] = command_name(config.command);
    envelope["records"] = records;
    return envelope.dump(2) + "\n";
  }
  std::string out;
  if (records.empty()) return out;
  bool first = true;
  for (const auto& [key, value] : records.front().items()) {
    (void)value;
    if (!first) out += ',';
    out += key;
    first = false;
  }
  out += '\n';
  for (const auto& rec : records) {
    first = true;
    for (const auto& [key, value] : rec.items()) {
      (void)key;
      if (!first) out += ',';
      out += csv_cell(value);
      first = false;
    }
    out += '\n';
  }
  return out;
}

bool any_unconverged(const std::vector<ordered_json>& records) {
  for (const auto& rec : records) {
    const auto it = rec.find("converged");
    if (it != rec.end() && it->is_boolean() && !it->get<bool>()) return true;
  }
  return false;
}

}  // namespace

int run(const JobConfig& config) {
  std::vector<ordered_json> records;
  try {
    switch (config.command) {
      case Command::kMobius: records = run_mobius(config); break;
      case Command::kFourier: records = run_fourier(config); break;
      case Command::kTaylor: records = run_taylor(config); break;
      case Command::kZtrans: records = run_ztrans(config); break;
      case Command::kStep: records = run_step(config); break;
      case Command::kMuRegular: records = run_muregular(config); break;
      case Command::kDavenport: records = run_davenport(config); break;
      case Command::kFilterbank: records = run_filterbank(config); break;
      case Command::kBench: records = run_bench(config); break;
      case Command::kDiagnosePnt: records = run_diagnose_pnt(config); break;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = render(config, records);
  if (config.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << config.output_path << "'\n";
      return 2;
    }
    out << text;
  }
  return any_unconverged(records) ? 3 : 0;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Mobius-weighted coefficient extraction from samples"};
  app.require_subcommand(1);

  JobConfig config;
  std::string n_list;
  std::string query_list;
  std::string checkpoint_list;
  std::string format = "json";

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--signal", config.signal, "catalog:NAME or catalog:NAME(ARGS)");
    cmd->add_option("--file", config.input_file, "headerless CSV of samples f(j/G)");
    cmd->add_option("--n", n_list, "comma-separated coefficient indices");
    cmd->add_option("--K", config.k_fixed, "fixed truncation depth (or term count)");
    cmd->add_option("--adaptive-tol", config.adaptive_tol, "adaptive stopping tolerance");
    cmd->add_option("--Kmax", config.k_max, "adaptive truncation ceiling");
    cmd->add_option("--radius", config.radius, "interior extraction circle radius");
    cmd->add_option("--mu-param", config.mu_param, "Yukawa parameter override");
    cmd->add_option("--theta", config.theta, "angle/argument parameter")
        ->each([&](const std::string&) { config.theta_set = true; });
    cmd->add_option("--irrational", config.irrational, "golden | sqrt2 | ln2");
    cmd->add_option("--limit", config.limit, "sieve size");
    cmd->add_option("--output", config.output_path, "output path (default stdout)");
    cmd->add_option("--format", format, "json | csv");
    cmd->add_option("--seed", config.seed, "seed for randomized sweeps");
    cmd->add_option("--checkpoints", checkpoint_list, "comma-separated decade exponents");
    cmd->add_option("--query", query_list, "comma-separated table queries");
  };

  const std::pair<const char*, Command> kCommands[] = {
      {"mobius", Command::kMobius},       {"fourier", Command::kFourier},
      {"taylor", Command::kTaylor},       {"ztrans", Command::kZtrans},
      {"step", Command::kStep},           {"muregular", Command::kMuRegular},
      {"davenport", Command::kDavenport}, {"filterbank", Command::kFilterbank},
      {"bench", Command::kBench},         {"diagnose-pnt", Command::kDiagnosePnt},
  };
  for (const auto& [name, cmd] : kCommands) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    sub->callback([&config, cmd] { config.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto parse_list = [](const std::string& s, auto push) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        push(std::stoll(item));
      } catch (const std::exception&) {
        std::cerr << "error: bad list entry '" << item << "'\n";
        return false;
      }
    }
    return true;
  };
  if (!parse_list(n_list, [&](long long v) { config.indices.push_back(static_cast<int>(v)); }) ||
      !parse_list(query_list, [&](long long v) { config.queries.push_back(v); }) ||
      !parse_list(checkpoint_list,
                  [&](long long v) { config.checkpoints.push_back(static_cast<int>(v)); })) {
    return 2;
  }

  if (format == "json") {
    config.format = OutputFormat::kJson;
  } else if (format == "csv") {
    config.format = OutputFormat::kCsv;
  } else {
    std::cerr << "error: --format must be json or csv\n";
    return 2;
  }

  return run(config);
}

}  // namespace aft::cli
