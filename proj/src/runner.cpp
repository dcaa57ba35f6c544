// Copyright 2026 The paulient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paulient/runner.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "paulient/error.hpp"
#include "paulient/io.hpp"
#include "paulient/mpu.hpp"
#include "paulient/parallel.hpp"
#include "paulient/pauli_power.hpp"
#include "paulient/selftest.hpp"
#include "paulient/spin_chain.hpp"
#include "paulient/theorem1.hpp"

namespace paulient::cli {

using nlohmann::json;

namespace {

struct CommandInfo {
  Command command;
  const char* name;
};

constexpr CommandInfo kCommands[] = {
    {Command::kPeExact, "pe-exact"},         {Command::kPeSample, "pe-sample"},
    {Command::kPeTypical, "pe-typical"},     {Command::kPeBounds, "pe-bounds"},
    {Command::kHaarMc, "haar-mc"},           {Command::kThm1Check, "thm1-check"},
    {Command::kThm1Factorize, "thm1-factorize"}, {Command::kMpuPe, "mpu-pe"},
    {Command::kSpinchainRun, "spinchain-run"}, {Command::kSelftest, "selftest"},
};

std::vector<ParamSpec> with_common(std::vector<ParamSpec> specific) {
  specific.push_back({"seed", ParamType::kInt, 1, "64-bit seed for every random stream"});
  specific.push_back({"out", ParamType::kString, "", "output file (stdout when empty)"});
  specific.push_back({"workers", ParamType::kInt, 0, "worker threads, 0 = all cores"});
  return specific;
}

ParamSpec matrix_param() { return {"matrix", ParamType::kString, nullptr, "unitary in the text matrix format"}; }
ParamSpec na_param() { return {"n_a", ParamType::kInt, -1, "qubits in A (default floor(N/2))"}; }

std::map<Command, std::vector<ParamSpec>> build_schemas() {
  std::map<Command, std::vector<ParamSpec>> s;
  s[Command::kPeExact] = with_common(
      {matrix_param(), na_param(), {"route", ParamType::kString, "auto", "auto | per-pauli | local | gram"}});
  s[Command::kPeSample] = with_common({matrix_param(),
                                       na_param(),
                                       {"sem_target", ParamType::kReal, 2e-2, "stop once z * sem < sem_target"},
                                       {"z", ParamType::kReal, 1.0, "multiplier of the standard error"},
                                       {"fixed_count", ParamType::kInt, 0, "draw exactly this many strings"},
                                       {"max_samples", ParamType::kInt, 1 << 20, "sample cap"}});
  s[Command::kPeTypical] = with_common({{"d", ParamType::kInt, 16, "total dimension"},
                                        {"d_a", ParamType::kInt, 4, "dimension of A"}});
  s[Command::kPeBounds] = with_common({matrix_param(), na_param()});
  s[Command::kHaarMc] = with_common({{"n", ParamType::kInt, 4, "qubits"},
                                     na_param(),
                                     {"samples", ParamType::kInt, 200, "Haar unitaries to draw"}});
  s[Command::kThm1Check] =
      with_common({matrix_param(), na_param(), {"tol", ParamType::kReal, 1e-10, "product-rank tolerance"}});
  s[Command::kThm1Factorize] =
      with_common({matrix_param(), na_param(), {"tol", ParamType::kReal, 1e-10, "product-rank tolerance"}});
  s[Command::kMpuPe] = with_common(
      {{"tensor", ParamType::kString, "", "MPU tensor in the text mpu format"},
       {"library", ParamType::kString, "", "built-in tensor: cz | hcz | thcz | shift | hadamard"},
       {"n_a", ParamType::kInt, 2, "sites in A"},
       {"n_b", ParamType::kInt, 2, "sites in B"},
       {"mode", ParamType::kString, "finite", "finite | thermodynamic"},
       {"memory_budget", ParamType::kInt, static_cast<std::int64_t>(1) << 30, "transfer-matrix budget in bytes"}});
  s[Command::kSpinchainRun] =
      with_common({{"model", ParamType::kString, "xyz", "xyz | tfim"},
                   {"sweep", ParamType::kString, nullptr, "Jz=a:step:b or h=v1,v2,..."},
                   {"n", ParamType::kInt, 8, "sites"},
                   {"mode", ParamType::kString, "exact", "exact | sampled"},
                   {"jx", ParamType::kReal, 0.75, "XYZ coupling"},
                   {"jy", ParamType::kReal, 0.25, "XYZ coupling"},
                   {"jz", ParamType::kReal, 0.0, "XYZ coupling (unless swept)"},
                   {"h", ParamType::kReal, 0.5, "longitudinal field (unless swept)"},
                   {"j", ParamType::kReal, 1.0, "TFIM coupling"},
                   {"g", ParamType::kReal, 1.0, "TFIM transverse field"},
                   {"dt", ParamType::kReal, 0.2, "time step"},
                   {"threshold", ParamType::kReal, 2e-2, "stopping threshold"},
                   {"z", ParamType::kReal, 1.96, "multiplier in the stopping rule"},
                   {"n_min", ParamType::kInt, 25, "minimum number of time steps"},
                   {"max_steps", ParamType::kInt, 5000, "time-step cap"}});
  s[Command::kSelftest] = with_common({});
  return s;
}

const std::map<Command, std::vector<ParamSpec>>& schemas() {
  static const auto s = build_schemas();
  return s;
}

json coerce(const ParamSpec& spec, const json& v, const std::string& source) {
  const std::string where = source + " key '" + spec.name + "'";
  switch (spec.type) {
    case ParamType::kInt:
      if (v.is_number_integer()) return v;
      if (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>()) return v.get<std::int64_t>();
      break;
    case ParamType::kReal:
      if (v.is_number()) return v.get<double>();
      break;
    case ParamType::kString:
      if (v.is_string()) return v;
      break;
    case ParamType::kBool:
      if (v.is_boolean()) return v;
      break;
  }
  throw ConfigError(where + " has the wrong type");
}

json parse_flag(const ParamSpec& spec, const std::string& text) {
  try {
    std::size_t used = 0;
    switch (spec.type) {
      case ParamType::kInt: {
        const long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
        break;
      }
      case ParamType::kReal: {
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
        break;
      }
      case ParamType::kString:
        return text;
      case ParamType::kBool:
        if (text == "true" || text == "1") return true;
        if (text == "false" || text == "0") return false;
        break;
    }
  } catch (const std::logic_error&) {
  }
  throw ConfigError("flag --" + spec.name + " cannot parse '" + text + "'");
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("Internal", "SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return os.str();
}

// ----------------------------------------------------------------------------
// Command bodies. Each returns the JSON result block.

struct Context {
  const RunConfig& config;
  std::string digest;
  std::ostream& out;
};

std::int64_t get_int(const RunConfig& c, const char* key) { return c.params.at(key).get<std::int64_t>(); }
double get_real(const RunConfig& c, const char* key) { return c.params.at(key).get<double>(); }
std::string get_string(const RunConfig& c, const char* key) { return c.params.at(key).get<std::string>(); }

Bipartition bipartition_for(int n, std::int64_t n_a) {
  if (n_a < 0) n_a = n / 2;
  if (n_a < 1 || n_a >= n) {
    throw ConfigError("n_a = " + std::to_string(n_a) + " is not a proper cut of " + std::to_string(n) + " qubits");
  }
  return {static_cast<int>(n_a), n - static_cast<int>(n_a)};
}

struct LoadedUnitary {
  DenseOperator u;
  Bipartition bp;
};

LoadedUnitary load_unitary(const RunConfig& c) {
  DenseOperator u = io::load_matrix(get_string(c, "matrix"));
  const Bipartition bp = bipartition_for(u.n_qubits(), get_int(c, "n_a"));
  return {std::move(u), bp};
}

json bp_json(const Bipartition& bp) { return {{"n_a", bp.n_a}, {"n_b", bp.n_b}}; }

json run_pe_exact(const RunConfig& c) {
  const auto [u, bp] = load_unitary(c);
  static const std::map<std::string, ExactRoute> routes = {{"auto", ExactRoute::kAuto},
                                                           {"per-pauli", ExactRoute::kPerPauli},
                                                           {"local", ExactRoute::kLocalCoefficients},
                                                           {"gram", ExactRoute::kGramBlocks}};
  const auto it = routes.find(get_string(c, "route"));
  if (it == routes.end()) throw ConfigError("unknown route '" + get_string(c, "route") + "'");
  const PauliPowerEstimate e = pauli_entangling_power_exact(u, bp, {kDefaultDenseLimit, it->second});
  return {{"bipartition", bp_json(bp)}, {"pauli_entangling_power", e.value}, {"n_strings", e.n_samples}};
}

json run_pe_sample(const RunConfig& c) {
  const auto [u, bp] = load_unitary(c);
  SamplingOptions o;
  o.sem_target = get_real(c, "sem_target");
  o.z = get_real(c, "z");
  o.fixed_count = static_cast<std::uint64_t>(std::max<std::int64_t>(0, get_int(c, "fixed_count")));
  o.max_samples = static_cast<std::uint64_t>(std::max<std::int64_t>(1, get_int(c, "max_samples")));
  RngStream rng(c.seed());
  const PauliPowerEstimate e = pauli_entangling_power_sampled(u, bp, rng, o);
  return {{"bipartition", bp_json(bp)},
          {"pauli_entangling_power", e.value},
          {"sem", e.sem},
          {"n_samples", e.n_samples}};
}

json run_pe_typical(const RunConfig& c) {
  const std::int64_t d = get_int(c, "d");
  const std::int64_t da = get_int(c, "d_a");
  if (d < 1 || da < 1) throw ConfigError("dimensions must be positive");
  const HaarTypical t = haar_typical_value(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(da));
  return {{"d", d}, {"d_a", da}, {"haar_average", t.value}, {"large_d_expansion", t.expansion}};
}

json run_pe_bounds(const RunConfig& c) {
  const auto [u, bp] = load_unitary(c);
  const LocalMagicBounds b = local_pauli_magic_bound(u, bp);
  return {{"bipartition", bp_json(bp)}, {"bound_a", b.bound_a}, {"bound_b", b.bound_b}, {"bound", b.min()}};
}

json run_haar_mc(const RunConfig& c) {
  const auto n = static_cast<int>(get_int(c, "n"));
  const Bipartition bp = bipartition_for(n, get_int(c, "n_a"));
  const std::int64_t samples = get_int(c, "samples");
  if (samples < 2) throw ConfigError("samples must be at least 2");
  const HaarMonteCarlo mc = haar_pauli_power_monte_carlo(bp, static_cast<std::uint64_t>(samples), RngStream(c.seed()));
  const HaarTypical t = haar_typical_value(bp.d(), bp.d_a());
  return {{"bipartition", bp_json(bp)},
          {"mean", mc.mean},
          {"sem", mc.sem},
          {"n_samples", mc.n_samples},
          {"haar_average", t.value},
          {"z_score", mc.sem > 0 ? (mc.mean - t.value) / mc.sem : 0.0}};
}

json run_thm1_check(const RunConfig& c) {
  const auto [u, bp] = load_unitary(c);
  const ProductCheck r = check_pauli_product_preserving(u, bp, get_real(c, "tol"));
  json j = {{"bipartition", bp_json(bp)}, {"product-preserving", r.product_preserving}};
  if (r.witness) {
    j["witness"] = r.witness->str();
    j["witness_lambda2"] = r.witness_lambda2;
  }
  return j;
}

json run_thm1_factorize(const Context& ctx) {
  const RunConfig& c = ctx.config;
  const auto [u, bp] = load_unitary(c);
  const LocalCliffordFactorization f = factorize(u, bp, get_real(c, "tol"));
  const FactorizationCheck check = verify_factorization(u, f);
  const std::string out = get_string(c, "out");
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw ConfigError("cannot write '" + out + "'");
    file << "# paulient thm1-factorize\n# config_sha256 " << ctx.digest << "\n# seed " << c.seed() << '\n';
    io::write_factorization(file, f, check);
  }
  json j = {{"bipartition", bp_json(bp)},
            {"residual", check.residual},
            {"global_phase", {f.global_phase.real() + 0.0, f.global_phase.imag() + 0.0}},
            {"tableau", f.c.to_text()}};
  if (check.corollary_checked) j["max_local_magic"] = check.max_local_magic;
  return j;
}

MpuTensor library_tensor(const std::string& name) {
  if (name == "cz") return mpu_library::cz_ring();
  if (name == "hcz") return mpu_library::hadamard_cz_ring();
  if (name == "thcz") return mpu_library::t_hadamard_cz_ring();
  if (name == "shift") return mpu_library::shift();
  if (name == "hadamard") {
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    return mpu_library::local_gate(h / std::sqrt(2.0));
  }
  throw ConfigError("unknown library tensor '" + name + "'");
}

json run_mpu_pe(const RunConfig& c) {
  const std::string tensor = get_string(c, "tensor");
  const std::string lib = get_string(c, "library");
  if (tensor.empty() == lib.empty()) throw ConfigError("mpu-pe needs exactly one of 'tensor' and 'library'");
  const MpuTensor a = tensor.empty() ? library_tensor(lib) : io::load_mpu(tensor);
  MpuOptions o;
  const std::string mode = get_string(c, "mode");
  if (mode == "finite") {
    o.mode = MpuMode::kFinite;
  } else if (mode == "thermodynamic") {
    o.mode = MpuMode::kThermodynamic;
  } else {
    throw ConfigError("unknown mpu mode '" + mode + "'");
  }
  if (get_int(c, "memory_budget") < 1) throw ConfigError("memory_budget must be positive");
  o.memory_budget_bytes = static_cast<std::size_t>(get_int(c, "memory_budget"));
  const auto na = static_cast<int>(get_int(c, "n_a"));
  const auto nb = static_cast<int>(get_int(c, "n_b"));
  if (o.mode == MpuMode::kFinite && (na < 1 || nb < 1)) throw ConfigError("n_a and n_b must be positive");
  const double v = pauli_power_mpu(a, na, nb, o);
  json j = {{"chi", a.chi()}, {"mode", mode}, {"pauli_entangling_power", v}};
  if (o.mode == MpuMode::kFinite) j["bipartition"] = {{"n_a", na}, {"n_b", nb}};
  return j;
}

std::vector<double> parse_sweep(const std::string& spec, const std::string& expected_name) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw ConfigError("sweep must look like " + expected_name + "=values");
  std::string name = spec.substr(0, eq);
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower != expected_name) throw ConfigError("this model sweeps '" + expected_name + "', not '" + name + "'");
  const std::string body = spec.substr(eq + 1);
  auto number = [&](const std::string& t) {
    try {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used == t.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ConfigError("bad sweep value '" + t + "'");
  };
  std::vector<double> values;
  if (std::count(body.begin(), body.end(), ':') == 2) {
    const auto c1 = body.find(':');
    const auto c2 = body.find(':', c1 + 1);
    const double a = number(body.substr(0, c1));
    const double step = number(body.substr(c1 + 1, c2 - c1 - 1));
    const double b = number(body.substr(c2 + 1));
    if (!(step > 0.0) || b < a) throw ConfigError("sweep range needs a positive step and start <= stop");
    const auto count = static_cast<std::int64_t>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 10000) throw ConfigError("sweep range has too many points");
    for (std::int64_t k = 0; k < count; ++k) values.push_back(a + static_cast<double>(k) * step);
  } else {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(number(tok));
  }
  if (values.empty()) throw ConfigError("empty sweep");
  return values;
}

void run_spinchain(const Context& ctx) {
  const RunConfig& c = ctx.config;
  SweepConfig s;
  const std::string model = get_string(c, "model");
  if (model == "xyz") {
    s.family = SweepFamily::kXyzJz;
    s.values = parse_sweep(get_string(c, "sweep"), "jz");
  } else if (model == "tfim") {
    s.family = SweepFamily::kTfimH;
    s.values = parse_sweep(get_string(c, "sweep"), "h");
  } else {
    throw ConfigError("unknown model '" + model + "'");
  }
  s.n_sites = static_cast<int>(get_int(c, "n"));
  if (s.n_sites < 2 || s.n_sites > kDefaultDenseLimit) throw ConfigError("n must lie in [2, 12]");
  const std::string mode = get_string(c, "mode");
  if (mode == "exact") {
    s.mode = PowerMode::kExact;
    if (s.n_sites > 8) throw ConfigError("exact mode is limited to n <= 8; use --mode sampled");
  } else if (mode == "sampled") {
    s.mode = PowerMode::kSampled;
    if (!c.explicit_keys.count("seed")) throw ConfigError("sampled mode needs an explicit seed");
  } else {
    throw ConfigError("unknown mode '" + mode + "'");
  }
  s.jx = get_real(c, "jx");
  s.jy = get_real(c, "jy");
  s.h = get_real(c, "h");
  s.j = get_real(c, "j");
  s.g = get_real(c, "g");
  s.time.dt = get_real(c, "dt");
  s.time.sem_threshold = get_real(c, "threshold");
  s.time.z = get_real(c, "z");
  s.time.min_steps = static_cast<std::uint64_t>(std::max<std::int64_t>(1, get_int(c, "n_min")));
  s.time.max_steps = static_cast<std::uint64_t>(std::max<std::int64_t>(1, get_int(c, "max_steps")));
  s.sampling.sem_target = s.time.sem_threshold;
  s.sampling.z = s.time.z;
  s.seed = c.seed();
  if (!(s.time.dt > 0.0) || !(s.time.sem_threshold > 0.0)) throw ConfigError("dt and threshold must be positive");

  const std::vector<SweepRow> rows = run_sweep_experiment(s);
  std::ostringstream csv;
  csv << "# paulient spinchain-run\n# config_sha256 " << ctx.digest << "\n# seed " << c.seed() << '\n';
  write_sweep_csv(csv, rows);
  const std::string out = get_string(c, "out");
  if (out.empty()) {
    ctx.out << csv.str();
  } else {
    std::ofstream file(out);
    if (!file) throw ConfigError("cannot write '" + out + "'");
    file << csv.str();
  }
}

// The pe family writes CSV files; wall_time is the only column that varies
// between identical runs.
std::string pe_csv(Command c, const json& r, double wall) {
  std::ostringstream os;
  os << std::setprecision(17);
  switch (c) {
    case Command::kPeExact:
      os << "value,sem,n_samples,wall_time\n"
         << r.at("pauli_entangling_power").get<double>() << ",0," << r.at("n_strings") << ',' << wall << '\n';
      break;
    case Command::kPeSample:
      os << "value,sem,n_samples,wall_time\n"
         << r.at("pauli_entangling_power").get<double>() << ',' << r.at("sem").get<double>() << ','
         << r.at("n_samples") << ',' << wall << '\n';
      break;
    case Command::kPeTypical:
      os << "value,sem,n_samples,wall_time\n" << r.at("haar_average").get<double>() << ",0,0," << wall << '\n';
      break;
    case Command::kHaarMc:
      os << "value,sem,n_samples,wall_time\n"
         << r.at("mean").get<double>() << ',' << r.at("sem").get<double>() << ',' << r.at("n_samples") << ','
         << wall << '\n';
      break;
    case Command::kPeBounds:
      os << "bound_a,bound_b,bound,wall_time\n"
         << r.at("bound_a").get<double>() << ',' << r.at("bound_b").get<double>() << ','
         << r.at("bound").get<double>() << ',' << wall << '\n';
      break;
    default:
      return {};
  }
  return os.str();
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& info : kCommands) {
    if (info.command == c) return info.name;
  }
  return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& info : kCommands) {
    if (name == info.name) return info.command;
  }
  return std::nullopt;
}

std::vector<Command> all_commands() {
  std::vector<Command> out;
  for (const auto& info : kCommands) out.push_back(info.command);
  return out;
}

const std::vector<ParamSpec>& command_schema(Command c) { return schemas().at(c); }

std::uint64_t RunConfig::seed() const { return static_cast<std::uint64_t>(params.at("seed").get<std::int64_t>()); }

RunConfig make_config(std::optional<Command> command, const json& file_config, const json& flag_values) {
  if (!file_config.is_null() && !file_config.is_object()) throw ConfigError("config must be a JSON object");
  std::optional<Command> from_file;
  if (file_config.is_object() && file_config.contains("command")) {
    const json& name = file_config.at("command");
    if (!name.is_string()) throw ConfigError("'command' must be a string");
    from_file = parse_command(name.get<std::string>());
    if (!from_file) throw ConfigError("unknown command '" + name.get<std::string>() + "'");
  }
  if (command && from_file && *command != *from_file) {
    throw ConfigError("config file is for '" + command_name(*from_file) + "' but '" + command_name(*command) +
                      "' was requested");
  }
  RunConfig rc;
  if (command) {
    rc.command = *command;
  } else if (from_file) {
    rc.command = *from_file;
  } else {
    throw ConfigError("no command given");
  }
  const auto& schema = command_schema(rc.command);
  auto find = [&](const std::string& key) -> const ParamSpec* {
    for (const auto& p : schema) {
      if (p.name == key) return &p;
    }
    return nullptr;
  };
  if (file_config.is_object()) {
    for (const auto& [key, value] : file_config.items()) {
      if (key == "command") continue;
      const ParamSpec* spec = find(key);
      if (!spec) throw ConfigError("unknown config key '" + key + "' for " + command_name(rc.command));
      rc.params[key] = coerce(*spec, value, "config");
      rc.explicit_keys.insert(key);
    }
  }
  if (!flag_values.is_null()) {
    for (const auto& [key, value] : flag_values.items()) {
      const ParamSpec* spec = find(key);
      if (!spec) throw ConfigError("unknown flag --" + key + " for " + command_name(rc.command));
      rc.params[key] = value.is_string() ? parse_flag(*spec, value.get<std::string>()) : coerce(*spec, value, "flag");
      rc.explicit_keys.insert(key);
    }
  }
  for (const auto& spec : schema) {
    if (rc.params.contains(spec.name)) continue;
    if (spec.default_value.is_null()) throw ConfigError("missing required key '" + spec.name + "'");
    rc.params[spec.name] = spec.default_value;
  }
  if (rc.params.at("seed").get<std::int64_t>() < 0) throw ConfigError("seed must be non-negative");
  if (rc.params.at("workers").get<std::int64_t>() < 0) throw ConfigError("workers must be non-negative");
  return rc;
}

std::string config_digest(const RunConfig& config) {
  json canonical = config.params;
  canonical.erase("workers");
  canonical.erase("out");
  canonical["command"] = command_name(config.command);
  return sha256_hex(canonical.dump());
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto workers = config.params.at("workers").get<std::int64_t>();
    if (workers > 0) set_worker_count(static_cast<unsigned>(workers));
    const Context ctx{config, config_digest(config), out};
    if (config.command == Command::kSpinchainRun) {
      run_spinchain(ctx);
      return 0;
    }
    if (config.command == Command::kSelftest) {
      return print_selftest(out, run_selftest()) ? 0 : 1;
    }
    json result;
    const auto started = std::chrono::steady_clock::now();
    switch (config.command) {
      case Command::kPeExact: result = run_pe_exact(config); break;
      case Command::kPeSample: result = run_pe_sample(config); break;
      case Command::kPeTypical: result = run_pe_typical(config); break;
      case Command::kPeBounds: result = run_pe_bounds(config); break;
      case Command::kHaarMc: result = run_haar_mc(config); break;
      case Command::kThm1Check: result = run_thm1_check(config); break;
      case Command::kThm1Factorize: result = run_thm1_factorize(ctx); break;
      case Command::kMpuPe: result = run_mpu_pe(config); break;
      default: break;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json doc = {{"command", command_name(config.command)},
                {"config_sha256", ctx.digest},
                {"seed", config.seed()},
                {"result", result}};
    const std::string text = doc.dump(2) + "\n";
    out << text;
    const std::string path = get_string(config, "out");
    if (!path.empty() && config.command != Command::kThm1Factorize) {
      std::ofstream file(path);
      if (!file) throw ConfigError("cannot write '" + path + "'");
      if (const std::string row = pe_csv(config.command, result, wall); !row.empty()) {
        file << "# paulient " << command_name(config.command) << "\n# config_sha256 " << ctx.digest << "\n# seed "
             << config.seed() << '\n'
             << row;
      } else {
        file << text;
      }
    }
    return 0;
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"paulient: Pauli entangling power, Clifford factorization and spin-chain dynamics"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config; flags override its values");

  struct Leaf {
    Command command;
    CLI::App* app;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
  };
  std::vector<std::unique_ptr<Leaf>> leaves;
  auto add_leaf = [&](CLI::App* parent, const std::string& name, Command c, const std::string& help) {
    auto leaf = std::make_unique<Leaf>();
    leaf->command = c;
    leaf->app = parent->add_subcommand(name, help);
    leaf->app->add_option("--config", config_path, "JSON config; flags override its values");
    for (const auto& spec : command_schema(c)) {
      leaf->options[spec.name] = leaf->app->add_option("--" + spec.name, leaf->values[spec.name], spec.help);
    }
    leaves.push_back(std::move(leaf));
  };
  CLI::App* pe = app.add_subcommand("pe", "Pauli entangling power");
  pe->require_subcommand(1);
  add_leaf(pe, "exact", Command::kPeExact, "exact average over all Pauli strings");
  add_leaf(pe, "sample", Command::kPeSample, "Monte Carlo over Pauli strings");
  add_leaf(pe, "typical", Command::kPeTypical, "closed-form Haar average");
  add_leaf(pe, "bounds", Command::kPeBounds, "local Pauli magic upper bounds");
  add_leaf(pe, "haar-mc", Command::kHaarMc, "Monte Carlo over Haar unitaries");
  CLI::App* thm1 = app.add_subcommand("thm1", "product-preserving unitaries");
  thm1->require_subcommand(1);
  add_leaf(thm1, "check", Command::kThm1Check, "is every evolved Pauli string a product?");
  add_leaf(thm1, "factorize", Command::kThm1Factorize, "local-Clifford factorization");
  CLI::App* mpu = app.add_subcommand("mpu", "translation-invariant matrix product unitaries");
  mpu->require_subcommand(1);
  add_leaf(mpu, "pe", Command::kMpuPe, "Pauli entangling power from transfer matrices");
  CLI::App* spin = app.add_subcommand("spinchain", "spin-chain dynamics");
  spin->require_subcommand(1);
  add_leaf(spin, "run", Command::kSpinchainRun, "long-time averages over a parameter sweep");
  add_leaf(&app, "selftest", Command::kSelftest, "property checks for every module");
  CLI::App* run_cmd = app.add_subcommand("run", "run the command named in --config");
  run_cmd->add_option("--config", config_path, "JSON config naming its command")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::optional<Command> command;
  json flags = json::object();
  for (const auto& leaf : leaves) {
    if (!leaf->app->parsed()) continue;
    command = leaf->command;
    for (const auto& [name, opt] : leaf->options) {
      if (opt->count() > 0) flags[name] = leaf->values[name];
    }
  }
  try {
    json file_config;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ConfigError("cannot open config '" + config_path + "'");
      try {
        file_config = json::parse(f);
      } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
      }
    }
    const RunConfig rc = make_config(command, file_config, flags);
    return run(rc, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

}  // namespace paulient::cli
