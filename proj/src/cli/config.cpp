#include "speclab/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include "speclab/sampling.hpp"

namespace speclab::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("config: " + message);
}

void expect_object(const json& j, const std::string& section) {
  if (!j.is_object()) fail(section + " must be an object");
}

void expect_keys(const json& j, const std::string& section,
                 std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool known =
        std::any_of(allowed.begin(), allowed.end(),
                    [&](const char* k) { return it.key() == k; });
    if (!known) fail("unknown key '" + it.key() + "' in " + section);
  }
}

const json* find(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double get_number(const json& j, const std::string& section, const char* key) {
  const json* v = find(j, key);
  if (v == nullptr) fail(section + " requires numeric field '" + key + "'");
  if (!v->is_number()) fail(section + "." + key + " must be a number");
  return v->get<double>();
}

double get_number_or(const json& j, const std::string& section,
                     const char* key, double fallback) {
  return find(j, key) == nullptr ? fallback : get_number(j, section, key);
}

std::size_t get_count(const json& j, const std::string& section,
                      const char* key, std::size_t fallback) {
  const json* v = find(j, key);
  if (v == nullptr) return fallback;
  const bool ok = v->is_number_unsigned() ||
                  (v->is_number_integer() && v->get<long long>() >= 0);
  if (!ok) fail(section + "." + key + " must be a nonnegative integer");
  return v->get<std::size_t>();
}

std::string get_string(const json& j, const std::string& section,
                       const char* key) {
  const json* v = find(j, key);
  if (v == nullptr) fail(section + " requires string field '" + key + "'");
  if (!v->is_string()) fail(section + "." + key + " must be a string");
  return v->get<std::string>();
}

std::vector<double> get_number_array(const json& j, const std::string& section,
                                     const char* key) {
  const json* v = find(j, key);
  if (v == nullptr) fail(section + " requires array field '" + key + "'");
  if (!v->is_array() || v->empty()) {
    fail(section + "." + key + " must be a nonempty array of numbers");
  }
  std::vector<double> out;
  out.reserve(v->size());
  for (const auto& e : *v) {
    if (!e.is_number()) fail(section + "." + key + " must contain numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

SpectralModel parse_model(const json& j) {
  expect_object(j, "model");
  expect_keys(j, "model", {"family", "rate", "sigma2", "u", "v", "c", "scale"});
  const std::string family = get_string(j, "model", "family");
  std::optional<SpectralModel> base;
  if (family == "ou") {
    base = SpectralModel::ou(get_number(j, "model", "rate"),
                             get_number(j, "model", "sigma2"));
  } else if (family == "frbm") {
    base = SpectralModel::frbm(get_number(j, "model", "u"),
                               get_number(j, "model", "v"),
                               get_number_or(j, "model", "c", 1.0));
  } else {
    fail("model.family must be 'ou' or 'frbm'");
  }
  if (find(j, "scale") != nullptr) {
    return SpectralModel::scaled(*base, get_number(j, "model", "scale"));
  }
  return *base;
}

TrendSpec parse_trend(const json& j) {
  expect_object(j, "trend");
  expect_keys(j, "trend", {"form", "c", "beta"});
  const std::string form = get_string(j, "trend", "form");
  if (form == "zero") return TrendSpec::zero();
  if (form == "shifted_power") {
    return TrendSpec::shifted_power(get_number(j, "trend", "c"),
                                    get_number(j, "trend", "beta"));
  }
  fail("trend.form must be 'zero' or 'shifted_power'");
}

SmoothingKernel parse_kernel(const json& j) {
  expect_object(j, "kernel");
  expect_keys(j, "kernel", {"form", "bandwidth", "gamma"});
  const std::string form = get_string(j, "kernel", "form");
  if (form == "poisson") return SmoothingKernel::poisson();
  if (form == "fejer") {
    return SmoothingKernel::fejer(get_number(j, "kernel", "bandwidth"));
  }
  if (form == "power") {
    return SmoothingKernel::power(get_number(j, "kernel", "gamma"));
  }
  fail("kernel.form must be 'poisson', 'fejer', or 'power'");
}

GridSpec parse_grid(const json& j) {
  expect_object(j, "grid");
  expect_keys(j, "grid", {"horizons", "n"});
  GridSpec grid;
  grid.horizons = get_number_array(j, "grid", "horizons");
  grid.n = get_count(j, "grid", "n", 4096);
  for (double horizon : grid.horizons) {
    SamplingGrid probe(horizon, grid.n);  // validates horizon and n
    (void)probe;
  }
  return grid;
}

WhittleSpec parse_whittle(const json& j) {
  expect_object(j, "whittle");
  expect_keys(j, "whittle",
              {"family", "v", "lower", "upper", "theta_star", "component",
               "weight", "tolerance", "max_evaluations", "profile_scale"});
  WhittleSpec spec;
  const std::string family = get_string(j, "whittle", "family");
  if (family == "ou") {
    spec.family = ModelFamily::ou();
  } else if (family == "frbm_fixed_v") {
    spec.family = ModelFamily::frbm_fixed_v(get_number(j, "whittle", "v"));
  } else if (family == "frbm") {
    spec.family = ModelFamily::frbm();
  } else {
    fail("whittle.family must be 'ou', 'frbm_fixed_v', or 'frbm'");
  }
  const std::size_t dim = spec.family.dimension();

  spec.lower = get_number_array(j, "whittle", "lower");
  spec.upper = get_number_array(j, "whittle", "upper");
  if (spec.lower.size() != dim || spec.upper.size() != dim) {
    fail("whittle bounds must have " + std::to_string(dim) +
         " entries for family '" + family + "'");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(spec.lower[i] > 0.0)) {
      fail("whittle.lower must be strictly positive (parameter " +
           spec.family.parameter_names()[i] + ")");
    }
    if (!(spec.lower[i] < spec.upper[i])) {
      fail("whittle bounds must satisfy lower < upper (parameter " +
           spec.family.parameter_names()[i] + ")");
    }
  }

  if (find(j, "theta_star") != nullptr) {
    spec.theta_star = get_number_array(j, "whittle", "theta_star");
    if (spec.theta_star.size() != dim) {
      fail("whittle.theta_star must have " + std::to_string(dim) + " entries");
    }
    spec.family.instantiate(spec.theta_star);  // must be a valid model
  }

  spec.component = get_count(j, "whittle", "component", 0);
  if (spec.component >= dim) fail("whittle.component out of range");

  if (const json* w = find(j, "weight")) {
    expect_object(*w, "whittle.weight");
    expect_keys(*w, "whittle.weight", {"form", "band"});
    const std::string form = get_string(*w, "whittle.weight", "form");
    if (form == "rational") {
      spec.weight = WeightSpec::rational();
    } else if (form == "constant_on_band") {
      spec.weight =
          WeightSpec::constant_on_band(get_number(*w, "whittle.weight", "band"));
    } else {
      fail("whittle.weight.form must be 'rational' or 'constant_on_band'");
    }
  }

  spec.optimizer.tolerance =
      get_number_or(j, "whittle", "tolerance", spec.optimizer.tolerance);
  if (!(spec.optimizer.tolerance > 0.0)) {
    fail("whittle.tolerance must be positive");
  }
  spec.optimizer.max_evaluations = get_count(j, "whittle", "max_evaluations",
                                             spec.optimizer.max_evaluations);
  if (spec.optimizer.max_evaluations < 10) {
    fail("whittle.max_evaluations must be at least 10");
  }
  if (const json* p = find(j, "profile_scale")) {
    if (!p->is_boolean()) fail("whittle.profile_scale must be a boolean");
    spec.profile_scale = p->get<bool>();
  }
  return spec;
}

ConditionSpec parse_conditions(const json& j) {
  expect_object(j, "conditions");
  expect_keys(j, "conditions", {"alpha", "beta", "gamma", "memory"});
  ConditionSpec spec;

  const json* alpha = find(j, "alpha");
  if (alpha == nullptr) fail("conditions requires field 'alpha'");
  if (alpha->is_string()) {
    if (alpha->get<std::string>() != "exponential") {
      fail("conditions.alpha must be a number or 'exponential'");
    }
    spec.decay = DecayRate::exponential();
  } else if (alpha->is_number()) {
    spec.decay = DecayRate::power(alpha->get<double>());
  } else {
    fail("conditions.alpha must be a number or 'exponential'");
  }

  spec.beta = get_number(j, "conditions", "beta");

  const json* gamma = find(j, "gamma");
  if (gamma == nullptr) fail("conditions requires field 'gamma'");
  if (gamma->is_string()) {
    if (gamma->get<std::string>() != "inf") {
      fail("conditions.gamma must be a number or 'inf'");
    }
    spec.gamma = std::numeric_limits<double>::infinity();
  } else if (gamma->is_number()) {
    spec.gamma = gamma->get<double>();
  } else {
    fail("conditions.gamma must be a number or 'inf'");
  }

  const std::string memory = get_string(j, "conditions", "memory");
  if (memory == "SM") {
    spec.memory = MemoryClass::kShort;
  } else if (memory == "IM") {
    spec.memory = MemoryClass::kIntermediate;
  } else if (memory == "LM") {
    spec.memory = MemoryClass::kLong;
  } else {
    fail("conditions.memory must be 'SM', 'IM', or 'LM'");
  }
  return spec;
}

json model_echo(const SpectralModel& model) {
  json out;
  out["family"] = to_string(model.base_family());
  const auto& theta = model.theta();
  if (model.base_family() == Family::kOu) {
    out["rate"] = theta[0];
    out["sigma2"] = theta[1];
  } else {
    out["u"] = theta[0];
    out["v"] = theta[1];
    out["c"] = theta[2];
  }
  if (model.scale() != 1.0) out["scale"] = model.scale();
  return out;
}

json trend_echo(const TrendSpec& trend) {
  json out;
  if (trend.form == TrendForm::kZero) {
    out["form"] = "zero";
  } else {
    out["form"] = "shifted_power";
    out["c"] = trend.scale_c;
    out["beta"] = trend.beta;
  }
  return out;
}

json kernel_echo(const SmoothingKernel& kernel) {
  json out;
  switch (kernel.form()) {
    case KernelForm::kPoisson:
      out["form"] = "poisson";
      break;
    case KernelForm::kFejer:
      out["form"] = "fejer";
      out["bandwidth"] = kernel.bandwidth();
      break;
    case KernelForm::kPower:
      out["form"] = "power";
      out["gamma"] = kernel.gamma();
      break;
  }
  return out;
}

json whittle_echo(const WhittleSpec& spec) {
  json out;
  if (spec.family.family() == Family::kOu) {
    out["family"] = "ou";
  } else if (spec.family.fixed_v()) {
    out["family"] = "frbm_fixed_v";
    out["v"] = *spec.family.fixed_v();
  } else {
    out["family"] = "frbm";
  }
  out["lower"] = spec.lower;
  out["upper"] = spec.upper;
  if (!spec.theta_star.empty()) out["theta_star"] = spec.theta_star;
  out["component"] = spec.component;
  json weight;
  weight["form"] = spec.weight.form == WeightForm::kRational
                       ? "rational"
                       : "constant_on_band";
  if (spec.weight.form == WeightForm::kConstantOnBand) {
    weight["band"] = spec.weight.band;
  }
  out["weight"] = weight;
  out["tolerance"] = spec.optimizer.tolerance;
  out["max_evaluations"] = spec.optimizer.max_evaluations;
  out["profile_scale"] = spec.profile_scale;
  return out;
}

json conditions_echo(const ConditionSpec& spec) {
  json out;
  if (spec.decay.is_exponential) {
    out["alpha"] = "exponential";
  } else {
    out["alpha"] = spec.decay.alpha;
  }
  out["beta"] = spec.beta;
  if (std::isinf(spec.gamma)) {
    out["gamma"] = "inf";
  } else {
    out["gamma"] = spec.gamma;
  }
  out["memory"] = to_string(spec.memory);
  return out;
}

}  // namespace

const SpectralModel& Config::require_model() const {
  if (!model) fail("this subcommand requires a 'model' section");
  return *model;
}

const GridSpec& Config::require_grid() const {
  if (!grid) fail("this subcommand requires a 'grid' section");
  return *grid;
}

const WhittleSpec& Config::require_whittle() const {
  if (!whittle) fail("this subcommand requires a 'whittle' section");
  return *whittle;
}

nlohmann::json Config::echo() const {
  json out;
  if (model) out["model"] = model_echo(*model);
  out["trend"] = trend_echo(trend);
  out["kernel"] = kernel_echo(kernel);
  if (grid) {
    out["grid"] = json{{"horizons", grid->horizons}, {"n", grid->n}};
  }
  if (whittle) out["whittle"] = whittle_echo(*whittle);
  if (conditions) out["conditions"] = conditions_echo(*conditions);
  out["replications"] = replications;
  if (estimator_replications != 0) {
    out["estimator_replications"] = estimator_replications;
  }
  out["seed"] = seed;
  out["workers"] = workers;
  out["simulate_paths"] = simulate_paths;
  out["write_samples"] = write_samples;
  return out;
}

Config parse_config(const nlohmann::json& j) {
  expect_object(j, "top level");
  expect_keys(j, "top level",
              {"model", "trend", "kernel", "grid", "whittle", "conditions",
               "replications", "estimator_replications", "seed", "workers",
               "simulate_paths", "write_samples"});

  Config cfg;
  if (const json* m = find(j, "model")) cfg.model = parse_model(*m);
  if (const json* t = find(j, "trend")) cfg.trend = parse_trend(*t);
  if (const json* k = find(j, "kernel")) cfg.kernel = parse_kernel(*k);
  if (const json* g = find(j, "grid")) cfg.grid = parse_grid(*g);
  if (const json* w = find(j, "whittle")) cfg.whittle = parse_whittle(*w);
  if (const json* c = find(j, "conditions")) {
    cfg.conditions = parse_conditions(*c);
  }

  cfg.replications = get_count(j, "top level", "replications", 200);
  cfg.estimator_replications =
      get_count(j, "top level", "estimator_replications", 0);
  if (const json* s = find(j, "seed")) {
    const bool ok = s->is_number_unsigned() ||
                    (s->is_number_integer() && s->get<long long>() >= 0);
    if (!ok) fail("seed must be a nonnegative integer");
    cfg.seed = s->get<std::uint64_t>();
  }
  cfg.workers = get_count(j, "top level", "workers", 0);
  cfg.simulate_paths = get_count(j, "top level", "simulate_paths", 3);
  if (cfg.simulate_paths == 0) fail("simulate_paths must be at least 1");
  if (const json* ws = find(j, "write_samples")) {
    if (!ws->is_boolean()) fail("write_samples must be a boolean");
    cfg.write_samples = ws->get<bool>();
  }
  return cfg;
}

Config load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    fail("cannot open '" + file.string() + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    fail("parse error in '" + file.string() + "': " + err.what());
  }
  return parse_config(j);
}

}  // namespace speclab::cli
