#include "expressivity/harness/config.hpp"

#include <set>

#include <json.hpp>

#include "expressivity/csv.hpp"
#include "expressivity/error.hpp"

namespace expressivity::harness {

using nlohmann::json;

std::vector<NamedShape> default_networks() {
  return {
      {"network1", NetworkShape::from_hidden(1, {4, 4, 4, 4, 4}, 1)},
      {"network2", NetworkShape::from_hidden(1, {20}, 1)},
  };
}

EpsilonGrid RatioSection::epsilon_for(const TargetFunction& target) const {
  const auto it = epsilon.find(target.name());
  return it == epsilon.end() ? EpsilonGrid::defaults_for(target) : it->second;
}

void ExperimentConfig::validate() const {
  if (networks.empty()) throw ConfigError("no networks configured");
  std::set<std::string> names;
  for (const auto& n : networks) {
    if (n.name.empty()) throw ConfigError("network names must be non-empty");
    if (!names.insert(n.name).second) throw ConfigError("duplicate network name '" + n.name + "'");
    try {
      n.shape.validate();
    } catch (const ShapeError& e) {
      throw ConfigError("network '" + n.name + "': " + e.what());
    }
  }
  std::set<std::string> target_names;
  for (const auto& t : targets) {
    t.validate();
    if (!target_names.insert(t.name()).second) throw ConfigError("duplicate target '" + t.name() + "'");
  }
  if (workers == 0) throw ConfigError("workers must be at least 1");
  if (fineness.draws == 0) throw ConfigError("fineness.draws must be at least 1");
  if (fineness.grid_count < 3) throw ConfigError("fineness.grid_count must be at least 3");
  if (ratio.theta_draws == 0) throw ConfigError("ratio.theta_draws must be at least 1");
  if (ratio.grid_count < 2) throw ConfigError("ratio.grid_count must be at least 2");
  for (const auto& [name, grid] : ratio.epsilon) {
    if (grid.count == 0) throw ConfigError("ratio.epsilon." + name + ".count must be at least 1");
  }
}

namespace {

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError("'" + where + "' must be an object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || item.key() == a;
    if (!ok) {
      const std::string key = where.empty() ? item.key() : where + "." + item.key();
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    const std::string path = where.empty() ? key : where + "." + key;
    throw ConfigError("config key '" + path + "' has the wrong type");
  }
}

TargetFunction parse_target(const json& j, std::size_t index) {
  const std::string where = "targets[" + std::to_string(index) + "]";
  if (j.is_string()) {
    try {
      return target_from_name(j.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + " in " + where);
    }
  }
  reject_unknown(j, where, {"kind", "a", "b", "terms"});
  const auto kind = get<std::string>(j, "kind", where, "");
  if (kind == "sin4pi" || kind == "sin") return TargetFunction::sin4pi();
  if (kind == "weierstrass") {
    const TargetFunction def = TargetFunction::weierstrass();
    return TargetFunction::weierstrass(get<double>(j, "a", where, def.amplitude_ratio),
                                       get<double>(j, "b", where, def.frequency_base),
                                       get<std::size_t>(j, "terms", where, def.terms));
  }
  throw ConfigError("unknown target '" + kind + "' in " + where + ".kind");
}

ActivationSpec parse_activation(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "hard_tanh") return ActivationSpec::hard_tanh();
    if (name == "relu") return ActivationSpec::relu_as_generic();
    throw ConfigError("unknown activation '" + name + "' in verify.activation");
  }
  reject_unknown(j, "verify.activation", {"breakpoints", "slopes", "value_at_first_breakpoint"});
  return ActivationSpec::generic(get<std::vector<double>>(j, "breakpoints", "verify.activation", {}),
                                 get<std::vector<double>>(j, "slopes", "verify.activation", {}),
                                 get<double>(j, "value_at_first_breakpoint", "verify.activation", 0.0));
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, "",
                 {"networks", "targets", "ratio", "fineness", "verify", "output_dir", "seed", "workers"});

  ExperimentConfig cfg;
  cfg.seed = get<std::uint64_t>(doc, "seed", "", cfg.seed);
  cfg.workers = get<std::size_t>(doc, "workers", "", cfg.workers);
  cfg.output_dir = get<std::string>(doc, "output_dir", "", cfg.output_dir.string());

  if (doc.contains("networks")) {
    const auto& list = doc["networks"];
    if (!list.is_array()) throw ConfigError("'networks' must be an array");
    cfg.networks.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "networks[" + std::to_string(i) + "]";
      reject_unknown(list[i], where, {"name", "input_dim", "hidden_widths", "output_dim"});
      NamedShape ns;
      ns.name = get<std::string>(list[i], "name", where, "network" + std::to_string(i + 1));
      ns.shape = NetworkShape::from_hidden(get<std::size_t>(list[i], "input_dim", where, 1),
                                           get<std::vector<std::size_t>>(list[i], "hidden_widths", where, {}),
                                           get<std::size_t>(list[i], "output_dim", where, 1));
      cfg.networks.push_back(std::move(ns));
    }
  }

  if (doc.contains("targets")) {
    const auto& list = doc["targets"];
    if (!list.is_array()) throw ConfigError("'targets' must be an array");
    cfg.targets.clear();
    for (std::size_t i = 0; i < list.size(); ++i) cfg.targets.push_back(parse_target(list[i], i));
  }

  if (doc.contains("ratio")) {
    const auto& r = doc["ratio"];
    reject_unknown(r, "ratio", {"grid_count", "theta_draws", "epsilon"});
    cfg.ratio.grid_count = get<std::size_t>(r, "grid_count", "ratio", cfg.ratio.grid_count);
    cfg.ratio.theta_draws = get<std::size_t>(r, "theta_draws", "ratio", cfg.ratio.theta_draws);
    if (r.contains("epsilon")) {
      const auto& eps = r["epsilon"];
      if (!eps.is_object()) throw ConfigError("'ratio.epsilon' must be an object");
      for (const auto& item : eps.items()) {
        const std::string where = "ratio.epsilon." + item.key();
        const TargetFunction t = [&] {
          try {
            return target_from_name(item.key());
          } catch (const ConfigError&) {
            throw ConfigError("unknown target '" + item.key() + "' in ratio.epsilon");
          }
        }();
        reject_unknown(item.value(), where, {"offset", "step", "count"});
        EpsilonGrid grid = EpsilonGrid::defaults_for(t);
        grid.offset = get<double>(item.value(), "offset", where, grid.offset);
        grid.step = get<double>(item.value(), "step", where, grid.step);
        grid.count = get<std::size_t>(item.value(), "count", where, grid.count);
        cfg.ratio.epsilon[t.name()] = grid;
      }
    }
  }

  if (doc.contains("fineness")) {
    const auto& f = doc["fineness"];
    reject_unknown(f, "fineness", {"draws", "grid_count", "threshold", "distribution", "precision"});
    cfg.fineness.draws = get<std::size_t>(f, "draws", "fineness", cfg.fineness.draws);
    cfg.fineness.grid_count = get<std::size_t>(f, "grid_count", "fineness", cfg.fineness.grid_count);
    cfg.fineness.threshold = get<double>(f, "threshold", "fineness", cfg.fineness.threshold);
    if (f.contains("distribution")) {
      cfg.fineness.distribution = distribution_from_string(get<std::string>(f, "distribution", "fineness", ""));
    }
    if (f.contains("precision")) {
      cfg.fineness.precision = precision_from_string(get<std::string>(f, "precision", "fineness", ""));
    }
  }

  if (doc.contains("verify")) {
    const auto& v = doc["verify"];
    reject_unknown(v, "verify",
                   {"activation", "oracle_networks", "oracle_grid", "oracle_threshold", "corollary_networks",
                    "refinement_pairs"});
    if (v.contains("activation")) cfg.verify.activation = parse_activation(v["activation"]);
    cfg.verify.oracle_networks = get<std::size_t>(v, "oracle_networks", "verify", cfg.verify.oracle_networks);
    cfg.verify.oracle_grid = get<std::size_t>(v, "oracle_grid", "verify", cfg.verify.oracle_grid);
    cfg.verify.oracle_threshold = get<double>(v, "oracle_threshold", "verify", cfg.verify.oracle_threshold);
    cfg.verify.corollary_networks =
        get<std::size_t>(v, "corollary_networks", "verify", cfg.verify.corollary_networks);
    cfg.verify.refinement_pairs = get<std::size_t>(v, "refinement_pairs", "verify", cfg.verify.refinement_pairs);
  }

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

void apply_overrides(ExperimentConfig& cfg, const Overrides& o) {
  if (o.seed) cfg.seed = *o.seed;
  if (o.workers) cfg.workers = *o.workers;
  if (o.output_dir) cfg.output_dir = *o.output_dir;
  if (o.draws) {
    cfg.fineness.draws = *o.draws;
    cfg.ratio.theta_draws = *o.draws;
  }
  if (o.grid) {
    cfg.fineness.grid_count = *o.grid;
    cfg.ratio.grid_count = *o.grid;
  }
  cfg.validate();
}

}  // namespace expressivity::harness
