#include "emff/config.hpp"

#include <fstream>
#include <set>

#include "emff/errors.hpp"
#include "emff/io.hpp"

namespace emff {

void SimulationConfig::validate() const {
  if (node_count == 0) throw ConfigError("node_count", "must be at least 1");
  if (deployment.size <= 0.0)
    throw ConfigError("deployment.size_m", "must be positive");
  if (tx_range <= 0.0) throw ConfigError("tx_range_m", "must be positive");
  if (initial_energy <= 0.0)
    throw ConfigError("initial_energy_j", "must be positive");
  if (sector_count == 0) throw ConfigError("sector_count", "must be at least 1");
  weights.validate();
  attraction.validate();
  if (radio.e_elec <= 0.0)
    throw ConfigError("radio.e_elec_j_per_bit", "must be positive");
  if (radio.eps_amp <= 0.0)
    throw ConfigError("radio.eps_amp_j_per_bit_m2", "must be positive");
  if (radio.packet_bits == 0)
    throw ConfigError("radio.packet_bits", "must be positive");
  if (radio.hello_bits == 0)
    throw ConfigError("radio.hello_bits", "must be positive");
  channel.validate();
  if (buffer_packets == 0)
    throw ConfigError("buffer_packets", "must be at least 1");
  if (rounds_per_second <= 0.0)
    throw ConfigError("rounds_per_second", "must be positive");
}

namespace {

// Tracks which keys of one JSON object were consumed so leftovers can be
// rejected by name, and records absent keys as defaulted.
class Reader {
 public:
  Reader(const nlohmann::json& obj, std::string prefix,
         std::vector<std::string>* defaults)
      : obj_(obj), prefix_(std::move(prefix)), defaults_(defaults) {
    if (!obj_.is_object())
      throw ConfigError(prefix_.empty() ? "document" : qualified(""),
                        "expected a JSON object");
  }

  template <typename T>
  void number(const char* key, T& out) {
    if (const nlohmann::json* v = fetch(key)) {
      if (!v->is_number())
        throw ConfigError(qualified(key), "expected a number");
      if constexpr (std::is_unsigned_v<T>) {
        const double raw = v->get<double>();
        if (raw < 0.0) throw ConfigError(qualified(key), "must be non-negative");
      }
      out = v->get<T>();
    }
  }

  void string(const char* key, std::string& out) {
    if (const nlohmann::json* v = fetch(key)) {
      if (!v->is_string())
        throw ConfigError(qualified(key), "expected a string");
      out = v->get<std::string>();
    }
  }

  // Returns a sub-reader for a nested object key, or nullopt when absent
  // (the whole subtree then keeps its defaults).
  std::optional<Reader> object(const char* key) {
    if (const nlohmann::json* v = fetch(key)) {
      return Reader(*v, qualified(key), defaults_);
    }
    return std::nullopt;
  }

  void finish() {
    for (const auto& item : obj_.items()) {
      if (!seen_.contains(item.key()))
        throw ConfigError(qualified(item.key().c_str()), "unknown field");
    }
  }

 private:
  std::string qualified(const char* key) const {
    if (prefix_.empty()) return key;
    return *key ? prefix_ + "." + key : prefix_;
  }

  const nlohmann::json* fetch(const char* key) {
    seen_.insert(key);
    auto it = obj_.find(key);
    if (it == obj_.end()) {
      if (defaults_) defaults_->push_back(qualified(key));
      return nullptr;
    }
    return &*it;
  }

  const nlohmann::json& obj_;
  std::string prefix_;
  std::vector<std::string>* defaults_;
  std::set<std::string> seen_;
};

}  // namespace

ParsedConfig parse_config(const nlohmann::json& document) {
  ParsedConfig parsed;
  SimulationConfig& cfg = parsed.config;
  Reader root(document, "", &parsed.defaulted_fields);

  root.number("node_count", cfg.node_count);

  if (auto dep = root.object("deployment")) {
    std::string shape = "disk";
    dep->string("shape", shape);
    if (shape == "disk") {
      cfg.deployment.shape = DeploymentShape::Disk;
    } else if (shape == "square") {
      cfg.deployment.shape = DeploymentShape::Square;
    } else {
      throw ConfigError("deployment.shape", "expected \"disk\" or \"square\"");
    }
    dep->number("size_m", cfg.deployment.size);
    dep->finish();
  }

  if (auto center = root.object("center")) {
    center->number("x", cfg.center.x);
    center->number("y", cfg.center.y);
    center->finish();
  }

  root.number("tx_range_m", cfg.tx_range);
  root.number("initial_energy_j", cfg.initial_energy);
  root.number("sector_count", cfg.sector_count);

  if (auto w = root.object("weights")) {
    w->number("w1", cfg.weights.w1);
    w->number("w2", cfg.weights.w2);
    w->number("w3", cfg.weights.w3);
    w->number("w4", cfg.weights.w4);
    w->finish();
  }

  if (auto a = root.object("attraction")) {
    a->number("beta0", cfg.attraction.beta0);
    a->number("light_gamma", cfg.attraction.light_gamma);
    a->number("alpha", cfg.attraction.alpha);
    a->number("queue_size", cfg.attraction.queue_size);
    a->finish();
  }

  if (auto r = root.object("radio")) {
    r->number("e_elec_j_per_bit", cfg.radio.e_elec);
    r->number("eps_amp_j_per_bit_m2", cfg.radio.eps_amp);
    r->number("packet_bits", cfg.radio.packet_bits);
    r->number("hello_bits", cfg.radio.hello_bits);
    r->finish();
  }

  if (auto c = root.object("channel")) {
    c->number("tx_power_w", cfg.channel.tx_power);
    c->number("path_loss_exponent", cfg.channel.path_loss_exponent);
    c->number("noise_floor_w", cfg.channel.noise_floor);
    std::string mode = "off";
    c->string("interference_mode", mode);
    if (mode == "off") {
      cfg.channel.interference = InterferenceMode::Off;
    } else if (mode == "same-round-transmitters") {
      cfg.channel.interference = InterferenceMode::SameRoundTransmitters;
    } else {
      throw ConfigError("channel.interference_mode",
                        "expected \"off\" or \"same-round-transmitters\"");
    }
    c->finish();
  }

  root.number("buffer_packets", cfg.buffer_packets);

  std::string protocol(ch_policy_name(cfg.protocol));
  root.string("protocol", protocol);
  if (auto policy = parse_ch_policy(protocol)) {
    cfg.protocol = *policy;
  } else {
    throw ConfigError("protocol",
                      "expected \"em-firefly\", \"random-ch\" or \"max-energy-ch\"");
  }

  root.number("horizon_rounds", cfg.horizon_rounds);
  root.number("rounds_per_second", cfg.rounds_per_second);

  std::string metric = cfg.load_metric == LoadMetric::Cumulative ? "cumulative"
                                                                 : "per-round";
  root.string("load_metric", metric);
  if (metric == "cumulative") {
    cfg.load_metric = LoadMetric::Cumulative;
  } else if (metric == "per-round") {
    cfg.load_metric = LoadMetric::PerRound;
  } else {
    throw ConfigError("load_metric", "expected \"cumulative\" or \"per-round\"");
  }

  root.number("rng_seed", cfg.rng_seed);
  root.finish();

  cfg.validate();
  return parsed;
}

ParsedConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

nlohmann::json render_config(const SimulationConfig& cfg) {
  nlohmann::json doc;
  doc["node_count"] = cfg.node_count;
  doc["deployment"] = {
      {"shape", cfg.deployment.shape == DeploymentShape::Disk ? "disk" : "square"},
      {"size_m", cfg.deployment.size}};
  doc["center"] = {{"x", cfg.center.x}, {"y", cfg.center.y}};
  doc["tx_range_m"] = cfg.tx_range;
  doc["initial_energy_j"] = cfg.initial_energy;
  doc["sector_count"] = cfg.sector_count;
  doc["weights"] = {{"w1", cfg.weights.w1},
                    {"w2", cfg.weights.w2},
                    {"w3", cfg.weights.w3},
                    {"w4", cfg.weights.w4}};
  doc["attraction"] = {{"beta0", cfg.attraction.beta0},
                       {"light_gamma", cfg.attraction.light_gamma},
                       {"alpha", cfg.attraction.alpha},
                       {"queue_size", cfg.attraction.queue_size}};
  doc["radio"] = {{"e_elec_j_per_bit", cfg.radio.e_elec},
                  {"eps_amp_j_per_bit_m2", cfg.radio.eps_amp},
                  {"packet_bits", cfg.radio.packet_bits},
                  {"hello_bits", cfg.radio.hello_bits}};
  doc["channel"] = {
      {"tx_power_w", cfg.channel.tx_power},
      {"path_loss_exponent", cfg.channel.path_loss_exponent},
      {"noise_floor_w", cfg.channel.noise_floor},
      {"interference_mode",
       cfg.channel.interference == InterferenceMode::Off
           ? "off"
           : "same-round-transmitters"}};
  doc["buffer_packets"] = cfg.buffer_packets;
  doc["protocol"] = std::string(ch_policy_name(cfg.protocol));
  doc["horizon_rounds"] = cfg.horizon_rounds;
  doc["rounds_per_second"] = cfg.rounds_per_second;
  doc["load_metric"] =
      cfg.load_metric == LoadMetric::Cumulative ? "cumulative" : "per-round";
  doc["rng_seed"] = cfg.rng_seed;
  return doc;
}

std::string config_hash_hex(const SimulationConfig& cfg) {
  return hex64(fnv1a64(render_config(cfg).dump()));
}

}  // namespace emff
