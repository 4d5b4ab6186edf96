#include <doctest.h>

#include <json.hpp>

#include "emff/config.hpp"
#include "emff/errors.hpp"

using namespace emff;
using nlohmann::json;

TEST_CASE("an empty document yields the full default config") {
  const ParsedConfig parsed = parse_config(json::object());
  const SimulationConfig& cfg = parsed.config;

  CHECK(cfg.node_count == 4000);
  CHECK(cfg.tx_range == 250.0);
  CHECK(cfg.initial_energy == 200.0);
  CHECK(cfg.sector_count == 6);
  CHECK(cfg.deployment.shape == DeploymentShape::Disk);
  CHECK(cfg.deployment.size == 20.0);
  CHECK(cfg.weights == FitnessWeights{0.4, 0.2, 0.2, 0.2});
  CHECK(cfg.buffer_packets == 150);
  CHECK(cfg.protocol == ChPolicy::EmFirefly);
  CHECK(cfg.horizon_rounds == 180);
  CHECK(cfg.radio.e_elec == 50e-9);
  CHECK(cfg.radio.packet_bits == 4000);

  // Every top-level key is reported as defaulted.
  for (const char* field :
       {"node_count", "deployment", "center", "tx_range_m", "initial_energy_j",
        "sector_count", "weights", "attraction", "radio", "channel",
        "buffer_packets", "protocol", "horizon_rounds", "rounds_per_second",
        "load_metric", "rng_seed"}) {
    CAPTURE(field);
    CHECK(std::find(parsed.defaulted_fields.begin(),
                    parsed.defaulted_fields.end(),
                    field) != parsed.defaulted_fields.end());
  }
}

TEST_CASE("invalid configs are rejected by field name") {
  SUBCASE("weights that do not sum to one") {
    const json doc = {{"weights", {{"w1", 0.5}, {"w2", 0.5}, {"w3", 0.5}, {"w4", 0.5}}}};
    CHECK_THROWS_WITH_AS(parse_config(doc), "weights: w1 + w2 + w3 + w4 must equal 1",
                         ConfigError);
  }
  SUBCASE("zero node count") {
    CHECK_THROWS_AS(parse_config(json{{"node_count", 0}}), ConfigError);
  }
  SUBCASE("unknown top-level key") {
    try {
      parse_config(json{{"node_cout", 5}});
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "node_cout");
    }
  }
  SUBCASE("unknown nested key") {
    try {
      parse_config(json{{"radio", {{"e_elec", 1.0}}}});
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "radio.e_elec");
    }
  }
  SUBCASE("wrong value type") {
    CHECK_THROWS_AS(parse_config(json{{"tx_range_m", "far"}}), ConfigError);
  }
  SUBCASE("unknown protocol name") {
    CHECK_THROWS_AS(parse_config(json{{"protocol", "leach"}}), ConfigError);
  }
  SUBCASE("negative seed") {
    CHECK_THROWS_AS(parse_config(json{{"rng_seed", -3}}), ConfigError);
  }
}

TEST_CASE("partial documents override only what they name") {
  const json doc = {{"node_count", 500},
                    {"radio", {{"e_elec_j_per_bit", 5e-5}}},
                    {"protocol", "random-ch"}};
  const ParsedConfig parsed = parse_config(doc);
  CHECK(parsed.config.node_count == 500);
  CHECK(parsed.config.radio.e_elec == 5e-5);
  CHECK(parsed.config.radio.packet_bits == 4000);  // untouched subfield
  CHECK(parsed.config.protocol == ChPolicy::RandomCh);
  CHECK(std::find(parsed.defaulted_fields.begin(), parsed.defaulted_fields.end(),
                  "radio.packet_bits") != parsed.defaulted_fields.end());
  CHECK(std::find(parsed.defaulted_fields.begin(), parsed.defaulted_fields.end(),
                  "node_count") == parsed.defaulted_fields.end());
}

TEST_CASE("render and parse round-trip exactly") {
  SimulationConfig cfg;
  cfg.node_count = 777;
  cfg.deployment = {DeploymentShape::Square, 123.5};
  cfg.center = {3.25, -8.75};
  cfg.tx_range = 111.0;
  cfg.initial_energy = 57.5;
  cfg.sector_count = 9;
  cfg.weights = {0.7, 0.1, 0.1, 0.1};
  cfg.attraction.light_gamma = 3e-3;
  cfg.attraction.alpha = 0.25;
  cfg.radio.e_elec = 7e-8;
  cfg.radio.hello_bits = 400;
  cfg.channel.tx_power = 0.5;
  cfg.channel.interference = InterferenceMode::SameRoundTransmitters;
  cfg.buffer_packets = 99;
  cfg.protocol = ChPolicy::MaxEnergyCh;
  cfg.horizon_rounds = 42;
  cfg.rounds_per_second = 2.5;
  cfg.load_metric = LoadMetric::PerRound;
  cfg.rng_seed = 0xdeadbeefULL;

  const ParsedConfig back = parse_config(render_config(cfg));
  CHECK(back.config == cfg);
  CHECK(back.defaulted_fields.empty());
}

TEST_CASE("config hash is stable and sensitive") {
  SimulationConfig a;
  SimulationConfig b;
  CHECK(config_hash_hex(a) == config_hash_hex(b));
  b.rng_seed = 2;
  CHECK(config_hash_hex(a) != config_hash_hex(b));
  CHECK(config_hash_hex(a).size() == 16);
}

TEST_CASE("config files with invalid JSON are rejected") {
  CHECK_THROWS_AS(load_config_file("/nonexistent/emff.json"), ConfigError);
}
