#include "emff/sweep.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <thread>

#include "emff/errors.hpp"
#include "emff/io.hpp"
#include "emff/version.hpp"

namespace emff {

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep.values", "must be non-empty");
  if (seeds.empty()) throw ConfigError("sweep.seeds", "must be non-empty");
  if (protocols.empty())
    throw ConfigError("sweep.protocols", "must be non-empty");
  for (double v : values)
    if (v <= 0.0) throw ConfigError("sweep.values", "must be positive");
  base.validate();
}

namespace {

SweepSpec make_spec(std::uint32_t id, std::string variable,
                    const SimulationConfig& base, std::vector<double> values,
                    std::vector<std::uint64_t> seeds,
                    std::vector<ChPolicy> protocols) {
  SweepSpec spec;
  spec.scenario_id = id;
  spec.variable = std::move(variable);
  spec.values = std::move(values);
  spec.seeds = std::move(seeds);
  spec.protocols = std::move(protocols);
  spec.base = base;
  spec.validate();
  return spec;
}

}  // namespace

SweepSpec scenario_1(const SimulationConfig& base,
                     std::vector<double> node_counts,
                     std::vector<std::uint64_t> seeds,
                     std::vector<ChPolicy> protocols) {
  SimulationConfig cfg = base;
  cfg.deployment = {DeploymentShape::Disk, 20.0};
  cfg.initial_energy = 200.0;
  if (node_counts.empty()) node_counts = {500, 1000, 2000, 4000};
  return make_spec(1, "node_count", cfg, std::move(node_counts),
                   std::move(seeds), std::move(protocols));
}

SweepSpec scenario_2(const SimulationConfig& base, std::vector<double> radii,
                     std::vector<std::uint64_t> seeds,
                     std::vector<ChPolicy> protocols) {
  SimulationConfig cfg = base;
  cfg.deployment.shape = DeploymentShape::Disk;
  if (radii.empty()) radii = {5, 10, 20, 40};
  return make_spec(2, "disk_radius_m", cfg, std::move(radii), std::move(seeds),
                   std::move(protocols));
}

SweepSpec scenario_3(const SimulationConfig& base,
                     std::vector<double> energies,
                     std::vector<std::uint64_t> seeds,
                     std::vector<ChPolicy> protocols) {
  SimulationConfig cfg = base;
  if (energies.empty()) energies = {50, 100, 200, 400};
  return make_spec(3, "initial_energy_j", cfg, std::move(energies),
                   std::move(seeds), std::move(protocols));
}

SimulationConfig config_for_point(const SweepSpec& spec, double value,
                                  std::uint64_t seed, ChPolicy protocol) {
  SimulationConfig cfg = spec.base;
  switch (spec.scenario_id) {
    case 1:
      cfg.node_count = static_cast<std::uint32_t>(value);
      break;
    case 2:
      cfg.deployment.size = value;
      break;
    case 3:
      cfg.initial_energy = value;
      break;
    default:
      throw ConfigError("sweep.scenario", "scenario id must be 1, 2 or 3");
  }
  cfg.rng_seed = seed;
  cfg.protocol = protocol;
  return cfg;
}

namespace {

struct RunTask {
  double value;
  std::uint64_t seed;
  ChPolicy protocol;
  SimulationConfig cfg;
  std::filesystem::path csv_path;
  std::filesystem::path json_path;
  SimulationSummary summary;
};

std::string value_token(double v) {
  std::string s = format_double(v);
  for (char& c : s)
    if (c == '.') c = 'p';
  return s;
}

struct Stats {
  double mean{0.0};
  double stddev{0.0};
};

Stats summarize(const std::vector<double>& xs) {
  Stats st;
  if (xs.empty()) return st;
  double sum = 0.0;
  for (double x : xs) sum += x;
  st.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double sq = 0.0;
    for (double x : xs) sq += (x - st.mean) * (x - st.mean);
    st.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
  }
  return st;
}

void write_manifest(const std::filesystem::path& out_dir,
                    const std::vector<std::filesystem::path>& written,
                    const std::string& error) {
  nlohmann::json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["status"] = "aborted";
  doc["error"] = error;
  nlohmann::json files = nlohmann::json::array();
  for (const auto& p : written) files.push_back(p.string());
  doc["files_written"] = files;
  std::ofstream out(out_dir / "manifest.json");
  if (out) out << doc.dump(2) << '\n';
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec,
                      const std::filesystem::path& out_dir, unsigned jobs) {
  spec.validate();
  std::filesystem::create_directories(out_dir);

  std::vector<RunTask> tasks;
  for (double value : spec.values) {
    for (ChPolicy protocol : spec.protocols) {
      for (std::uint64_t seed : spec.seeds) {
        RunTask task;
        task.value = value;
        task.seed = seed;
        task.protocol = protocol;
        task.cfg = config_for_point(spec, value, seed, protocol);
        const std::string stem = "s" + std::to_string(spec.scenario_id) + "_" +
                                 spec.variable + value_token(value) + "_seed" +
                                 std::to_string(seed) + "_" +
                                 std::string(ch_policy_name(protocol));
        task.csv_path = out_dir / (stem + ".csv");
        task.json_path = out_dir / (stem + ".json");
        tasks.push_back(std::move(task));
      }
    }
  }

  // Runs are independent; workers pull indices and write only their own
  // files, so output bytes do not depend on the job count.
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::string first_error;
  std::vector<std::filesystem::path> written;
  std::mutex written_mutex;

  auto worker = [&]() {
    while (!failed.load()) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      RunTask& task = tasks[idx];
      try {
        const SimulationResult result = run_simulation(task.cfg);
        task.summary = result.summary;
        write_run_csv(task.csv_path, task.cfg, spec.base_defaulted_fields,
                      result.records);
        {
          std::lock_guard lock(written_mutex);
          written.push_back(task.csv_path);
        }
        write_run_json(task.json_path, task.cfg, spec.base_defaulted_fields,
                       result.summary);
        {
          std::lock_guard lock(written_mutex);
          written.push_back(task.json_path);
        }
      } catch (const std::exception& e) {
        failed.store(true);
        std::lock_guard lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
        return;
      }
    }
  };

  const unsigned thread_count =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  if (!first_error.empty()) {
    write_manifest(out_dir, written, first_error);
    throw std::runtime_error("sweep aborted: " + first_error);
  }

  SweepResult result;
  for (const RunTask& task : tasks) {
    result.files.push_back(task.csv_path);
    result.files.push_back(task.json_path);
  }

  // Aggregate rows in (value, protocol) order, statistics over seeds.
  for (double value : spec.values) {
    for (ChPolicy protocol : spec.protocols) {
      std::vector<double> fnd, hnd, lnd, load;
      for (const RunTask& task : tasks) {
        if (task.value != value || task.protocol != protocol) continue;
        fnd.push_back(task.summary.lifetime.fnd);
        hnd.push_back(task.summary.lifetime.hnd);
        lnd.push_back(task.summary.lifetime.lnd);
        load.push_back(task.summary.final_max_relative_load
                           ? *task.summary.final_max_relative_load
                           : std::nan(""));
      }
      AggregateRow row;
      row.scenario_id = spec.scenario_id;
      row.variable = spec.variable;
      row.value = value;
      row.protocol = protocol;
      row.seed_count = fnd.size();
      const Stats f = summarize(fnd), h = summarize(hnd), l = summarize(lnd),
                  ld = summarize(load);
      row.fnd_mean = f.mean;
      row.fnd_stddev = f.stddev;
      row.hnd_mean = h.mean;
      row.hnd_stddev = h.stddev;
      row.lnd_mean = l.mean;
      row.lnd_stddev = l.stddev;
      row.final_load_mean = ld.mean;
      row.final_load_stddev = ld.stddev;
      result.aggregate.push_back(std::move(row));
    }
  }

  const std::filesystem::path aggregate_path = out_dir / "aggregate.csv";
  {
    std::ofstream out(aggregate_path);
    if (!out) {
      write_manifest(out_dir, written, "cannot open " + aggregate_path.string());
      throw std::runtime_error("sweep aborted: cannot open " +
                               aggregate_path.string());
    }
    out << "# " << kToolName << ' ' << kToolVersion
        << " scenario=" << spec.scenario_id << " variable=" << spec.variable
        << " base_config_hash=" << config_hash_hex(spec.base) << '\n';
    out << "scenario,variable,value,protocol,seeds,fnd_mean,fnd_stddev,"
           "hnd_mean,hnd_stddev,lnd_mean,lnd_stddev,"
           "final_max_relative_load_mean,final_max_relative_load_stddev\n";
    for (const AggregateRow& row : result.aggregate) {
      out << row.scenario_id << ',' << row.variable << ','
          << format_double(row.value) << ',' << ch_policy_name(row.protocol)
          << ',' << row.seed_count << ',' << format_double(row.fnd_mean) << ','
          << format_double(row.fnd_stddev) << ',' << format_double(row.hnd_mean)
          << ',' << format_double(row.hnd_stddev) << ','
          << format_double(row.lnd_mean) << ',' << format_double(row.lnd_stddev)
          << ',' << format_double(row.final_load_mean) << ','
          << format_double(row.final_load_stddev) << '\n';
    }
    if (!out) {
      write_manifest(out_dir, written, "write failed: " + aggregate_path.string());
      throw std::runtime_error("sweep aborted: write failed: " +
                               aggregate_path.string());
    }
  }
  result.files.push_back(aggregate_path);
  return result;
}

}  // namespace emff
