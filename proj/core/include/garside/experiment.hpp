#ifndef GARSIDE_EXPERIMENT_HPP_
#define GARSIDE_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "garside/io.hpp"
#include "garside/oracle/brute.hpp"

namespace garside {

struct ExperimentConfig {
  PresentationKind kind = PresentationKind::artin;
  int n = 3;
  int r = 10;
  int samples = 50;
  std::uint64_t seed = 1;
  // Super summit sets are computed by the oracle for the first sss_samples
  // samples (all when negative) while within budget.
  int sss_samples = -1;
  // Worker threads; samples are seeded independently, so results do not
  // depend on this.
  int threads = 1;
  oracle::OracleBudget budget{.max_index = 6, .max_length = 1000, .max_set_size = 200000};
};

// One element of the |U_x| / |S_x| statistics.
struct SummitSample {
  std::uint64_t seed = 0;
  std::string element;
  int len = 0;
  int uss_size = 0;
  int trajectories = 0;
  double uss_ms = 0;
  std::optional<int> sss_size;
  std::optional<double> sss_ms;
};

// One element delta^k A_1 ... A_r of the density statistics.
struct DensitySample {
  std::uint64_t seed = 0;
  std::string element;
  int len = 0;
  int len_s = 0;
  bool in_sss = false;
  bool in_uss = false;
};

// A CSV row. Fields that do not apply to an experiment are empty.
struct ExperimentRecord {
  std::string presentation;
  int n = 0;
  int r = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::optional<double> uss_avg, uss_max, sss_avg, sss_max, nu_avg, nu_max;
  std::optional<double> tu_avg_ms, tu_max_ms, ts_avg_ms, ts_max_ms;
  std::optional<double> len_avg, lens_avg, eps_s, eps_u;
};

struct SummitExperiment {
  ExperimentRecord record;
  std::vector<SummitSample> samples;
};

struct DensityExperiment {
  ExperimentRecord record;
  std::vector<DensitySample> samples;
};

// Elements with len_s = r; statistics of |U_x|, n_U, t_U and, within the
// oracle budget, |S_x| and t_S.
SummitExperiment run_summit_experiment(const ExperimentConfig& config);
// Raw products delta^k A_1 ... A_r; averages of len, len_s and the
// percentages of elements lying in S_x and in U_x.
DensityExperiment run_density_experiment(const ExperimentConfig& config);

std::string csv_header();
std::string csv_row(const ExperimentRecord& record);

ExperimentRecord summarize(const ExperimentConfig& config, const std::vector<SummitSample>& samples);
ExperimentRecord summarize(const ExperimentConfig& config, const std::vector<DensitySample>& samples);

nlohmann::json to_json(const SummitSample& s);
nlohmann::json to_json(const DensitySample& s);
nlohmann::json to_json(const ExperimentRecord& r);

}  // namespace garside

#endif  // GARSIDE_EXPERIMENT_HPP_
