#include "garside/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "garside/artin.hpp"
#include "garside/bkl.hpp"
#include "garside/random.hpp"
#include "garside/summit.hpp"

namespace garside {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// x lies on a cycling circuit: iterating cycling returns to x.
template <GarsidePresentation P>
bool on_circuit(const P& p, const CanonicalForm<P>& x) {
  std::unordered_set<CanonicalForm<P>> seen{x};
  CanonicalForm<P> cur = cycle(p, x);
  while (!(cur == x)) {
    if (!seen.insert(cur).second) {
      return false;
    }
    cur = cycle(p, cur);
  }
  return true;
}

template <typename T, typename F>
std::vector<T> map_samples(const ExperimentConfig& config, F&& sample) {
  std::vector<T> out(static_cast<std::size_t>(std::max(0, config.samples)));
  const int workers = std::max(1, std::min(config.threads, config.samples));
  auto run = [&](int w) {
    for (int i = w; i < config.samples; i += workers) {
      out[static_cast<std::size_t>(i)] = sample(i);
    }
  };
  if (workers == 1) {
    run(0);
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back(run, w);
  }
  for (auto& t : pool) {
    t.join();
  }
  return out;
}

template <GarsidePresentation P>
std::vector<SummitSample> summit_samples(const P& p, const ExperimentConfig& config) {
  return map_samples<SummitSample>(config, [&](int i) {
    SummitSample s;
    s.seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
    Rng rng(s.seed);
    CanonicalForm<P> x;
    do {
      x = random_of_length(p, config.r, rng);
    } while (sss_representative(p, x).element.len() != config.r);
    s.element = format_element(p, x);
    s.len = x.len();
    const auto start = Clock::now();
    const auto uss = ultra_summit_set(p, x);
    s.uss_ms = elapsed_ms(start);
    s.uss_size = static_cast<int>(uss.size());
    s.trajectories = static_cast<int>(uss.trajectory_count());
    if (config.sss_samples < 0 || i < config.sss_samples) {
      try {
        const auto t0 = Clock::now();
        const auto sss = oracle::brute_sss(p, x, config.budget);
        s.sss_ms = elapsed_ms(t0);
        s.sss_size = static_cast<int>(sss.size());
      } catch (const BudgetExceeded&) {
      }
    }
    return s;
  });
}

template <GarsidePresentation P>
std::vector<DensitySample> density_samples(const P& p, const ExperimentConfig& config) {
  return map_samples<DensitySample>(config, [&](int i) {
    DensitySample s;
    s.seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
    Rng rng(s.seed);
    const auto x = random_product(p, config.r, rng);
    const auto rep = sss_representative(p, x).element;
    s.element = format_element(p, x);
    s.len = x.len();
    s.len_s = rep.len();
    s.in_sss = x.inf() == rep.inf() && x.sup() == rep.sup();
    s.in_uss = s.in_sss && on_circuit(p, x);
    return s;
  });
}

template <typename Range, typename F>
std::pair<double, double> avg_max(const Range& range, F&& value) {
  double sum = 0;
  double max = 0;
  std::size_t count = 0;
  for (const auto& item : range) {
    const auto v = value(item);
    if (!v) {
      continue;
    }
    sum += *v;
    max = count == 0 ? *v : std::max(max, *v);
    ++count;
  }
  return {count ? sum / static_cast<double>(count) : 0.0, max};
}

ExperimentRecord header_of(const ExperimentConfig& config, std::size_t samples) {
  ExperimentRecord r;
  r.presentation = std::string(to_string(config.kind));
  r.n = config.n;
  r.r = config.r;
  r.samples = static_cast<int>(samples);
  r.seed = config.seed;
  return r;
}

std::string field(const std::optional<double>& v) {
  if (!v) {
    return "";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", *v);
  return buf;
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

ExperimentRecord summarize(const ExperimentConfig& config, const std::vector<SummitSample>& samples) {
  ExperimentRecord r = header_of(config, samples.size());
  using O = std::optional<double>;
  auto [ua, um] = avg_max(samples, [](const SummitSample& s) { return O(s.uss_size); });
  auto [na, nm] = avg_max(samples, [](const SummitSample& s) { return O(s.trajectories); });
  auto [ta, tm] = avg_max(samples, [](const SummitSample& s) { return O(s.uss_ms); });
  r.uss_avg = ua;
  r.uss_max = um;
  r.nu_avg = na;
  r.nu_max = nm;
  r.tu_avg_ms = ta;
  r.tu_max_ms = tm;
  const bool any_sss = std::any_of(samples.begin(), samples.end(),
                                   [](const SummitSample& s) { return s.sss_size.has_value(); });
  if (any_sss) {
    auto [sa, sm] = avg_max(samples, [](const SummitSample& s) {
      return s.sss_size ? O(*s.sss_size) : O();
    });
    auto [tsa, tsm] = avg_max(samples, [](const SummitSample& s) { return s.sss_ms; });
    r.sss_avg = sa;
    r.sss_max = sm;
    r.ts_avg_ms = tsa;
    r.ts_max_ms = tsm;
  }
  return r;
}

ExperimentRecord summarize(const ExperimentConfig& config, const std::vector<DensitySample>& samples) {
  ExperimentRecord r = header_of(config, samples.size());
  using O = std::optional<double>;
  r.len_avg = avg_max(samples, [](const DensitySample& s) { return O(s.len); }).first;
  r.lens_avg = avg_max(samples, [](const DensitySample& s) { return O(s.len_s); }).first;
  r.eps_s = 100.0 * avg_max(samples, [](const DensitySample& s) { return O(s.in_sss ? 1 : 0); }).first;
  r.eps_u = 100.0 * avg_max(samples, [](const DensitySample& s) { return O(s.in_uss ? 1 : 0); }).first;
  return r;
}

SummitExperiment run_summit_experiment(const ExperimentConfig& config) {
  std::vector<SummitSample> samples =
      config.kind == PresentationKind::artin
          ? summit_samples(artin::Presentation(config.n), config)
          : summit_samples(bkl::Presentation(config.n), config);
  ExperimentRecord record = summarize(config, samples);
  return {std::move(record), std::move(samples)};
}

DensityExperiment run_density_experiment(const ExperimentConfig& config) {
  std::vector<DensitySample> samples =
      config.kind == PresentationKind::artin
          ? density_samples(artin::Presentation(config.n), config)
          : density_samples(bkl::Presentation(config.n), config);
  ExperimentRecord record = summarize(config, samples);
  return {std::move(record), std::move(samples)};
}

std::string csv_header() {
  return "presentation,n,r,samples,seed,uss_avg,uss_max,sss_avg,sss_max,nu_avg,nu_max,"
         "tu_avg_ms,tu_max_ms,ts_avg_ms,ts_max_ms,len_avg,lens_avg,eps_s,eps_u";
}

std::string csv_row(const ExperimentRecord& r) {
  std::ostringstream out;
  out << r.presentation << ',' << r.n << ',' << r.r << ',' << r.samples << ',' << r.seed;
  for (const auto* v : {&r.uss_avg, &r.uss_max, &r.sss_avg, &r.sss_max, &r.nu_avg, &r.nu_max,
                        &r.tu_avg_ms, &r.tu_max_ms, &r.ts_avg_ms, &r.ts_max_ms, &r.len_avg,
                        &r.lens_avg, &r.eps_s, &r.eps_u}) {
    out << ',' << field(*v);
  }
  return out.str();
}

nlohmann::json to_json(const SummitSample& s) {
  return {{"seed", s.seed},
          {"element", s.element},
          {"len", s.len},
          {"uss_size", s.uss_size},
          {"trajectories", s.trajectories},
          {"uss_ms", s.uss_ms},
          {"sss_size", s.sss_size ? nlohmann::json(*s.sss_size) : nlohmann::json(nullptr)},
          {"sss_ms", optional_json(s.sss_ms)}};
}

nlohmann::json to_json(const DensitySample& s) {
  return {{"seed", s.seed},     {"element", s.element}, {"len", s.len},
          {"len_s", s.len_s},   {"in_sss", s.in_sss},   {"in_uss", s.in_uss}};
}

nlohmann::json to_json(const ExperimentRecord& r) {
  return {{"presentation", r.presentation},
          {"n", r.n},
          {"r", r.r},
          {"samples", r.samples},
          {"seed", r.seed},
          {"uss_avg", optional_json(r.uss_avg)},
          {"uss_max", optional_json(r.uss_max)},
          {"sss_avg", optional_json(r.sss_avg)},
          {"sss_max", optional_json(r.sss_max)},
          {"nu_avg", optional_json(r.nu_avg)},
          {"nu_max", optional_json(r.nu_max)},
          {"tu_avg_ms", optional_json(r.tu_avg_ms)},
          {"tu_max_ms", optional_json(r.tu_max_ms)},
          {"ts_avg_ms", optional_json(r.ts_avg_ms)},
          {"ts_max_ms", optional_json(r.ts_max_ms)},
          {"len_avg", optional_json(r.len_avg)},
          {"lens_avg", optional_json(r.lens_avg)},
          {"eps_s", optional_json(r.eps_s)},
          {"eps_u", optional_json(r.eps_u)}};
}

}  // namespace garside
