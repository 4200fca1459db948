// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/experiment.hpp"
#include "garside/oracle/brute.hpp"
#include "garside/oracle/checks.hpp"
#include "garside/oracle/properties.hpp"
#include "garside/random.hpp"
#include "garside/summit.hpp"

namespace {

using namespace garside;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

template <GarsidePresentation P>
void uss_against_oracle(const P& p, std::uint64_t seed, int count, int& mismatches,
                        std::string& first) {
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto x = random_product(p, 1 + rng.uniform_int(4), rng);
    const auto uss = ultra_summit_set(p, x);
    const auto brute = oracle::brute_uss(p, x);
    bool ok = uss.size() == brute.size();
    for (const auto& z : uss.elements()) {
      ok = ok && brute.contains(z) && conjugate(p, x, uss.conjugator_to(p, z)) == z;
    }
    if (!ok) {
      if (mismatches++ == 0) {
        first = format_element(p, x);
      }
    }
  }
}

Outcome oracle_equivalence() {
  int bad = 0;
  std::string first;
  uss_against_oracle(artin::Presentation(3), 101, 100, bad, first);
  uss_against_oracle(artin::Presentation(4), 102, 100, bad, first);
  uss_against_oracle(bkl::Presentation(3), 103, 100, bad, first);
  uss_against_oracle(bkl::Presentation(4), 104, 100, bad, first);
  uss_against_oracle(bkl::Presentation(5), 105, 100, bad, first);
  return {bad == 0, "500 elements, " + std::to_string(bad) + " mismatches" +
                        (bad ? ", first " + first : "")};
}

Outcome table1_n3() {
  ExperimentConfig c;
  c.n = 3;
  c.r = 10;
  c.samples = 50;
  c.seed = 7;
  c.sss_samples = 10;
  const auto e = run_summit_experiment(c);
  int twenty = 0;
  int max = 0;
  int equal = 0;
  int compared = 0;
  for (const auto& s : e.samples) {
    twenty += s.uss_size == 20 ? 1 : 0;
    max = std::max(max, s.uss_size);
    if (s.sss_size) {
      ++compared;
      equal += *s.sss_size == s.uss_size ? 1 : 0;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "|U|=20 on %d/50, max %d, |U|=|S| on %d/%d, avg |U| %.2f", twenty,
                max, equal, compared, *e.record.uss_avg);
  return {twenty >= 45 && max == 20 && compared == 10 && equal == 10, buf};
}

Outcome table1_n4() {
  ExperimentConfig c;
  c.n = 4;
  c.r = 10;
  c.samples = 50;
  c.seed = 7;
  c.sss_samples = 0;
  const auto e = run_summit_experiment(c);
  const double u = *e.record.uss_avg;
  const double nu = *e.record.nu_avg;
  char buf[160];
  std::snprintf(buf, sizeof buf, "avg |U| %.2f (reference 20), avg n_U %.2f (reference 1.5)", u, nu);
  return {u >= 15 && u <= 30 && nu >= 1.0 && nu <= 2.5, buf};
}

Outcome table3() {
  ExperimentConfig c;
  c.r = 10;
  c.samples = 200;
  c.seed = 7;
  c.n = 3;
  const auto e3 = run_density_experiment(c).record;
  c.n = 4;
  const auto e4 = run_density_experiment(c).record;
  const bool ok3 = *e3.eps_s == *e3.eps_u && std::abs(*e3.eps_s - 64) <= 10;
  const bool ok4 = std::abs(*e4.eps_s - 41) <= 10 && std::abs(*e4.eps_u - 22) <= 10;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "n=3: eps_S %.1f eps_U %.1f (reference 64/64); n=4: eps_S %.1f eps_U %.1f (reference 41/22)",
                *e3.eps_s, *e3.eps_u, *e4.eps_s, *e4.eps_u);
  return {ok3 && ok4, buf};
}

Outcome simple_counts() {
  std::string d;
  bool ok = true;
  const std::size_t artin_expected[] = {6, 24, 120};
  const std::size_t bkl_expected[] = {5, 14, 42};
  for (int n = 3; n <= 5; ++n) {
    const auto a = artin::Presentation(n).enumerate_simples().size();
    const auto b = bkl::Presentation(n).enumerate_simples().size();
    ok = ok && a == artin_expected[n - 3] && b == bkl_expected[n - 3] &&
         a == oracle::factorial(n) && b == oracle::catalan(n);
    d += "n=" + std::to_string(n) + ": " + std::to_string(a) + "/" + std::to_string(b) + " ";
  }
  return {ok, d + "(artin/bkl)"};
}

Outcome property_suites() {
  std::vector<oracle::CheckResult> all;
  auto add = [&](std::vector<oracle::CheckResult> more) { all.insert(all.end(), more.begin(), more.end()); };
  const artin::Presentation a3(3);
  const artin::Presentation a4(4);
  const bkl::Presentation b3(3);
  const bkl::Presentation b4(4);
  for (const auto* p : {&a3, &a4}) {
    add(oracle::lattice_properties(*p));
    add(oracle::check_conventions(*p));
    add(oracle::check_normal_forms(*p, 201, 200));
    add(oracle::arithmetic_properties(*p, 202, 200));
  }
  for (const auto* p : {&b3, &b4}) {
    add(oracle::lattice_properties(*p));
    add(oracle::check_conventions(*p));
    add(oracle::check_normal_forms(*p, 203, 200));
    add(oracle::arithmetic_properties(*p, 204, 200));
  }
  add(oracle::exhaustive_summit_properties(a3, 4));
  add(oracle::exhaustive_summit_properties(b3, 3));
  add(oracle::exhaustive_summit_properties(b4, 2));
  add(oracle::summit_properties(a4, 205, 60));
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
  for (const auto& r : all) {
    cases += r.cases;
    failures += r.failures;
    if (!r.ok() && first.empty()) {
      first = r.name + ": " + r.first_failure;
    }
  }
  return {failures == 0, std::to_string(all.size()) + " suites, " + std::to_string(cases) +
                             " cases, " + std::to_string(failures) + " failures" +
                             (first.empty() ? "" : ", first " + first)};
}

template <GarsidePresentation P>
void search_instances(std::uint64_t seed, int count, int& bad, int& fallbacks) {
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const P p(3 + rng.uniform_int(4));
    const auto x = random_product(p, 1 + rng.uniform_int(10), rng);
    const auto w = multiply(p, random_product(p, 1 + rng.uniform_int(10), rng),
                            delta_power(p, -rng.uniform_int(3)));
    const auto y = conjugate(p, x, w);
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    const auto a = conjugacy_search(p, x, y, s);
    const auto b = conjugacy_search(p, x, y, s);
    SearchOptions<P> tiny;
    tiny.step_cap = 0;
    const auto f = conjugacy_search(p, x, y, s, tiny);
    fallbacks += f.used_fallback ? 1 : 0;
    const bool ok = conjugate(p, x, a.witness.conjugator) == y &&
                    a.witness.conjugator == b.witness.conjugator && a.steps == b.steps &&
                    conjugate(p, x, f.witness.conjugator) == y;
    bad += ok ? 0 : 1;
  }
}

Outcome conjugacy_search_e2e() {
  int bad = 0;
  int fallbacks_artin = 0;
  int fallbacks_bkl = 0;
  search_instances<artin::Presentation>(301, 100, bad, fallbacks_artin);
  search_instances<bkl::Presentation>(302, 100, bad, fallbacks_bkl);
  return {bad == 0 && fallbacks_artin > 0 && fallbacks_bkl > 0,
          "200 instances, " + std::to_string(bad) + " failures; fallback used " +
              std::to_string(fallbacks_artin) + "/100 (artin), " + std::to_string(fallbacks_bkl) +
              "/100 (bkl) with step cap 0"};
}

Outcome scale() {
  const artin::Presentation p(20);
  Rng rng(401);
  const auto x = random_of_length(p, 20, rng);
  const auto start = Clock::now();
  const auto uss = ultra_summit_set(p, x);
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  bool ok = true;
  for (const auto& z : uss.elements()) {
    ok = ok && conjugate(p, x, uss.conjugator_to(p, z)) == z;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "|U_x| = %zu, n_U = %zu, %.3f s", uss.size(), uss.trajectory_count(), s);
  return {ok && s < 60, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ultra summit sets equal the brute-force oracle", 120, oracle_equivalence},
      {2, "summit sizes, artin n=3 r=10", 60, table1_n3},
      {3, "summit sizes, artin n=4 r=10", 120, table1_n4},
      {4, "summit densities, artin n=3,4 r=10", 180, table3},
      {5, "simple element counts", 10, simple_counts},
      {6, "property suites", 600, property_suites},
      {7, "conjugacy search end to end", 180, conjugacy_search_e2e},
      {8, "ultra summit set at artin n=20 r=20", 60, scale},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    const bool pass = o.pass && s <= c.budget_s;
    all = all && pass;
    std::printf("%s criterion %d: %s: %s [%.2f s]\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), s);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
