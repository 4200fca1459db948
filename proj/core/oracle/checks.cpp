#include "garside/oracle/checks.hpp"

#include "garside/artin.hpp"
#include "garside/bkl.hpp"

namespace garside::oracle {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= static_cast<std::size_t>(i);
  }
  return f;
}

std::size_t catalan(int n) {
  // C_n = binom(2n, n) / (n + 1), built incrementally to stay exact.
  std::size_t c = 1;
  for (int i = 0; i < n; ++i) {
    c = c * static_cast<std::size_t>(2 * (2 * i + 1)) / static_cast<std::size_t>(i + 2);
  }
  return c;
}

std::vector<CheckResult> run_oracle_checks(int max_artin, int max_bkl, std::uint64_t seed,
                                           int samples) {
  std::vector<CheckResult> all;
  auto append = [&](std::vector<CheckResult> more) {
    all.insert(all.end(), more.begin(), more.end());
  };
  for (int n = 3; n <= max_artin; ++n) {
    artin::Presentation p(n);
    append(check_conventions(p));
    append(check_normal_forms(p, derive_seed(seed, static_cast<std::uint64_t>(n)), samples));
  }
  for (int n = 3; n <= max_bkl; ++n) {
    bkl::Presentation p(n);
    append(check_conventions(p));
    append(check_normal_forms(p, derive_seed(seed, 100 + static_cast<std::uint64_t>(n)), samples));
  }
  return all;
}

}  // namespace garside::oracle
