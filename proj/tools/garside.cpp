// Command-line front end: normal forms, ultra summit sets, conjugacy,
// experiments and the oracle suite. Exit codes: 0 success, 1 failure,
// 2 parse error, 3 contract violation.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "garside/conjugacy.hpp"
#include "garside/experiment.hpp"
#include "garside/io.hpp"
#include "garside/oracle/checks.hpp"
#include "garside/oracle/properties.hpp"
#include "garside/summit.hpp"

namespace {

using garside::PresentationKind;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitContract = 3;

std::string read_input(const std::string& arg) {
  if (arg != "-") {
    return arg;
  }
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

template <typename F>
decltype(auto) with_presentation(PresentationKind kind, int n, F&& f) {
  if (kind == PresentationKind::artin) {
    return f(garside::artin::Presentation(n));
  }
  return f(garside::bkl::Presentation(n));
}

void check_index(int n) {
  if (n < 2) {
    throw garside::ParseError("braid index must be at least 2");
  }
}

template <typename P>
json element_json(const P& p, const garside::CanonicalForm<P>& x) {
  json factors = json::array();
  for (const auto& s : x.factors()) {
    factors.push_back(garside::format_simple(p, s));
  }
  return {{"inf", x.inf()}, {"sup", x.sup()}, {"len", x.len()}, {"factors", factors},
          {"word", garside::format_element(p, x)}};
}

int run_nf(const std::string& text) {
  const auto parsed = garside::parse_word(read_input(text));
  check_index(parsed.index);
  return with_presentation(parsed.kind, parsed.index, [&](const auto& p) {
    std::cout << element_json(p, garside::normalize(p, parsed.word)).dump() << '\n';
    return 0;
  });
}

int run_uss(const std::string& text, bool conjugators) {
  const auto parsed = garside::parse_word(read_input(text));
  check_index(parsed.index);
  return with_presentation(parsed.kind, parsed.index, [&](const auto& p) {
    const auto x = garside::normalize(p, parsed.word);
    const auto uss = garside::ultra_summit_set(p, x);
    json lengths = json::array();
    for (const auto& t : uss.trajectories()) {
      lengths.push_back(t.elements().size());
    }
    json out{{"element", garside::format_element(p, x)},
             {"inf_s", uss.inf()},
             {"sup_s", uss.sup()},
             {"size", uss.size()},
             {"n_u", uss.trajectory_count()},
             {"trajectory_lengths", lengths}};
    if (conjugators) {
      json members = json::array();
      for (const auto& z : uss.elements()) {
        members.push_back({{"element", garside::format_element(p, z)},
                           {"conjugator", garside::format_element(p, uss.conjugator_to(p, z))}});
      }
      out["elements"] = members;
    }
    std::cout << out.dump() << '\n';
    return 0;
  });
}

int run_conj(const std::string& mode, const std::string& a, const std::string& b,
             std::optional<std::uint64_t> seed, std::optional<std::size_t> cap) {
  const auto x_word = garside::parse_word(read_input(a));
  const auto y_word = garside::parse_word(read_input(b));
  check_index(x_word.index);
  if (x_word.kind != y_word.kind || x_word.index != y_word.index) {
    throw garside::PresentationMismatch("words belong to different presentations");
  }
  return with_presentation(x_word.kind, x_word.index, [&](const auto& p) {
    using P = std::decay_t<decltype(p)>;
    const auto x = garside::normalize(p, x_word.word);
    const auto y = garside::normalize(p, y_word.word);
    json out{{"x", garside::format_element(p, x)}, {"y", garside::format_element(p, y)}};
    if (mode == "decide") {
      const auto decision = garside::is_conjugate(p, x, y);
      out["conjugate"] = decision.conjugate;
      out["conjugator"] = decision.witness
                              ? json(garside::format_element(p, decision.witness->conjugator))
                              : json(nullptr);
    } else {
      garside::SearchOptions<P> options;
      options.step_cap = cap;
      const std::uint64_t s = seed ? *seed : std::random_device{}();
      const auto result = garside::conjugacy_search(p, x, y, s, options);
      out["conjugate"] = true;
      out["conjugator"] = garside::format_element(p, result.witness.conjugator);
      out["seed"] = s;
      out["steps"] = result.steps;
      out["fallback"] = result.used_fallback;
    }
    std::cout << out.dump() << '\n';
    return 0;
  });
}

struct ExperimentArgs {
  std::string table;
  std::vector<int> n{3};
  std::vector<int> r{10};
  int samples = 50;
  std::optional<std::uint64_t> seed;
  std::string presentation = "artin";
  std::size_t budget = 200000;
  int sss_samples = -1;
  int threads = 1;
  std::string log;
};

int run_experiment(const ExperimentArgs& args) {
  const std::uint64_t seed = args.seed ? *args.seed : std::random_device{}();
  std::optional<std::ofstream> log;
  if (!args.log.empty()) {
    log.emplace(args.log);
    if (!*log) {
      std::cerr << "cannot open " << args.log << '\n';
      return kExitFailure;
    }
  }
  std::cout << garside::csv_header() << '\n';
  for (int n : args.n) {
    check_index(n);
    for (int r : args.r) {
      garside::ExperimentConfig config;
      config.kind = args.presentation == "bkl" ? PresentationKind::bkl : PresentationKind::artin;
      config.n = n;
      config.r = r;
      config.samples = args.samples;
      config.seed = seed;
      config.sss_samples = args.sss_samples;
      config.threads = args.threads;
      config.budget.max_set_size = args.budget;
      json samples = json::array();
      garside::ExperimentRecord record;
      if (args.table == "table1") {
        auto result = garside::run_summit_experiment(config);
        for (const auto& s : result.samples) {
          samples.push_back(garside::to_json(s));
        }
        record = result.record;
      } else {
        auto result = garside::run_density_experiment(config);
        for (const auto& s : result.samples) {
          samples.push_back(garside::to_json(s));
        }
        record = result.record;
      }
      std::cout << garside::csv_row(record) << '\n';
      if (log) {
        *log << json{{"experiment", args.table}, {"record", garside::to_json(record)},
                     {"samples", samples}}.dump()
             << '\n';
      }
    }
  }
  return 0;
}

int run_oracle(int max_artin, int max_bkl, std::uint64_t seed, int samples) {
  std::vector<garside::oracle::CheckResult> results =
      garside::oracle::run_oracle_checks(max_artin, max_bkl, seed, samples);
  auto append = [&](std::vector<garside::oracle::CheckResult> more) {
    results.insert(results.end(), more.begin(), more.end());
  };
  auto properties = [&](const auto& p) {
    append(garside::oracle::lattice_properties(p));
    append(garside::oracle::arithmetic_properties(p, seed, samples));
    append(garside::oracle::summit_properties(p, seed, samples));
  };
  for (int n = 3; n <= std::min(max_artin, 4); ++n) {
    properties(garside::artin::Presentation(n));
  }
  for (int n = 3; n <= std::min(max_bkl, 4); ++n) {
    properties(garside::bkl::Presentation(n));
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (!r.ok()) {
      std::cout << ", " << r.failures << " failures, first: " << r.first_failure;
    }
    std::cout << ")\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside normal forms, summit sets and braid conjugacy"};
  app.require_subcommand(1);

  std::string word;
  auto* nf = app.add_subcommand("nf", "Normal form of a word as JSON");
  nf->add_option("word", word, "Braid word, or - for stdin")->required();

  bool with_conjugators = false;
  auto* uss = app.add_subcommand("uss", "Ultra summit set summary as JSON");
  uss->add_option("word", word, "Braid word, or - for stdin")->required();
  uss->add_flag("--conjugators", with_conjugators, "List every element with its conjugator");

  std::string conj_mode;
  std::string other;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
  auto* conj = app.add_subcommand("conj", "Conjugacy decision or search");
  conj->add_option("mode", conj_mode, "decide or search")
      ->required()
      ->check(CLI::IsMember({"decide", "search"}));
  conj->add_option("x", word, "First braid word")->required();
  conj->add_option("y", other, "Second braid word")->required();
  conj->add_option("--seed", seed, "Random seed for search");
  conj->add_option("--cap", cap, "Random steps before the deterministic fallback");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Summit statistics as CSV");
  experiment->add_option("table", exp.table, "table1 (summit sizes) or table3 (densities)")
      ->required()
      ->check(CLI::IsMember({"table1", "table3"}));
  experiment->add_option("--n", exp.n, "Braid indices")->delimiter(',')->check(CLI::Range(2, 1000));
  experiment->add_option("--r", exp.r, "Canonical lengths")->delimiter(',')->check(CLI::Range(1, 100000));
  experiment->add_option("--samples", exp.samples, "Samples per (n, r)")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp.seed, "Random seed; OS entropy when absent");
  experiment->add_option("--presentation", exp.presentation, "artin or bkl")
      ->check(CLI::IsMember({"artin", "bkl"}));
  experiment->add_option("--budget", exp.budget, "Oracle set-size budget for |S_x|");
  experiment->add_option("--sss-samples", exp.sss_samples,
                         "Samples whose |S_x| is computed; negative for all");
  experiment->add_option("--threads", exp.threads, "Worker threads")->check(CLI::PositiveNumber);
  experiment->add_option("--log", exp.log, "Per-sample JSON lines log");

  int max_artin = 4;
  int max_bkl = 5;
  int oracle_samples = 30;
  std::uint64_t oracle_seed = 1;
  auto* oracle = app.add_subcommand("oracle", "Small-index validation suite");
  std::string oracle_mode;
  oracle->add_option("mode", oracle_mode, "check")->required()->check(CLI::IsMember({"check"}));
  oracle->add_option("--max-artin", max_artin, "Largest Artin index")->check(CLI::Range(3, 5));
  oracle->add_option("--max-bkl", max_bkl, "Largest band-generator index")->check(CLI::Range(3, 5));
  oracle->add_option("--samples", oracle_samples, "Random samples per suite");
  oracle->add_option("--seed", oracle_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*nf) {
      return run_nf(word);
    }
    if (*uss) {
      return run_uss(word, with_conjugators);
    }
    if (*conj) {
      return run_conj(conj_mode, word, other, seed, cap);
    }
    if (*experiment) {
      return run_experiment(exp);
    }
    return run_oracle(max_artin, max_bkl, oracle_seed, oracle_samples);
  } catch (const garside::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const garside::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const garside::PresentationMismatch& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
