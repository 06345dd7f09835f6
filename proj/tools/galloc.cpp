#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galloc/gal.hpp"
#include "galloc/gen.hpp"
#include "galloc/io.hpp"
#include "galloc/oracle.hpp"

namespace {

using namespace galloc;

std::string ef_witness(const Profile& profile, const Assignment& a) {
  if (a.p1.size() != a.p2.size()) {
    return "p1 holds " + std::to_string(a.p1.size()) + " object(s), p2 holds " +
           std::to_string(a.p2.size()) + "; EF requires equal sizes";
  }
  for (int agent : {1, 2}) {
    const WeakOrder& order = profile.pref(agent);
    const Allocation& own = agent == 1 ? a.p1 : a.p2;
    const Allocation& other = agent == 1 ? a.p2 : a.p1;
    std::vector<int> own_cnt(order.num_classes(), 0), oth_cnt(order.num_classes(), 0);
    for (Obj o : own) own_cnt[order.rank(o)]++;
    for (Obj o : other) oth_cnt[order.rank(o)]++;
    int cum_own = 0, cum_oth = 0;
    for (std::size_t j = 0; j < order.num_classes(); ++j) {
      cum_own += own_cnt[j];
      cum_oth += oth_cnt[j];
      if (cum_own < cum_oth) {
        return "agent " + std::to_string(agent) + " envies agent " + std::to_string(3 - agent) +
               ": within its top " + std::to_string(j + 1) + " preference class(es) it holds " +
               std::to_string(cum_own) + " object(s) but the other agent holds " +
               std::to_string(cum_oth);
      }
    }
  }
  return "";
}

std::string lpo_witness(const Profile& profile, const LpoViolation& v) {
  const std::string x = profile.label(v.in_p1);
  const std::string y = profile.label(v.in_p2);
  std::string out = "violating pair (" + x + ", " + y + "): ";
  if (v.improving_agent == 1) {
    out += "agent 1 strictly prefers " + y + " to its own " + x + " and agent 2 weakly prefers " +
           x + " to " + y;
  } else {
    out += "agent 2 strictly prefers " + x + " to its own " + y + " and agent 1 weakly prefers " +
           y + " to " + x;
  }
  return out + "; swapping them improves agent " + std::to_string(v.improving_agent) +
         " without hurting the other";
}

// First EF extension of p in enumeration order, for the maximality witness.
std::optional<Assignment> find_ef_extension(const Profile& profile, const Assignment& p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p.unallocated.size(); ++i) total *= 3;
  for (std::uint64_t index = 1; index < total; ++index) {
    Assignment q{p.p1, p.p2, {}};
    std::uint64_t rest = index;
    for (Obj o : p.unallocated) {
      switch (rest % 3) {
        case 1: q.p1.push_back(o); break;
        case 2: q.p2.push_back(o); break;
        default: q.unallocated.push_back(o); break;
      }
      rest /= 3;
    }
    if (is_ef(profile, q)) return q;
  }
  return std::nullopt;
}

int run_allocate(const std::string& input, int favor, bool trace, bool json) {
  const Profile profile = load_profile_file(input);
  const GalResult result = run_gal(profile, favor);
  std::cout << (json ? result_to_json(profile, result, trace)
                     : result_to_text(profile, result, trace));
  return 0;
}

int run_check(const std::string& kind, const std::string& input, const std::string& assignment,
              const OracleBudget& budget) {
  const Profile profile = load_profile_file(input);
  const Assignment a = load_assignment_file(assignment, profile);
  if (kind == "ef") {
    const bool ok = is_ef(profile, a);
    std::cout << "ef: " << (ok ? "true" : "false") << "\n";
    if (!ok) std::cout << ef_witness(profile, a) << "\n";
    return ok ? 0 : 1;
  }
  if (kind == "lpo") {
    const auto violation = find_lpo_violation(profile, a);
    std::cout << "lpo: " << (violation ? "false" : "true") << "\n";
    if (violation) std::cout << lpo_witness(profile, *violation) << "\n";
    return violation ? 1 : 0;
  }
  // kind == "maximal"
  const bool ok = oracle_is_maximal_ef(profile, a, budget);
  std::cout << "maximal: " << (ok ? "true" : "false") << "\n";
  if (!ok) {
    if (auto extension = find_ef_extension(profile, a)) {
      std::cout << "extending EF assignment:\n" << assignment_to_json(profile, *extension);
    }
  }
  return ok ? 0 : 1;
}

int run_exists(const std::string& input) {
  const Profile profile = load_profile_file(input);
  const bool exists = exists_complete_ef(profile);
  std::cout << "exists-complete-ef: " << (exists ? "true" : "false") << "\n";
  return exists ? 0 : 1;
}

int run_verify(const std::string& input, int favor, const OracleBudget& budget) {
  const Profile profile = load_profile_file(input);
  const GalResult result = run_gal(profile, favor);
  const Assignment& p = result.assignment;

  const bool ef = is_ef(profile, p);
  const bool lpo = is_lpo(profile, p) && oracle_is_lpo(profile, p, budget);
  const bool maximal = ef && oracle_is_maximal_ef(profile, p, budget);
  const bool no_dominator = oracle_no_ef_dominator(profile, p, budget);
  const bool complete_iff = exists_complete_ef(profile) == oracle_complete_ef_exists(profile, budget);

  const std::pair<const char*, bool> lines[] = {
      {"EF", ef},
      {"LPO", lpo},
      {"maximal", maximal},
      {"no-EF-dominator", no_dominator},
      {"complete-iff-oracle", complete_iff},
  };
  bool all = true;
  for (const auto& [name, ok] : lines) {
    std::printf("%-20s %s\n", name, ok ? "PASS" : "FAIL");
    all = all && ok;
  }
  return all ? 0 : 1;
}

int run_gen(std::uint32_t m, std::uint64_t seed, bool strict, std::uint32_t max_classes) {
  if (max_classes == 0) max_classes = m;
  if (max_classes > m) {
    throw Error("--max-classes must be at most the number of objects");
  }
  const Profile profile = random_profile(m, seed, strict, max_classes);
  std::cout << serialize_profile(profile);
  return 0;
}

int run_bench(std::uint32_t max_m, std::uint32_t repeats, std::uint64_t seed) {
  std::printf("m,mean_ms,repeats\n");
  std::vector<double> log_m, log_t;
  if (repeats == 0) return 0;
  for (std::uint32_t m = 250; m <= max_m; m *= 2) {
    double total_seconds = 0.0;
    for (std::uint32_t rep = 0; rep < repeats; ++rep) {
      const Profile profile = random_profile(m, seed + rep, /*strict=*/false, m);
      const auto start = std::chrono::steady_clock::now();
      const GalResult result = run_gal(profile);
      const auto stop = std::chrono::steady_clock::now();
      if (result.assignment.p1.size() > profile.num_objects()) std::abort();  // keep it live
      total_seconds += std::chrono::duration<double>(stop - start).count();
    }
    const double mean = total_seconds / repeats;
    std::printf("%u,%.6f,%u\n", m, mean * 1e3, repeats);
    log_m.push_back(std::log(static_cast<double>(m)));
    log_t.push_back(std::log(mean));
  }
  if (log_m.size() >= 2) {
    const auto n = static_cast<double>(log_m.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
      sx += log_m[i];
      sy += log_t[i];
      sxx += log_m[i] * log_m[i];
      sxy += log_m[i] * log_t[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    std::printf("slope,%.3f\n", slope);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Envy-free allocation of indivisible objects between two agents"};
  app.require_subcommand(1);

  std::string input, assignment_path, check_kind;
  int favor = 1;
  bool trace = false, json = false, strict = false;
  std::uint32_t objects = 0, max_classes = 0, repeats = 5;
  std::uint64_t seed = 0;
  OracleBudget budget;

  auto add_budget_flag = [&](CLI::App* cmd) {
    cmd->add_option("--max-oracle-objects", budget.max_objects,
                    "Largest instance the exhaustive oracles will accept")
        ->capture_default_str();
  };

  CLI::App* alloc_cmd = app.add_subcommand("allocate", "Run the allocation algorithm");
  alloc_cmd->add_option("--input", input, "Instance file (JSON or text)")->required();
  alloc_cmd->add_option("--favor", favor, "Agent tried first on conflicts")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  alloc_cmd->add_flag("--trace", trace, "Include the per-round trace");
  alloc_cmd->add_flag("--json", json, "Emit JSON instead of text");

  CLI::App* check_cmd = app.add_subcommand("check", "Check a property of an assignment");
  check_cmd->add_option("kind", check_kind, "Property to check")
      ->required()
      ->check(CLI::IsMember({"ef", "lpo", "maximal"}));
  check_cmd->add_option("--input", input, "Instance file")->required();
  check_cmd->add_option("--assignment", assignment_path, "Assignment file (JSON)")->required();
  add_budget_flag(check_cmd);

  CLI::App* exists_cmd =
      app.add_subcommand("exists-complete-ef", "Decide whether a complete EF assignment exists");
  exists_cmd->add_option("--input", input, "Instance file")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the allocation and verify its guarantees by brute force");
  verify_cmd->add_option("--input", input, "Instance file")->required();
  verify_cmd->add_option("--favor", favor, "Agent tried first on conflicts")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  add_budget_flag(verify_cmd);

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--objects", objects, "Number of objects")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  CLI::Option* strict_opt = gen_cmd->add_flag("--strict", strict, "Strict preferences");
  gen_cmd->add_option("--max-classes", max_classes, "Cap on indifference classes (default: m)")
      ->excludes(strict_opt);

  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the allocation on a doubling ladder");
  bench_cmd->add_option("--objects", objects, "Largest instance size")->default_val(2000);
  bench_cmd->add_option("--repeats", repeats, "Instances per size")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "Random seed")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*alloc_cmd) return run_allocate(input, favor, trace, json);
    if (*check_cmd) return run_check(check_kind, input, assignment_path, budget);
    if (*exists_cmd) return run_exists(input);
    if (*verify_cmd) return run_verify(input, favor, budget);
    if (*gen_cmd) return run_gen(objects, seed, strict, max_classes);
    if (*bench_cmd) return run_bench(objects, repeats, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
