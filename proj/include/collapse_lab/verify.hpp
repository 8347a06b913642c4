#pragma once

// Named, runnable checks. A Scenario pairs a word spec and prefix length
// with one machine-checkable expectation; composite checks bundle several
// scenario results into one report.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "collapse_lab/analysis.hpp"
#include "collapse_lab/generators.hpp"

namespace collapse_lab::verify {

struct NoCollisions {
  unsigned k = 2;
  std::size_t n_max = 0;
};

// At least one k-collision up to n_max; when u and v are given, the pair
// (n, u, v) must be among the reported least witnesses.
struct HasCollision {
  unsigned k = 2;
  std::size_t n_max = 0;
  std::size_t n = 0;
  std::string u;
  std::string v;
};

// p(n) = slope * n + offset for 1 <= n <= n_max.
struct ComplexityForm {
  std::size_t n_max = 0;
  Count slope = 1;
  Count offset = 1;
};

// overall imbalance exactly c up to windows of length n_max.
struct Balance {
  Count c = 1;
  std::size_t n_max = 0;
};

// every binary projection has overall imbalance exactly c.
struct ProjectionBalance {
  Count c = 1;
  std::size_t n_max = 0;
};

struct RhoEqualsP {
  std::size_t n_max = 0;
};

struct PrefixEquals {
  std::string golden;
};

using Expectation = std::variant<NoCollisions, HasCollision, ComplexityForm, Balance,
                                 ProjectionBalance, RhoEqualsP, PrefixEquals>;

struct Scenario {
  std::string name;
  gen::Spec spec;
  std::size_t length = 0;
  Expectation expectation;
};

struct Witness {
  std::string label;
  std::string u;
  std::string v;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string scenario;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> measured;
  std::vector<Witness> witnesses;
  std::size_t prefix_length = 0;
  double wall_seconds = 0;
  std::string detail;             // why it failed, or notes
  std::optional<bool> saturated;  // one doubling of the prefix adds no factor
  bool partial = false;           // a sweep stopped at its time budget
  std::vector<VerificationReport> members;
};

// Evaluates one scenario. Generator errors propagate.
VerificationReport check(const Scenario& scenario);

VerificationReport check_collapse(std::string name, const gen::Spec& spec, unsigned k,
                                  std::size_t n_max, std::size_t length);
VerificationReport check_rho_equals_p(std::string name, const gen::Spec& spec,
                                      std::size_t n_max, std::size_t length);

std::vector<VerificationReport> check_witness_pairs();

// Representative words of the four collapsing classes.
gen::Spec balanced_coloring_spec();         // mechanical word, one letter colored by (12)^omega
gen::Spec quasi_sturmian_spec(std::size_t d);  // d = 3 or 4
gen::Spec billiard_spec(std::size_t d);        // d = 2, 3 or 4
gen::Spec colored_fibonacci_spec();

const std::vector<std::string>& collapse_instance_names();
VerificationReport check_collapse_instance(const std::string& name);
std::vector<VerificationReport> check_collapse_instances();

struct SweepOptions {
  std::size_t period_max = 0;
  unsigned k = 2;
  std::size_t n_max = 99;
  std::size_t length = 20000;
  double time_budget_seconds = 0;  // 0: unlimited
};

// Lyndon words of length <= period_max over {1..letters} using every letter
// (one representative per rotation class), in length-then-lex order.
std::vector<std::vector<Letter>> lyndon_directives(std::size_t letters, std::size_t period_max);

VerificationReport sweep_arnoux_rauzy(const SweepOptions& options);
VerificationReport sweep_cassaigne_selmer(const SweepOptions& options);

// TM^j(Fibonacci): no k-collision and (for j >= 1) some (k-1)-collision.
VerificationReport check_tm_iterate_scenario(unsigned j, unsigned k, std::size_t n_max = 30);

struct RegistryEntry {
  std::string name;
  std::string description;
  bool long_running = false;  // skipped by run_all
  std::function<VerificationReport()> run;
};

const std::vector<RegistryEntry>& registry();
const RegistryEntry* find_scenario(std::string_view name);

// Runs one entry and stamps name and wall time on the report.
VerificationReport run(const RegistryEntry& entry);
// Runs the entries (possibly in parallel); reports come back in input order.
std::vector<VerificationReport> run_many(const std::vector<const RegistryEntry*>& entries);
std::vector<VerificationReport> run_all();

// Worker count: COLLAPSE_LAB_THREADS if set and positive, else hardware
// concurrency; at least 1.
unsigned worker_count();

// Applies fn to every index in [0, count) on up to worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace collapse_lab::verify
