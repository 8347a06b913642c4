#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "collapse_lab/errors.hpp"
#include "collapse_lab/report_io.hpp"
#include "collapse_lab/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace collapse_lab;
using namespace collapse_lab::verify;

namespace {

std::string measured(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.measured)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("check_collapse") {
  CHECK(check_collapse("fib", gen::fibonacci(), 2, 50, 10000).pass);
  const auto tm = check_collapse("tm", gen::thue_morse(), 2, 4, 4096);
  CHECK_FALSE(tm.pass);
  REQUIRE_FALSE(tm.witnesses.empty());
  CHECK(tm.witnesses[0].u == "0110");
  CHECK(tm.witnesses[0].v == "1001");
  // the witness is re-checkable
  CHECK(k_binomial_equivalent(support::word("01", tm.witnesses[0].u),
                              support::word("01", tm.witnesses[0].v), 2));
  CHECK(tm.saturated.value_or(false));
}

TEST_CASE("scenario expectations") {
  CHECK(check(Scenario{"tm", gen::thue_morse(), 4096, HasCollision{2, 4, 4, "0110", "1001"}}).pass);
  CHECK_FALSE(check(Scenario{"tm", gen::thue_morse(), 4096, HasCollision{2, 4, 4, "0101", "1010"}}).pass);
  CHECK(check(Scenario{"fib", gen::fibonacci(), 10000, ComplexityForm{30, 1, 1}}).pass);
  const auto bad = check(Scenario{"fib", gen::fibonacci(), 10000, ComplexityForm{30, 2, 1}});
  CHECK_FALSE(bad.pass);
  CHECK(bad.detail == "p(1) = 2, expected 3");
  CHECK(check(Scenario{"fib", gen::fibonacci(), 10000, Balance{1, 100}}).pass);
  CHECK(check(Scenario{"fib", gen::fibonacci(), 19, PrefixEquals{"0100101001001010010"}}).pass);
  CHECK_FALSE(check(Scenario{"fib", gen::fibonacci(), 19, PrefixEquals{"0100101001001010011"}}).pass);
  CHECK(check(Scenario{"bil", billiard_spec(3), 20000, ProjectionBalance{1, 200}}).pass);
  const auto tri = check(Scenario{"tri", gen::tribonacci(), 20000, ProjectionBalance{1, 20}});
  CHECK_FALSE(tri.pass);
  CHECK_FALSE(tri.witnesses.empty());
}

TEST_CASE("rho equals p") {
  const gen::Spec a = gen::EventuallyPeriodic{support::word("12", "11"), support::word("12", "2")};
  const gen::Spec b = gen::EventuallyPeriodic{support::word("123", "12"), support::word("123", "3")};
  CHECK(check_rho_equals_p("a", a, 30, 1000).pass);
  CHECK(check_rho_equals_p("b", b, 30, 1000).pass);
  const auto fib = check_rho_equals_p("fib", gen::fibonacci(), 30, 1000);
  CHECK_FALSE(fib.pass);
  CHECK(measured(fib, "first_n") == "2");
}

TEST_CASE("witness pairs") {
  const auto all = check_witness_pairs();
  CHECK(all.size() == 8);
  for (const auto& r : all) {
    CAPTURE(r.scenario);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("collapse instances") {
  const auto& names = collapse_instance_names();
  CHECK(names.size() == 8);
  CHECK_THROWS_AS(check_collapse_instance("nope"), DomainError);
  for (const auto& name : names) {
    CAPTURE(name);
    const auto r = check_collapse_instance(name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(billiard_spec(5), DomainError);
  CHECK_THROWS_AS(quasi_sturmian_spec(2), DomainError);
}

TEST_CASE("colored Fibonacci projections") {
  const auto r = check_collapse_instance("colored-fibonacci");
  bool recorded = false;
  std::function<void(const VerificationReport&)> scan = [&](const VerificationReport& m) {
    if (measured(m, "contains_101") == "no") recorded = true;
    for (const auto& c : m.members) scan(c);
  };
  scan(r);
  CHECK(recorded);
}

TEST_CASE("Lyndon directives") {
  CHECK(lyndon_directives(3, 1).empty());
  CHECK(lyndon_directives(2, 0).empty());
  const auto two = lyndon_directives(2, 4);
  std::vector<std::string> names;
  for (const auto& d : two) {
    std::string s;
    for (Letter l : d) s += static_cast<char>('1' + l);
    names.push_back(s);
  }
  CHECK(names == std::vector<std::string>{"12", "112", "122", "1112", "1122", "1222"});
  // count against a brute-force rotation-class enumeration
  for (std::size_t p = 1; p <= 5; ++p) {
    std::set<std::string> classes;
    for (std::size_t n = 1; n <= p; ++n)
      for (const auto& w : oracle::all_words("123", n)) {
        if (w.find('1') == std::string::npos || w.find('2') == std::string::npos ||
            w.find('3') == std::string::npos)
          continue;
        bool primitive = true;
        for (std::size_t q = 1; q < n; ++q)
          if (n % q == 0 && w.substr(q) + w.substr(0, q) == w) primitive = false;
        if (!primitive) continue;
        std::string least = w;
        for (std::size_t q = 1; q < n; ++q) least = std::min(least, w.substr(q) + w.substr(0, q));
        classes.insert(least);
      }
    CHECK(lyndon_directives(3, p).size() == classes.size());
  }
}

TEST_CASE("sweeps") {
  const auto ar1 = sweep_arnoux_rauzy(SweepOptions{1});
  CHECK(ar1.members.empty());
  CHECK(ar1.detail == "empty sweep");
  CHECK(sweep_cassaigne_selmer(SweepOptions{0}).members.empty());

  const auto ar = sweep_arnoux_rauzy(SweepOptions{3, 2, 30, 5000});
  CHECK(ar.pass);
  CHECK(ar.members.size() == 2);
  const auto cs = sweep_cassaigne_selmer(SweepOptions{4, 2, 30, 5000});
  CHECK(cs.pass);
  CHECK(measured(cs, "excluded_non_primitive") == "(1122)");

  SweepOptions tight{3, 2, 30, 5000};
  tight.time_budget_seconds = 1e-9;
  const auto partial = sweep_arnoux_rauzy(tight);
  CHECK(partial.partial);
}

TEST_CASE("Thue-Morse iterate scenarios") {
  CHECK(check_tm_iterate_scenario(1, 3, 30).pass);
  CHECK(check_tm_iterate_scenario(0, 2, 30).pass);
  CHECK_THROWS_AS(check_tm_iterate_scenario(1, 4), DomainError);
}

TEST_CASE("registry") {
  std::set<std::string> names;
  for (const auto& e : registry()) {
    CHECK(names.insert(e.name).second);
    CHECK_FALSE(e.description.empty());
  }
  for (const char* n : {"fibonacci-collapse", "tribonacci-collapse", "thue-morse-collision",
                        "witness-pairs", "arnoux-rauzy-sweep", "cassaigne-selmer-sweep"})
    CHECK(find_scenario(n) != nullptr);
  CHECK(find_scenario("nonexistent") == nullptr);
  const auto r = run(*find_scenario("thue-morse-collision"));
  CHECK(r.pass);
  CHECK(r.scenario == "thue-morse-collision");
}

TEST_CASE("determinism") {
  const auto a = io::report_json(run(*find_scenario("quasi-sturmian-collision")));
  const auto b = io::report_json(run(*find_scenario("quasi-sturmian-collision")));
  auto strip = [](nlohmann::json j) {
    std::function<void(nlohmann::json&)> go = [&](nlohmann::json& x) {
      x.erase("wall_seconds");
      if (x.contains("members"))
        for (auto& m : x["members"]) go(m);
    };
    go(j);
    return j;
  };
  CHECK(strip(a) == strip(b));
}

TEST_CASE("parallel_for") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_WITH_AS(parallel_for(10,
                                    [](std::size_t i) {
                                      if (i == 3 || i == 7) throw std::runtime_error(std::to_string(i));
                                    }),
                       "3", std::runtime_error);
  CHECK(worker_count() >= 1);
}

}  // TEST_SUITE
