#include <algorithm>
#include <chrono>

#include "collapse_lab/verify.hpp"

namespace collapse_lab::verify {

namespace {

gen::Spec eventually_periodic(std::string_view glyphs, std::string_view pre, std::string_view per) {
  const Alphabet a = Alphabet::from_chars(glyphs);
  return gen::EventuallyPeriodic{FiniteWord::parse(a, pre), FiniteWord::parse(a, per)};
}

VerificationReport bundle(std::string name, std::vector<VerificationReport> members) {
  VerificationReport r;
  r.scenario = std::move(name);
  r.pass = std::all_of(members.begin(), members.end(), [](const auto& m) { return m.pass; });
  std::size_t failed = 0;
  for (const auto& m : members) {
    failed += m.pass ? 0 : 1;
    r.prefix_length = std::max(r.prefix_length, m.prefix_length);
  }
  r.measured.emplace_back("members", std::to_string(members.size()));
  r.measured.emplace_back("failed", std::to_string(failed));
  r.members = std::move(members);
  return r;
}

// Fibonacci: abelian classes merge first at n = 2 (rho(2) = 2 < p(2) = 3).
VerificationReport fibonacci_rho_drop() {
  VerificationReport r = check_rho_equals_p("fibonacci-rho-drop", gen::fibonacci(), 30, 1000);
  const bool at_two = !r.pass && !r.measured.empty() && r.measured.front().second == "2";
  r.detail = at_two ? "rho < p first at n=2, as expected" : "expected rho(2) < p(2), got: " + r.detail;
  r.pass = at_two;
  return r;
}

std::vector<RegistryEntry> build() {
  std::vector<RegistryEntry> e;
  e.push_back({"fibonacci-collapse", "Fibonacci word: no 2-binomial collision up to n=50", false,
               [] { return check_collapse("", gen::fibonacci(), 2, 50, 10000); }});
  e.push_back({"tribonacci-collapse", "Tribonacci word: no 2-binomial collision up to n=99", false,
               [] { return check_collapse("", gen::tribonacci(), 2, 99, 20000); }});
  e.push_back({"thue-morse-collision", "Thue-Morse word: 0110 ~2 1001 is the least collision at n=4",
               false, [] {
                 return check(Scenario{"", gen::thue_morse(), 4096,
                                       HasCollision{2, 4, 4, "0110", "1001"}});
               }});
  e.push_back({"quasi-sturmian-collision",
               "image of the Fibonacci word under 1->1221, 2->2112: collision 1221 ~2 2112", false, [] {
                 gen::Spec image = gen::SubstitutionImage{
                     gen::fibonacci("12"), gen::Substitution::endomorphism("12", {"1221", "2112"}), 0};
                 return check(Scenario{"", image, 10000, HasCollision{2, 4, 4, "1221", "2112"}});
               }});
  e.push_back({"witness-pairs",
               "Tribonacci projection, Thue-Morse and quasi-Sturmian witness pairs", false,
               [] { return bundle("", check_witness_pairs()); }});
  for (const auto& name : collapse_instance_names())
    e.push_back({name, "collapsing class representative: " + name, false,
                 [name] { return check_collapse_instance(name); }});
  e.push_back({"rho-equals-p-1122", "1^2 2^omega: rho = p up to n=30", false,
               [] { return check_rho_equals_p("", eventually_periodic("12", "11", "2"), 30, 1000); }});
  e.push_back({"rho-equals-p-123", "1 2 3^omega: rho = p up to n=30", false,
               [] { return check_rho_equals_p("", eventually_periodic("123", "12", "3"), 30, 1000); }});
  e.push_back({"fibonacci-rho-drop", "Fibonacci word: rho(2) < p(2)", false, fibonacci_rho_drop});
  e.push_back({"arnoux-rauzy-sweep",
               "strict Arnoux-Rauzy directives of period <= 3: no 2-collision up to n=99", false,
               [] { return sweep_arnoux_rauzy({3, 2, 99, 20000, 0}); }});
  e.push_back({"cassaigne-selmer-sweep",
               "Cassaigne-Selmer directives of period <= 2: no 2-collision up to n=99", false,
               [] { return sweep_cassaigne_selmer({2, 2, 99, 20000, 0}); }});
  e.push_back({"arnoux-rauzy-sweep-long",
               "strict Arnoux-Rauzy directives of period <= 5: no 2-collision up to n=99", true,
               [] { return sweep_arnoux_rauzy({5, 2, 99, 20000, 0}); }});
  e.push_back({"cassaigne-selmer-sweep-long",
               "Cassaigne-Selmer directives of period <= 5: no 2-collision up to n=99", true,
               [] { return sweep_cassaigne_selmer({5, 2, 99, 20000, 0}); }});
  e.push_back({"tm-iterate-j1-k3", "TM(Fibonacci): 3-collapse, some 2-collision (n <= 30)", false,
               [] { return check_tm_iterate_scenario(1, 3, 30); }});
  e.push_back({"tm-iterate-j2-k4", "TM^2(Fibonacci): 4-collapse, some 3-collision (n <= 20)", false,
               [] { return check_tm_iterate_scenario(2, 4, 20); }});
  return e;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build();
  return entries;
}

const RegistryEntry* find_scenario(std::string_view name) {
  for (const auto& e : registry())
    if (e.name == name) return &e;
  return nullptr;
}

VerificationReport run(const RegistryEntry& entry) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = entry.run();
  r.scenario = entry.name;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> run_many(const std::vector<const RegistryEntry*>& entries) {
  std::vector<VerificationReport> out(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) { out[i] = run(*entries[i]); });
  return out;
}

std::vector<VerificationReport> run_all() {
  std::vector<const RegistryEntry*> entries;
  for (const auto& e : registry())
    if (!e.long_running) entries.push_back(&e);
  return run_many(entries);
}

}  // namespace collapse_lab::verify
