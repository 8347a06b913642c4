// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock bound. Exit status 0 iff every selected criterion passes.
//
//   acceptance                 run all twelve
//   acceptance --criterion 5   run one

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "collapse_lab/analysis.hpp"
#include "collapse_lab/binomial.hpp"
#include "collapse_lab/errors.hpp"
#include "collapse_lab/generators.hpp"
#include "collapse_lab/verify.hpp"
#include "properties.hpp"

using namespace collapse_lab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a failed condition; the first failure names the outcome.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double seconds;
  std::function<Outcome()> run;
};

FiniteWord w(std::string_view alphabet, std::string_view text) {
  return FiniteWord::parse(Alphabet::from_chars(alphabet), text);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string number(std::size_t n) { return std::to_string(n); }

Outcome binomial_oracle() {
  Outcome o;
  const std::string bad = properties::binomial_oracle(1000, 2024);
  o.require(bad.empty(), "mismatch at " + bad);
  return o;
}

Outcome micro_examples() {
  Outcome o;
  const FiniteWord x = w("12", "11212");
  o.require(x.size() == 5, "|11212| != 5");
  o.require(letter_count(x, 0) == 3, "|11212|_1 != 3");
  o.require(factor_count(x, w("12", "12")) == 2, "|11212|_12 != 2");
  o.require(binomial(x, w("12", "12")) == 5, "(11212 choose 12) != 5");
  o.require(k_binomial_equivalent(w("12", "1212221"), w("12", "2112212"), 2), "1212221 !~2 2112212");
  o.require(!k_binomial_equivalent(w("12", "1212221"), w("12", "2112212"), 3), "1212221 ~3 2112212");
  o.require(project(w("abc", "aabaca"), std::vector<std::string>{"a", "b"}).str() == "aabaa",
            "pi_ab(aabaca) != aabaa");
  o.require(analysis::imbalance(x, 5).overall_c == 1, "imbalance(11212) != 1");
  o.require(analysis::imbalance(w("12", "11122"), 5).overall_c == 2, "imbalance(11122) != 2");
  return o;
}

Outcome sturmian_collapse() {
  Outcome o;
  const auto rep = analysis::complexity_report(gen::prefix(gen::fibonacci(), 10000), {2}, 50);
  for (const auto& r : rep.rows) {
    o.require(r.p == r.n + 1, "p(" + number(r.n) + ") = " + std::to_string(r.p));
    o.require(r.rho == 2, "rho(" + number(r.n) + ") = " + std::to_string(r.rho));
    o.require(r.binomial[0] == r.n + 1, "b2(" + number(r.n) + ") = " + std::to_string(r.binomial[0]));
  }
  return o;
}

Outcome thue_morse_counterexample() {
  Outcome o;
  const auto c = analysis::find_collisions(gen::prefix(gen::thue_morse(), 4096), 2, 4);
  o.require(c.size() == 1, number(c.size()) + " collision lengths");
  if (!c.empty())
    o.require(c[0].n == 4 && c[0].u.str() == "0110" && c[0].v.str() == "1001",
              "got (" + number(c[0].n) + ", " + c[0].u.str() + ", " + c[0].v.str() + ")");
  return o;
}

Outcome tribonacci_collapse() {
  Outcome o;
  const auto c = analysis::find_collisions(gen::prefix(gen::tribonacci(), 20000), 2, 99);
  if (!c.empty())
    o.require(false, "collision at n=" + number(c[0].n) + ": " + c[0].u.str() + " ~ " + c[0].v.str());
  return o;
}

Outcome tribonacci_witnesses() {
  struct Pair {
    std::string keep, u, v;
    char letter;  // 0: u ~2 v, else |u|_letter - |v|_letter = 2
  };
  const std::vector<Pair> pairs{
      {"12", "11211211211211", "21211211211212", '1'},
      {"13", "1111", "3113", '1'},
      {"23", "22322322322322", "32322322322323", '2'},
      {"12", "2112112112112112", "1212112112112121", 0},
      {"13", "311113", "131131", 0},
      {"23", "3223223223223223", "2323223223223232", 0},
  };
  Outcome o;
  const std::string base = gen::prefix(gen::tribonacci(), 300000).str();
  for (const auto& p : pairs) {
    std::string proj;
    for (char c : base)
      if (p.keep.find(c) != std::string::npos) proj += c;
    proj.resize(std::min<std::size_t>(proj.size(), 100000));
    o.require(contains(proj, p.u), p.u + " not in pi_" + p.keep);
    o.require(contains(proj, p.v), p.v + " not in pi_" + p.keep);
    if (p.letter) {
      const auto gap = static_cast<long>(std::count(p.u.begin(), p.u.end(), p.letter)) -
                       static_cast<long>(std::count(p.v.begin(), p.v.end(), p.letter));
      o.require(gap == 2, p.u + "/" + p.v + " gap " + std::to_string(gap));
    } else {
      o.require(k_binomial_equivalent(w(p.keep, p.u), w(p.keep, p.v), 2), p.u + " !~2 " + p.v);
    }
  }
  return o;
}

Outcome quasi_sturmian() {
  Outcome o;
  for (std::size_t d : {3, 4}) {
    const FiniteWord x = gen::prefix(verify::quasi_sturmian_spec(d), 10000);
    const auto p = analysis::subword_complexity(x, 40);
    for (std::size_t n = 1; n <= 40; ++n)
      o.require(p[n - 1] == n + d - 1, "d=" + number(d) + " p(" + number(n) + ") = " + std::to_string(p[n - 1]));
    o.require(analysis::find_collisions(x, 2, 40).empty(), "d=" + number(d) + " has a 2-collision");
  }
  const gen::Spec control =
      gen::SubstitutionImage{gen::fibonacci("12"), gen::Substitution::endomorphism("12", {"1221", "2112"}), 0};
  const auto c = analysis::find_collisions(gen::prefix(control, 10000), 2, 4);
  o.require(!c.empty() && c[0].n == 4, "negative control has no length-4 collision");
  o.require(k_binomial_equivalent(w("12", "1221"), w("12", "2112"), 2), "1221 !~2 2112");
  return o;
}

Outcome billiards() {
  Outcome o;
  for (std::size_t d : {2, 3, 4}) {
    const auto spec = std::get<gen::Billiard>(verify::billiard_spec(d).node);
    const FiniteWord x = gen::billiard_prefix(spec.x, spec.theta, 20000);
    for (const auto& pb : analysis::binary_projection_imbalance(x, 200))
      o.require(pb.report.overall_c == 1, "d=" + number(d) + " projection " + number(pb.first + 1) +
                                              number(pb.second + 1) + " c=" + std::to_string(pb.report.overall_c));
    // every proper subset of at least two coordinates
    for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
      std::vector<Letter> sub;
      std::vector<Rational> sx, st;
      for (std::size_t i = 0; i < d; ++i)
        if (mask & (1u << i)) {
          sub.push_back(static_cast<Letter>(i));
          sx.push_back(spec.x[i]);
          st.push_back(spec.theta[i]);
        }
      if (sub.size() < 2) continue;
      const FiniteWord proj = project(x, sub);
      const FiniteWord lower = gen::billiard_prefix(sx, st, proj.size());
      o.require(proj.data() == lower.data(), "d=" + number(d) + " projection mask " + number(mask) +
                                                 " differs from the lower billiard");
    }
    const auto c = analysis::find_collisions(x, 2, 60);
    o.require(c.empty(), "d=" + number(d) + " 2-collision at n=" + (c.empty() ? "" : number(c[0].n)));
  }
  bool tie = false;
  try {
    gen::billiard_prefix({0, 0}, {1, 1}, 1);
  } catch (const DegenerateTrajectory&) {
    tie = true;
  }
  o.require(tie, "x=(0,0), theta=(1,1) did not report a degenerate trajectory");
  return o;
}

Outcome coloring() {
  Outcome o;
  const FiniteWord x = gen::prefix(verify::colored_fibonacci_spec(), 10000);
  o.require(x.slice(0, 13).str() == "0100201001002", "prefix " + x.slice(0, 13).str());
  const std::string proj = project(x, std::vector<std::string>{"0", "1"}).str();
  o.require(contains(proj, "000"), "000 not in the {0,1}-projection");
  o.require(contains(proj, "101"), "101 not in the {0,1}-projection");
  o.require(analysis::find_collisions(x, 2, 40).empty(), "2-collision up to n=40");
  return o;
}

Outcome sweeps() {
  Outcome o;
  const auto ar = verify::sweep_arnoux_rauzy(verify::SweepOptions{3, 2, 99, 20000});
  const auto cs = verify::sweep_cassaigne_selmer(verify::SweepOptions{2, 2, 99, 20000});
  for (const auto* r : {&ar, &cs})
    for (const auto& m : r->members) o.require(m.pass, m.scenario + ": " + m.detail);
  o.require(!ar.members.empty() && !cs.members.empty(), "empty sweep");
  return o;
}

Outcome property_suites() {
  Outcome o;
  auto req = [&](const std::string& bad, const std::string& name) {
    o.require(bad.empty(), name + ": " + bad);
  };
  req(properties::composition_identity(8, 3), "composition identity");
  req(properties::complexity_chain(), "complexity chain");
  req(properties::reconstruction_exhaustive(3, 8), "reconstruction exhaustive");
  req(properties::reconstruction_random(5, 50, 2000, 17), "reconstruction random");
  req(properties::signature_extend(200, 30, 23), "signature extension");
  return o;
}

Outcome abelian_instances() {
  Outcome o;
  const gen::Spec a = gen::EventuallyPeriodic{w("12", "11"), w("12", "2")};
  const gen::Spec b = gen::EventuallyPeriodic{w("123", "12"), w("123", "3")};
  for (const auto& [name, spec] : {std::pair{"1^2 2^w", a}, std::pair{"1 2 3^w", b}}) {
    const auto rep = analysis::complexity_report(gen::prefix(spec, 1000), {}, 30);
    for (const auto& r : rep.rows)
      o.require(r.rho == r.p, std::string(name) + " rho(" + number(r.n) + ") < p");
  }
  const auto fib = analysis::complexity_report(gen::prefix(gen::fibonacci(), 1000), {}, 2);
  o.require(fib.rows[1].rho < fib.rows[1].p, "Fibonacci rho(2) = p(2)");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "criterion number (repeatable)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "binomial oracle equivalence", 10, binomial_oracle},
      {2, "worked micro-examples", 1, micro_examples},
      {3, "Sturmian collapse", 30, sturmian_collapse},
      {4, "Thue-Morse counterexample", 5, thue_morse_counterexample},
      {5, "Tribonacci collapse", 300, tribonacci_collapse},
      {6, "Tribonacci projection witnesses", 60, tribonacci_witnesses},
      {7, "quasi-Sturmian construction", 120, quasi_sturmian},
      {8, "billiard suite", 180, billiards},
      {9, "coloring suite", 60, coloring},
      {10, "sweep replication (scaled)", 900, sweeps},
      {11, "property suites", 120, property_suites},
      {12, "abelian instances", 5, abelian_instances},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && took > c.seconds) {
      o.pass = false;
      o.detail = "over time bound";
    }
    all = all && o.pass;
    std::printf("%s  %2d  %-32s %8.3fs / %gs%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), took,
                c.seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
