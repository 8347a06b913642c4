#include <algorithm>
#include <chrono>
#include <sstream>

#include "collapse_lab/errors.hpp"
#include "collapse_lab/verify.hpp"

namespace collapse_lab::verify {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

using Clock = std::chrono::steady_clock;

std::string text(const FiniteWord& w) { return w.str(w.alphabet().single_char() ? "" : " "); }

std::string join(const std::vector<Count>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

Witness collision_witness(const analysis::Collision& c) {
  return {"n=" + std::to_string(c.n) + " k=" + std::to_string(c.k), text(c.u), text(c.v)};
}

bool stable_at(const gen::Spec& spec, std::size_t n_max, std::size_t length) {
  return analysis::saturation_probe(spec, n_max, length, 2 * length).stable;
}

bool contains_factor(const FiniteWord& w, const FiniteWord& u) {
  return std::search(w.data().begin(), w.data().end(), u.data().begin(), u.data().end()) !=
         w.data().end();
}

VerificationReport aggregate(std::string name, std::vector<VerificationReport> members) {
  VerificationReport r;
  r.scenario = std::move(name);
  r.pass = std::all_of(members.begin(), members.end(), [](const auto& m) { return m.pass; });
  std::size_t failed = 0;
  for (const auto& m : members) {
    if (!m.pass) ++failed;
    r.prefix_length = std::max(r.prefix_length, m.prefix_length);
    r.partial = r.partial || m.partial;
  }
  r.measured.emplace_back("members", std::to_string(members.size()));
  r.measured.emplace_back("failed", std::to_string(failed));
  r.members = std::move(members);
  return r;
}

std::string glyph_name(const Alphabet& a, Letter i, Letter j) {
  return "{" + a.glyph(i) + "," + a.glyph(j) + "}";
}

}  // namespace

VerificationReport check(const Scenario& s) {
  const auto start = Clock::now();
  VerificationReport r;
  r.scenario = s.name;
  r.prefix_length = s.length;
  const FiniteWord w = gen::prefix(s.spec, s.length);

  std::visit(
      Overloaded{
          [&](const NoCollisions& e) {
            auto found = analysis::find_collisions(w, e.k, e.n_max);
            r.pass = found.empty();
            r.measured.emplace_back("k", std::to_string(e.k));
            r.measured.emplace_back("n_max", std::to_string(e.n_max));
            r.measured.emplace_back("collision_lengths", std::to_string(found.size()));
            if (!found.empty()) {
              r.witnesses.push_back(collision_witness(found.front()));
              r.detail = "b^" + std::to_string(e.k) + "(" + std::to_string(found.front().n) +
                         ") < p(" + std::to_string(found.front().n) + ")";
            }
            r.saturated = stable_at(s.spec, e.n_max, s.length);
          },
          [&](const HasCollision& e) {
            auto found = analysis::find_collisions(w, e.k, e.n_max);
            r.measured.emplace_back("k", std::to_string(e.k));
            r.measured.emplace_back("n_max", std::to_string(e.n_max));
            r.measured.emplace_back("collision_lengths", std::to_string(found.size()));
            for (const auto& c : found) r.witnesses.push_back(collision_witness(c));
            if (e.u.empty()) {
              r.pass = !found.empty();
            } else {
              r.pass = std::any_of(found.begin(), found.end(), [&](const auto& c) {
                return c.n == e.n && text(c.u) == e.u && text(c.v) == e.v;
              });
            }
            if (!r.pass)
              r.detail = e.u.empty() ? "no collision found"
                                     : "expected collision (" + e.u + ", " + e.v + ") at n=" +
                                           std::to_string(e.n) + " not reported";
          },
          [&](const ComplexityForm& e) {
            auto p = analysis::subword_complexity(w, e.n_max);
            r.pass = true;
            for (std::size_t n = 1; n <= p.size(); ++n) {
              const Count expected = e.slope * n + e.offset;
              if (p[n - 1] != expected) {
                r.pass = false;
                r.detail = "p(" + std::to_string(n) + ") = " + std::to_string(p[n - 1]) +
                           ", expected " + std::to_string(expected);
                break;
              }
            }
            r.measured.emplace_back("p", join(p));
            r.saturated = stable_at(s.spec, e.n_max, s.length);
          },
          [&](const Balance& e) {
            auto rep = analysis::imbalance(w, e.n_max);
            r.pass = rep.overall_c == e.c;
            r.measured.emplace_back("overall_c", std::to_string(rep.overall_c));
            if (rep.witness)
              r.witnesses.push_back({"letter " + w.alphabet().glyph(rep.witness->letter) +
                                         " gap " + std::to_string(rep.witness->gap),
                                     text(rep.witness->u), text(rep.witness->v)});
            if (!r.pass)
              r.detail = "imbalance " + std::to_string(rep.overall_c) + ", expected " +
                         std::to_string(e.c);
          },
          [&](const ProjectionBalance& e) {
            r.pass = true;
            for (const auto& pb : analysis::binary_projection_imbalance(w, e.n_max)) {
              const std::string pair = glyph_name(w.alphabet(), pb.first, pb.second);
              r.measured.emplace_back("c" + pair, std::to_string(pb.report.overall_c));
              if (pb.report.overall_c != e.c) {
                r.pass = false;
                if (r.detail.empty())
                  r.detail = "projection " + pair + " has imbalance " +
                             std::to_string(pb.report.overall_c) + ", expected " +
                             std::to_string(e.c);
                if (pb.report.witness)
                  r.witnesses.push_back({"projection " + pair, text(pb.report.witness->u),
                                         text(pb.report.witness->v)});
              }
            }
          },
          [&](const RhoEqualsP& e) {
            auto rep = analysis::complexity_report(w, {}, e.n_max);
            r.pass = true;
            for (const auto& row : rep.rows) {
              if (row.rho != row.p) {
                r.pass = false;
                r.measured.emplace_back("first_n", std::to_string(row.n));
                r.measured.emplace_back("rho", std::to_string(row.rho));
                r.measured.emplace_back("p", std::to_string(row.p));
                r.detail = "rho(" + std::to_string(row.n) + ") = " + std::to_string(row.rho) +
                           " < p(" + std::to_string(row.n) + ") = " + std::to_string(row.p);
                auto abelian = analysis::find_collisions(w, 1, row.n);
                if (!abelian.empty()) r.witnesses.push_back(collision_witness(abelian.back()));
                break;
              }
            }
            if (r.pass) r.measured.emplace_back("n_max", std::to_string(e.n_max));
            r.saturated = stable_at(s.spec, e.n_max, s.length);
          },
          [&](const PrefixEquals& e) {
            const std::string got = text(w);
            r.pass = got == e.golden;
            r.measured.emplace_back("prefix", got);
            if (!r.pass) r.detail = "expected " + e.golden;
          },
      },
      s.expectation);
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

VerificationReport check_collapse(std::string name, const gen::Spec& spec, unsigned k,
                                  std::size_t n_max, std::size_t length) {
  return check(Scenario{std::move(name), spec, length, NoCollisions{k, n_max}});
}

VerificationReport check_rho_equals_p(std::string name, const gen::Spec& spec,
                                      std::size_t n_max, std::size_t length) {
  return check(Scenario{std::move(name), spec, length, RhoEqualsP{n_max}});
}

// ---- witnesses -----------------------------------------------------------------

namespace {

constexpr std::size_t kWitnessBaseLength = 300000;
constexpr std::size_t kWitnessProjectedLength = 100000;

struct WitnessPair {
  std::string name;
  std::vector<std::string> pair;  // projection letters, empty: the word itself
  std::string u;
  std::string v;
  std::string unbalanced_letter;  // empty: check u ~_2 v instead
};

VerificationReport check_witness(const WitnessPair& pw, const FiniteWord& word) {
  VerificationReport r;
  r.scenario = pw.name;
  r.prefix_length = word.size();
  const FiniteWord u = FiniteWord::parse(word.alphabet(), pw.u);
  const FiniteWord v = FiniteWord::parse(word.alphabet(), pw.v);
  const bool has_u = contains_factor(word, u);
  const bool has_v = contains_factor(word, v);
  r.measured.emplace_back("u_found", has_u ? "yes" : "no");
  r.measured.emplace_back("v_found", has_v ? "yes" : "no");
  bool property;
  if (!pw.unbalanced_letter.empty()) {
    const Letter a = word.alphabet().letter(pw.unbalanced_letter);
    const long gap = static_cast<long>(letter_count(u, a)) - static_cast<long>(letter_count(v, a));
    r.measured.emplace_back("gap_" + pw.unbalanced_letter, std::to_string(gap));
    property = gap == 2;
  } else {
    property = u != v && k_binomial_equivalent(u, v, 2);
    r.measured.emplace_back("equivalent_2", property ? "yes" : "no");
  }
  r.witnesses.push_back({pw.unbalanced_letter.empty() ? "~2" : "gap", pw.u, pw.v});
  r.pass = has_u && has_v && property;
  if (!has_u || !has_v)
    r.detail = "witness " + (has_u ? pw.v : pw.u) + " not found in the prefix";
  else if (!property)
    r.detail = "stated property does not hold";
  return r;
}

}  // namespace

std::vector<VerificationReport> check_witness_pairs() {
  const std::vector<WitnessPair> tribo = {
      {"tribonacci-12-unbalanced", {"1", "2"}, "11211211211211", "21211211211212", "1"},
      {"tribonacci-13-unbalanced", {"1", "3"}, "1111", "3113", "1"},
      {"tribonacci-23-unbalanced", {"2", "3"}, "22322322322322", "32322322322323", "2"},
      {"tribonacci-12-equivalent", {"1", "2"}, "2112112112112112", "1212112112112121", ""},
      {"tribonacci-13-equivalent", {"1", "3"}, "311113", "131131", ""},
      {"tribonacci-23-equivalent", {"2", "3"}, "3223223223223223", "2323223223223232", ""},
  };
  const FiniteWord base = gen::prefix(gen::tribonacci(), kWitnessBaseLength);
  std::vector<VerificationReport> out(tribo.size() + 2);
  parallel_for(tribo.size(), [&](std::size_t i) {
    FiniteWord proj = project(base, tribo[i].pair);
    if (proj.size() > kWitnessProjectedLength) proj = proj.slice(0, kWitnessProjectedLength);
    out[i] = check_witness(tribo[i], proj);
  });
  out[tribo.size()] = check_witness({"thue-morse-equivalent", {}, "0110", "1001", ""},
                                    gen::prefix(gen::thue_morse(), 4096));
  const gen::Spec image =
      gen::SubstitutionImage{gen::fibonacci("12"),
                             gen::Substitution::endomorphism("12", {"1221", "2112"}), 0};
  out[tribo.size() + 1] =
      check_witness({"quasi-sturmian-equivalent", {}, "1221", "2112", ""}, gen::prefix(image, 10000));
  return out;
}

// ---- collapse instances --------------------------------------------------------

namespace {

constexpr std::size_t kInstanceLength = 10000;
// rational billiards are periodic; this covers several periods for d <= 4
constexpr std::size_t kBilliardLength = 20000;


// pi_{i,j} of the billiard word is the planar billiard word
// of coordinates i and j.
VerificationReport check_billiard_projections(std::size_t d) {
  VerificationReport r;
  r.scenario = "billiard-d" + std::to_string(d) + "-projection-consistency";
  const auto spec = std::get<gen::Billiard>(billiard_spec(d).node);
  const FiniteWord w = gen::prefix(billiard_spec(d), kBilliardLength);
  r.prefix_length = w.size();
  r.pass = true;
  for (Letter i = 0; i < d; ++i) {
    for (Letter j = i + 1; j < d; ++j) {
      const Letter pair[] = {i, j};
      const FiniteWord proj = project(w, pair);
      const FiniteWord planar =
          gen::billiard_prefix({spec.x[i], spec.x[j]}, {spec.theta[i], spec.theta[j]}, proj.size());
      const bool same = proj.data() == planar.data();
      r.measured.emplace_back("match" + glyph_name(w.alphabet(), i, j), same ? "yes" : "no");
      if (!same) {
        r.pass = false;
        if (r.detail.empty())
          r.detail = "projection " + glyph_name(w.alphabet(), i, j) +
                     " differs from the planar billiard word";
      }
    }
  }
  return r;
}

VerificationReport check_degenerate_billiard() {
  VerificationReport r;
  r.scenario = "billiard-degenerate";
  try {
    (void)gen::billiard_prefix({Rational(0), Rational(0)}, {Rational(1), Rational(1)}, 10);
    r.pass = false;
    r.detail = "no error for a trajectory through a corner";
  } catch (const DegenerateTrajectory& e) {
    r.pass = e.first() == 0 && e.second() == 1;
    r.measured.emplace_back("error", e.what());
  }
  return r;
}

// The {0,1}-projection contains 000; some binary projection is not
// 1-balanced. Whether 101 occurs in the {0,1}-projection is recorded too.
VerificationReport check_colored_projection(const gen::Spec& spec) {
  VerificationReport r;
  r.scenario = "colored-fibonacci-projection";
  const FiniteWord w = gen::prefix(spec, kInstanceLength);
  const FiniteWord proj = project(w, std::vector<std::string>{"0", "1"});
  r.prefix_length = kInstanceLength;
  const bool has000 = contains_factor(proj, FiniteWord::parse(proj.alphabet(), "000"));
  const bool has101 = contains_factor(proj, FiniteWord::parse(proj.alphabet(), "101"));
  r.measured.emplace_back("contains_000", has000 ? "yes" : "no");
  r.measured.emplace_back("contains_101", has101 ? "yes" : "no");
  Count worst = 0;
  for (const auto& pb : analysis::binary_projection_imbalance(w, 200)) {
    const std::string pair = glyph_name(w.alphabet(), pb.first, pb.second);
    r.measured.emplace_back("c" + pair, std::to_string(pb.report.overall_c));
    if (pb.report.overall_c > worst && pb.report.witness) {
      worst = pb.report.overall_c;
      r.witnesses.assign(1, {"projection " + pair, text(pb.report.witness->u),
                             text(pb.report.witness->v)});
    }
  }
  r.pass = has000 && worst >= 2;
  if (!has000) r.detail = "{0,1}-projection misses 000";
  else if (worst < 2) r.detail = "every binary projection is 1-balanced";
  else if (!has101) r.detail = "101 does not occur in the {0,1}-projection";
  return r;
}

}  // namespace

gen::Spec billiard_spec(std::size_t d) {
  if (d < 2 || d > 4) throw DomainError("billiard instances exist for d = 2, 3, 4");
  static const long long slopes[] = {233, 377, 610, 987};
  static const long long dens[] = {7, 11, 13, 17};
  gen::Billiard b;
  for (std::size_t i = 0; i < d; ++i) {
    b.x.emplace_back(BigInt(1), BigInt(dens[i]));
    b.theta.emplace_back(slopes[i]);
  }
  return b;
}

gen::Spec balanced_coloring_spec() {
  gen::Mechanical base{Rational(BigInt(144), BigInt(377)), Rational(0), Alphabet::from_chars("ab")};
  const Alphabet colors = Alphabet::from_chars("12");
  return gen::Colored{gen::Spec(base), "a",
                      gen::Spec(gen::EventuallyPeriodic{FiniteWord(colors), FiniteWord::parse(colors, "12")})};
}

gen::Spec quasi_sturmian_spec(std::size_t d) {
  if (d < 3 || d > 4) throw DomainError("quasi-Sturmian instances exist for d = 3, 4");
  if (d == 3) return gen::QuasiSturmianFM{gen::fibonacci("ab"), {"1"}, {"2"}, {"3"}, 0};
  return gen::QuasiSturmianFM{gen::fibonacci("ab"), {"1"}, {"2"}, {"3", "4"}, 0};
}

gen::Spec colored_fibonacci_spec() {
  return gen::Colored{gen::fibonacci("0a"), "a", gen::fibonacci("12")};
}

VerificationReport check_collapse_instance(const std::string& name) {
  if (name == "balanced-coloring") {
    const auto spec = balanced_coloring_spec();
    return aggregate(name, {check(Scenario{name + "-balance", spec, kInstanceLength, Balance{1, 200}}),
                            check_collapse(name + "-collapse", spec, 2, 99, kInstanceLength)});
  }
  if (name == "quasi-sturmian-d3" || name == "quasi-sturmian-d4") {
    const std::size_t d = name.back() - '0';
    const auto spec = quasi_sturmian_spec(d);
    return aggregate(name, {check(Scenario{name + "-complexity", spec, kInstanceLength,
                                           ComplexityForm{40, 1, d - 1}}),
                            check_collapse(name + "-collapse", spec, 2, 40, kInstanceLength)});
  }
  if (name == "billiard-degenerate") return check_degenerate_billiard();
  if (name.rfind("billiard-d", 0) == 0) {
    const std::size_t d = name.back() - '0';
    const auto spec = billiard_spec(d);
    std::vector<VerificationReport> members;
    members.push_back(check(Scenario{name + "-projection-balance", spec, kBilliardLength,
                                     ProjectionBalance{1, 200}}));
    if (d > 2) members.push_back(check_billiard_projections(d));
    members.push_back(check_collapse(name + "-collapse", spec, 2, 60, kBilliardLength));
    return aggregate(name, std::move(members));
  }
  if (name == "colored-fibonacci") {
    const auto spec = colored_fibonacci_spec();
    return aggregate(name, {check(Scenario{name + "-prefix", spec, 13, PrefixEquals{"0100201001002"}}),
                            check_colored_projection(spec),
                            check_collapse(name + "-collapse", spec, 2, 40, kInstanceLength)});
  }
  throw DomainError("unknown collapse instance " + name);
}

const std::vector<std::string>& collapse_instance_names() {
  static const std::vector<std::string> names = {
      "balanced-coloring", "quasi-sturmian-d3", "quasi-sturmian-d4", "billiard-d2",
      "billiard-d3",       "billiard-d4",       "billiard-degenerate", "colored-fibonacci"};
  return names;
}

std::vector<VerificationReport> check_collapse_instances() {
  const auto& names = collapse_instance_names();
  std::vector<VerificationReport> out(names.size());
  parallel_for(names.size(), [&](std::size_t i) { out[i] = check_collapse_instance(names[i]); });
  return out;
}

// ---- sweeps --------------------------------------------------------------------

std::vector<std::vector<Letter>> lyndon_directives(std::size_t letters, std::size_t period_max) {
  std::vector<std::vector<Letter>> out;
  for (std::size_t len = 1; len <= period_max; ++len) {
    std::vector<Letter> w(len, 0);
    while (true) {
      bool lyndon = true;
      for (std::size_t s = 1; s < len && lyndon; ++s) {
        std::vector<Letter> rot(w.begin() + s, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + s);
        lyndon = w < rot;
      }
      std::vector<bool> used(letters, false);
      for (Letter l : w) used[l] = true;
      if (lyndon && std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
        out.push_back(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] == letters - 1) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return out;
}

namespace {

std::string directive_name(const std::vector<Letter>& dir) {
  std::string s = "(";
  for (Letter l : dir) s += static_cast<char>('1' + l);
  return s + ")";
}

VerificationReport run_sweep(std::string name, const std::vector<std::vector<Letter>>& directives,
                             const SweepOptions& o,
                             const std::function<VerificationReport(const std::vector<Letter>&)>& one) {
  const auto start = Clock::now();
  std::vector<VerificationReport> members(directives.size());
  std::vector<char> ran(directives.size(), 0);
  parallel_for(directives.size(), [&](std::size_t i) {
    if (o.time_budget_seconds > 0 &&
        std::chrono::duration<double>(Clock::now() - start).count() > o.time_budget_seconds)
      return;
    members[i] = one(directives[i]);
    ran[i] = 1;
  });
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (ran[i]) continue;
    ++skipped;
    members[i].scenario = name + " " + directive_name(directives[i]);
    members[i].partial = true;
    members[i].detail = "not run: time budget exhausted";
  }
  VerificationReport r = aggregate(std::move(name), std::move(members));
  r.measured.emplace_back("period_max", std::to_string(o.period_max));
  r.measured.emplace_back("k", std::to_string(o.k));
  r.measured.emplace_back("n_max", std::to_string(o.n_max));
  if (skipped) {
    r.partial = true;
    r.detail = "partial: " + std::to_string(directives.size() - skipped) + " of " +
               std::to_string(directives.size()) + " directives checked";
  }
  if (directives.empty()) r.detail = "empty sweep";
  return r;
}

}  // namespace

VerificationReport sweep_arnoux_rauzy(const SweepOptions& o) {
  const std::string name = "arnoux-rauzy-sweep-p" + std::to_string(o.period_max);
  return run_sweep(name, lyndon_directives(3, o.period_max), o, [&](const std::vector<Letter>& dir) {
    gen::Spec spec = gen::ArnouxRauzy{Alphabet::from_chars("123"), {}, dir};
    return check_collapse(name + " " + directive_name(dir), spec, o.k, o.n_max, o.length);
  });
}

VerificationReport sweep_cassaigne_selmer(const SweepOptions& o) {
  const std::string name = "cassaigne-selmer-sweep-p" + std::to_string(o.period_max);
  std::vector<std::vector<Letter>> directives;
  std::string excluded;
  for (auto& dir : lyndon_directives(2, o.period_max)) {
    std::vector<std::uint8_t> period;
    for (Letter l : dir) period.push_back(static_cast<std::uint8_t>(l + 1));
    if (gen::cassaigne_selmer_primitive(period))
      directives.push_back(std::move(dir));
    else
      excluded += (excluded.empty() ? "" : " ") + directive_name(dir);
  }
  VerificationReport r = run_sweep(name, directives, o, [&](const std::vector<Letter>& dir) {
    std::vector<std::uint8_t> period;
    for (Letter l : dir) period.push_back(static_cast<std::uint8_t>(l + 1));
    gen::Spec spec = gen::CassaigneSelmer{{}, period};
    const std::string member = name + " " + directive_name(dir);
    VerificationReport gate = check(Scenario{member, spec, o.length, ComplexityForm{30, 2, 1}});
    if (!gate.pass) {
      gate.detail = "generator suspect: " + gate.detail;
      return gate;
    }
    return check_collapse(member, spec, o.k, o.n_max, o.length);
  });
  if (!excluded.empty()) {
    r.measured.emplace_back("excluded_non_primitive", excluded);
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("excluded non-primitive ") + excluded;
  }
  return r;
}

VerificationReport check_tm_iterate_scenario(unsigned j, unsigned k, std::size_t n_max) {
  if (k != j + 2) throw DomainError("Thue-Morse iterate scenario needs k = j + 2");
  const std::string name = "tm-iterate-j" + std::to_string(j) + "-k" + std::to_string(k);
  const gen::Spec spec = gen::ThueMorseIterated{gen::fibonacci("01"), j};
  const std::size_t length = 10000;
  std::vector<VerificationReport> members;
  members.push_back(check_collapse(name + "-collapse", spec, k, n_max, length));
  if (j >= 1)
    members.push_back(
        check(Scenario{name + "-lower-order", spec, length, HasCollision{k - 1, n_max, 0, "", ""}}));
  return aggregate(name, std::move(members));
}

}  // namespace collapse_lab::verify
