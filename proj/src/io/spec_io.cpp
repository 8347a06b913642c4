#include <cstdio>
#include <fstream>
#include <sstream>

#include "collapse_lab/errors.hpp"
#include "collapse_lab/spec_io.hpp"

namespace collapse_lab::io {

using nlohmann::json;

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void fail(const std::string& what) { throw SpecParseError(what); }

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t count_field(const json& doc, const char* key, std::size_t fallback) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number_unsigned()) fail(std::string("field \"") + key + "\" must be a nonnegative integer");
  return it->get<std::size_t>();
}

// ---- leaves -------------------------------------------------------------------

json alphabet_json(const Alphabet& a) {
  if (a.single_char()) return a.str();
  return a.glyphs();
}

std::vector<std::string> glyph_list(const json& v, const char* what) {
  std::vector<std::string> out;
  if (v.is_string()) {
    for (char c : v.get<std::string>()) out.emplace_back(1, c);
  } else if (v.is_array()) {
    for (const auto& g : v) {
      if (!g.is_string()) fail(std::string(what) + " entries must be strings");
      out.push_back(g.get<std::string>());
    }
  } else {
    fail(std::string(what) + " must be a string or an array of strings");
  }
  return out;
}

Alphabet alphabet_from(const json& v) {
  auto glyphs = glyph_list(v, "alphabet");
  if (glyphs.empty()) fail("alphabet must not be empty");
  return Alphabet(std::move(glyphs));
}

json word_json(const FiniteWord& w) {
  if (w.alphabet().single_char()) return w.str();
  json out = json::array();
  for (Letter l : w.letters()) out.push_back(w.alphabet().glyph(l));
  return out;
}

FiniteWord word_from(const Alphabet& a, const json& v, const char* what) {
  std::vector<Letter> letters;
  for (const auto& g : glyph_list(v, what)) letters.push_back(a.letter(g));
  return FiniteWord(a, std::move(letters));
}

Rational rational_from(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) fail("rationals must be \"p/q\" strings");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const DomainError& e) {
    fail(e.what());
  }
}

std::vector<Rational> rationals_from(const json& v, const char* what) {
  if (!v.is_array()) fail(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& r : v) out.push_back(rational_from(r));
  return out;
}

json rationals_json(const std::vector<Rational>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(r.str());
  return out;
}

json substitution_json(const gen::Substitution& sub) {
  json images = json::array();
  for (const auto& img : sub.images) images.push_back(word_json(img));
  json out{{"domain", alphabet_json(sub.domain)}, {"images", images}};
  if (!(sub.codomain == sub.domain)) out["codomain"] = alphabet_json(sub.codomain);
  return out;
}

gen::Substitution substitution_from(const json& doc) {
  if (!doc.is_object()) fail("substitution must be an object");
  Alphabet domain = alphabet_from(field(doc, "domain"));
  Alphabet codomain = doc.contains("codomain") ? alphabet_from(doc["codomain"]) : domain;
  const json& images = field(doc, "images");
  if (!images.is_array()) fail("substitution images must be an array");
  if (images.size() != domain.size()) fail("substitution needs one image per domain letter");
  std::vector<FiniteWord> out;
  for (const auto& img : images) out.push_back(word_from(codomain, img, "image"));
  return gen::Substitution(domain, codomain, std::move(out));
}

std::vector<Letter> directive_letters(const Alphabet& a, const json& v) {
  std::vector<Letter> out;
  for (const auto& g : glyph_list(v, "directive")) out.push_back(a.letter(g));
  return out;
}

json directive_json(const Alphabet& a, const std::vector<Letter>& d) {
  return word_json(FiniteWord(a, d));
}

std::vector<std::uint8_t> cs_directive(const json& v) {
  std::vector<std::uint8_t> out;
  auto push = [&](long long x) {
    if (x != 1 && x != 2) fail("Cassaigne-Selmer directive entries must be 1 or 2");
    out.push_back(static_cast<std::uint8_t>(x));
  };
  if (v.is_string()) {
    for (char c : v.get<std::string>()) push(c - '0');
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (!x.is_number_integer()) fail("Cassaigne-Selmer directive entries must be integers");
      push(x.get<long long>());
    }
  } else {
    fail("Cassaigne-Selmer directive must be an array");
  }
  return out;
}

}  // namespace

json spec_to_json(const gen::Spec& spec) {
  return std::visit(
      Overloaded{
          [](const gen::Morphic& s) -> json {
            json images = json::array();
            for (const auto& img : s.sub.images) images.push_back(word_json(img));
            return {{"kind", "morphic"},
                    {"alphabet", alphabet_json(s.sub.domain)},
                    {"images", images},
                    {"seed", s.sub.domain.glyph(s.seed)}};
          },
          [](const gen::EventuallyPeriodic& s) -> json {
            return {{"kind", "eventually_periodic"},
                    {"alphabet", alphabet_json(s.period.alphabet())},
                    {"preperiod", word_json(s.preperiod)},
                    {"period", word_json(s.period)}};
          },
          [](const gen::Mechanical& s) -> json {
            return {{"kind", "mechanical"},
                    {"alpha", s.alpha.str()},
                    {"rho", s.rho.str()},
                    {"alphabet", alphabet_json(s.alphabet)}};
          },
          [](const gen::StandardSturmian& s) -> json {
            return {{"kind", "standard_sturmian"},
                    {"directive", s.directive},
                    {"periodic", s.periodic},
                    {"alphabet", alphabet_json(s.alphabet)}};
          },
          [](const gen::ArnouxRauzy& s) -> json {
            return {{"kind", "arnoux_rauzy"},
                    {"alphabet", alphabet_json(s.alphabet)},
                    {"preperiod", directive_json(s.alphabet, s.preperiod)},
                    {"period", directive_json(s.alphabet, s.period)}};
          },
          [](const gen::CassaigneSelmer& s) -> json {
            return {{"kind", "cassaigne_selmer"},
                    {"preperiod", std::vector<int>(s.preperiod.begin(), s.preperiod.end())},
                    {"period", std::vector<int>(s.period.begin(), s.period.end())}};
          },
          [](const gen::Billiard& s) -> json {
            return {{"kind", "billiard"}, {"x", rationals_json(s.x)}, {"theta", rationals_json(s.theta)}};
          },
          [](const gen::QuasiSturmianFM& s) -> json {
            return {{"kind", "quasi_sturmian_fm"},
                    {"inner", spec_to_json(*s.inner)},
                    {"b", s.b},
                    {"c", s.c},
                    {"d", s.d},
                    {"shift", s.shift}};
          },
          [](const gen::Colored& s) -> json {
            return {{"kind", "colored"},
                    {"base", spec_to_json(*s.base)},
                    {"letter", s.letter},
                    {"colors", spec_to_json(*s.colors)}};
          },
          [](const gen::Projected& s) -> json {
            return {{"kind", "projected"}, {"base", spec_to_json(*s.base)}, {"sub", s.sub}};
          },
          [](const gen::SubstitutionImage& s) -> json {
            return {{"kind", "substitution_image"},
                    {"base", spec_to_json(*s.base)},
                    {"sub", substitution_json(s.sub)},
                    {"shift", s.shift}};
          },
          [](const gen::ThueMorseIterated& s) -> json {
            return {{"kind", "thue_morse_iterated"},
                    {"base", spec_to_json(*s.base)},
                    {"iterations", s.iterations}};
          },
      },
      spec.node);
}

gen::Spec spec_from_json(const json& doc) {
  if (!doc.is_object()) fail("spec must be a JSON object");
  const std::string kind = string_field(doc, "kind");
  auto inner = [&](const char* key) { return spec_from_json(field(doc, key)); };
  auto optional_alphabet = [&](std::string_view fallback) {
    return doc.contains("alphabet") ? alphabet_from(doc["alphabet"]) : Alphabet::from_chars(fallback);
  };

  gen::Spec out = [&]() -> gen::Spec {
    if (kind == "fibonacci") return gen::fibonacci(optional_alphabet("01").str());
    if (kind == "thue_morse") return gen::thue_morse(optional_alphabet("01").str());
    if (kind == "tribonacci") return gen::tribonacci();
    if (kind == "morphic") {
      Alphabet a = alphabet_from(field(doc, "alphabet"));
      const json& images = field(doc, "images");
      if (!images.is_array() || images.size() != a.size())
        fail("morphic spec needs one image per alphabet letter");
      std::vector<FiniteWord> imgs;
      for (const auto& img : images) imgs.push_back(word_from(a, img, "image"));
      Letter seed = doc.contains("seed") ? a.letter(string_field(doc, "seed")) : Letter{0};
      return gen::Morphic{gen::Substitution(a, a, std::move(imgs)), seed};
    }
    if (kind == "eventually_periodic") {
      Alphabet a = alphabet_from(field(doc, "alphabet"));
      FiniteWord pre = doc.contains("preperiod") ? word_from(a, doc["preperiod"], "preperiod") : FiniteWord(a);
      return gen::EventuallyPeriodic{std::move(pre), word_from(a, field(doc, "period"), "period")};
    }
    if (kind == "mechanical") {
      Rational rho = doc.contains("rho") ? rational_from(doc["rho"]) : Rational(0);
      return gen::Mechanical{rational_from(field(doc, "alpha")), rho, optional_alphabet("01")};
    }
    if (kind == "standard_sturmian") {
      const json& d = field(doc, "directive");
      if (!d.is_array()) fail("directive must be an array of positive integers");
      std::vector<std::uint64_t> dir;
      for (const auto& x : d) {
        if (!x.is_number_unsigned()) fail("directive must be an array of positive integers");
        dir.push_back(x.get<std::uint64_t>());
      }
      bool periodic = true;
      if (doc.contains("periodic")) {
        if (!doc["periodic"].is_boolean()) fail("field \"periodic\" must be a boolean");
        periodic = doc["periodic"].get<bool>();
      }
      return gen::StandardSturmian{std::move(dir), periodic, optional_alphabet("01")};
    }
    if (kind == "arnoux_rauzy") {
      Alphabet a = alphabet_from(field(doc, "alphabet"));
      std::vector<Letter> pre;
      if (doc.contains("preperiod")) pre = directive_letters(a, doc["preperiod"]);
      return gen::ArnouxRauzy{a, std::move(pre), directive_letters(a, field(doc, "period"))};
    }
    if (kind == "cassaigne_selmer") {
      std::vector<std::uint8_t> pre;
      if (doc.contains("preperiod")) pre = cs_directive(doc["preperiod"]);
      return gen::CassaigneSelmer{std::move(pre), cs_directive(field(doc, "period"))};
    }
    if (kind == "billiard")
      return gen::Billiard{rationals_from(field(doc, "x"), "x"), rationals_from(field(doc, "theta"), "theta")};
    if (kind == "quasi_sturmian_fm") {
      std::vector<std::string> c, d;
      if (doc.contains("c")) c = glyph_list(doc["c"], "c");
      if (doc.contains("d")) d = glyph_list(doc["d"], "d");
      return gen::QuasiSturmianFM{inner("inner"), glyph_list(field(doc, "b"), "b"), std::move(c),
                                  std::move(d), count_field(doc, "shift", 0)};
    }
    if (kind == "colored") return gen::Colored{inner("base"), string_field(doc, "letter"), inner("colors")};
    if (kind == "projected") return gen::Projected{inner("base"), glyph_list(field(doc, "sub"), "sub")};
    if (kind == "substitution_image")
      return gen::SubstitutionImage{inner("base"), substitution_from(field(doc, "sub")),
                                    count_field(doc, "shift", 0)};
    if (kind == "thue_morse_iterated")
      return gen::ThueMorseIterated{inner("base"),
                                    static_cast<unsigned>(count_field(doc, "iterations", 1))};
    fail("unknown spec kind \"" + kind + "\"");
  }();
  gen::validate(out);
  return out;
}

std::string render_spec(const gen::Spec& spec) { return spec_to_json(spec).dump(2); }

gen::Spec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed spec document: ") + e.what());
  }
  try {
    return spec_from_json(doc);
  } catch (const json::exception& e) {
    fail(std::string("malformed spec document: ") + e.what());
  }
}

gen::Spec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string spec_hash(const gen::Spec& spec) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : spec_to_json(spec).dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace collapse_lab::io
