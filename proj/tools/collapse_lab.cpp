// collapse_lab: generate words, tabulate complexities and balance, run the
// verification scenarios.
//
// Exit codes: 0 success, 1 verification failure or inconsistent projection
// family, 2 usage or parse error, 3 generator or domain error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "collapse_lab/analysis.hpp"
#include "collapse_lab/errors.hpp"
#include "collapse_lab/report_io.hpp"
#include "collapse_lab/spec_io.hpp"
#include "collapse_lab/verify.hpp"

namespace cl = collapse_lab;
namespace io = collapse_lab::io;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;

// A bad command line that CLI11 itself cannot detect.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec_path;
  std::size_t length = 0;
  std::size_t n_max = 10;
  std::size_t n = 0;
  std::vector<unsigned> orders;
  std::string format = "table";
  bool saturate = false;
  bool projections = false;
  bool witnesses = false;
  std::string sub;
  std::string letter;
  std::string colors_path;
  std::string separator;
  std::vector<std::string> scenarios;
  bool all = false;
  bool long_running = false;
  bool list = false;
  std::vector<std::string> pair_args;
  std::vector<std::string> files;
  std::string alphabet;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

cl::gen::Spec require_spec(const Options& o) {
  if (o.spec_path.empty()) throw UsageError("--spec is required");
  return io::load_spec(o.spec_path);
}

// Prefix length: --length, or the saturation probe started at --length
// (default 1000) when --saturate is given.
std::size_t choose_length(const Options& o, const cl::gen::Spec& spec, std::size_t n_max,
                          std::optional<cl::analysis::SaturationResult>& saturation) {
  if (o.saturate) {
    saturation = cl::analysis::saturation_probe(spec, n_max, o.length ? o.length : 1000);
    return saturation->length;
  }
  if (o.length == 0) throw UsageError("--length or --saturate is required");
  return o.length;
}

std::string word_text(const cl::FiniteWord& w, const Options& o) {
  if (!o.separator.empty()) return w.str(o.separator);
  return io::render_word(w);
}

int cmd_generate(const Options& o) {
  const auto spec = require_spec(o);
  if (o.length == 0) throw UsageError("--length is required");
  std::cout << word_text(cl::gen::prefix(spec, o.length), o) << '\n';
  return kOk;
}

int cmd_complexity(const Options& o) {
  const auto start = Clock::now();
  const auto spec = require_spec(o);
  io::Metadata meta{spec};
  const std::size_t len = choose_length(o, spec, o.n_max, meta.saturation);
  const auto word = cl::gen::prefix(spec, len);
  std::vector<unsigned> orders = o.orders.empty() ? std::vector<unsigned>{2} : o.orders;
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  const auto report = cl::analysis::complexity_report(word, orders, o.n_max, o.witnesses);
  meta.prefix_length = len;
  meta.wall_seconds = since(start);
  std::cout << io::render_complexity(report, meta, io::parse_format(o.format));
  return kOk;
}

int cmd_balance(const Options& o) {
  const auto start = Clock::now();
  const auto spec = require_spec(o);
  io::Metadata meta{spec};
  const std::size_t len = choose_length(o, spec, o.n_max, meta.saturation);
  const auto word = cl::gen::prefix(spec, len);
  const auto report = cl::analysis::imbalance(word, o.n_max);
  std::vector<cl::analysis::PairBalance> pairs;
  if (o.projections) pairs = cl::analysis::binary_projection_imbalance(word, o.n_max);
  meta.prefix_length = len;
  meta.wall_seconds = since(start);
  std::cout << io::render_balance(report, pairs, meta, io::parse_format(o.format));
  return kOk;
}

int cmd_classes(const Options& o) {
  const auto start = Clock::now();
  const auto spec = require_spec(o);
  const std::size_t n = o.n ? o.n : o.n_max;
  io::Metadata meta{spec};
  const std::size_t len = choose_length(o, spec, n, meta.saturation);
  const unsigned k = o.orders.empty() ? 2 : o.orders.front();
  const auto partition = cl::analysis::classes(cl::gen::prefix(spec, len), k, n);
  meta.prefix_length = len;
  meta.wall_seconds = since(start);
  std::cout << io::render_classes(partition, meta, io::parse_format(o.format));
  return kOk;
}

std::vector<std::string> glyphs_of(const std::string& text, const std::string& sep) {
  std::vector<std::string> out;
  if (sep.empty()) {
    for (char c : text) out.emplace_back(1, c);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

int cmd_project(const Options& o) {
  const auto spec = require_spec(o);
  if (o.sub.empty()) throw UsageError("--sub is required");
  if (o.length == 0) throw UsageError("--length is required");
  const auto glyphs = glyphs_of(o.sub, o.separator.empty() ? "" : ",");
  cl::gen::Spec projected = cl::gen::Projected{spec, glyphs};
  std::cout << word_text(cl::gen::prefix(projected, o.length), o) << '\n';
  return kOk;
}

int cmd_color(const Options& o) {
  const auto base = require_spec(o);
  if (o.colors_path.empty()) throw UsageError("--colors is required");
  if (o.letter.empty()) throw UsageError("--letter is required");
  if (o.length == 0) throw UsageError("--length is required");
  cl::gen::Spec colored = cl::gen::Colored{base, o.letter, io::load_spec(o.colors_path)};
  std::cout << word_text(cl::gen::prefix(colored, o.length), o) << '\n';
  return kOk;
}

// Lines "PAIR WORD" where PAIR names the two letters ("ab" or "a,b"). A line
// with only the pair stands for an empty projection.
void read_pairs(std::istream& in, std::vector<std::pair<std::string, std::string>>& out) {
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string pair, word;
    fields >> pair >> word;
    out.emplace_back(pair, word);
  }
}

std::pair<std::string, std::string> split_pair(const std::string& pair) {
  const auto comma = pair.find(',');
  if (comma != std::string::npos) return {pair.substr(0, comma), pair.substr(comma + 1)};
  if (pair.size() != 2) throw UsageError("letter pair \"" + pair + "\" must be two glyphs");
  return {pair.substr(0, 1), pair.substr(1, 1)};
}

int cmd_reconstruct(const Options& o) {
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& path : o.files) {
    std::ifstream in(path);
    if (!in) throw io::SpecParseError("cannot read projection file " + path);
    read_pairs(in, entries);
  }
  for (const auto& arg : o.pair_args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) throw UsageError("--pair expects PAIR=WORD, got \"" + arg + "\"");
    entries.emplace_back(arg.substr(0, eq), arg.substr(eq + 1));
  }
  if (entries.empty()) throw UsageError("no projections given");

  std::vector<std::string> glyphs;
  if (!o.alphabet.empty()) {
    glyphs = glyphs_of(o.alphabet, "");
  } else {
    std::set<std::string> seen;
    for (const auto& [pair, word] : entries) {
      auto [a, b] = split_pair(pair);
      seen.insert(a);
      seen.insert(b);
    }
    glyphs.assign(seen.begin(), seen.end());
  }
  const cl::Alphabet alphabet(glyphs);
  cl::analysis::ProjectionFamily family{alphabet, {}};
  for (const auto& [pair, word] : entries) {
    auto [a, b] = split_pair(pair);
    family.set(alphabet.letter(a), alphabet.letter(b), cl::FiniteWord::parse(alphabet, word));
  }
  std::cout << io::render_word(cl::analysis::reconstruct(family)) << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  namespace v = cl::verify;
  if (o.list) {
    for (const auto& e : v::registry())
      std::cout << e.name << (e.long_running ? " (long)" : "") << "  " << e.description << '\n';
    return kOk;
  }
  const auto format = io::parse_format(o.format);
  std::vector<const v::RegistryEntry*> entries;
  if (o.all) {
    for (const auto& e : v::registry())
      if (o.long_running || !e.long_running) entries.push_back(&e);
  }
  for (const auto& name : o.scenarios) {
    const auto* e = v::find_scenario(name);
    if (!e) throw UsageError("unknown scenario \"" + name + "\" (see verify --list)");
    entries.push_back(e);
  }
  if (entries.empty()) throw UsageError("verify needs --scenario NAME, --all or --list");
  const auto reports = v::run_many(entries);
  std::cout << io::render_verification(reports, format);
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics-on-words toolkit: k-binomial complexities, balance, scenarios"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::tool_version());
  Options o;

  auto add_spec = [&](CLI::App* c) { c->add_option("--spec", o.spec_path, "word spec document (JSON)"); };
  auto add_length = [&](CLI::App* c) { c->add_option("--length,-L", o.length, "prefix length"); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };
  auto add_sep = [&](CLI::App* c) {
    c->add_option("--sep", o.separator, "separator between glyphs in printed words");
  };

  auto* generate = app.add_subcommand("generate", "print a prefix of the described word");
  add_spec(generate);
  add_length(generate);
  add_sep(generate);

  auto* complexity = app.add_subcommand("complexity", "tabulate p, rho and b^k");
  add_spec(complexity);
  add_length(complexity);
  add_format(complexity);
  complexity->add_option("--nmax", o.n_max, "largest factor length")->capture_default_str();
  complexity->add_option("--k", o.orders, "binomial orders (repeatable or comma separated)")
      ->delimiter(',');
  complexity->add_flag("--saturate", o.saturate, "pick the prefix length with the saturation probe");
  complexity->add_flag("--witnesses", o.witnesses, "report least collision pairs");

  auto* balance = app.add_subcommand("balance", "imbalance per letter and window length");
  add_spec(balance);
  add_length(balance);
  add_format(balance);
  balance->add_option("--nmax", o.n_max, "largest window length")->capture_default_str();
  balance->add_flag("--saturate", o.saturate, "pick the prefix length with the saturation probe");
  balance->add_flag("--projections", o.projections, "also analyze every binary projection");

  auto* classes = app.add_subcommand("classes", "k-binomial classes of the length-n factors");
  add_spec(classes);
  add_length(classes);
  add_format(classes);
  classes->add_option("--n,--nmax", o.n, "factor length");
  classes->add_option("--k", o.orders, "binomial order")->expected(1);
  classes->add_flag("--saturate", o.saturate, "pick the prefix length with the saturation probe");

  auto* project = app.add_subcommand("project", "print a prefix of a projection");
  add_spec(project);
  add_length(project);
  add_sep(project);
  project->add_option("--sub", o.sub, "kept glyphs, e.g. 13 (comma separated with --sep)");

  auto* color = app.add_subcommand("color", "print a prefix of color(base, letter, colors)");
  add_spec(color);
  add_length(color);
  add_sep(color);
  color->add_option("--letter", o.letter, "colored letter of the base word");
  color->add_option("--colors", o.colors_path, "spec document of the coloring word");

  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild a word from its binary projections");
  reconstruct->add_option("files", o.files, "files of lines \"PAIR WORD\"");
  reconstruct->add_option("--pair", o.pair_args, "PAIR=WORD, e.g. ab=aabaa");
  reconstruct->add_option("--alphabet", o.alphabet, "declared alphabet (default: letters of the pairs)");

  auto* verify = app.add_subcommand("verify", "run verification scenarios");
  add_format(verify);
  verify->add_option("--scenario", o.scenarios, "scenario name (repeatable)");
  verify->add_flag("--all", o.all, "every scenario except long-running ones");
  verify->add_flag("--long", o.long_running, "with --all, include long-running sweeps");
  verify->add_flag("--list", o.list, "list the scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(o);
    if (*complexity) return cmd_complexity(o);
    if (*balance) return cmd_balance(o);
    if (*classes) return cmd_classes(o);
    if (*project) return cmd_project(o);
    if (*color) return cmd_color(o);
    if (*reconstruct) return cmd_reconstruct(o);
    if (*verify) return cmd_verify(o);
  } catch (const cl::InconsistentProjectionFamily& e) {
    std::cerr << "collapse_lab: " << e.what() << '\n';
    return kFailed;
  } catch (const UsageError& e) {
    std::cerr << "collapse_lab: " << e.what() << '\n';
    return kUsage;
  } catch (const io::SpecParseError& e) {
    std::cerr << "collapse_lab: " << e.what() << '\n';
    return kUsage;
  } catch (const cl::DomainError& e) {
    std::cerr << "collapse_lab: " << e.what() << '\n';
    return kDomain;
  } catch (const cl::GeneratorError& e) {
    std::cerr << "collapse_lab: " << e.what() << '\n';
    return kDomain;
  } catch (const cl::OverflowError& e) {
    std::cerr << "collapse_lab: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}
