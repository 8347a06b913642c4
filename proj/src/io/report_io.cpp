#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "collapse_lab/report_io.hpp"
#include "collapse_lab/spec_io.hpp"

#ifndef COLLAPSE_LAB_VERSION
#define COLLAPSE_LAB_VERSION "0.0.0"
#endif

namespace collapse_lab::io {

using nlohmann::json;

namespace {

using Row = std::vector<std::string>;

std::string aligned(const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  auto line = [&](const Row& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) s += "  ";
      // the last column is left aligned so long words stay readable
      if (c + 1 == r.size() && c > 0)
        s += r[c];
      else
        s += std::string(width[c] - r[c].size(), ' ') + r[c];
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv(const Row& header, const std::vector<Row>& rows) {
  std::ostringstream out;
  auto line = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_field(r[c]);
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string comment_header(const Metadata& meta) {
  std::ostringstream out;
  out << "# " << "collapse_lab " << tool_version() << '\n';
  if (meta.spec) out << "# spec_hash: " << spec_hash(*meta.spec) << '\n';
  out << "# prefix_length: " << meta.prefix_length << '\n';
  if (meta.saturation)
    out << "# saturation: length " << meta.saturation->length << ", "
        << (meta.saturation->stable ? "stable" : "not stable") << '\n';
  return out.str();
}

std::string table_or_csv(Format format, const Metadata& meta, const Row& header,
                         const std::vector<Row>& rows) {
  return comment_header(meta) + (format == Format::Csv ? csv(header, rows) : aligned(header, rows));
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format \"" + std::string(name) + "\" (table, csv, json)");
}

std::string tool_version() { return COLLAPSE_LAB_VERSION; }

std::string render_word(const FiniteWord& w) {
  return w.str(w.alphabet().single_char() ? "" : " ");
}

json metadata_json(const Metadata& meta) {
  json out{{"tool", "collapse_lab"}, {"version", tool_version()}, {"prefix_length", meta.prefix_length}};
  if (meta.spec) {
    out["spec"] = spec_to_json(*meta.spec);
    out["spec_hash"] = spec_hash(*meta.spec);
  }
  if (meta.saturation)
    out["saturation"] = {{"length", meta.saturation->length}, {"stable", meta.saturation->stable}};
  out["wall_seconds"] = meta.wall_seconds;
  return out;
}

std::string render_complexity(const analysis::ComplexityReport& report, const Metadata& meta,
                              Format format) {
  if (format == Format::Json) {
    json doc = metadata_json(meta);
    doc["report"] = "complexity";
    doc["n_max"] = report.n_max;
    doc["orders"] = report.orders;
    json rows = json::array();
    for (const auto& r : report.rows) {
      json b = json::object();
      for (std::size_t i = 0; i < report.orders.size(); ++i)
        b[std::to_string(report.orders[i])] = r.binomial[i];
      rows.push_back({{"n", r.n}, {"p", r.p}, {"rho", r.rho}, {"b", b}});
    }
    doc["rows"] = rows;
    json wit = json::array();
    for (const auto& c : report.witnesses)
      wit.push_back({{"n", c.n}, {"k", c.k}, {"u", render_word(c.u)}, {"v", render_word(c.v)}});
    doc["witnesses"] = wit;
    return doc.dump(2) + "\n";
  }
  Row header{"n", "p", "rho"};
  for (unsigned k : report.orders) header.push_back("b" + std::to_string(k));
  std::vector<Row> rows;
  for (const auto& r : report.rows) {
    Row row{std::to_string(r.n), std::to_string(r.p), std::to_string(r.rho)};
    for (Count b : r.binomial) row.push_back(std::to_string(b));
    rows.push_back(std::move(row));
  }
  std::string out = table_or_csv(format, meta, header, rows);
  for (const auto& c : report.witnesses)
    out += "# collision n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) + ": " +
           render_word(c.u) + " ~ " + render_word(c.v) + "\n";
  return out;
}

std::string render_balance(const analysis::BalanceReport& report,
                           const std::vector<analysis::PairBalance>& projections,
                           const Metadata& meta, Format format) {
  const Alphabet& a = report.alphabet;
  auto witness_json = [](const analysis::BalanceReport& r) -> json {
    if (!r.witness) return nullptr;
    return {{"letter", r.alphabet.glyph(r.witness->letter)},
            {"n", r.witness->n},
            {"u", render_word(r.witness->u)},
            {"v", render_word(r.witness->v)},
            {"gap", r.witness->gap}};
  };
  if (format == Format::Json) {
    json doc = metadata_json(meta);
    doc["report"] = "balance";
    doc["n_max"] = report.n_max;
    doc["overall_c"] = report.overall_c;
    json per = json::object();
    for (Letter l = 0; l < a.size(); ++l) per[a.glyph(l)] = report.per_letter[l];
    doc["per_letter"] = per;
    doc["witness"] = witness_json(report);
    if (!projections.empty()) {
      json pj = json::array();
      for (const auto& pb : projections)
        pj.push_back({{"pair", {a.glyph(pb.first), a.glyph(pb.second)}},
                      {"n_max", pb.report.n_max},
                      {"overall_c", pb.report.overall_c},
                      {"witness", witness_json(pb.report)}});
      doc["projections"] = pj;
    }
    return doc.dump(2) + "\n";
  }
  Row header{"n"};
  for (Letter l = 0; l < a.size(); ++l) header.push_back("imb_" + a.glyph(l));
  std::vector<Row> rows;
  for (std::size_t n = 1; n <= report.n_max; ++n) {
    Row row{std::to_string(n)};
    for (Letter l = 0; l < a.size(); ++l) row.push_back(std::to_string(report.imbalance(l, n)));
    rows.push_back(std::move(row));
  }
  std::string out = table_or_csv(format, meta, header, rows);
  out += "# overall_c: " + std::to_string(report.overall_c) + "\n";
  if (report.witness)
    out += "# witness: letter " + a.glyph(report.witness->letter) + ", n=" +
           std::to_string(report.witness->n) + ": " + render_word(report.witness->u) + " vs " +
           render_word(report.witness->v) + "\n";
  if (!projections.empty()) {
    Row ph{"pair", "n_max", "overall_c", "u", "v"};
    std::vector<Row> prow;
    for (const auto& pb : projections) {
      const auto& w = pb.report.witness;
      prow.push_back({a.glyph(pb.first) + a.glyph(pb.second), std::to_string(pb.report.n_max),
                      std::to_string(pb.report.overall_c), w ? render_word(w->u) : "",
                      w ? render_word(w->v) : ""});
    }
    out += "\n" + (format == Format::Csv ? csv(ph, prow) : aligned(ph, prow));
  }
  return out;
}

std::string render_classes(const analysis::ClassPartition& partition, const Metadata& meta,
                           Format format) {
  if (format == Format::Json) {
    json doc = metadata_json(meta);
    doc["report"] = "classes";
    doc["n"] = partition.n;
    doc["k"] = partition.k;
    json groups = json::array();
    for (std::size_t i = 0; i < partition.groups.size(); ++i) {
      json members = json::array();
      for (const auto& m : partition.groups[i]) members.push_back(render_word(m));
      auto counts = partition.signatures[i].counts();
      groups.push_back({{"members", members},
                        {"signature", std::vector<Count>(counts.begin(), counts.end())}});
    }
    doc["groups"] = groups;
    return doc.dump(2) + "\n";
  }
  Row header{"class", "size", "members"};
  std::vector<Row> rows;
  for (std::size_t i = 0; i < partition.groups.size(); ++i) {
    std::string members;
    for (const auto& m : partition.groups[i]) members += (members.empty() ? "" : " ") + render_word(m);
    rows.push_back({std::to_string(i + 1), std::to_string(partition.groups[i].size()), members});
  }
  return table_or_csv(format, meta, header, rows);
}

json report_json(const verify::VerificationReport& r) {
  json measured = json::array();
  for (const auto& [k, v] : r.measured) measured.push_back({k, v});
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"label", w.label}, {"u", w.u}, {"v", w.v}});
  json out{{"scenario", r.scenario},
           {"pass", r.pass},
           {"prefix_length", r.prefix_length},
           {"measured", measured},
           {"witnesses", witnesses},
           {"wall_seconds", r.wall_seconds}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (r.saturated) out["saturated"] = *r.saturated;
  if (r.partial) out["partial"] = true;
  if (!r.members.empty()) {
    json members = json::array();
    for (const auto& m : r.members) members.push_back(report_json(m));
    out["members"] = members;
  }
  return out;
}

std::string render_verification(const std::vector<verify::VerificationReport>& reports,
                                Format format) {
  if (format == Format::Json) {
    json doc{{"tool", "collapse_lab"}, {"version", tool_version()}};
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    doc["reports"] = arr;
    doc["pass"] = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    return doc.dump(2) + "\n";
  }
  std::vector<Row> rows;
  auto add = [&](const auto& self, const verify::VerificationReport& r, int depth) -> void {
    std::string detail = r.detail;
    if (r.saturated && !*r.saturated) detail += detail.empty() ? "prefix not saturated" : "; prefix not saturated";
    if (!r.pass && !r.witnesses.empty())
      detail += (detail.empty() ? "" : "; ") + r.witnesses.front().label + ": " +
                r.witnesses.front().u + " / " + r.witnesses.front().v;
    rows.push_back({std::string(format == Format::Table ? 2 * depth : 0, ' ') + r.scenario, r.pass ? "PASS" : "FAIL",
                    std::to_string(r.prefix_length), seconds(r.wall_seconds), detail});
    for (const auto& m : r.members) self(self, m, depth + 1);
  };
  for (const auto& r : reports) add(add, r, 0);
  Row header{"scenario", "result", "prefix", "seconds", "detail"};
  if (format == Format::Csv) return csv(header, rows);
  // scenario names are left aligned in tables
  std::size_t w = header[0].size();
  for (auto& r : rows) w = std::max(w, r[0].size());
  for (auto& r : rows) r[0] += std::string(w - r[0].size(), ' ');
  header[0] += std::string(w - header[0].size(), ' ');
  return aligned(header, rows);
}

}  // namespace collapse_lab::io
