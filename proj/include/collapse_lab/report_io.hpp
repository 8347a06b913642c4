#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collapse_lab/analysis.hpp"
#include "collapse_lab/verify.hpp"
#include "json.hpp"

namespace collapse_lab::io {

enum class Format { Table, Csv, Json };

// "table", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

std::string tool_version();

// Provenance stamped on every report document.
struct Metadata {
  std::optional<gen::Spec> spec;
  std::size_t prefix_length = 0;
  std::optional<analysis::SaturationResult> saturation;
  double wall_seconds = 0;
};

nlohmann::json metadata_json(const Metadata& meta);

std::string render_word(const FiniteWord& w);

std::string render_complexity(const analysis::ComplexityReport& report, const Metadata& meta,
                              Format format);
std::string render_balance(const analysis::BalanceReport& report,
                           const std::vector<analysis::PairBalance>& projections,
                           const Metadata& meta, Format format);
std::string render_classes(const analysis::ClassPartition& partition, const Metadata& meta,
                           Format format);

nlohmann::json report_json(const verify::VerificationReport& report);
std::string render_verification(const std::vector<verify::VerificationReport>& reports,
                                Format format);

}  // namespace collapse_lab::io
