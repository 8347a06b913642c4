#include <algorithm>
#include <cstdint>
#include <cstring>
#include <limits>
#include <numeric>

#include "collapse_lab/analysis.hpp"
#include "collapse_lab/errors.hpp"

namespace collapse_lab::analysis {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Walks factor lengths n = 1, 2, ... keeping one id per distinct factor.
// The length-(n+1) factor at position i is the length-n factor at i followed
// by w[i+n], so ids and signatures of the next level derive from the current
// one with a table lookup and a single signature extension per new factor.
class FactorScan {
 public:
  FactorScan(const FiniteWord& w, unsigned k)
      : w_(w.data()),
        d_(w.alphabet().size()),
        k_(k),
        stride_(k == 0 ? 0 : pattern_count(d_, k)) {}

  bool next() {
    if (n_ >= w_.size()) return false;
    if (n_ == 0) {
      first_level();
    } else {
      grow();
    }
    ++n_;
    return true;
  }

  std::size_t length() const { return n_; }
  std::size_t distinct() const { return starts_.size(); }
  std::size_t start(std::uint32_t id) const { return starts_[id]; }
  std::span<const Letter> factor(std::uint32_t id) const {
    return std::span<const Letter>(w_).subspan(starts_[id], n_);
  }
  std::span<const Count> signature(std::uint32_t id) const {
    return std::span<const Count>(sigs_).subspan(id * stride_, stride_);
  }

 private:
  void first_level() {
    std::vector<std::uint32_t> by_letter(d_, kNone);
    id_.resize(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint32_t& slot = by_letter[w_[i]];
      if (slot == kNone) {
        slot = static_cast<std::uint32_t>(starts_.size());
        starts_.push_back(i);
        sigs_.resize(sigs_.size() + stride_, 0);
        if (k_ > 0)
          extend_signature_counts(std::span<Count>(sigs_).subspan(slot * stride_, stride_), d_, k_,
                                  w_[i]);
      }
      id_[i] = slot;
    }
  }

  void grow() {
    const std::size_t starts = w_.size() - n_;
    child_.assign(starts_.size() * d_, kNone);
    std::vector<std::size_t> next_starts;
    std::vector<Count> next_sigs;
    for (std::size_t i = 0; i < starts; ++i) {
      const Letter a = w_[i + n_];
      std::uint32_t& slot = child_[id_[i] * d_ + a];
      if (slot == kNone) {
        slot = static_cast<std::uint32_t>(next_starts.size());
        next_starts.push_back(i);
        if (k_ > 0) {
          auto parent = signature(id_[i]);
          next_sigs.insert(next_sigs.end(), parent.begin(), parent.end());
          extend_signature_counts(std::span<Count>(next_sigs).subspan(slot * stride_, stride_), d_,
                                  k_, a);
        }
      }
      id_[i] = slot;
    }
    id_.resize(starts);
    starts_ = std::move(next_starts);
    sigs_ = std::move(next_sigs);
  }

  const std::vector<Letter>& w_;
  std::size_t d_;
  unsigned k_;
  std::size_t stride_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> id_;      // factor id of each start position
  std::vector<std::size_t> starts_;    // first start position of each id
  std::vector<Count> sigs_;            // flat signatures, stride_ per id
  std::vector<std::uint32_t> child_;   // (id, letter) -> next-level id
};

std::uint64_t hash_counts(std::span<const Count> counts) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (Count c : counts) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// Ids sorted so that equal signature prefixes of `width` are adjacent.
std::vector<std::uint32_t> sorted_by_signature(const FactorScan& scan, std::size_t width,
                                               std::vector<std::uint64_t>& hashes) {
  const std::size_t m = scan.distinct();
  hashes.resize(m);
  for (std::uint32_t id = 0; id < m; ++id) hashes[id] = hash_counts(scan.signature(id).first(width));
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (hashes[a] != hashes[b]) return hashes[a] < hashes[b];
    auto sa = scan.signature(a).first(width);
    auto sb = scan.signature(b).first(width);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  });
  return order;
}

bool same_prefix(const FactorScan& scan, std::uint32_t a, std::uint32_t b, std::size_t width) {
  auto sa = scan.signature(a).first(width);
  auto sb = scan.signature(b).first(width);
  return std::equal(sa.begin(), sa.end(), sb.begin());
}

std::vector<std::vector<std::uint32_t>> groups_by_signature(const FactorScan& scan,
                                                            std::size_t width) {
  std::vector<std::uint64_t> hashes;
  auto order = sorted_by_signature(scan, width, hashes);
  std::vector<std::vector<std::uint32_t>> groups;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || hashes[order[i]] != hashes[order[i - 1]] ||
        !same_prefix(scan, order[i], order[i - 1], width)) {
      groups.emplace_back();
    }
    groups.back().push_back(order[i]);
  }
  return groups;
}

std::size_t count_classes(const FactorScan& scan, std::size_t width) {
  std::vector<std::uint64_t> hashes;
  auto order = sorted_by_signature(scan, width, hashes);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || hashes[order[i]] != hashes[order[i - 1]] ||
        !same_prefix(scan, order[i], order[i - 1], width))
      ++classes;
  }
  return classes;
}

bool lex_less(const FactorScan& scan, std::uint32_t a, std::uint32_t b) {
  auto fa = scan.factor(a);
  auto fb = scan.factor(b);
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

// Lexicographically least pair (u < v) of distinct factors sharing a class.
std::optional<std::pair<std::uint32_t, std::uint32_t>> least_pair(const FactorScan& scan,
                                                                  std::size_t width) {
  std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
  for (auto& group : groups_by_signature(scan, width)) {
    if (group.size() < 2) continue;
    std::partial_sort(group.begin(), group.begin() + 2, group.end(),
                      [&](std::uint32_t a, std::uint32_t b) { return lex_less(scan, a, b); });
    std::pair<std::uint32_t, std::uint32_t> cand{group[0], group[1]};
    if (!best || lex_less(scan, cand.first, best->first) ||
        (!lex_less(scan, best->first, cand.first) && lex_less(scan, cand.second, best->second)))
      best = cand;
  }
  return best;
}

FiniteWord to_word(const FiniteWord& prefix, std::span<const Letter> letters) {
  return FiniteWord(prefix.alphabet(), std::vector<Letter>(letters.begin(), letters.end()));
}

void check_range(const FiniteWord& prefix, std::size_t n_max) {
  if (n_max > prefix.size())
    throw DomainError("n_max = " + std::to_string(n_max) + " exceeds the prefix length " +
                      std::to_string(prefix.size()));
}

}  // namespace

Count ComplexityReport::b(std::size_t n, unsigned k) const {
  auto it = std::find(orders.begin(), orders.end(), k);
  if (it == orders.end()) throw DomainError("order k=" + std::to_string(k) + " not in report");
  return rows.at(n - 1).binomial.at(static_cast<std::size_t>(it - orders.begin()));
}

ComplexityReport complexity_report(const FiniteWord& prefix, std::vector<unsigned> orders,
                                   std::size_t n_max, bool with_witnesses) {
  check_range(prefix, n_max);
  for (unsigned k : orders)
    if (k == 0) throw DomainError("binomial order k must be >= 1");
  const std::size_t d = prefix.alphabet().size();
  const unsigned k_max = std::max(1u, orders.empty() ? 1u : *std::max_element(orders.begin(), orders.end()));

  ComplexityReport report;
  report.n_max = n_max;
  report.prefix_length = prefix.size();
  report.orders = orders;
  FactorScan scan(prefix, k_max);
  while (scan.length() < n_max && scan.next()) {
    ComplexityRow row;
    row.n = scan.length();
    row.p = scan.distinct();
    row.rho = count_classes(scan, pattern_count(d, 1));
    for (unsigned k : orders) {
      const std::size_t width = pattern_count(d, k);
      const Count b = k == 1 ? row.rho : count_classes(scan, width);
      row.binomial.push_back(b);
      if (with_witnesses && b < row.p) {
        auto pair = least_pair(scan, width);
        report.witnesses.push_back(Collision{row.n, k, to_word(prefix, scan.factor(pair->first)),
                                             to_word(prefix, scan.factor(pair->second))});
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<Count> subword_complexity(const FiniteWord& prefix, std::size_t n_max) {
  check_range(prefix, n_max);
  std::vector<Count> out;
  FactorScan scan(prefix, 0);
  while (scan.length() < n_max && scan.next()) out.push_back(scan.distinct());
  return out;
}

std::vector<Count> abelian_complexity(const FiniteWord& prefix, std::size_t n_max) {
  return k_binomial_complexity(prefix, 1, n_max);
}

std::vector<Count> k_binomial_complexity(const FiniteWord& prefix, unsigned k, std::size_t n_max) {
  if (k == 0) throw DomainError("binomial order k must be >= 1");
  check_range(prefix, n_max);
  const std::size_t width = pattern_count(prefix.alphabet().size(), k);
  std::vector<Count> out;
  FactorScan scan(prefix, k);
  while (scan.length() < n_max && scan.next()) out.push_back(count_classes(scan, width));
  return out;
}

std::vector<Collision> find_collisions(const FiniteWord& prefix, unsigned k, std::size_t n_max) {
  return complexity_report(prefix, {k}, n_max, true).witnesses;
}

ClassPartition classes(const FiniteWord& prefix, unsigned k, std::size_t n) {
  if (k == 0) throw DomainError("binomial order k must be >= 1");
  check_range(prefix, n);
  ClassPartition out;
  out.n = n;
  out.k = k;
  if (n == 0) return out;
  const std::size_t d = prefix.alphabet().size();
  FactorScan scan(prefix, k);
  while (scan.length() < n) scan.next();
  auto groups = groups_by_signature(scan, pattern_count(d, k));
  for (auto& g : groups)
    std::sort(g.begin(), g.end(), [&](std::uint32_t a, std::uint32_t b) { return lex_less(scan, a, b); });
  std::sort(groups.begin(), groups.end(),
            [&](const auto& a, const auto& b) { return lex_less(scan, a.front(), b.front()); });
  for (const auto& g : groups) {
    std::vector<FiniteWord> members;
    for (auto id : g) members.push_back(to_word(prefix, scan.factor(id)));
    out.signatures.push_back(BinomialSignature::of(scan.factor(g.front()), d, k));
    out.groups.push_back(std::move(members));
  }
  return out;
}

}  // namespace collapse_lab::analysis
