#include <algorithm>

#include "collapse_lab/analysis.hpp"
#include "collapse_lab/errors.hpp"

namespace collapse_lab::analysis {

BalanceReport imbalance(const FiniteWord& prefix, std::size_t n_max) {
  if (n_max > prefix.size())
    throw DomainError("n_max = " + std::to_string(n_max) + " exceeds the prefix length " +
                      std::to_string(prefix.size()));
  const std::size_t d = prefix.alphabet().size();
  const std::size_t len = prefix.size();

  BalanceReport report;
  report.n_max = n_max;
  report.prefix_length = len;
  report.alphabet = prefix.alphabet();
  report.per_letter.assign(d, std::vector<Count>(n_max, 0));

  std::vector<std::size_t> sums(len + 1);
  for (Letter a = 0; a < d; ++a) {
    sums[0] = 0;
    for (std::size_t i = 0; i < len; ++i) sums[i + 1] = sums[i] + (prefix[i] == a ? 1 : 0);
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::size_t lo = sums[n], hi = sums[n], at_lo = 0, at_hi = 0;
      for (std::size_t i = 1; i + n <= len; ++i) {
        const std::size_t c = sums[i + n] - sums[i];
        if (c < lo) lo = c, at_lo = i;
        if (c > hi) hi = c, at_hi = i;
      }
      const Count gap = hi - lo;
      report.per_letter[a][n - 1] = gap;
      if (gap > report.overall_c) {
        report.overall_c = gap;
        report.witness = BalanceWitness{a, n, prefix.slice(at_hi, n), prefix.slice(at_lo, n), gap};
      }
    }
  }
  return report;
}

std::vector<PairBalance> binary_projection_imbalance(const FiniteWord& prefix, std::size_t n_max) {
  const std::size_t d = prefix.alphabet().size();
  std::vector<PairBalance> out;
  for (Letter i = 0; i < d; ++i) {
    for (Letter j = i + 1; j < d; ++j) {
      const Letter pair[] = {i, j};
      FiniteWord proj = project(prefix, pair);
      out.push_back(PairBalance{i, j, imbalance(proj, std::min(n_max, proj.size()))});
    }
  }
  return out;
}

}  // namespace collapse_lab::analysis
