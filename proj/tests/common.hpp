#pragma once

#include <doctest.h>

#include <ostream>

#include "tabkit/shape.hpp"
#include "tabkit/tableau.hpp"

namespace tabkit {
inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << labels_of(t); }
inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const GenPartition& p) { return os << to_string(p); }
}  // namespace tabkit

namespace tabkit::testing {

// Alphabet prefix1 < prefix2 < ... with one parity.
inline AlphabetPtr letters(const std::string& prefix, int n, int parity = 0) {
  std::vector<Letter> ls;
  for (int i = 1; i <= n; ++i) ls.push_back({prefix + std::to_string(i), parity});
  return make_alphabet(prefix, std::move(ls));
}

// Skew tableau from labels; inner cells omitted from rows.
inline Tableau tab(const AlphabetPtr& a, const std::vector<std::vector<std::string>>& rows,
                   const Partition& inner = {}) {
  std::vector<int> outer;
  for (std::size_t r = 0; r < rows.size(); ++r) outer.push_back(inner[static_cast<int>(r)] + static_cast<int>(rows[r].size()));
  return Tableau::from_labels(a, Partition(outer), inner, rows);
}

// Brute-force LR count: every filling over {1..k}, filtered.
inline long long brute_lr(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (!contains(lam, mu) || lam.size() != mu.size() + nu.size()) return 0;
  if (nu.empty()) return lam == mu ? 1 : 0;
  long long n = 0;
  for (const auto& t : enumerate_sst_serial({lam, mu}, naturals(nu.length()))) {
    auto w = weight(t);
    if (w != nu.parts()) continue;
    std::vector<int> cnt(nu.length() + 1, 0);
    bool ok = true;
    for (int v : word_col(t)) {
      ++cnt[v];
      if (v > 0 && cnt[v] > cnt[v - 1]) ok = false;
    }
    n += ok;
  }
  return n;
}

inline std::vector<Partition> box(int rows, int cols) { return partitions_in_box(rows, cols); }

}  // namespace tabkit::testing
