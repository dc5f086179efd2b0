#include "tabkit/rational.hpp"

#include <algorithm>
#include <sstream>

#include "tabkit/errors.hpp"
#include "tabkit/insertion.hpp"

namespace tabkit {

namespace {

// Index inside rows[r] of column col, or -1.
int slot(const GenPartition& sh, int r, int col) {
  int p = sh[r];
  if (col > 0) return col <= p ? col - 1 : -1;
  return col >= p ? col - p : -1;
}

void check_cover(const RationalTableau& t) {
  const int n = t.level();
  if (static_cast<int>(t.rows.size()) != n)
    throw Error(ErrorKind::ShapeMismatch, "rational tableau has " + std::to_string(t.rows.size()) + " rows, level " +
                                              std::to_string(n));
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(t.rows[r].size()) != std::abs(t.shape[r]))
      throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(r + 1) + " does not match " + to_string(t.shape));
}

// b''_i <= b_i for the first column against the complement of the -1st.
bool compatible(const std::vector<int>& first, const std::vector<int>& minus_first, int n) {
  std::vector<bool> used(n + 1, false);
  for (int v : minus_first) used[-v] = true;
  std::size_t i = 0;
  for (int k = 1; k <= n && i < first.size(); ++k)
    if (!used[k]) {
      if (k > first[i]) return false;
      ++i;
    }
  return i == first.size();
}

}  // namespace

std::vector<int> RationalTableau::column(int col) const {
  std::vector<int> out;
  for (int r = 0; r < level(); ++r)
    if (int s = slot(shape, r, col); s >= 0) out.push_back(rows[r][s]);
  return out;
}

std::vector<int> RationalTableau::content() const {
  std::vector<int> m(level(), 0);
  for (const auto& row : rows)
    for (int v : row) m[std::abs(v) - 1] += v > 0 ? 1 : -1;
  return m;
}

bool validate_rational(const RationalTableau& t) {
  check_cover(t);
  const int n = t.level();
  for (int r = 0; r < n; ++r) {
    const auto& row = t.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      int v = row[i];
      if (t.shape[r] > 0 ? (v < 1 || v > n) : (v > -1 || v < -n)) return false;
      if (i && row[i - 1] > v) return false;
    }
  }
  for (int col = std::min(t.shape.last(), 0); col <= std::max(t.shape.first(), 0); ++col) {
    if (col == 0) continue;
    auto c = t.column(col);
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i - 1] >= c[i]) return false;
  }
  return compatible(t.column(1), t.column(-1), n);
}

RationalTableau sigma(const RationalTableau& t) {
  const int n = t.level();
  auto minus = t.column(-1);
  std::vector<bool> used(n + 1, false);
  for (int v : minus) used[-v] = true;
  std::vector<int> fresh;
  for (int k = 1; k <= n; ++k)
    if (!used[k]) fresh.push_back(k);
  RationalTableau out{add_rect(t.shape, 1), t.rows};
  std::size_t i = 0;
  for (int r = 0; r < n; ++r) {
    auto& row = out.rows[r];
    if (t.shape[r] < 0)
      row.pop_back();
    else
      row.insert(row.begin(), fresh[i++]);
  }
  return out;
}

RationalTableau sigma_inv(const RationalTableau& t) {
  const int n = t.level();
  auto first = t.column(1);
  std::vector<bool> used(n + 1, false);
  for (int v : first) used[v] = true;
  std::vector<int> fresh;  // top to bottom: -n.. upward
  for (int k = n; k >= 1; --k)
    if (!used[k]) fresh.push_back(-k);
  RationalTableau out{add_rect(t.shape, -1), t.rows};
  std::size_t i = 0;
  for (int r = 0; r < n; ++r) {
    auto& row = out.rows[r];
    if (t.shape[r] > 0)
      row.erase(row.begin());
    else
      row.push_back(fresh[i++]);
  }
  return out;
}

RationalTableau sigma_pow(RationalTableau t, int k) {
  for (; k > 0; --k) t = sigma(t);
  for (; k < 0; ++k) t = sigma_inv(t);
  return t;
}

RationalTableau to_rational(const Tableau& t, int n) {
  if (!t.is_straight()) throw Error(ErrorKind::ShapeMismatch, "rational tableaux have straight shape");
  if (t.alphabet()->size() != n)
    throw Error(ErrorKind::AlphabetMismatch, "expected an alphabet of " + std::to_string(n) + " letters");
  if (t.num_rows() > n) throw Error(ErrorKind::ShapeMismatch, "more than " + std::to_string(n) + " rows");
  RationalTableau out{GenPartition::pad(t.outer(), n), std::vector<std::vector<int>>(n)};
  for (int r = 0; r < t.num_rows(); ++r)
    for (int v : t.row(r)) out.rows[r].push_back(v + 1);
  return out;
}

Tableau to_ordinary(const RationalTableau& t) {
  if (!t.shape.is_partition()) throw Error(ErrorKind::ShapeMismatch, to_string(t.shape) + " has a negative part");
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows) {
    rows.emplace_back();
    for (int v : row) rows.back().push_back(v - 1);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau::straight(interval(t.level()), std::move(rows));
}

Tableau delta(const Tableau& t, int n, int k) {
  if (t.outer()[0] > k)
    throw Error(ErrorKind::RectangleTooSmall, "width " + std::to_string(k) + " below first part " + std::to_string(t.outer()[0]));
  auto neg = sigma_pow(to_rational(t, n), -k);
  std::vector<std::vector<int>> rows;
  for (int r = n - 1; r >= 0; --r) {
    rows.emplace_back();
    const auto& src = neg.rows[r];
    for (auto it = src.rbegin(); it != src.rend(); ++it) rows.back().push_back(-*it - 1);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau::straight(interval(n), std::move(rows));
}

Tableau delta_swapped(const Tableau& t, int d, int m) { return transpose(delta(t, d, m)); }

bool check_stroomer(const Tableau& t1, const Tableau& t2, int n, int p, int q) {
  auto lhs = delta(row_insert_tableau(t2, t1).result, n, p + q);
  auto rhs = col_insert_tableau(delta(t1, n, p), delta(t2, n, q)).result;
  return lhs == rhs;
}

namespace {

class RationalFiller {
 public:
  explicit RationalFiller(const GenPartition& sh) : sh_(sh), n_(sh.level()) {
    rows_.resize(n_);
    for (int r = 0; r < n_; ++r) rows_[r].assign(std::abs(sh[r]), 0);
    for (int col = std::min(sh.last(), 0); col <= std::max(sh.first(), 0); ++col) {
      if (col == 0) continue;
      for (int r = 0; r < n_; ++r)
        if (slot(sh_, r, col) >= 0) cells_.push_back({r, col});
    }
  }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  std::pair<int, int> value_range(std::size_t i) const {
    return cells_[i].second > 0 ? std::pair{1, n_} : std::pair{-n_, -1};
  }

  template <class Emit>
  void run(std::size_t i, Emit&& emit) {
    if (i == cells_.size()) {
      if (compatible(col_vals(1), col_vals(-1), n_)) emit(RationalTableau{sh_, rows_});
      return;
    }
    auto [lo, hi] = value_range(i);
    for (int v = lo; v <= hi; ++v) try_value(i, v, emit);
  }

  template <class Emit>
  void try_value(std::size_t i, int v, Emit&& emit) {
    auto [r, col] = cells_[i];
    int s = slot(sh_, r, col);
    if (r > 0) {
      int up = slot(sh_, r - 1, col);
      if (up >= 0 && rows_[r - 1][up] >= v) return;
    }
    if (s > 0 && rows_[r][s - 1] > v) return;
    rows_[r][s] = v;
    // The first column is the last one to touch condition (3).
    if (col == 1 && (i + 1 == cells_.size() || cells_[i + 1].second != 1) &&
        !compatible(col_vals(1), col_vals(-1), n_))
      return;
    run(i + 1, emit);
  }

 private:
  std::vector<int> col_vals(int col) const {
    std::vector<int> out;
    for (int r = 0; r < n_; ++r)
      if (int s = slot(sh_, r, col); s >= 0) out.push_back(rows_[r][s]);
    return out;
  }

  GenPartition sh_;
  int n_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> cells_;
};

}  // namespace

std::vector<RationalTableau> enumerate_rational_serial(const GenPartition& lambda) {
  std::vector<RationalTableau> out;
  RationalFiller f(lambda);
  f.run(0, [&](RationalTableau t) { out.push_back(std::move(t)); });
  return out;
}

std::vector<RationalTableau> enumerate_rational(const GenPartition& lambda) {
  RationalFiller probe(lambda);
  if (probe.num_cells() == 0) return enumerate_rational_serial(lambda);
  auto [lo, hi] = probe.value_range(0);
  std::vector<std::vector<RationalTableau>> parts(hi - lo + 1);
#pragma omp parallel for schedule(dynamic)
  for (int v = lo; v <= hi; ++v) {
    RationalFiller f(lambda);
    f.try_value(0, v, [&](RationalTableau t) { parts[v - lo].push_back(std::move(t)); });
  }
  std::vector<RationalTableau> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

LaurentPoly rational_schur(const GenPartition& lambda) {
  LaurentPoly p(lambda.level());
  for (const auto& t : enumerate_rational(lambda)) p.add(t.content(), 1);
  return p;
}

long long kostka(const GenPartition& lambda, const std::vector<int>& content) {
  if (static_cast<int>(content.size()) != lambda.level())
    throw Error(ErrorKind::ShapeMismatch, "content level differs from shape level");
  long long k = 0;
  RationalFiller f(lambda);
  f.run(0, [&](const RationalTableau& t) { k += t.content() == content; });
  return k;
}

nlohmann::json to_json(const RationalTableau& t) {
  nlohmann::json cols = nlohmann::json::object();
  for (int col = std::min(t.shape.last(), 0); col <= std::max(t.shape.first(), 0); ++col)
    if (col != 0 && column_length(t.shape, col) > 0) cols[std::to_string(col)] = t.column(col);
  return {{"level", t.level()}, {"parts", t.shape.parts()}, {"columns", cols}};
}

RationalTableau rational_from_json(const nlohmann::json& j) {
  GenPartition sh(j.at("parts").get<std::vector<int>>());
  if (j.contains("level") && j.at("level").get<int>() != sh.level())
    throw Error(ErrorKind::ShapeMismatch, "level does not match parts");
  RationalTableau t{sh, std::vector<std::vector<int>>(sh.level())};
  for (int r = 0; r < sh.level(); ++r) t.rows[r].assign(std::abs(sh[r]), 0);
  const auto& cols = j.at("columns");
  for (int col = std::min(sh.last(), 0); col <= std::max(sh.first(), 0); ++col) {
    if (col == 0) continue;
    auto key = std::to_string(col);
    std::vector<int> vals = cols.contains(key) ? cols.at(key).get<std::vector<int>>() : std::vector<int>{};
    if (static_cast<int>(vals.size()) != column_length(sh, col))
      throw Error(ErrorKind::ShapeMismatch, "column " + key + " has the wrong length");
    std::size_t i = 0;
    for (int r = 0; r < sh.level(); ++r)
      if (int s = slot(sh, r, col); s >= 0) t.rows[r][s] = vals[i++];
  }
  return t;
}

std::string to_ascii(const RationalTableau& t) {
  const int left = std::max(0, -t.shape.last()), right = std::max(0, t.shape.first());
  std::size_t w = 1;
  for (const auto& row : t.rows)
    for (int v : row) w = std::max(w, std::to_string(v).size());
  std::ostringstream os;
  for (int r = 0; r < t.level(); ++r) {
    std::string line;
    auto cell = [&](int col) {
      int s = slot(t.shape, r, col);
      std::string x = s >= 0 ? std::to_string(t.rows[r][s]) : "";
      return std::string(w - x.size(), ' ') + x;
    };
    for (int col = -left; col <= -1; ++col) line += cell(col) + " ";
    line += "|";
    for (int col = 1; col <= right; ++col) line += " " + cell(col);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

}  // namespace tabkit
