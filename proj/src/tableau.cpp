#include "tabkit/tableau.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tabkit/errors.hpp"

namespace tabkit {

Tableau::Tableau(AlphabetPtr a, Partition outer, Partition inner, std::vector<std::vector<int>> rows)
    : alpha_(std::move(a)), outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
  if (!alpha_) throw Error(ErrorKind::Usage, "tableau without alphabet");
  if (!contains(outer_, inner_)) throw Error(ErrorKind::ShapeMismatch, "inner shape not contained in outer");
  for (std::size_t r = outer_.length(); r < rows_.size(); ++r)
    if (!rows_[r].empty()) throw Error(ErrorKind::ShapeMismatch, "entries outside the shape");
  rows_.resize(outer_.length());
  for (int r = 0; r < num_rows(); ++r) {
    if (static_cast<int>(rows_[r].size()) != outer_[r] - inner_[r])
      throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(r + 1) + " has wrong length");
    for (int v : rows_[r])
      if (v < 0 || v >= alpha_->size()) throw Error(ErrorKind::AlphabetMismatch, "entry out of alphabet");
  }
}

Tableau Tableau::straight(AlphabetPtr a, std::vector<std::vector<int>> rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  std::vector<int> lens;
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  return Tableau(std::move(a), Partition(std::move(lens)), Partition{}, std::move(rows));
}

Tableau Tableau::from_labels(AlphabetPtr a, const Partition& outer, const Partition& inner,
                             const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) {
    v.emplace_back();
    for (const auto& l : r) v.back().push_back(a->at(l));
  }
  return Tableau(std::move(a), outer, inner, std::move(v));
}

std::vector<Cell> Tableau::cells() const {
  std::vector<Cell> out;
  for (int r = 0; r < num_rows(); ++r)
    for (int c = inner_[r]; c < outer_[r]; ++c) out.push_back({r, c});
  return out;
}

bool Tableau::operator==(const Tableau& o) const {
  if (outer_ != o.outer_ || rows_ != o.rows_) return false;
  // inner is determined by outer and row lengths
  if (!alpha_ || !o.alpha_) return alpha_ == o.alpha_ || empty();
  return alpha_ == o.alpha_ || alpha_->same_letters(*o.alpha_);
}

bool validate(const Tableau& t) {
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = t.inner()[r]; c < t.outer()[r]; ++c) {
      int v = t.at(r, c);
      if (t.has_cell(r, c + 1)) {
        int w = t.at(r, c + 1);
        if (w < v || (w == v && t.parity(v) == 1)) return false;
      }
      if (t.has_cell(r + 1, c)) {
        int w = t.at(r + 1, c);
        if (w < v || (w == v && t.parity(v) == 0)) return false;
      }
    }
  }
  return true;
}

void require_valid(const Tableau& t, const std::string& what) {
  if (!validate(t)) throw Error(ErrorKind::InvalidTableau, what + " is not semistandard: " + labels_of(t));
}

Word word_col(const Tableau& t) {
  Word w;
  w.reserve(t.size());
  for (int c = t.outer()[0] - 1; c >= 0; --c)
    for (int r = 0; r < t.num_rows(); ++r)
      if (t.has_cell(r, c)) w.push_back(t.at(r, c));
  return w;
}

Word word_row(const Tableau& t) {
  Word w;
  w.reserve(t.size());
  for (int r = t.num_rows() - 1; r >= 0; --r) w.insert(w.end(), t.row(r).begin(), t.row(r).end());
  return w;
}

std::vector<int> weight(const Tableau& t) {
  std::vector<int> m(t.alphabet() ? t.alphabet()->size() : 0, 0);
  for (const auto& row : t.rows())
    for (int v : row) ++m[v];
  return m;
}

Tableau transpose(const Tableau& t) {
  Partition o = conjugate(t.outer()), i = conjugate(t.inner());
  std::vector<std::vector<int>> rows(o.length());
  for (int r = 0; r < o.length(); ++r)
    for (int c = i[r]; c < o[r]; ++c) rows[r].push_back(t.at(c, r));
  return Tableau(prime(t.alphabet()), std::move(o), std::move(i), std::move(rows));
}

Tableau rotate(const Tableau& t) { return rotate(t, t.num_rows(), t.outer()[0]); }

Tableau rotate(const Tableau& t, int R, int C) {
  if (R < t.num_rows() || C < t.outer()[0])
    throw Error(ErrorKind::RectangleTooSmall, "rotation box smaller than the shape");
  const int top = t.alphabet()->size() - 1;
  std::vector<int> o(R), in(R);
  std::vector<std::vector<int>> rows(R);
  for (int i = 0; i < R; ++i) {
    int r = R - 1 - i;
    o[i] = C - t.inner()[r];
    in[i] = C - t.outer()[r];
    if (r < t.num_rows())
      for (auto it = t.row(r).rbegin(); it != t.row(r).rend(); ++it) rows[i].push_back(top - *it);
  }
  return Tableau(pi(t.alphabet()), Partition(o), Partition(in), std::move(rows));
}

Tableau sharp_t(const Tableau& t) { return rotate(transpose(t)); }

Tableau glue(const Tableau& s, const Tableau& t) {
  if (!s.is_straight() || s.outer() != t.inner())
    throw Error(ErrorKind::ShapeMismatch, "glue needs S of shape mu and T of shape lambda/mu");
  auto ab = concat(s.alphabet(), t.alphabet());
  const int off = s.alphabet()->size();
  std::vector<std::vector<int>> rows(t.num_rows());
  for (int r = 0; r < t.num_rows(); ++r) {
    if (r < s.num_rows()) rows[r] = s.row(r);
    for (int v : t.row(r)) rows[r].push_back(v + off);
  }
  return Tableau(ab, t.outer(), Partition{}, std::move(rows));
}

Tableau relabel(const Tableau& t, const AlphabetPtr& target) {
  const auto& src = *t.alphabet();
  return map_entries(t, target, [&](int v) { return target->at(src.label(v)); });
}

Tableau map_entries(const Tableau& t, const AlphabetPtr& target, const std::function<int(int)>& f) {
  auto rows = t.rows();
  for (auto& row : rows)
    for (auto& v : row) v = f(v);
  return Tableau(target, t.outer(), t.inner(), std::move(rows));
}

Tableau restrict_range(const Tableau& t, int lo, int hi) {
  std::vector<int> o(t.num_rows()), in(t.num_rows());
  std::vector<std::vector<int>> rows(t.num_rows());
  for (int r = 0; r < t.num_rows(); ++r) {
    int below = 0;
    for (int v : t.row(r)) {
      if (v < lo) ++below;
      else if (v <= hi) rows[r].push_back(v);
    }
    in[r] = t.inner()[r] + below;
    o[r] = in[r] + static_cast<int>(rows[r].size());
  }
  return Tableau(t.alphabet(), Partition(o), Partition(in), std::move(rows));
}

std::vector<int> column(const Tableau& t, int c) {
  std::vector<int> col;
  for (int r = 0; r < t.num_rows() && t.has_cell(r, c); ++r) col.push_back(t.at(r, c));
  return col;
}

Tableau row_tableau(AlphabetPtr a, std::vector<int> entries) {
  std::vector<std::vector<int>> rows;
  if (!entries.empty()) rows.push_back(std::move(entries));
  return Tableau::straight(std::move(a), std::move(rows));
}

bool in_hook(const Partition& p, const GradedAlphabet& a) {
  int p0 = 0;
  for (int i = 0; i < a.size(); ++i) p0 += a.parity(i) == 0;
  return p[p0] <= a.size() - p0;
}

namespace {

// Backtracking over cells in column order (left to right, top to bottom).
class Filler {
 public:
  Filler(const SkewShape& sh, const GradedAlphabet& a) : sh_(sh), a_(a) {
    if (!contains(sh.outer, sh.inner)) throw Error(ErrorKind::ShapeMismatch, "inner not contained in outer");
    for (int c = 0; c < sh.outer[0]; ++c)
      for (int r = 0; r < sh.outer.length(); ++r)
        if (c >= sh.inner[r] && c < sh.outer[r]) order_.push_back({r, c});
    rows_.resize(sh.outer.length());
    for (int r = 0; r < sh.outer.length(); ++r) rows_[r].assign(sh.outer[r] - sh.inner[r], -1);
  }

  int num_cells() const { return static_cast<int>(order_.size()); }

  // Candidates for cell k given the cells before it.
  int lower(int k) const {
    auto [r, c] = order_[k];
    int lo = 0;
    if (c - 1 >= sh_.inner[r]) {
      int v = get(r, c - 1);
      lo = std::max(lo, a_.parity(v) == 1 ? v + 1 : v);
    }
    if (r > 0 && c >= sh_.inner[r - 1] && c < sh_.outer[r - 1]) {
      int v = get(r - 1, c);
      lo = std::max(lo, a_.parity(v) == 0 ? v + 1 : v);
    }
    return lo;
  }

  template <class F>
  void run(int k, F&& emit) {
    if (k == num_cells()) {
      emit(rows_);
      return;
    }
    auto [r, c] = order_[k];
    for (int v = lower(k); v < a_.size(); ++v) {
      set(r, c, v);
      run(k + 1, emit);
    }
    set(r, c, -1);
  }

  template <class F>
  void run_from(int first, F&& emit) {
    auto [r, c] = order_[0];
    set(r, c, first);
    run(1, emit);
    set(r, c, -1);
  }

 private:
  int get(int r, int c) const { return rows_[r][c - sh_.inner[r]]; }
  void set(int r, int c, int v) { rows_[r][c - sh_.inner[r]] = v; }

  const SkewShape& sh_;
  const GradedAlphabet& a_;
  std::vector<Cell> order_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace

void for_each_sst(const SkewShape& sh, const AlphabetPtr& a,
                  const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  Filler fl(sh, *a);
  fl.run(0, f);
}

std::vector<Tableau> enumerate_sst_serial(const SkewShape& sh, const AlphabetPtr& a) {
  std::vector<Tableau> out;
  for_each_sst(sh, a, [&](const auto& rows) { out.emplace_back(a, sh.outer, sh.inner, rows); });
  return out;
}

std::vector<Tableau> enumerate_sst(const SkewShape& sh, const AlphabetPtr& a) {
  Filler probe(sh, *a);
  if (probe.num_cells() == 0 || a->size() < 2) return enumerate_sst_serial(sh, a);
  // Split on the value of the first cell; chunks are concatenated in value order,
  // which is the serial order.
  const int k = a->size();
  std::vector<std::vector<Tableau>> parts(k);
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < k; ++v) {
    Filler fl(sh, *a);
    fl.run_from(v, [&](const auto& rows) { parts[v].emplace_back(a, sh.outer, sh.inner, rows); });
  }
  std::vector<Tableau> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

long long count_sst(const SkewShape& sh, const AlphabetPtr& a) {
  long long n = 0;
  Filler fl(sh, *a);
  fl.run(0, [&](const auto&) { ++n; });
  return n;
}

nlohmann::json alphabet_ref(const AlphabetPtr& a) {
  if (auto b = builtin_alphabet(a->name()); b && b->same_letters(*a)) return a->name();
  return to_json(*a);
}

nlohmann::json to_json(const Tableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows()) {
    nlohmann::json r = nlohmann::json::array();
    for (int v : row) r.push_back(t.alphabet()->label(v));
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["alphabet"] = alphabet_ref(t.alphabet());
  j["outer"] = to_json(t.outer());
  j["inner"] = to_json(t.inner());
  j["rows"] = std::move(rows);
  return j;
}

Tableau tableau_from_json(const nlohmann::json& j) {
  auto a = alphabet_from_json(j.at("alphabet"));
  std::vector<std::vector<std::string>> rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  Partition inner = j.contains("inner") ? partition_from_json(j["inner"]) : Partition{};
  Partition outer;
  if (j.contains("outer")) {
    outer = partition_from_json(j["outer"]);
  } else {
    std::vector<int> o;
    for (std::size_t r = 0; r < rows.size(); ++r) o.push_back(inner[static_cast<int>(r)] + static_cast<int>(rows[r].size()));
    outer = Partition(o);
  }
  return Tableau::from_labels(a, outer, inner, rows);
}

std::string to_ascii(const Tableau& t) {
  std::size_t w = 1;
  for (const auto& row : t.rows())
    for (int v : row) w = std::max(w, t.alphabet()->label(v).size());
  std::ostringstream os;
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = 0; c < t.outer()[r]; ++c) {
      std::string s = c < t.inner()[r] ? "." : t.alphabet()->label(t.at(r, c));
      if (c) os << ' ';
      os << std::string(w - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

std::string labels_of(const Tableau& t) {
  std::string s;
  for (int r = 0; r < t.num_rows(); ++r) {
    s += r ? "/" : "";
    std::vector<std::string> parts(t.inner()[r], ".");
    for (int v : t.row(r)) parts.push_back(t.alphabet()->label(v));
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
  }
  return s.empty() ? "<empty>" : s;
}

}  // namespace tabkit
