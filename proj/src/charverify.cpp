#include "tabkit/charverify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "tabkit/coeffs.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/rational.hpp"

namespace tabkit {

namespace {

void check_square(const PolyMatrix& m) {
  if (m.empty()) throw Error(ErrorKind::Usage, "determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error(ErrorKind::ShapeMismatch, "matrix is not square");
}

LaurentPoly det_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
  const int n = static_cast<int>(m.size());
  if (row == n) return LaurentPoly::constant(m[0][0].nvars(), 1);
  LaurentPoly out(m[0][0].nvars());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int c = cols[k];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + k);
      auto minor = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + k, c);
      out += sign > 0 ? m[row][c] * minor : (m[row][c] * minor) * -1;
    }
    sign = -sign;
  }
  return out;
}

// B-degree of a monomial (B exponents are stored negated).
int b_degree(const LaurentPoly::Exponent& e, int na, int nb) {
  int s = 0;
  for (int i = na; i < na + nb; ++i) s -= e[i];
  return s;
}

int a_degree(const LaurentPoly::Exponent& e, int na) { return std::accumulate(e.begin(), e.begin() + na, 0); }

LaurentPoly keep_if(const LaurentPoly& p, const std::function<bool(const LaurentPoly::Exponent&)>& f) {
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (f(e)) out.add(e, c);
  return out;
}

LaurentPoly cap(const LaurentPoly& p, int na, int nb, int amax, int bmax) {
  return keep_if(p, [&](const auto& e) { return a_degree(e, na) <= amax && b_degree(e, na, nb) <= bmax; });
}

LaurentPoly embed(const LaurentPoly& p, int offset, int total) {
  LaurentPoly out(total);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly::Exponent f(total, 0);
    std::copy(e.begin(), e.end(), f.begin() + offset);
    out.add(f, c);
  }
  return out;
}

void compare(CheckReport& r, const LaurentPoly& lhs, const LaurentPoly& rhs, const std::vector<std::string>& names,
             const std::string& where = "") {
  std::set<LaurentPoly::Exponent> keys;
  for (const auto& t : lhs.terms()) keys.insert(t.first);
  for (const auto& t : rhs.terms()) keys.insert(t.first);
  r.monomials += static_cast<long long>(keys.size());
  for (const auto& e : keys) {
    auto l = lhs.coeff(e), h = rhs.coeff(e);
    if (l != h)
      r.diffs.push_back(where + monomial_string(e, names) + ": " + std::to_string(l) + " vs " + std::to_string(h));
  }
}

// Level-one character S_c with x_B^{-1}-degree <= d.
LaurentPoly level_one_char(int c, const AlphabetPtr& a, const AlphabetPtr& b, int d) {
  return character_ab(GenPartition{c}, std::nullopt, a, b, d);
}

LaurentPoly sst_schur(const Partition& p, const AlphabetPtr& al, int sign) {
  LaurentPoly out(al->size());
  for (const auto& t : enumerate_sst({p, {}}, al)) {
    auto w = weight(t);
    for (int& x : w) x *= sign;
    out.add(w, 1);
  }
  return out;
}

int twice_of(const std::string& label) {
  auto slash = label.find('/');
  if (slash == std::string::npos) return 2 * std::stoi(label);
  return std::stoi(label.substr(0, slash));
}

using Named = std::map<std::map<std::string, int>, long long>;

Named named(const LaurentPoly& p, const std::vector<std::string>& names) {
  Named out;
  for (const auto& [e, c] : p.terms()) {
    std::map<std::string, int> m;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m[names[i]] = e[i];
    out[m] = c;
  }
  return out;
}

}  // namespace

LaurentPoly det(const PolyMatrix& m) {
  check_square(m);
  if (m.size() > 6) throw Error(ErrorKind::Usage, "determinant limited to size 6");
  std::vector<int> cols(m.size());
  std::iota(cols.begin(), cols.end(), 0);
  return det_rec(m, cols, 0);
}

LaurentPoly det_leibniz(const PolyMatrix& m) {
  check_square(m);
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly out(m[0][0].nvars());
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    auto term = LaurentPoly::constant(out.nvars(), inv % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::string> variable_names(const AlphabetPtr& a, const AlphabetPtr& b, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < a->size(); ++i) names.push_back(a->label(i));
  for (int i = 0; i < b->size(); ++i) names.push_back(b->label(i));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  // a label shared by A and B would merge two variables in JSON
  std::set<std::string> seen;
  for (int i = 0; i < a->size() + b->size(); ++i)
    if (!seen.insert(names[i]).second) names[i] = "B:" + names[i];
  return names;
}

std::pair<LaurentPoly, LaurentPoly> cauchy_sides(int n, const AlphabetPtr& a, const AlphabetPtr& b, Window w) {
  if (n < 1) throw Error(ErrorKind::Usage, "cauchy check needs n >= 1");
  if (w.d < 0 || w.e < 0) throw Error(ErrorKind::Usage, "negative window");
  const int na = a->size(), nb = b->size(), total = na + nb + n;
  // beta <= d and |x_[n]| <= e force the A-degree to be at most d + e
  const int amax = w.d + w.e, bmax = w.d;
  auto in_window = [&](const LaurentPoly::Exponent& e) {
    int s = 0;
    for (int i = na + nb; i < total; ++i) s += std::abs(e[i]);
    return b_degree(e, na, nb) <= w.d && s <= w.e;
  };

  auto lhs = LaurentPoly::constant(total, 1);
  auto factor = [&](int letter, int i, int sign, bool fermion, int limit) {
    LaurentPoly::Exponent m(total, 0);
    m[letter] = sign;
    m[na + nb + i] = sign;
    LaurentPoly f = LaurentPoly::constant(total, 1);
    for (int k = 1; k <= (fermion ? 1 : limit); ++k) {
      LaurentPoly::Exponent mk = m;
      for (int& x : mk) x *= k;
      f.add(mk, 1);
    }
    lhs = cap(lhs * f, na, nb, amax, bmax);
  };
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < na; ++x) factor(x, i, 1, a->parity(x) == 1, amax);
    for (int y = 0; y < nb; ++y) factor(na + y, i, -1, b->parity(y) == 1, bmax);
  }

  LaurentPoly rhs(total);
  for (const auto& lam : gen_partitions(n, -w.d, amax)) {
    auto ch = cap(character_ab(lam, std::nullopt, a, b, w.d), na, nb, amax, bmax);
    if (ch.is_zero()) continue;
    rhs += embed(ch, 0, total) * embed(rational_schur(lam), na + nb, total);
  }
  return {keep_if(lhs, in_window), keep_if(rhs, in_window)};
}

CheckReport cauchy_check(int n, const AlphabetPtr& a, const AlphabetPtr& b, Window w) {
  CheckReport r{"cauchy n=" + std::to_string(n) + " A=" + a->name() + " B=" + b->name() + " window " +
                    std::to_string(w.d) + "," + std::to_string(w.e),
                0,
                {}};
  auto [lhs, rhs] = cauchy_sides(n, a, b, w);
  compare(r, lhs, rhs, variable_names(a, b, n));
  return r;
}

LaurentPoly jacobi_trudi_det(const GenPartition& lambda, const AlphabetPtr& a, const AlphabetPtr& b, int d) {
  const int n = lambda.level();
  if (n < 1) throw Error(ErrorKind::Usage, "empty shape");
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = level_one_char(lambda[i] - i + j, a, b, d);
  return cap(det(m), a->size(), b->size(), std::numeric_limits<int>::max(), d);
}

CheckReport jacobi_trudi_check(const GenPartition& lambda, const AlphabetFamily& a, const AlphabetFamily& b, int k,
                               int d) {
  std::string shape;
  for (int x : lambda.parts()) shape += (shape.empty() ? "" : ",") + std::to_string(x);
  CheckReport r{"jacobi-trudi (" + shape + ") truncation " + std::to_string(k) + " window " + std::to_string(d), 0,
                {}};
  std::vector<Named> runs;
  std::vector<std::set<std::string>> letters;
  for (int t : {k, k + 1}) {
    auto at = a(t), bt = b(t);
    auto names = variable_names(at, bt);
    auto lhs = jacobi_trudi_det(lambda, at, bt, d);
    auto rhs = character_ab(lambda, std::nullopt, at, bt, d);
    compare(r, lhs, rhs, names, "k=" + std::to_string(t) + " ");
    runs.push_back(named(rhs, names));
    letters.emplace_back(names.begin(), names.end());
  }
  // the smaller truncation must be the restriction of the larger one
  for (const auto& [m, c] : runs[1]) {
    bool inside = std::all_of(m.begin(), m.end(), [&](const auto& kv) { return letters[0].count(kv.first) > 0; });
    auto it = runs[0].find(m);
    long long small = it == runs[0].end() ? 0 : it->second;
    if (inside && small != c) r.diffs.push_back("unstable between truncations " + std::to_string(k) + " and " +
                                                std::to_string(k + 1));
  }
  for (const auto& [m, c] : runs[0])
    if (!runs[1].count(m)) r.diffs.push_back("monomial lost at truncation " + std::to_string(k + 1));
  return r;
}

CheckReport h_expansion_check(const GenPartition& mu, const AlphabetPtr& a, const AlphabetPtr& b, int d) {
  const int n = mu.level();
  if (n < 1) throw Error(ErrorKind::Usage, "empty content");
  std::string shape;
  for (int x : mu.parts()) shape += (shape.empty() ? "" : ",") + std::to_string(x);
  CheckReport r{"h-expansion (" + shape + ") window " + std::to_string(d), 0, {}};
  const int na = a->size(), nb = b->size();
  auto h = LaurentPoly::constant(na + nb, 1);
  for (int x : mu.parts()) h = cap(h * level_one_char(x, a, b, d), na, nb, std::numeric_limits<int>::max(), d);

  // S_lambda with beta <= d needs lambda_n >= -d, and |lambda+| <= |mu| + n d
  LaurentPoly rhs(na + nb);
  const int hi = std::max(0, mu.degree()) + n * d;
  for (const auto& lam : gen_partitions(n, -d, hi)) {
    if (lam.degree() != mu.degree()) continue;
    auto k = kostka(lam, mu.parts());
    if (k == 0) continue;
    if (lam < mu) r.diffs.push_back("K nonzero below mu at a lexicographically smaller shape");
    rhs += character_ab(lam, std::nullopt, a, b, d) * k;
  }
  compare(r, h, rhs, variable_names(a, b));
  return r;
}

HighestWeight highest_weight_super(const GenPartition& lambda) {
  const int n = lambda.level();
  HighestWeight h;
  h.central = n;
  auto put = [&](int twice, int v) {
    if (v != 0) h.diag[twice] = v;
  };
  const int top = std::max(lambda.first(), 0) + n + 1;
  for (int k = 1; k <= top; ++k) put(2 * k, std::max(column_length(lambda, k) - k, 0));
  for (int k = 0; k >= -top; --k) put(2 * k, -std::max(column_length(lambda, k - 1) + k, 0));
  // k = i - 1/2 and k = -(n - i) - 1/2 for rows i = 1..n
  for (int i = 1; i <= n; ++i) {
    put(2 * i - 1, std::max(lambda[i - 1] - i + 1, 0));
    const int k2 = -2 * (n - i) - 1;  // 2k
    put(k2, -std::max(-lambda[i - 1] + (k2 - 1) / 2, 0));
  }
  return h;
}

HighestWeight highest_weight_gl(const GenPartition& lambda) {
  const int n = lambda.level();
  HighestWeight h;
  h.central = -n;
  for (int k = 1; k <= n; ++k)
    if (lambda[k - 1] > 0) h.diag[2 * k] = lambda[k - 1];
  for (int k = 0; k > -n; --k)
    if (lambda[n + k - 1] < 0) h.diag[2 * k] = lambda[n + k - 1];
  return h;
}

std::map<int, int> half_weight(const ABTableau& x) {
  std::map<int, int> out;
  auto w = weight_ab(x);
  for (std::size_t i = 0; i < w.plus.size(); ++i)
    if (w.plus[i]) out[twice_of(x.tplus.alphabet()->label(i))] += w.plus[i];
  for (std::size_t i = 0; i < w.minus.size(); ++i)
    if (w.minus[i]) out[twice_of(x.tminus.alphabet()->label(i))] -= w.minus[i];
  return out;
}

int highest_weight_truncation(const GenPartition& lambda) { return std::max(2 * lambda.level(), 1); }

ABTableau highest_weight_tableau(const GenPartition& lambda, int k) {
  const int n = lambda.level();
  if (k == 0) k = highest_weight_truncation(lambda);
  if (k < highest_weight_truncation(lambda))
    throw Error(ErrorKind::Usage, "truncation " + std::to_string(k) + " too small for the highest weight tableau");
  auto a = half_pos_prime(k), b = half_nonpos_prime(k);
  const int d = std::max(0, -lambda.last());
  std::vector<int> inner(n), plus_outer(n);
  std::vector<std::vector<int>> prow(n), mrow(n);
  for (int i = 1; i <= n; ++i) {
    const int l = lambda[i - 1];
    inner[i - 1] = d + std::min(l, 0);
    plus_outer[i - 1] = d + l;
    for (int j = 1; j <= l; ++j) prow[i - 1].push_back((j < i ? 2 * j : 2 * i - 1) - 1);
    for (int j = -std::min(l, 0); j >= 1; --j) {
      const int twice = j <= n + 1 - i ? -2 * (j - 1) : -2 * (n - i) - 1;
      mrow[i - 1].push_back(twice + k - 1);
    }
  }
  Partition in(inner);
  Tableau tplus(a, Partition(plus_outer), in, prow);
  Tableau tminus(b, Partition(std::vector<int>(n, d)), in, mrow);
  return make_ab(lambda, std::nullopt, d, tplus, tminus);
}

AlphabetPtr mode_plus(CharMode m, int k) { return m == CharMode::Super ? half_pos_prime(k) : z_pos(k); }
AlphabetPtr mode_minus(CharMode m, int k) { return m == CharMode::Super ? half_nonpos_prime(k) : z_nonpos(k); }

LaurentPoly super_character_window(const GenPartition& lambda, CharMode m, int k, int d) {
  return character_ab(lambda, std::nullopt, mode_plus(m, k), mode_minus(m, k), d);
}

LaurentPoly character_by_expansion(const GenPartition& lambda, const AlphabetPtr& a, const AlphabetPtr& b, int d) {
  const int n = lambda.level(), na = a->size(), nb = b->size();
  LaurentPoly out(na + nb);
  for (int k = 0; k <= d; ++k)
    for (const auto& nu : partitions_of(k, n)) {
      auto sb = sst_schur(nu, b, -1);
      if (sb.is_zero()) continue;
      const int msize = lambda.degree() + k;
      if (msize < 0) continue;
      for (const auto& mu : partitions_of(msize, n)) {
        auto cc = c(lambda, GenPartition::pad(mu, n), star(GenPartition::pad(nu, n)));
        if (cc == 0) continue;
        out += (embed(sst_schur(mu, a, 1), 0, na + nb) * embed(sb, na, na + nb)) * cc;
      }
    }
  return out;
}

nlohmann::json to_json(const HighestWeight& h) {
  auto diag = nlohmann::json::object();
  for (const auto& [k, v] : h.diag) diag[half_label(k)] = v;
  return {{"diag", diag}, {"central", h.central}};
}

nlohmann::json to_json(const CheckReport& r) {
  return {{"name", r.name}, {"ok", r.ok()}, {"monomials", r.monomials}, {"diffs", r.diffs}};
}

}  // namespace tabkit
