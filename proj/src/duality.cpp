#include "tabkit/duality.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tabkit/coeffs.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/insertion.hpp"
#include "tabkit/switching.hpp"

namespace tabkit {

namespace {

Partition shifted(const GenPartition& g, int d) { return add_rect(g, d).to_partition(); }

GenPartition unshift(const Partition& p, int n, int d) {
  auto v = p.padded(n);
  for (int& x : v) x -= d;
  return GenPartition(v);
}

// Same cells moved k columns to the right (k may be negative).
Tableau shift_cols(const Tableau& t, int n, int k) {
  std::vector<int> o = t.outer().padded(n), i = t.inner().padded(n);
  for (int r = 0; r < n; ++r) {
    o[r] += k;
    i[r] += k;
  }
  auto rows = t.rows();
  rows.resize(n);
  return Tableau(t.alphabet(), Partition(o), Partition(i), std::move(rows));
}

// S * T for skew S with outer(S) = inner(T).
Tableau glue_skew(const Tableau& s, const Tableau& t) {
  if (s.outer() != t.inner()) throw Error(ErrorKind::ShapeMismatch, "glue: outer of S is not the inner of T");
  auto ab = concat(s.alphabet(), t.alphabet());
  const int k = s.alphabet()->size();
  const int n = std::max(s.num_rows(), t.num_rows());
  std::vector<std::vector<int>> rows(n);
  for (int r = 0; r < n; ++r) {
    if (r < s.num_rows()) rows[r] = s.row(r);
    if (r < t.num_rows())
      for (int v : t.row(r)) rows[r].push_back(v + k);
  }
  return Tableau(ab, t.outer(), s.inner(), std::move(rows));
}

// Entries below k go to `low` unchanged, the rest to `high` shifted down by k.
std::pair<Tableau, Tableau> split(const Tableau& t, int k, const AlphabetPtr& low, const AlphabetPtr& high) {
  const int top = t.alphabet()->size() - 1;
  auto lo = map_entries(restrict_range(t, 0, k - 1), low, [](int v) { return v; });
  auto hi = map_entries(restrict_range(t, k, top), high, [k](int v) { return v - k; });
  return {lo, hi};
}

Tableau over(const Tableau& t, const AlphabetPtr& a) {
  return map_entries(t, a, [](int v) { return v; });
}

Tableau h_over(const Partition& p, const AlphabetPtr& a) { return over(h_tableau(p), a); }

// (T^-)^sharp inside a rows x cols box of T^-.
Tableau sharp_in(const Tableau& tm, int rows, int cols) { return rotate(transpose(tm), cols, rows); }
Tableau unsharp_in(const Tableau& s, int rows, int cols, const AlphabetPtr& b) {
  return relabel(transpose(rotate(s, cols, rows)), b);
}

Tableau pi_row(const Tableau& w) {
  const int top = w.alphabet()->size() - 1;
  std::vector<int> v;
  if (!w.empty())
    for (auto it = w.row(0).rbegin(); it != w.row(0).rend(); ++it) v.push_back(top - *it);
  return row_tableau(pi(w.alphabet()), std::move(v));
}

Tableau unpi_row(const Tableau& w, const AlphabetPtr& b) { return relabel(pi_row(w), b); }

int first_part(const Tableau& t) { return t.num_rows() ? t.outer()[0] : 0; }

bool same(const ABTableau& x, const ABTableau& y) { return canonicalize(x) == canonicalize(y); }

void check_row(const Tableau& w, const AlphabetPtr& a, const char* what) {
  if (w.num_rows() > 1 || !w.inner().empty() || !validate(w))
    throw Error(ErrorKind::InvalidTableau, std::string(what) + " is not a single semistandard row");
  if (w.alphabet() != a && !w.alphabet()->same_letters(*a))
    throw Error(ErrorKind::AlphabetMismatch, std::string(what) + " is over another alphabet");
}

}  // namespace

WordPair word_pair(const ABTableau& x) {
  if (x.level() != 1 || x.skew) throw Error(ErrorKind::ShapeMismatch, "word pairs have level one");
  auto row = [](const Tableau& t) {
    return row_tableau(t.alphabet(), t.num_rows() ? t.row(0) : std::vector<int>{});
  };
  return {row(x.tplus), row(x.tminus)};
}

ABTableau level_one(const WordPair& w) {
  const int d = w.minus.size();
  GenPartition c({w.charge()});
  Partition in;
  Tableau tp(w.plus.alphabet(), Partition({w.plus.size()}), in, {w.plus.num_rows() ? w.plus.row(0) : std::vector<int>{}});
  Tableau tm(w.minus.alphabet(), Partition({d}), in, {w.minus.num_rows() ? w.minus.row(0) : std::vector<int>{}});
  return canonicalize(make_ab(c, std::nullopt, d, tp, tm));
}

RskResult kappa(const std::vector<WordPair>& w, const AlphabetPtr& a, const AlphabetPtr& b, int extra) {
  const int n = static_cast<int>(w.size());
  if (n == 0) throw Error(ErrorKind::Usage, "kappa needs at least one word pair");
  std::vector<Tableau> minus_pi, plus;
  for (const auto& x : w) {
    check_row(x.plus, a, "w+");
    check_row(x.minus, b, "w-");
    minus_pi.push_back(pi_row(x.minus));
    plus.push_back(x.plus);
  }
  // Step 1
  auto col = multi_insert_col(minus_pi, pi(b));
  const int d = first_part(col.s) + extra;
  auto tminus = relabel(rotate(col.s, n, d), b);
  auto qv = delta(col.rec, n, d);
  Partition mu = tminus.inner();
  ensure(qv.outer() == mu, "complement of the recording has the wrong shape");
  // Step 2
  auto in = interval(n);
  auto s = multi_insert_row_inv(h_over(mu, in), qv);
  auto x = concat(in, a);
  std::vector<Tableau> u;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v = s[i].num_rows() ? s[i].row(0) : std::vector<int>{};
    if (plus[i].num_rows())
      for (int c : plus[i].row(0)) v.push_back(c + n);
    u.push_back(row_tableau(x, std::move(v)));
  }
  auto row = multi_insert_row(u, x);
  auto [hpart, tplus] = split(row.s, n, in, a);
  ensure(hpart == h_over(mu, in), "U does not start with H^mu");
  auto lambda = unshift(row.s.outer(), n, d);
  auto p = canonicalize(make_ab(lambda, std::nullopt, d, tplus, tminus));
  auto q = sigma_pow(to_rational(row.rec, n), -d);
  return {std::move(p), std::move(q)};
}

std::vector<WordPair> kappa_inv(const ABTableau& p, const RationalTableau& q) {
  if (p.skew) throw Error(ErrorKind::ShapeMismatch, "kappa is defined for straight shapes");
  if (!(q.shape == p.shape)) throw Error(ErrorKind::ShapeMismatch, "P and Q have different shapes");
  validate_rational(q);
  const int n = p.level(), d = p.d;
  const auto& a = p.tplus.alphabet();
  const auto& b = p.tminus.alphabet();
  auto in = interval(n);
  auto ur = to_ordinary(sigma_pow(q, d));
  auto full = glue_skew(h_over(p.inner, in), p.tplus);
  auto u = multi_insert_row_inv(full, over(ur, in));
  std::vector<Tableau> s, plus;
  for (const auto& ui : u) {
    auto [lo, hi] = split(ui, n, in, a);
    s.push_back(row_tableau(in, lo.num_rows() ? lo.row(0) : std::vector<int>{}));
    plus.push_back(row_tableau(a, hi.num_rows() ? hi.row(0) : std::vector<int>{}));
  }
  auto again = multi_insert_row(s, in);
  if (!(again.s == h_over(p.inner, in))) throw Error(ErrorKind::InverseMismatch, "S rows do not insert to H^mu");
  auto rec = delta(again.rec, n, d);
  auto minus_pi = multi_insert_col_inv(rotate(p.tminus, n, d), rec);
  std::vector<WordPair> w;
  for (int i = 0; i < n; ++i) w.push_back({plus[i], unpi_row(minus_pi[i], b)});
  auto back = kappa(w, a, b);
  if (!same(back.p, p) || !(back.q == q)) throw Error(ErrorKind::InverseMismatch, "kappa does not reproduce (P, Q)");
  return w;
}

ProductResult rho_ab(const ABTableau& t1, const ABTableau& t2, int extra) {
  if (t1.skew || t2.skew) throw Error(ErrorKind::ShapeMismatch, "rho_ab takes straight shapes");
  for (const auto* t : {&t1, &t2})
    if (auto why = ab_violation(*t); !why.empty()) throw Error(ErrorKind::InvalidTableau, why);
  const int m = t1.level(), n = t2.level();
  const auto& a = t1.tplus.alphabet();
  const auto& b = t1.tminus.alphabet();
  // Step 1: the column insertion does not depend on the width, so size it first.
  int big = std::max(t1.d, t2.d);
  auto col = col_insert_tableau(rotate(widen_to(t1, big).tminus, m, big), rotate(widen_to(t2, big).tminus, n, big));
  const int d = std::max(big, first_part(col.result)) + extra;
  auto w1 = widen_to(t1, d), w2 = widen_to(t2, d);
  auto tminus = relabel(rotate(col.result, m + n, d), b);
  // Step 2
  auto [sharp, qt] = rho_row(sharp_in(w1.tminus, m, d), sharp_in(w2.tminus, n, d));
  auto id = interval(d);
  auto [s1, s2] = rho_row_inv(h_over(sharp.outer(), id), qt);
  auto u1 = delta_swapped(s1, d, m), u2 = delta_swapped(s2, d, n);
  ensure(u1.outer() == w1.inner && u2.outer() == w2.inner, "U_i do not have the inner shapes of T_i+");
  auto [full, rec] = rho_row(glue(u1, w1.tplus), glue(u2, w2.tplus));
  auto [upart, tplus] = split(full, d, u1.alphabet(), a);
  ensure(upart.outer() == tminus.inner(), "inner shapes of T+ and T- disagree");
  ensure(upart == delta_swapped(h_over(sharp.outer(), id), d, m + n), "U2 -> U1 is not the complement of H^eta");
  auto lambda = unshift(full.outer(), m + n, d);
  auto t = canonicalize(make_ab(lambda, std::nullopt, d, tplus, tminus));
  // Step 3
  int d0 = c_hat_shift(lambda, t1.shape, t2.shape);
  auto r = canonical_product(rec, m, n, d - d0);
  return {std::move(t), std::move(r)};
}

std::pair<ABTableau, ABTableau> rho_ab_inv(const ABTableau& t, const Tableau& r, const GenPartition& mu,
                                           const GenPartition& nu) {
  if (t.skew) throw Error(ErrorKind::ShapeMismatch, "rho_ab takes straight shapes");
  const int m = mu.level(), n = nu.level();
  if (t.level() != m + n) throw Error(ErrorKind::ShapeMismatch, "levels do not add");
  const auto& a = t.tplus.alphabet();
  const auto& b = t.tminus.alphabet();
  const int d0 = c_hat_shift(t.shape, mu, nu);
  const int d = std::max(t.d, d0);
  auto tw = widen_to(t, d);
  auto rec = pi_level_inv(r, m, n, d - d0);
  auto id = interval(d);
  auto sharp = sharp_in(tw.tminus, m + n, d);
  auto h = h_over(sharp.outer(), id);
  auto upart = delta_swapped(h, d, m + n);
  if (upart.outer() != tw.inner) throw Error(ErrorKind::InverseMismatch, "T- and T+ do not fit together");
  auto [hat1, hat2] = rho_row_inv(glue(upart, tw.tplus), rec);
  auto [u1, p1] = split(hat1, d, upart.alphabet(), a);
  auto [u2, p2] = split(hat2, d, upart.alphabet(), a);
  auto s1 = delta(relabel(transpose(u1), id), d, m), s2 = delta(relabel(transpose(u2), id), d, n);
  auto [hh, qt] = rho_row(s1, s2);
  if (!(hh == h)) throw Error(ErrorKind::InverseMismatch, "S_2 -> S_1 is not H^eta");
  auto [sh1, sh2] = rho_row_inv(sharp, qt);
  auto m1 = unsharp_in(sh1, m, d, b), m2 = unsharp_in(sh2, n, d, b);
  auto x1 = canonicalize(make_ab(mu, std::nullopt, d, p1, m1));
  auto x2 = canonicalize(make_ab(nu, std::nullopt, d, p2, m2));
  auto back = rho_ab(x1, x2);
  if (!same(back.t, t) || !(back.r == r)) throw Error(ErrorKind::InverseMismatch, "rho_ab does not reproduce its input");
  return {x1, x2};
}

SkewResult skew_jdt_ab(const ABTableau& x, int extra) {
  if (auto why = ab_violation(x); !why.empty()) throw Error(ErrorKind::InvalidTableau, why);
  const int n = x.level(), p = x.d;
  const GenPartition mu = x.skew ? *x.skew : GenPartition::zero(n);
  const auto& a = x.tplus.alphabet();
  const auto& b = x.tminus.alphabet();
  const int r = mu.first() + p;
  auto [g, grec] = jdt(rotate(x.tminus, n, r));
  const int q = first_part(g) + extra;
  auto qv = delta_pq_lr(theta(grec), n, r, q);
  auto [rect, rec] = jdt(glue_skew(qv, shift_cols(x.tplus, n, q)));
  auto [hpart, tplus] = split(rect, nat()->size(), nat(), a);
  auto tminus = relabel(rotate(g, n, q), b);
  ensure(hpart == h_tableau(tminus.inner()), "rectified recording part is not H");
  auto nu = unshift(rect.outer(), n, q);
  auto j = canonicalize(make_ab(nu, std::nullopt, q, tplus, tminus));
  auto cls = canonical_slash(theta(rec), x.shape, mu, nu, {p, q});
  return {std::move(j), std::move(cls)};
}

namespace {

ABTableau skew_inv_at(const GenPartition& lambda, const GenPartition& mu, const ABTableau& j, const Tableau& r, int p,
                      int q) {
  const int n = lambda.level();
  const auto& nu = j.shape;
  const auto& a = j.tplus.alphabet();
  const auto& b = j.tminus.alphabet();
  auto m = c_shift(lambda, mu, nu);
  auto jw = widen_to(j, q);
  auto qhat = pi_shift(r, n, p - m.p, q - m.q);
  if (qhat.outer() != shifted(lambda, p + q) || qhat.inner() != shifted(mu, p) ||
      lr_content(qhat) != shifted(nu, q))
    throw Error(ErrorKind::InverseMismatch, "class does not match the shapes");
  auto g_full = jdt_inv(glue(h_tableau(jw.inner), jw.tplus), theta(qhat));
  auto [qv, tp] = split(g_full, nat()->size(), nat(), a);
  const int r0 = mu.first() + p;
  auto grec = theta(delta_pq_lr_inv(qv, n, r0, q));
  auto tm_pi = jdt_inv(rotate(jw.tminus, n, q), grec);
  auto tminus = relabel(rotate(tm_pi, n, r0), b);
  std::optional<GenPartition> skew;
  if (!(mu == GenPartition::zero(n))) skew = mu;
  return make_ab(lambda, skew, p, shift_cols(tp, n, -q), tminus);
}

}  // namespace

ABTableau skew_jdt_ab_inv(const GenPartition& lambda, const GenPartition& mu, const ABTableau& j, const Tableau& r) {
  const int n = lambda.level();
  if (mu.level() != n || j.level() != n || j.skew) throw Error(ErrorKind::ShapeMismatch, "levels disagree");
  auto m = c_shift(lambda, mu, j.shape);
  const int p = std::max({m.p, min_shift(lambda), min_shift(mu), j.tminus.size() - mu.last()});
  const int q = std::max(m.q, j.d);
  auto x = canonicalize(skew_inv_at(lambda, mu, j, r, p, q));
  auto back = skew_jdt_ab(x);
  if (!same(back.j, j) || !(back.r == r)) throw Error(ErrorKind::InverseMismatch, "J does not reproduce its input");
  return x;
}

// ---- windows

namespace {

std::string key(const ABTableau& x) { return to_json(canonicalize(x)).dump(); }

// Level-one elements with |w+| <= bound and |w-| <= bound.
std::vector<WordPair> level_one_window(int c, const AlphabetPtr& a, const AlphabetPtr& b, int bound) {
  std::vector<WordPair> out;
  for (const auto& x : enumerate_ab(GenPartition({c}), std::nullopt, a, b, bound)) {
    auto w = word_pair(x);
    if (w.plus.size() <= bound) out.push_back(std::move(w));
  }
  return out;
}

void tuples(const std::vector<std::vector<WordPair>>& choices, std::vector<WordPair>& cur, int plus, int minus,
            int bound, const std::function<void(const std::vector<WordPair>&)>& f) {
  if (cur.size() == choices.size()) {
    f(cur);
    return;
  }
  for (const auto& w : choices[cur.size()]) {
    if (plus + w.plus.size() > bound || minus + w.minus.size() > bound) continue;
    cur.push_back(w);
    tuples(choices, cur, plus + w.plus.size(), minus + w.minus.size(), bound, f);
    cur.pop_back();
  }
}

template <class F>
void guarded(WindowReport& rep, F&& f) {
  try {
    if (!f()) ++rep.failures;
  } catch (const Error&) {
    ++rep.failures;
  }
}

WindowReport kappa_run(const std::vector<std::vector<WordPair>>& choices, const AlphabetPtr& a, const AlphabetPtr& b,
                       int bound, const std::vector<int>* charges) {
  const int n = static_cast<int>(choices.size());
  WindowReport rep;
  std::set<std::string> seen;
  std::vector<WordPair> cur;
  tuples(choices, cur, 0, 0, bound, [&](const std::vector<WordPair>& w) {
    ++rep.lhs;
    guarded(rep, [&] {
      auto [p, q] = kappa(w, a, b);
      if (!seen.insert(key(p) + to_json(q).dump()).second) return false;
      if (charges && q.content() != *charges) return false;
      if (q.content() != [&] {
            std::vector<int> c;
            for (const auto& x : w) c.push_back(x.charge());
            return c;
          }())
        return false;
      ABWeight sum{std::vector<int>(a->size(), 0), std::vector<int>(b->size(), 0)};
      for (const auto& x : w) {
        auto wt = weight_ab(level_one(x));
        for (int i = 0; i < a->size(); ++i) sum.plus[i] += wt.plus[i];
        for (int i = 0; i < b->size(); ++i) sum.minus[i] += wt.minus[i];
      }
      return weight_ab(p) == sum && kappa_inv(p, q) == w;
    });
  });
  // Codomain: P with |T+| <= bound and |T-| <= bound, times Q of matching shape (and content).
  for (const auto& lam : gen_partitions(n, -bound, bound)) {
    long long qs = charges ? kostka(lam, *charges) : static_cast<long long>(enumerate_rational(lam).size());
    if (qs == 0) continue;
    const int lim = std::min(bound, bound - lam.degree());
    if (lim < 0) continue;
    rep.rhs += qs * static_cast<long long>(enumerate_ab(lam, std::nullopt, a, b, lim).size());
  }
  return rep;
}

}  // namespace

WindowReport kappa_window(int n, const AlphabetPtr& a, const AlphabetPtr& b, int bound) {
  std::vector<WordPair> all;
  for (int c = -bound; c <= bound; ++c)
    for (auto& w : level_one_window(c, a, b, bound)) all.push_back(std::move(w));
  return kappa_run(std::vector<std::vector<WordPair>>(n, all), a, b, bound, nullptr);
}

WindowReport kappa_content_window(const std::vector<int>& charges, const AlphabetPtr& a, const AlphabetPtr& b,
                                  int bound) {
  std::vector<std::vector<WordPair>> choices;
  for (int c : charges) choices.push_back(level_one_window(c, a, b, bound));
  return kappa_run(choices, a, b, bound, &charges);
}

WindowReport rho_ab_window(const GenPartition& mu, const GenPartition& nu, const AlphabetPtr& a, const AlphabetPtr& b,
                           int bound) {
  WindowReport rep;
  auto xs = enumerate_ab(mu, std::nullopt, a, b, bound);
  auto ys = enumerate_ab(nu, std::nullopt, a, b, bound);
  std::set<std::string> seen;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      if (x.tminus.size() + y.tminus.size() > bound) continue;
      ++rep.lhs;
      guarded(rep, [&] {
        auto [t, r] = rho_ab(x, y);
        if (!seen.insert(key(t) + labels_of(r)).second) return false;
        auto wx = weight_ab(x), wy = weight_ab(y), wt = weight_ab(t);
        for (std::size_t i = 0; i < wx.plus.size(); ++i) wx.plus[i] += wy.plus[i];
        for (std::size_t i = 0; i < wx.minus.size(); ++i) wx.minus[i] += wy.minus[i];
        if (!(wt == wx) || t.tminus.size() > bound) return false;
        auto [x2, y2] = rho_ab_inv(t, r, mu, nu);
        return same(x2, x) && same(y2, y);
      });
    }
  const int deg = mu.degree() + nu.degree();
  for (const auto& lam : gen_partitions(mu.level() + nu.level(), -bound, deg + bound)) {
    if (lam.degree() != deg) continue;
    long long k = c_hat(lam, mu, nu);
    if (k) rep.rhs += k * static_cast<long long>(enumerate_ab(lam, std::nullopt, a, b, bound).size());
  }
  return rep;
}

WindowReport skew_jdt_window(const GenPartition& lambda, const GenPartition& mu, const AlphabetPtr& a,
                             const AlphabetPtr& b, int bound) {
  WindowReport rep;
  std::optional<GenPartition> skew;
  if (!(mu == GenPartition::zero(lambda.level()))) skew = mu;
  std::set<std::string> seen;
  for (const auto& x : enumerate_ab(lambda, skew, a, b, bound)) {
    ++rep.lhs;
    guarded(rep, [&] {
      auto [j, r] = skew_jdt_ab(x);
      if (!seen.insert(key(j) + labels_of(r)).second) return false;
      if (!(weight_ab(j) == weight_ab(x)) || j.tminus.size() > bound) return false;
      return same(skew_jdt_ab_inv(lambda, mu, j, r), x);
    });
  }
  const int deg = lambda.degree() - mu.degree();
  for (const auto& nu : gen_partitions(lambda.level(), -bound, deg + bound)) {
    if (nu.degree() != deg) continue;
    long long k = c(lambda, mu, nu);
    if (k) rep.rhs += k * static_cast<long long>(enumerate_ab(nu, std::nullopt, a, b, bound).size());
  }
  return rep;
}

nlohmann::json to_json(const WordPair& w) {
  return {{"plus", to_json(w.plus)}, {"minus", to_json(w.minus)}, {"charge", w.charge()}};
}

WordPair word_pair_from_json(const nlohmann::json& j, const AlphabetPtr& a, const AlphabetPtr& b) {
  auto row = [](const nlohmann::json& v, const AlphabetPtr& al) {
    std::vector<int> e;
    for (const auto& l : v) e.push_back(al->at(l.get<std::string>()));
    auto t = row_tableau(al, std::move(e));
    if (!validate(t)) throw Error(ErrorKind::InvalidTableau, "word is not a semistandard row");
    return t;
  };
  return {row(j.at("plus"), a), row(j.at("minus"), b)};
}

}  // namespace tabkit
