#include "tabkit/coeffs.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "tabkit/alphabet.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/insertion.hpp"
#include "tabkit/rational.hpp"
#include "tabkit/switching.hpp"

namespace tabkit {

namespace {

using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

template <class V>
class Memo {
 public:
  template <class F>
  V get(const Key& k, F&& compute) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table_.find(k); it != table_.end()) return it->second;
    }
    V v = compute();
    std::lock_guard lock(mu_);
    table_.emplace(k, v);
    return v;
  }

 private:
  std::mutex mu_;
  std::map<Key, V> table_;
};

Memo<long long>& n_memo() {
  static Memo<long long> m;
  return m;
}
Memo<long long>& c_memo() {
  static Memo<long long> m;
  return m;
}
Memo<long long>& chat_memo() {
  static Memo<long long> m;
  return m;
}

Partition shifted(const GenPartition& g, int d) { return add_rect(g, d).to_partition(); }

void same_level(const GenPartition& a, const GenPartition& b, const GenPartition& c) {
  if (a.level() != b.level() || a.level() != c.level())
    throw Error(ErrorKind::ShapeMismatch, "levels differ: " + to_string(a) + ", " + to_string(b) + ", " + to_string(c));
}

Tableau require_lr(const Tableau& q) {
  if (!is_LR(q, lr_content(q))) throw Error(ErrorKind::NotLR, labels_of(q));
  return q;
}

void fits_level(const Tableau& q, int n) {
  if (q.num_rows() > n || lr_content(q).length() > n)
    throw Error(ErrorKind::ShapeMismatch, "LR tableau does not fit level " + std::to_string(n));
}

// pi_{k,0}: same cells moved k columns right.
Tableau push_right(const Tableau& q, int n, int k) {
  return Tableau(nat(), add_rect(q.outer(), n, k), add_rect(q.inner(), n, k), q.rows());
}

Tableau push_left(const Tableau& q, int n, int k) {
  std::vector<int> o = q.outer().padded(n), i = q.inner().padded(n);
  for (int r = 0; r < n; ++r) {
    if (i[r] < k) throw Error(ErrorKind::MalformedPrefix, "inner shape lacks the (k^n) block");
    o[r] -= k;
    i[r] -= k;
  }
  auto rows = q.rows();
  rows.resize(n);
  return Tableau(nat(), Partition(o), Partition(i), rows);
}

Tableau h_over(const Partition& lam, int n) {
  return map_entries(h_tableau(lam), interval(n), [](int v) { return v; });
}

}  // namespace

long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return n_memo().get({lambda.parts(), mu.parts(), nu.parts()}, [&] { return lr_count(lambda, mu, nu); });
}

ShiftPQ c_shift(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu) {
  int p = min_shift(mu);
  int q = std::max(min_shift(nu), min_shift(lambda) - p);
  return {p, q};
}

int c_hat_shift(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu) {
  return std::max({min_shift(lambda), min_shift(mu), min_shift(nu)});
}

long long c(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu) {
  same_level(lambda, mu, nu);
  if (lambda.degree() != mu.degree() + nu.degree()) return 0;
  return c_memo().get({lambda.parts(), mu.parts(), nu.parts()}, [&] {
    auto [p, q] = c_shift(lambda, mu, nu);
    auto at = [&](int pp, int qq) {
      return lr_coeff(shifted(lambda, pp + qq), shifted(mu, pp), shifted(nu, qq));
    };
    long long v = at(p, q);
    if (at(p + 1, q + 1) != v || at(p + 1, q) != v)
      throw Error(ErrorKind::StabilityViolation, "c at " + to_string(lambda) + " " + to_string(mu) + " " + to_string(nu));
    return v;
  });
}

long long c_hat(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu) {
  if (lambda.level() != mu.level() + nu.level())
    throw Error(ErrorKind::ShapeMismatch, "level of lambda must be the sum of the other two");
  if (lambda.degree() != mu.degree() + nu.degree()) return 0;
  return chat_memo().get({lambda.parts(), mu.parts(), nu.parts()}, [&] {
    int d = c_hat_shift(lambda, mu, nu);
    auto at = [&](int p) { return lr_coeff(shifted(lambda, p), shifted(mu, p), shifted(nu, p)); };
    long long v = at(d);
    if (at(d + 1) != v)
      throw Error(ErrorKind::StabilityViolation,
                  "c_hat at " + to_string(lambda) + " " + to_string(mu) + " " + to_string(nu));
    return v;
  });
}

Tableau pi_shift(const Tableau& q, int n, int p, int qq) {
  require_lr(q);
  fits_level(q, n);
  auto a = theta(push_right(q, n, p));
  return theta(push_right(a, n, qq));
}

Tableau pi_shift_inv(const Tableau& q, int n, int p, int qq) {
  require_lr(q);
  fits_level(q, n);
  auto a = push_left(theta(q), n, qq);
  auto out = push_left(theta(a), n, p);
  if (!(pi_shift(out, n, p, qq) == q)) throw Error(ErrorKind::InverseMismatch, "pi_shift_inv");
  return out;
}

Tableau pi_level(const Tableau& q, int m, int n, int l) {
  require_lr(q);
  if (l == 0) return q;
  if (q.num_rows() < l) throw Error(ErrorKind::MalformedPrefix, "fewer than l rows");
  for (int r = 0; r < l; ++r) {
    const auto& row = q.row(r);
    if (q.inner()[r] != m || static_cast<int>(row.size()) != n ||
        std::any_of(row.begin(), row.end(), [&](int v) { return v != r; }))
      throw Error(ErrorKind::MalformedPrefix, "row " + std::to_string(r + 1) + " is not a row of H^{(n^l)}");
  }
  std::vector<int> o, i;
  std::vector<std::vector<int>> rows;
  for (int r = l; r < q.num_rows(); ++r) {
    o.push_back(q.outer()[r]);
    i.push_back(q.inner()[r]);
    rows.emplace_back();
    for (int v : q.row(r)) {
      if (v < l) throw Error(ErrorKind::MalformedPrefix, "entry below l outside the prefix");
      rows.back().push_back(v - l);
    }
  }
  return Tableau(nat(), Partition(o), Partition(i), rows);
}

Tableau pi_level_inv(const Tableau& q, int m, int n, int l) {
  require_lr(q);
  if (q.outer()[0] > m + n || q.inner()[0] > m)
    throw Error(ErrorKind::ShapeMismatch, "shape is not the conjugate of level (m, n) data");
  std::vector<int> o(l, m + n), i(l, m);
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < l; ++r) rows.emplace_back(n, r);
  for (int r = 0; r < q.num_rows(); ++r) {
    o.push_back(q.outer()[r]);
    i.push_back(q.inner()[r]);
    rows.emplace_back();
    for (int v : q.row(r)) rows.back().push_back(v + l);
  }
  Tableau out(nat(), Partition(o), Partition(i), rows);
  ensure(is_LR(out, lr_content(out)), "pi_level_inv produced a non-LR tableau");
  return out;
}

Tableau delta_pq_lr(const Tableau& q, int n, int p, int qq) {
  require_lr(q);
  fits_level(q, n);
  Partition lam = q.outer();
  // (T2 -> T1) = H^lambda with transposed recording tau(Q)
  auto [t1, t2] = rho_row_inv(h_over(lam, n), tau(q));
  auto [pp, rec] = rho_col(delta(t1, n, p), delta(t2, n, qq));
  ensure(pp == delta(h_over(lam, n), n, p + qq), "complement of H^lambda expected");
  return rec;
}

Tableau delta_pq_lr_inv(const Tableau& q, int n, int p, int qq) {
  require_lr(q);
  fits_level(q, n);
  Partition lam = delta_shape(q.outer(), n, p + qq);
  auto [d1, d2] = rho_col_inv(delta(h_over(lam, n), n, p + qq), q);
  auto t1 = delta(d1, n, p), t2 = delta(d2, n, qq);
  auto [pp, qt] = rho_row(t1, t2);
  if (!(pp == h_over(lam, n))) throw Error(ErrorKind::InverseMismatch, "delta_pq_lr_inv");
  return tau_inv(qt);
}

std::vector<Tableau> lr_class_slash(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu) {
  same_level(lambda, mu, nu);
  if (lambda.degree() != mu.degree() + nu.degree()) return {};
  auto [p, q] = c_shift(lambda, mu, nu);
  return enumerate_LR(shifted(lambda, p + q), shifted(mu, p), shifted(nu, q));
}

std::vector<Tableau> lr_class_product(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu) {
  if (lambda.level() != mu.level() + nu.level()) throw Error(ErrorKind::ShapeMismatch, "levels do not add");
  if (lambda.degree() != mu.degree() + nu.degree()) return {};
  int d = c_hat_shift(lambda, mu, nu);
  return enumerate_LR(conjugate(shifted(lambda, d)), conjugate(shifted(mu, d)), conjugate(shifted(nu, d)));
}

Tableau canonical_slash(const Tableau& q, const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu,
                        ShiftPQ at) {
  auto m = c_shift(lambda, mu, nu);
  if (at.p < m.p || at.q < m.q) throw Error(ErrorKind::ShapeMismatch, "shift below the minimal one");
  auto out = pi_shift_inv(q, lambda.level(), at.p - m.p, at.q - m.q);
  ensure(out.outer() == shifted(lambda, m.p + m.q) && out.inner() == shifted(mu, m.p),
         "canonical_slash landed on the wrong shape");
  return out;
}

Tableau canonical_product(const Tableau& q, int m, int n, int l_extra) { return pi_level(q, m, n, l_extra); }

Tableau star_rep(const Tableau& q, const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu) {
  const int m = mu.level(), n = nu.level();
  int p = c_hat_shift(lambda, mu, nu);
  auto ls = star(lambda), ms = star(mu), ns = star(nu);
  int qq = c_hat_shift(ls, ms, ns);
  auto out = delta_pq_lr(q, p + qq, m, n);
  ensure(out.outer() == conjugate(shifted(ls, qq)) && out.inner() == conjugate(shifted(ms, qq)) &&
             lr_content(out) == conjugate(shifted(ns, qq)),
         "star_rep: complement does not land in the starred class");
  return out;
}

std::vector<std::pair<Tableau, Tableau>> star_class(const GenPartition& lambda, const GenPartition& mu,
                                                     const GenPartition& nu) {
  std::vector<std::pair<Tableau, Tableau>> out;
  for (auto& q : lr_class_product(lambda, mu, nu)) {
    auto img = star_rep(q, lambda, mu, nu);
    out.emplace_back(std::move(q), std::move(img));
  }
  return out;
}

DualElem dual_product(const DualElem& a, const DualElem& b, int window) {
  DualElem out;
  auto acc = [&](const GenPartition& k, long long v) {
    if (v == 0) return;
    if ((out[k] += v) == 0) out.erase(k);
  };
  for (const auto& [mu, x] : a)
    for (const auto& [nu, y] : b) {
      if (mu.level() == 0) {
        if (nu.level() == 0 || nu.abs_size() <= window) acc(nu, x * y);
        continue;
      }
      if (nu.level() == 0) {
        if (mu.abs_size() <= window) acc(mu, x * y);
        continue;
      }
      for (const auto& lam : gen_partitions(mu.level() + nu.level(), -window, window))
        if (lam.abs_size() <= window) acc(lam, x * y * c_hat(lam, mu, nu));
    }
  return out;
}

DualElem omega(const DualElem& a) {
  DualElem out;
  for (const auto& [k, v] : a) out[k.level() == 0 ? k : star(k)] += v;
  return out;
}

}  // namespace tabkit
