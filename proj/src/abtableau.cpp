#include "tabkit/abtableau.hpp"

#include <algorithm>
#include <sstream>

#include "tabkit/coeffs.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/switching.hpp"

namespace tabkit {

namespace {

int min_d(const GenPartition& lambda, const std::optional<GenPartition>& mu) {
  return std::max(min_shift(lambda), mu ? min_shift(*mu) : 0);
}

Partition shifted(const GenPartition& g, int d) { return add_rect(g, d).to_partition(); }

Tableau shift_cells(const Tableau& t, int n, int k) {
  std::vector<int> o = t.outer().padded(n), i = t.inner().padded(n);
  for (int r = 0; r < n; ++r) {
    o[r] += k;
    i[r] += k;
  }
  auto rows = t.rows();
  rows.resize(n);
  return Tableau(t.alphabet(), Partition(o), Partition(i), std::move(rows));
}

}  // namespace

Partition tminus_outer(const GenPartition& lambda, const std::optional<GenPartition>& mu, int d) {
  return mu ? shifted(*mu, d) : Partition(std::vector<int>(lambda.level(), d));
}

std::string ab_violation(const ABTableau& x) {
  const int n = x.level();
  if (x.skew && x.skew->level() != n) return "inner shape has a different level";
  if (x.d < 0) return "negative d";
  if (add_rect(x.shape, x.d).last() < 0) return "lambda+(d^n) is not a partition";
  if (x.skew && add_rect(*x.skew, x.d).last() < 0) return "mu+(d^n) is not a partition";
  if (x.inner.length() > n) return "inner partition longer than the level";
  Partition box(std::vector<int>(n, x.d));
  Partition plus_outer = shifted(x.shape, x.d);
  Partition minus_outer = tminus_outer(x.shape, x.skew, x.d);
  // skew shapes only need the inner partition under both outer shapes; (d^n) would drop e.g. the empty pair from (1)/(1)
  if (!x.skew && !contains(box, x.inner)) return "inner partition not inside (d^n)";
  if (!contains(plus_outer, x.inner)) return "inner partition not inside lambda+(d^n)";
  if (x.skew && !contains(minus_outer, x.inner)) return "inner partition not inside mu+(d^n)";
  if (x.tplus.outer() != plus_outer || x.tplus.inner() != x.inner) return "T+ has the wrong shape";
  if (x.tminus.outer() != minus_outer || x.tminus.inner() != x.inner) return "T- has the wrong shape";
  if (!validate(x.tplus)) return "T+ is not semistandard";
  if (!validate(x.tminus)) return "T- is not semistandard";
  return {};
}

bool validate_ab(const ABTableau& x) { return ab_violation(x).empty(); }

ABTableau make_ab(const GenPartition& lambda, std::optional<GenPartition> mu, int d, const Tableau& tplus,
                  const Tableau& tminus) {
  ABTableau x{lambda, std::move(mu), d, tplus.inner(), tplus, tminus};
  if (auto why = ab_violation(x); !why.empty()) throw Error(ErrorKind::InvalidTableau, why);
  return x;
}

bool is_canonical(const ABTableau& x) {
  return x.inner.padded(x.level()).back() == 0 || x.d - 1 < min_d(x.shape, x.skew);
}

ABTableau canonicalize(ABTableau x) {
  const int n = x.level();
  if (n == 0) return x;
  while (!is_canonical(x)) {
    x.d -= 1;
    x.tplus = shift_cells(x.tplus, n, -1);
    x.tminus = shift_cells(x.tminus, n, -1);
    x.inner = x.tplus.inner();
  }
  return x;
}

ABTableau widen(const ABTableau& x) {
  const int n = x.level();
  ABTableau y = x;
  y.d += 1;
  y.tplus = shift_cells(x.tplus, n, 1);
  y.tminus = shift_cells(x.tminus, n, 1);
  y.inner = y.tplus.inner();
  return y;
}

ABTableau widen_to(ABTableau x, int d) {
  while (x.d < d) x = widen(x);
  return x;
}

ABWeight weight_ab(const ABTableau& x) { return {weight(x.tplus), weight(x.tminus)}; }

namespace {

struct Slot {
  int d;
  Partition inner;
};

std::vector<Slot> slots(const GenPartition& lambda, const std::optional<GenPartition>& mu, int bound) {
  const int n = lambda.level();
  const int d0 = min_d(lambda, mu);
  const int dmax = std::max(d0, bound - (mu ? std::min(mu->last(), 0) : 0));
  std::vector<Slot> out;
  for (int d = d0; d <= dmax; ++d) {
    Partition plus = shifted(lambda, d), minus = tminus_outer(lambda, mu, d);
    const int w = mu ? std::max(plus[0], minus[0]) : d;
    for (const auto& eta : partitions_in_box(n, w)) {
      if (!contains(plus, eta) || !contains(minus, eta)) continue;
      if (minus.size() - eta.size() > bound) continue;
      if (d > d0 && eta.padded(n).back() > 0) continue;  // not canonical
      out.push_back({d, eta});
    }
  }
  return out;
}

void fill_slot(const GenPartition& lambda, const std::optional<GenPartition>& mu, const AlphabetPtr& a,
               const AlphabetPtr& b, const Slot& s, std::vector<ABTableau>& out) {
  Partition plus = shifted(lambda, s.d), minus = tminus_outer(lambda, mu, s.d);
  auto ps = enumerate_sst_serial({plus, s.inner}, a);
  if (ps.empty()) return;
  auto ms = enumerate_sst_serial({minus, s.inner}, b);
  for (const auto& p : ps)
    for (const auto& m : ms) out.push_back(ABTableau{lambda, mu, s.d, s.inner, p, m});
}

}  // namespace

std::vector<ABTableau> enumerate_ab_serial(const GenPartition& lambda, const std::optional<GenPartition>& mu,
                                           const AlphabetPtr& a, const AlphabetPtr& b, int bound) {
  std::vector<ABTableau> out;
  for (const auto& s : slots(lambda, mu, bound)) fill_slot(lambda, mu, a, b, s, out);
  return out;
}

std::vector<ABTableau> enumerate_ab(const GenPartition& lambda, const std::optional<GenPartition>& mu,
                                    const AlphabetPtr& a, const AlphabetPtr& b, int bound) {
  auto ss = slots(lambda, mu, bound);
  std::vector<std::vector<ABTableau>> parts(ss.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(ss.size()); ++i) fill_slot(lambda, mu, a, b, ss[i], parts[i]);
  std::vector<ABTableau> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

LaurentPoly monomial_ab(const ABWeight& w) {
  LaurentPoly::Exponent e = w.plus;
  for (int v : w.minus) e.push_back(-v);
  return LaurentPoly::monomial(e);
}

LaurentPoly character_ab(const GenPartition& lambda, const std::optional<GenPartition>& mu, const AlphabetPtr& a,
                         const AlphabetPtr& b, int bound) {
  LaurentPoly p(a->size() + b->size());
  for (const auto& x : enumerate_ab(lambda, mu, a, b, bound)) p += monomial_ab(weight_ab(x));
  return p;
}

Branching branch(const ABTableau& x) {
  if (x.skew) throw Error(ErrorKind::ShapeMismatch, "branching is defined for straight generalized shapes");
  if (auto why = ab_violation(x); !why.empty()) throw Error(ErrorKind::InvalidTableau, why);
  const int n = x.level();
  auto [rect, rec] = jdt(x.tplus);
  GenPartition mu = GenPartition::pad(rect.outer(), n);
  // (d^n)/eta rotates to nu; eta - (d^n) = nu*
  auto rot = rotate(x.tminus, n, x.d);
  Partition nu = rot.outer();
  GenPartition nu_star = star(GenPartition::pad(nu, n));
  auto recn = map_entries(rec, nat(), [](int v) { return v; });
  auto q = canonical_slash(recn, x.shape, mu, nu_star, {0, x.d});
  auto b = x.tminus.alphabet();
  auto s_minus = reorder_bijection(rot, b);
  return {std::move(q), std::move(rect), std::move(s_minus)};
}

ABTableau branch_inv(const GenPartition& lambda, const Branching& br) {
  const int n = lambda.level();
  if (br.s_plus.num_rows() > n || br.s_minus.num_rows() > n)
    throw Error(ErrorKind::ShapeMismatch, "branching data longer than the level");
  GenPartition mu = GenPartition::pad(br.s_plus.outer(), n);
  GenPartition nu_star = star(GenPartition::pad(br.s_minus.outer(), n));
  auto at = c_shift(lambda, mu, nu_star);
  int d = at.q;
  auto rec = pi_shift(br.q, n, 0, 0);
  if (at.p != 0 || !(rec.outer() == shifted(lambda, d)) || !(rec.inner() == br.s_plus.outer()))
    throw Error(ErrorKind::InverseMismatch, "recording does not match the shapes of S and S'");
  auto tplus = jdt_inv(br.s_plus, map_entries(rec, nat(), [](int v) { return v; }));
  auto b = br.s_minus.alphabet();
  auto rot = reorder_bijection_inv(br.s_minus, pi(b));
  auto tminus = relabel(rotate(rot, n, d), b);
  auto x = canonicalize(make_ab(lambda, std::nullopt, d, tplus, tminus));
  auto again = branch(x);
  if (!(again.q == br.q && again.s_plus == br.s_plus && again.s_minus == br.s_minus))
    throw Error(ErrorKind::InverseMismatch, "branching does not reproduce its input");
  return x;
}

nlohmann::json to_json(const ABTableau& x) {
  return {{"level", x.level()},
          {"shape", x.shape.parts()},
          {"inner_shape", x.skew ? nlohmann::json(x.skew->parts()) : nlohmann::json(nullptr)},
          {"d", x.d},
          {"mu", x.inner.parts()},
          {"tplus", to_json(x.tplus)},
          {"tminus", to_json(x.tminus)}};
}

ABTableau ab_from_json(const nlohmann::json& j) {
  GenPartition lambda(j.at("shape").get<std::vector<int>>());
  std::optional<GenPartition> mu;
  if (j.contains("inner_shape") && !j.at("inner_shape").is_null())
    mu = GenPartition(j.at("inner_shape").get<std::vector<int>>());
  auto x = make_ab(lambda, mu, j.at("d").get<int>(), tableau_from_json(j.at("tplus")),
                   tableau_from_json(j.at("tminus")));
  if (j.contains("mu") && Partition(j.at("mu").get<std::vector<int>>()) != x.inner)
    throw Error(ErrorKind::ShapeMismatch, "mu does not match the inner shape of T+");
  return x;
}

namespace {
// Rows of t with a bar after column d.
std::string draw(const Tableau& t, int n, int d) {
  std::size_t w = 1;
  for (const auto& row : t.rows())
    for (int v : row) w = std::max(w, t.alphabet()->label(v).size());
  int width = std::max(t.outer()[0], d);
  std::ostringstream os;
  for (int r = 0; r < n; ++r) {
    std::string line;
    for (int c = 0; c < width; ++c) {
      if (c == d) line += " |";
      std::string x = t.has_cell(r, c) ? t.alphabet()->label(t.at(r, c)) : (c < t.inner()[r] ? "." : "");
      line += (c ? " " : "") + x + std::string(w - x.size(), ' ');
    }
    if (width == d) line += " |";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}
}  // namespace

std::string to_ascii(const ABTableau& x) {
  return "T+\n" + draw(x.tplus, x.level(), x.d) + "T-\n" + draw(x.tminus, x.level(), x.d);
}

}  // namespace tabkit
