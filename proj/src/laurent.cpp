#include "tabkit/laurent.hpp"

#include <cstdlib>

#include "tabkit/errors.hpp"

namespace tabkit {

LaurentPoly LaurentPoly::constant(int nvars, long long c) {
  LaurentPoly p(nvars);
  p.add(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, long long c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

void LaurentPoly::check(const Exponent& e) const {
  if (static_cast<int>(e.size()) != nvars_)
    throw Error(ErrorKind::ShapeMismatch, "exponent has " + std::to_string(e.size()) + " variables, expected " +
                                              std::to_string(nvars_));
}

long long LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(const Exponent& e, long long c) {
  check(e);
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(long long c) {
  if (c == 0) terms_.clear();
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::ShapeMismatch, "variable count differs in product");
  LaurentPoly r(a.nvars_);
  LaurentPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::truncated(int d) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int x : e) deg += std::abs(x);
    if (deg <= d) r.terms_.emplace(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  check(shift);
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int i = 0; i < nvars_; ++i) f[i] += shift[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      mono += (mono.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    long long a = c < 0 ? -c : c;
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mono.empty())
      s += std::to_string(a);
    else
      s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
    first = false;
  }
  return s;
}

std::string monomial_string(const LaurentPoly::Exponent& e, const std::vector<std::string>& names) {
  std::string mono;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    mono += (mono.empty() ? "" : "*") + names.at(i);
    if (e[i] != 1) mono += "^" + std::to_string(e[i]);
  }
  return mono.empty() ? "1" : mono;
}

nlohmann::json to_json(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != p.nvars())
    throw Error(ErrorKind::ShapeMismatch, "variable names do not match the polynomial");
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    auto exps = nlohmann::json::object();
    for (int i = 0; i < p.nvars(); ++i)
      if (e[i] != 0) exps[names[i]] = e[i];
    terms.push_back({{"exps", exps}, {"coef", c}});
  }
  return {{"terms", terms}};
}

nlohmann::json to_json(const LaurentPoly& p) {
  std::vector<std::string> names;
  for (int i = 1; i <= p.nvars(); ++i) names.push_back("x" + std::to_string(i));
  return to_json(p, names);
}

}  // namespace tabkit
