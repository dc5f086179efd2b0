#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace tabkit {

// Integer Laurent polynomial in a fixed number of variables; exponent vector -> coefficient.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, long long c);
  static LaurentPoly monomial(const Exponent& e, long long c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, long long>& terms() const { return terms_; }
  long long coeff(const Exponent& e) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Exponent& e, long long c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(long long c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, long long c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Keep only terms with total degree (sum of |exponents|) at most d.
  LaurentPoly truncated(int d) const;
  // Multiply by x^shift (componentwise).
  LaurentPoly shifted(const Exponent& shift) const;

 private:
  void check(const Exponent& e) const;
  int nvars_ = 0;
  std::map<Exponent, long long> terms_;
};

std::string to_string(const LaurentPoly& p);
std::string monomial_string(const LaurentPoly::Exponent& e, const std::vector<std::string>& names);
// {"terms":[{"exps":{name:int,...},"coef":int},...]}; default names x1..xn.
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const LaurentPoly& p, const std::vector<std::string>& names);

}  // namespace tabkit
