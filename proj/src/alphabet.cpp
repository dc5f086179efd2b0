#include "tabkit/alphabet.hpp"

#include <algorithm>
#include <regex>

#include "tabkit/errors.hpp"

namespace tabkit {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RectangleTooSmall: return "RectangleTooSmall";
    case ErrorKind::InverseMismatch: return "InverseMismatch";
    case ErrorKind::NotLR: return "NotLR";
    case ErrorKind::NotHorizontalStrip: return "NotHorizontalStrip";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::StabilityViolation: return "StabilityViolation";
    case ErrorKind::MalformedPrefix: return "MalformedPrefix";
    case ErrorKind::InvalidTableau: return "InvalidTableau";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Invariant: return "Invariant";
  }
  return "Unknown";
}

GradedAlphabet::GradedAlphabet(std::string name, std::vector<Letter> letters,
                               std::optional<std::string> truncation_of)
    : name_(std::move(name)), truncation_of_(std::move(truncation_of)), letters_(std::move(letters)) {
  parities_.reserve(letters_.size());
  for (int i = 0; i < size(); ++i) {
    const auto& l = letters_[i];
    if (l.parity != 0 && l.parity != 1) throw Error(ErrorKind::Usage, "parity must be 0 or 1");
    if (!index_.emplace(l.label, i).second) throw Error(ErrorKind::DuplicateLabel, l.label);
    parities_.push_back(static_cast<std::uint8_t>(l.parity));
  }
}

int GradedAlphabet::find(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

int GradedAlphabet::at(const std::string& label) const {
  int p = find(label);
  if (p < 0) throw Error(ErrorKind::AlphabetMismatch, "letter '" + label + "' not in " + name_);
  return p;
}

AlphabetPtr make_alphabet(std::string name, std::vector<Letter> letters,
                          std::optional<std::string> truncation_of) {
  return std::make_shared<const GradedAlphabet>(std::move(name), std::move(letters),
                                                std::move(truncation_of));
}

namespace {

std::string toggle_suffix(const std::string& s, const std::string& suf) {
  if (s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0)
    return s.substr(0, s.size() - suf.size());
  return s + suf;
}

std::optional<std::string> toggle_tag(const std::optional<std::string>& t, const std::string& suf) {
  if (!t) return std::nullopt;
  return toggle_suffix(*t, suf);
}

}  // namespace

AlphabetPtr prime(const AlphabetPtr& a) {
  auto ls = a->letters();
  for (auto& l : ls) l.parity ^= 1;
  return make_alphabet(toggle_suffix(a->name(), "'"), std::move(ls), toggle_tag(a->truncation_of(), "'"));
}

AlphabetPtr pi(const AlphabetPtr& a) {
  auto ls = a->letters();
  std::reverse(ls.begin(), ls.end());
  return make_alphabet(toggle_suffix(a->name(), "^pi"), std::move(ls),
                       toggle_tag(a->truncation_of(), "^pi"));
}

AlphabetPtr sharp(const AlphabetPtr& a) { return pi(prime(a)); }

AlphabetPtr concat(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (b->size() == 0) return a;
  if (a->size() == 0) return b;
  auto ls = a->letters();
  ls.insert(ls.end(), b->letters().begin(), b->letters().end());
  return make_alphabet(a->name() + "*" + b->name(), std::move(ls));
}

AlphabetPtr shuffle(const AlphabetPtr& a) {
  std::vector<Letter> ls;
  for (int p = 0; p < 2; ++p)
    for (const auto& l : a->letters())
      if (l.parity == p) ls.push_back(l);
  if (ls == a->letters()) return a;
  return make_alphabet("shuffle(" + a->name() + ")", std::move(ls), a->truncation_of());
}

std::string half_label(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

AlphabetPtr interval(int n) {
  std::vector<Letter> ls;
  for (int i = 1; i <= n; ++i) ls.push_back({std::to_string(i), 0});
  return make_alphabet("[" + std::to_string(n) + "]", std::move(ls));
}

AlphabetPtr neg_interval(int n) {
  std::vector<Letter> ls;
  for (int i = n; i >= 1; --i) ls.push_back({std::to_string(-i), 0});
  return make_alphabet("[-" + std::to_string(n) + "]", std::move(ls));
}

AlphabetPtr naturals(int k) {
  std::vector<Letter> ls;
  for (int i = 1; i <= k; ++i) ls.push_back({std::to_string(i), 0});
  return make_alphabet("N(" + std::to_string(k) + ")", std::move(ls), "N");
}

AlphabetPtr naturals_primed(int k) {
  std::vector<Letter> ls;
  for (int i = 1; i <= k; ++i) ls.push_back({std::to_string(i) + "'", 1});
  return make_alphabet("Nprime(" + std::to_string(k) + ")", std::move(ls), "N'");
}

AlphabetPtr half_pos_prime(int k) {
  std::vector<Letter> ls;
  for (int t = 1; t <= k; ++t) ls.push_back({half_label(t), t % 2 == 0 ? 1 : 0});
  return make_alphabet("HalfPosPrime(" + std::to_string(k) + ")", std::move(ls),
                       "half-integers-positive-primed");
}

AlphabetPtr half_nonpos_prime(int k) {
  std::vector<Letter> ls;
  for (int t = -(k - 1); t <= 0; ++t) ls.push_back({half_label(t), t % 2 == 0 ? 1 : 0});
  return make_alphabet("HalfNonposPrime(" + std::to_string(k) + ")", std::move(ls),
                       "half-integers-nonpositive-primed");
}

AlphabetPtr z_pos(int k) {
  std::vector<Letter> ls;
  for (int i = 1; i <= k; ++i) ls.push_back({std::to_string(i), 0});
  return make_alphabet("ZPos(" + std::to_string(k) + ")", std::move(ls), "Z>0");
}

AlphabetPtr z_nonpos(int k) {
  std::vector<Letter> ls;
  for (int i = -(k - 1); i <= 0; ++i) ls.push_back({std::to_string(i), 0});
  return make_alphabet("ZNonpos(" + std::to_string(k) + ")", std::move(ls), "Z<=0");
}

const AlphabetPtr& nat() {
  static const AlphabetPtr a = naturals(kNatCap);
  return a;
}

const AlphabetPtr& nat_primed() {
  static const AlphabetPtr a = naturals_primed(kNatCap);
  return a;
}

AlphabetPtr inline_alphabet(const std::string& name,
                            const std::vector<std::pair<std::string, int>>& ls) {
  std::vector<Letter> v;
  for (const auto& [l, p] : ls) v.push_back({l, p});
  return make_alphabet(name, std::move(v));
}

AlphabetPtr builtin_alphabet(const std::string& desc) {
  static const std::regex fam(R"(^(N|Nprime|HalfPosPrime|HalfNonposPrime|ZPos|ZNonpos)\((\d+)\)$)");
  static const std::regex iv(R"(^\[(-?)(\d+)\]$)");
  std::smatch m;
  if (std::regex_match(desc, m, iv)) {
    int n = std::stoi(m[2]);
    return m[1].length() ? neg_interval(n) : interval(n);
  }
  if (!std::regex_match(desc, m, fam)) return nullptr;
  int k = std::stoi(m[2]);
  const std::string f = m[1];
  if (f == "N") return naturals(k);
  if (f == "Nprime") return naturals_primed(k);
  if (f == "HalfPosPrime") return half_pos_prime(k);
  if (f == "HalfNonposPrime") return half_nonpos_prime(k);
  if (f == "ZPos") return z_pos(k);
  return z_nonpos(k);
}

nlohmann::json to_json(const GradedAlphabet& a) {
  nlohmann::json ls = nlohmann::json::array();
  for (const auto& l : a.letters()) ls.push_back({{"label", l.label}, {"parity", l.parity}});
  nlohmann::json j;
  j["name"] = a.name();
  j["truncation_of"] = a.truncation_of() ? nlohmann::json(*a.truncation_of()) : nlohmann::json(nullptr);
  j["letters"] = std::move(ls);
  return j;
}

AlphabetPtr alphabet_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    auto a = builtin_alphabet(j.get<std::string>());
    if (!a) throw Error(ErrorKind::Usage, "unknown alphabet " + j.get<std::string>());
    return a;
  }
  std::vector<Letter> ls;
  for (const auto& l : j.at("letters")) ls.push_back({l.at("label").get<std::string>(), l.at("parity").get<int>()});
  std::optional<std::string> tr;
  if (j.contains("truncation_of") && !j["truncation_of"].is_null()) tr = j["truncation_of"].get<std::string>();
  return make_alphabet(j.value("name", std::string("inline")), std::move(ls), tr);
}

}  // namespace tabkit
