#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace tabkit {

struct Letter {
  std::string label;
  int parity = 0;
  bool operator==(const Letter&) const = default;
};

// Finite linearly ordered Z2-graded set. Order is sequence position.
class GradedAlphabet {
 public:
  GradedAlphabet() = default;
  GradedAlphabet(std::string name, std::vector<Letter> letters,
                 std::optional<std::string> truncation_of = std::nullopt);

  const std::string& name() const { return name_; }
  const std::optional<std::string>& truncation_of() const { return truncation_of_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  const Letter& operator[](int pos) const { return letters_[pos]; }
  int parity(int pos) const { return parities_[pos]; }
  const std::string& label(int pos) const { return letters_[pos].label; }
  // Position of a label, or -1.
  int find(const std::string& label) const;
  int at(const std::string& label) const;  // throws if absent

  // Letters and order agree; names are ignored.
  bool same_letters(const GradedAlphabet& o) const { return letters_ == o.letters_; }
  bool operator==(const GradedAlphabet& o) const {
    return name_ == o.name_ && letters_ == o.letters_;
  }

 private:
  std::string name_;
  std::optional<std::string> truncation_of_;
  std::vector<Letter> letters_;
  std::vector<std::uint8_t> parities_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const GradedAlphabet>;

AlphabetPtr make_alphabet(std::string name, std::vector<Letter> letters,
                          std::optional<std::string> truncation_of = std::nullopt);

AlphabetPtr prime(const AlphabetPtr& a);
AlphabetPtr pi(const AlphabetPtr& a);
AlphabetPtr sharp(const AlphabetPtr& a);
AlphabetPtr concat(const AlphabetPtr& a, const AlphabetPtr& b);
AlphabetPtr shuffle(const AlphabetPtr& a);

// Builtins.
AlphabetPtr interval(int n);            // [n] = 1<...<n, parity 0
AlphabetPtr neg_interval(int n);        // [-n] = -n<...<-1, parity 0
AlphabetPtr naturals(int k);            // N truncated, parity 0
AlphabetPtr naturals_primed(int k);     // N' truncated, labels 1',2',..., parity 1
AlphabetPtr half_pos_prime(int k);      // first k of (1/2 Z_{>0})'
AlphabetPtr half_nonpos_prime(int k);   // k largest of (1/2 Z_{<=0})'
AlphabetPtr z_pos(int k);               // 1..k, parity 0
AlphabetPtr z_nonpos(int k);            // -(k-1)..0, parity 0

// Shared large truncations used for recording and LR tableaux.
inline constexpr int kNatCap = 64;
const AlphabetPtr& nat();
const AlphabetPtr& nat_primed();

// Alphabet with letters given as "label:parity" pairs, in order.
AlphabetPtr inline_alphabet(const std::string& name, const std::vector<std::pair<std::string, int>>& ls);

// Resolves "N(3)", "[4]", "HalfPosPrime(2)", ... ; nullptr if unknown.
AlphabetPtr builtin_alphabet(const std::string& desc);

nlohmann::json to_json(const GradedAlphabet& a);
AlphabetPtr alphabet_from_json(const nlohmann::json& j);

// Label of a half-integer given as twice its value, e.g. 3 -> "3/2", -1 -> "-1/2".
std::string half_label(int twice);

}  // namespace tabkit
