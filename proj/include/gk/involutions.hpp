#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/qform.hpp"

namespace gk {

// Involution on {0..n-1} stored as its image table.
class Involution {
 public:
  Involution() = default;
  explicit Involution(std::vector<int> image);
  static Involution identity(std::size_t n);

  std::size_t size() const { return img_.size(); }
  int operator()(std::size_t i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  bool operator==(const Involution&) const = default;
  auto operator<=>(const Involution&) const = default;
  std::string str() const;  // cycle notation, 1-indexed

 private:
  std::vector<int> img_;
};

struct GKType {
  ExponentSeq ua;
  Involution sigma;
  bool operator==(const GKType&) const = default;
};

struct BlockStructure {
  std::vector<int> sizes;   // n_s
  std::vector<int> values;  // a*_s
  std::vector<int> ends;    // n*_s
  std::vector<int> block_of;
  std::size_t count() const { return sizes.size(); }
};

// Throws if ua is not non-decreasing.
BlockStructure blocks(const ExponentSeq& ua);

enum class Role { fixed, plus, minus, equal_pair };
// P0 / P+ / P- membership, or a pair with equal exponents.
Role role(const ExponentSeq& ua, const Involution& sigma, std::size_t i);

bool is_admissible(const ExponentSeq& ua, const Involution& sigma);
bool is_standard(const ExponentSeq& ua, const Involution& sigma);

// One standard representative per equivalence class, lexicographic in the P+ pattern.
std::vector<Involution> standard_involutions(const ExponentSeq& ua);
// K with 2^K classes.
int standard_class_exponent(const ExponentSeq& ua);

// Leading-k restriction, or nothing when the restricted involution is not admissible.
std::optional<GKType> restrict_type(const GKType& t, std::size_t k);

// Permutation within blocks turning an admissible involution standard.
// new index j corresponds to old index perm[j].
struct Canonical {
  Involution sigma;
  std::vector<int> perm;
};
Canonical canonicalize(const ExponentSeq& ua, const Involution& sigma);

// Conjugate sigma by perm (new j <-> old perm[j]).
Involution conjugate(const Involution& sigma, const std::vector<int>& perm);

}  // namespace gk
