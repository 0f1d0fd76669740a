#include "gk/involutions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gk {

Involution::Involution(std::vector<int> image) : img_(std::move(image)) {
  int n = static_cast<int>(img_.size());
  for (int i = 0; i < n; ++i)
    if (img_[i] < 0 || img_[i] >= n || img_[img_[i]] != i)
      throw InvalidInput("not_involution", "image table is not an involution");
}

Involution Involution::identity(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return Involution(std::move(v));
}

std::string Involution::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] > static_cast<int>(i)) {
      os << '(' << i + 1 << ' ' << img_[i] + 1 << ')';
      any = true;
    }
  if (!any) os << "id";
  return os.str();
}

BlockStructure blocks(const ExponentSeq& ua) {
  if (!ua.non_decreasing()) throw InvalidInput("not_monotone", "GK candidate must be non-decreasing");
  BlockStructure b;
  for (std::size_t i = 0; i < ua.size(); ++i) {
    if (i == 0 || ua[i] != ua[i - 1]) {
      b.sizes.push_back(0);
      b.values.push_back(ua[i]);
    }
    ++b.sizes.back();
    b.block_of.push_back(static_cast<int>(b.sizes.size()) - 1);
  }
  int acc = 0;
  for (int s : b.sizes) b.ends.push_back(acc += s);
  return b;
}

Role role(const ExponentSeq& ua, const Involution& sigma, std::size_t i) {
  std::size_t j = static_cast<std::size_t>(sigma(i));
  if (j == i) return Role::fixed;
  if (ua[i] < ua[j]) return Role::minus;
  if (ua[i] > ua[j]) return Role::plus;
  return Role::equal_pair;
}

namespace {

bool same_parity(int a, int b) { return ((a - b) % 2) == 0; }

}  // namespace

bool is_admissible(const ExponentSeq& ua, const Involution& sigma) {
  std::size_t n = ua.size();
  if (sigma.size() != n) return false;
  std::vector<Role> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = role(ua, sigma, i);

  std::vector<std::size_t> fixed;
  for (std::size_t i = 0; i < n; ++i)
    if (r[i] == Role::fixed) fixed.push_back(i);
  if (fixed.size() > 2) return false;
  if (fixed.size() == 2 && same_parity(ua[fixed[0]], ua[fixed[1]])) return false;
  for (std::size_t i : fixed)
    for (std::size_t j = 0; j < n; ++j)
      if ((r[j] == Role::fixed || r[j] == Role::plus) && same_parity(ua[j], ua[i]) && ua[j] > ua[i]) return false;

  std::map<int, std::pair<int, int>> per_block;  // value -> (#P+, #P- + #P0)
  for (std::size_t i = 0; i < n; ++i) {
    auto& c = per_block[ua[i]];
    if (r[i] == Role::plus) ++c.first;
    if (r[i] == Role::minus || r[i] == Role::fixed) ++c.second;
  }
  for (const auto& [v, c] : per_block)
    if (c.first > 1 || c.second > 1) return false;

  for (std::size_t i = 0; i < n; ++i) {
    int target = ua[static_cast<std::size_t>(sigma(i))];
    if (r[i] == Role::minus) {
      std::optional<int> best;
      for (std::size_t j = 0; j < n; ++j)
        if (r[j] == Role::plus && ua[j] > ua[i] && same_parity(ua[j], ua[i]) && (!best || ua[j] < *best)) best = ua[j];
      if (!best || *best != target) return false;
    } else if (r[i] == Role::plus) {
      std::optional<int> best;
      for (std::size_t j = 0; j < n; ++j)
        if (r[j] == Role::minus && ua[j] < ua[i] && same_parity(ua[j], ua[i]) && (!best || ua[j] > *best)) best = ua[j];
      if (!best || *best != target) return false;
    }
  }
  return true;
}

bool is_standard(const ExponentSeq& ua, const Involution& sigma) {
  if (!ua.non_decreasing() || !is_admissible(ua, sigma)) return false;
  BlockStructure b = blocks(ua);
  std::size_t n = ua.size();
  for (std::size_t i = 0; i < n; ++i) {
    int s = b.block_of[i];
    std::size_t first = static_cast<std::size_t>(b.ends[s] - b.sizes[s]), last = static_cast<std::size_t>(b.ends[s] - 1);
    Role r = role(ua, sigma, i);
    int si = sigma(i);
    if ((r == Role::fixed || r == Role::minus) && i != last) return false;
    if (r == Role::plus && i != first) return false;
    if (r == Role::equal_pair && std::abs(si - static_cast<int>(i)) > 1) return false;
    if (r == Role::minus) {
      for (std::size_t j = i + 1; j < n; ++j)
        if (role(ua, sigma, j) == Role::plus && same_parity(ua[j], ua[i])) {
          if (static_cast<int>(j) != si) return false;
          break;
        }
    }
    if (r == Role::plus) {
      for (std::size_t j = i; j-- > 0;)
        if (role(ua, sigma, j) == Role::minus && same_parity(ua[j], ua[i])) {
          if (static_cast<int>(j) != si) return false;
          break;
        }
    }
  }
  return true;
}

std::vector<Involution> standard_involutions(const ExponentSeq& ua) {
  BlockStructure b = blocks(ua);
  std::size_t r = b.count(), n = ua.size();
  std::vector<Involution> out;
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    std::vector<int> img(n);
    int pending[2] = {-1, -1};
    bool ok = true;
    for (std::size_t s = 0; s < r && ok; ++s) {
      bool plus = (mask >> (r - 1 - s)) & 1UL;
      int par = ((b.values[s] % 2) + 2) % 2;
      int lo = b.ends[s] - b.sizes[s], hi = b.ends[s];
      if (plus) {
        if (pending[par] < 0) {
          ok = false;
          break;
        }
        img[pending[par]] = lo;
        img[lo] = pending[par];
        pending[par] = -1;
        ++lo;
      } else if (b.sizes[s] % 2 == 1 && pending[par] >= 0) {
        ok = false;
        break;
      }
      for (; lo + 1 < hi; lo += 2) {
        img[lo] = lo + 1;
        img[lo + 1] = lo;
      }
      if (lo < hi) {
        img[lo] = lo;
        pending[par] = lo;
      }
    }
    if (ok) out.emplace_back(std::move(img));
  }
  return out;
}

int standard_class_exponent(const ExponentSeq& ua) {
  BlockStructure b = blocks(ua);
  int K = 0;
  for (std::size_t s = 0; s < b.count(); ++s) {
    int k = 0;
    for (std::size_t u = 0; u < s; ++u)
      if (same_parity(b.values[u], b.values[s]) && b.sizes[u] % 2 == 1) ++k;
    if (b.sizes[s] % 2 == 0 && k % 2 == 1) ++K;
  }
  return K;
}

std::optional<GKType> restrict_type(const GKType& t, std::size_t k) {
  if (k == 0 || k > t.ua.size()) throw InvalidInput("shape", "restriction index out of range");
  std::vector<int> img(k);
  for (std::size_t i = 0; i < k; ++i) {
    int s = t.sigma(i);
    img[i] = s >= static_cast<int>(k) ? static_cast<int>(i) : s;
  }
  GKType r{t.ua.prefix(k), Involution(std::move(img))};
  if (!is_admissible(r.ua, r.sigma)) return std::nullopt;
  return r;
}

Involution conjugate(const Involution& sigma, const std::vector<int>& perm) {
  std::size_t n = perm.size();
  std::vector<int> inv(n), img(n);
  for (std::size_t j = 0; j < n; ++j) inv[static_cast<std::size_t>(perm[j])] = static_cast<int>(j);
  for (std::size_t j = 0; j < n; ++j) img[j] = inv[static_cast<std::size_t>(sigma(static_cast<std::size_t>(perm[j])))];
  return Involution(std::move(img));
}

Canonical canonicalize(const ExponentSeq& ua, const Involution& sigma) {
  if (!is_admissible(ua, sigma)) throw InvalidInput("not_admissible", "cannot canonicalize " + sigma.str());
  BlockStructure b = blocks(ua);
  std::vector<int> perm;
  for (std::size_t s = 0; s < b.count(); ++s) {
    int lo = b.ends[s] - b.sizes[s], hi = b.ends[s];
    std::vector<int> head, mid, tail;
    for (int i = lo; i < hi; ++i) {
      Role r = role(ua, sigma, static_cast<std::size_t>(i));
      if (r == Role::plus) head.push_back(i);
      else if (r == Role::fixed || r == Role::minus) tail.push_back(i);
      else if (sigma(static_cast<std::size_t>(i)) > i) {
        mid.push_back(i);
        mid.push_back(sigma(static_cast<std::size_t>(i)));
      }
    }
    perm.insert(perm.end(), head.begin(), head.end());
    perm.insert(perm.end(), mid.begin(), mid.end());
    perm.insert(perm.end(), tail.begin(), tail.end());
  }
  Involution c = conjugate(sigma, perm);
  if (!is_standard(ua, c)) throw InternalFailure("canonicalization produced a non-standard involution");
  return {c, perm};
}

}  // namespace gk
