#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skolem {

// Unsigned arbitrary-precision integer with just enough arithmetic for exact
// counting: addition, multiplication by a machine word, comparison and
// decimal conversion. Little-endian base-2^32 limbs, no trailing zero limbs
// (zero is the empty limb vector).
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value) {
    if (value) {
      limbs_.push_back(static_cast<std::uint32_t>(value));
      if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
    }
  }

  static BigUint from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigUint: empty decimal literal");
    BigUint result;
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("BigUint: bad decimal digit");
      result *= 10u;
      result += static_cast<std::uint64_t>(c - '0');
    }
    return result;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  unsigned mod4() const { return limbs_.empty() ? 0u : (limbs_[0] & 3u); }

  bool fits_u64() const { return limbs_.size() <= 2; }

  // Low 64 bits; exact when fits_u64().
  std::uint64_t low_u64() const {
    std::uint64_t v = limbs_.empty() ? 0 : limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
  }

  BigUint& operator+=(const BigUint& rhs) {
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t sum = carry + limbs_[i];
      if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(sum);
      carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  BigUint& operator+=(std::uint64_t rhs) { return *this += BigUint(rhs); }

  BigUint& operator*=(std::uint32_t rhs) {
    if (rhs == 0) {
      limbs_.clear();
      return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      const std::uint64_t prod = static_cast<std::uint64_t>(limb) * rhs + carry;
      limb = static_cast<std::uint32_t>(prod);
      carry = prod >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigUint operator*(BigUint lhs, std::uint32_t rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const BigUint&, const BigUint&) = default;

  friend bool operator<(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    return false;
  }

  std::string to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::vector<std::uint32_t> blocks;  // base 10^9, little-endian
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
        rem = cur % 1000000000ull;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      blocks.push_back(static_cast<std::uint32_t>(rem));
    }
    std::string out = std::to_string(blocks.back());
    for (std::size_t i = blocks.size() - 1; i-- > 0;) {
      const std::string part = std::to_string(blocks[i]);
      out.append(9 - part.size(), '0');
      out += part;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigUint& v) { return os << v.to_decimal(); }

 private:
  std::vector<std::uint32_t> limbs_;
};

}  // namespace skolem
