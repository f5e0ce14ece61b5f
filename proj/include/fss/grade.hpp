// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fss {

/// Exact membership degree p/q in [0, 1], always stored reduced with q > 0.
///
/// Arithmetic is carried out in 128-bit intermediates and every result is
/// checked to fit back into 64 bits; anything that does not fit raises
/// ErrorCode::Overflow instead of silently wrapping.
class Grade {
 public:
  constexpr Grade() noexcept = default;

  /// Throws ErrorCode::GradeOutOfRange unless 0 <= num/den <= 1.
  Grade(std::int64_t num, std::int64_t den);

  static Grade zero() noexcept { return Grade(); }
  static Grade one() noexcept {
    Grade g;
    g.num_ = 1;
    return g;
  }

  /// Accepts "0", "1", "0.25", "1.0", "3/8". Decimals parse exactly.
  static Grade parse(std::string_view text);

  /// Multiple k/d of the grid step; requires 0 <= k <= d.
  static Grade on_grid(std::int64_t k, std::int64_t d) { return Grade(k, d); }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }

  /// Exact difference; throws ErrorCode::Domain when the result is negative.
  Grade minus(const Grade& other) const;

  /// Decimal when the denominator divides a power of ten, else "p/q".
  std::string to_string() const;

  /// Largest k with k/d <= *this; used to walk grid cells.
  std::int64_t grid_floor(std::int64_t d) const;

  /// True when *this equals k/d for some integer k.
  bool on_grid_of(std::int64_t d) const;

  friend bool operator==(const Grade& a, const Grade& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline const Grade& min(const Grade& a, const Grade& b) noexcept { return b < a ? b : a; }
inline const Grade& max(const Grade& a, const Grade& b) noexcept { return a < b ? b : a; }

}  // namespace fss
