// SPDX-License-Identifier: Apache-2.0
#include "fss/grade.hpp"

#include <limits>
#include <numeric>

#include "fss/error.hpp"

namespace fss {
namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// Longest digit run whose power of ten still fits in int64.
constexpr std::size_t kMaxDigits = 18;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::int64_t parse_digits(std::string_view s, std::string_view whole) {
  if (s.size() > kMaxDigits)
    throw Error(ErrorCode::Overflow, "grade \"" + std::string(whole) + "\" has too many digits");
  std::int64_t v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

std::int64_t narrow(__int128 v) {
  if (v > kMax || v < -kMax) throw Error(ErrorCode::Overflow, "grade arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Grade::Grade(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::Malformed, "grade with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num > den)
    throw Error(ErrorCode::GradeOutOfRange,
                "grade " + std::to_string(num) + "/" + std::to_string(den) + " outside [0,1]");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Grade Grade::parse(std::string_view text) {
  const auto bad = [&] {
    return Error(ErrorCode::Malformed, "cannot parse grade \"" + std::string(text) + "\"");
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw bad();
    const auto qv = parse_digits(q, text);
    if (qv == 0) throw bad();
    return Grade(parse_digits(p, text), qv);
  }
  const auto dot = text.find('.');
  const auto whole = text.substr(0, dot);
  if (!all_digits(whole)) {
    if (!whole.empty() && whole.front() == '-')
      throw Error(ErrorCode::GradeOutOfRange, "grade \"" + std::string(text) + "\" outside [0,1]");
    throw bad();
  }
  std::string_view frac;
  if (dot != std::string_view::npos) {
    frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw bad();
  }
  // Strip redundant zeros so "0.50000000000000000000" still parses.
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  std::string_view ip = whole;
  while (ip.size() > 1 && ip.front() == '0') ip.remove_prefix(1);
  if (ip.size() > 1)
    throw Error(ErrorCode::GradeOutOfRange, "grade \"" + std::string(text) + "\" outside [0,1]");
  const std::int64_t i = parse_digits(ip, text);
  const std::int64_t f = frac.empty() ? 0 : parse_digits(frac, text);
  std::int64_t scale = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
  const __int128 num = static_cast<__int128>(i) * scale + f;
  if (num > scale)
    throw Error(ErrorCode::GradeOutOfRange, "grade \"" + std::string(text) + "\" outside [0,1]");
  return Grade(narrow(num), scale);
}

Grade Grade::minus(const Grade& other) const {
  if (*this < other)
    throw Error(ErrorCode::Domain,
                "negative grade " + to_string() + " - " + other.to_string());
  const std::int64_t g = std::gcd(den_, other.den_);
  const __int128 l = static_cast<__int128>(den_ / g) * other.den_;
  const __int128 n = static_cast<__int128>(num_) * (other.den_ / g) -
                     static_cast<__int128>(other.num_) * (den_ / g);
  return Grade(narrow(n), narrow(l));
}

std::string Grade::to_string() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  const int places = std::max(twos, fives);
  if (places > static_cast<int>(kMaxDigits))
    return std::to_string(num_) + "/" + std::to_string(den_);
  std::int64_t factor = 1;
  for (int k = 0; k < places; ++k) factor *= 10;
  const __int128 scaled = static_cast<__int128>(num_) * (factor / den_);
  std::string digits = std::to_string(static_cast<std::int64_t>(scaled));
  if (digits.size() < static_cast<std::size_t>(places))
    digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
  return "0." + digits;
}

std::int64_t Grade::grid_floor(std::int64_t d) const {
  return narrow(static_cast<__int128>(num_) * d / den_);
}

bool Grade::on_grid_of(std::int64_t d) const {
  return (static_cast<__int128>(num_) * d) % den_ == 0;
}

}  // namespace fss
