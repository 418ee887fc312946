#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "gammalab/error.hpp"

namespace gammalab {

  /// An exact rational degree in [0, 1], always stored in lowest terms.
  ///
  /// Only comparisons and the pairwise sum test are needed by the fuzzy
  /// machinery (sup/min and inf/max never create new values), so no
  /// arithmetic operators are provided.
  class Grade {
   public:
    constexpr Grade() noexcept = default;

    Grade(std::int64_t numerator, std::int64_t denominator)
        : _num(numerator), _den(denominator) {
      if (denominator <= 0) {
        throw Error(ErrorCode::invalid_grade,
                    "denominator must be positive, got "
                        + std::to_string(denominator));
      }
      if (numerator < 0 || numerator > denominator) {
        throw Error(ErrorCode::invalid_grade,
                    std::to_string(numerator) + "/"
                        + std::to_string(denominator) + " is outside [0, 1]");
      }
      std::int64_t g = std::gcd(_num, _den);
      _num /= g;
      _den /= g;
    }

    static constexpr Grade zero() noexcept {
      return Grade();
    }

    static Grade one() {
      return Grade(1, 1);
    }

    constexpr std::int64_t numerator() const noexcept {
      return _num;
    }

    constexpr std::int64_t denominator() const noexcept {
      return _den;
    }

    friend constexpr bool operator==(Grade const& a, Grade const& b) noexcept {
      return a._num == b._num && a._den == b._den;
    }

    friend constexpr std::strong_ordering operator<=>(Grade const& a,
                                                      Grade const& b) noexcept {
      if (a._den == b._den) {
        return a._num <=> b._num;
      }
      return static_cast<__int128>(a._num) * b._den
             <=> static_cast<__int128>(b._num) * a._den;
    }

    /// Reduced "p/q" text; integers are written "0/1" and "1/1".
    std::string to_string() const {
      return std::to_string(_num) + "/" + std::to_string(_den);
    }

    friend std::ostream& operator<<(std::ostream& os, Grade const& g) {
      return os << g.to_string();
    }

   private:
    std::int64_t _num = 0;
    std::int64_t _den = 1;
  };

  /// True iff a + b <= 1, evaluated exactly.
  constexpr bool sum_at_most_one(Grade const& a, Grade const& b) noexcept {
    __int128 lhs = static_cast<__int128>(a.numerator()) * b.denominator()
                   + static_cast<__int128>(b.numerator()) * a.denominator();
    return lhs <= static_cast<__int128>(a.denominator()) * b.denominator();
  }

}  // namespace gammalab
