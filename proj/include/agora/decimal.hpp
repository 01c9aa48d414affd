// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace agora {

/// Fixed-point decimal with exactly four fractional digits.
///
/// Contract prices and business values must compare exactly across
/// serialization round-trips, so all decimal arithmetic in the library
/// runs on a scaled int64 instead of binary floating point.
class Decimal {
  public:
    static constexpr std::int64_t kScale = 10'000;

    constexpr Decimal() = default;

    static constexpr Decimal from_raw(std::int64_t raw) {
        Decimal d;
        d.raw_ = raw;
        return d;
    }

    static constexpr Decimal from_int(std::int64_t units) {
        return from_raw(units * kScale);
    }

    // Accepts "12", "-3.5", "8.2500". More than four fractional digits is
    // rejected rather than rounded; exactness is the whole point.
    static std::optional<Decimal> parse(std::string_view text);

    // Rounds half away from zero to the fourth fractional digit.
    static Decimal from_double(double value);

    constexpr std::int64_t raw() const { return raw_; }
    double to_double() const { return static_cast<double>(raw_) / kScale; }

    /// Canonical form: sign, integer part, '.', exactly four digits.
    std::string str() const;

    constexpr Decimal operator-() const { return from_raw(-raw_); }
    constexpr Decimal operator+(Decimal o) const { return from_raw(raw_ + o.raw_); }
    constexpr Decimal operator-(Decimal o) const { return from_raw(raw_ - o.raw_); }

    // Product rounded half away from zero back to scale.
    Decimal operator*(Decimal o) const;

    Decimal& operator+=(Decimal o) {
        raw_ += o.raw_;
        return *this;
    }
    Decimal& operator-=(Decimal o) {
        raw_ -= o.raw_;
        return *this;
    }

    friend constexpr auto operator<=>(Decimal a, Decimal b) = default;

  private:
    std::int64_t raw_ = 0;
};

}  // namespace agora
