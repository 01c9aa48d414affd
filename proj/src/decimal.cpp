// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/decimal.hpp"

#include <cmath>
#include <cstdlib>

namespace agora {

std::optional<Decimal> Decimal::parse(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos >= text.size()) {
        return std::nullopt;
    }

    std::int64_t units = 0;
    bool any_digit = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        units = units * 10 + (text[pos] - '0');
        any_digit = true;
        ++pos;
    }
    std::int64_t frac = 0;
    int frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            if (frac_digits == 4) {
                return std::nullopt;  // too many fractional digits
            }
            frac = frac * 10 + (text[pos] - '0');
            ++frac_digits;
            any_digit = true;
            ++pos;
        }
    }
    if (!any_digit || pos != text.size()) {
        return std::nullopt;
    }
    while (frac_digits < 4) {
        frac *= 10;
        ++frac_digits;
    }
    std::int64_t raw = units * kScale + frac;
    return from_raw(negative ? -raw : raw);
}

Decimal Decimal::from_double(double value) {
    return from_raw(static_cast<std::int64_t>(std::llround(value * kScale)));
}

std::string Decimal::str() const {
    std::int64_t v = raw_;
    std::string sign;
    if (v < 0) {
        sign = "-";
        v = -v;
    }
    std::string frac = std::to_string(v % kScale);
    frac.insert(0, 4 - frac.size(), '0');
    return sign + std::to_string(v / kScale) + "." + frac;
}

Decimal Decimal::operator*(Decimal o) const {
    __int128 p = static_cast<__int128>(raw_) * o.raw_;
    __int128 half = kScale / 2;
    __int128 q = p >= 0 ? (p + half) / kScale : (p - half) / kScale;
    return from_raw(static_cast<std::int64_t>(q));
}

}  // namespace agora
