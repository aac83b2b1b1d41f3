#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "fegi/dd_real.hpp"

namespace fegi {

// Canonical scientific representation at `digits` significant digits.
// Two values are "equal at D digits" iff their representations match;
// that string is also the grouping key for stationary-probability
// partitions and collision reports.
inline std::string sig_string(double x, int digits) {
    digits = std::clamp(digits, 1, 17);
    if (x == 0.0) x = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    return buf;
}

namespace detail {

inline std::string format_sig(bool neg, const int* dig, int digits, int e10) {
    std::string out;
    if (neg) out.push_back('-');
    out.push_back(static_cast<char>('0' + dig[0]));
    if (digits > 1) {
        out.push_back('.');
        for (int k = 1; k < digits; ++k) out.push_back(static_cast<char>('0' + dig[k]));
    }
    char exp[8];
    std::snprintf(exp, sizeof exp, "e%+03d", e10);
    return out + exp;
}

} // namespace detail

// Digit extraction; exact comparisons well beyond double (digits <= 30).
inline std::string sig_string(dd_real x, int digits) {
    digits = std::clamp(digits, 1, 30);
    if (x.hi == 0.0 && x.lo == 0.0) {
        int zero[30] = {};
        return detail::format_sig(false, zero, digits, 0);
    }
    bool neg = x.hi < 0.0;
    if (neg) x = -x;
    int e10 = 0;
    const dd_real ten(10.0), one(1.0);
    while (x >= ten) {
        x /= ten;
        ++e10;
    }
    while (x < one) {
        x *= ten;
        --e10;
    }
    int dig[31] = {};
    for (int k = 0; k <= digits; ++k) {
        int d = static_cast<int>(floor(x).hi);
        d = std::clamp(d, 0, 9);
        dig[k] = d;
        x = (x - dd_real(static_cast<double>(d))) * ten;
    }
    if (dig[digits] >= 5) { // round half up on the guard digit
        int k = digits - 1;
        while (k >= 0 && dig[k] == 9) dig[k--] = 0;
        if (k < 0) {
            dig[0] = 1;
            ++e10;
        } else {
            ++dig[k];
        }
    }
    return detail::format_sig(neg, dig, digits, e10);
}

template <class R>
bool equal_at_digits(const R& a, const R& b, int digits) {
    return sig_string(a, digits) == sig_string(b, digits);
}

// A pair that ties at digits-3 but separates at the working digit count is
// precision-suspect, not a collision.
inline int suspect_digits_for(int digits) { return std::max(1, digits - 3); }

enum class pair_class { distinct, suspect, collision };

template <class R>
pair_class classify_pair(const R& a, const R& b, int digits) {
    if (equal_at_digits(a, b, digits)) return pair_class::collision;
    if (equal_at_digits(a, b, suspect_digits_for(digits))) return pair_class::suspect;
    return pair_class::distinct;
}

} // namespace fegi
