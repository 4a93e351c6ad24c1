#include "bnloci/exact_arith.hpp"

#include <cmath>
#include <limits>

namespace bnloci {

Wide checked_add(Wide a, Wide b) {
    Wide out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit addition overflow");
    return out;
}

Wide checked_sub(Wide a, Wide b) {
    Wide out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("128-bit subtraction overflow");
    return out;
}

Wide checked_mul(Wide a, Wide b) {
    Wide out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit multiplication overflow");
    return out;
}

Int narrow(Wide x) {
    if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
        throw OverflowError("value does not fit in 64 bits");
    return static_cast<Int>(x);
}

Int floor_div(Int num, Int den) {
    if (den == 0) throw DomainError("division by zero");
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

Int ceil_div(Int num, Int den) {
    if (den == 0) throw DomainError("division by zero");
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
    return q;
}

Int mod_floor(Int num, Int den) {
    if (den <= 0) throw DomainError("modulus must be positive");
    Int r = num % den;
    return r < 0 ? r + den : r;
}

Int isqrt(Int n) {
    if (n < 0) throw DomainError("isqrt of negative number");
    if (n < 2) return n;

    auto un = static_cast<std::uint64_t>(n);
    // 2^ceil(bits/2) is always >= sqrt(n), so Newton decreases monotonically.
    int bits = 64 - __builtin_clzll(un);
    std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
    for (;;) {
        std::uint64_t y = (x + un / x) / 2;
        if (y >= x) break;
        x = y;
    }

    Wide s = x;
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return static_cast<Int>(s);
}

bool is_perfect_square(Int n) {
    if (n < 0) return false;
    Int s = isqrt(n);
    return Wide{s} * s == n;
}

Int floor_neg_2sqrt(Int n) {
    if (n <= 0) throw DomainError("floor_neg_2sqrt requires n >= 1");
    Int four_n = narrow(checked_mul(4, n));
    Int m = isqrt(four_n);
    return Wide{m} * m == four_n ? -m : -(m + 1);
}

Int ceil_2sqrt(Int n) {
    if (n <= 0) throw DomainError("ceil_2sqrt requires n >= 1");
    return -floor_neg_2sqrt(n);
}

namespace {

int sign_of(Int x) { return (x > 0) - (x < 0); }

} // namespace

int surd_sign(const Surd& x) {
    if (x.m < 0) throw DomainError("surd radicand must be non-negative");
    const int sa = sign_of(x.a);
    const int sb = (x.m == 0) ? 0 : sign_of(x.b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;

    // Opposite signs: the larger magnitude wins.
    const Wide a2 = checked_mul(x.a, x.a);
    const Wide b2m = checked_mul(checked_mul(x.b, x.b), x.m);
    if (a2 > b2m) return sa;
    if (a2 < b2m) return sb;
    return 0;
}

std::string to_string(const Surd& x) {
    std::string out = std::to_string(x.a);
    if (x.b != 0 && x.m != 0) {
        out += x.b < 0 ? " - " : " + ";
        Int mag = x.b < 0 ? -x.b : x.b;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "sqrt(" + std::to_string(x.m) + ")";
    }
    return out;
}

int compare(Int value, const SurdFraction& x) {
    if (x.den <= 0) throw DomainError("surd fraction denominator must be positive");
    // value - (a + b sqrt m)/den has the sign of (value*den - a) - b sqrt m.
    const Wide lhs = checked_sub(checked_mul(value, x.den), x.num.a);
    return surd_sign(Surd{narrow(lhs), narrow(checked_sub(0, x.num.b)), x.num.m});
}

long double approximate(const SurdFraction& x) {
    long double v = static_cast<long double>(x.num.a) +
                    static_cast<long double>(x.num.b) * std::sqrt(static_cast<long double>(x.num.m));
    return v / static_cast<long double>(x.den);
}

} // namespace bnloci
