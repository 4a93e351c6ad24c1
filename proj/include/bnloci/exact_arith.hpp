#pragma once

// Exact integer primitives. Nothing in here touches floating point.

#include <cstdint>
#include <string>

#include "bnloci/errors.hpp"

namespace bnloci {

using Int = std::int64_t;
using Wide = __int128;

// Overflow-checked wide arithmetic. All of these throw OverflowError
// instead of wrapping.
Wide checked_add(Wide a, Wide b);
Wide checked_sub(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);
Int narrow(Wide x);

// Division rounding toward -inf / +inf. den must be nonzero.
Int floor_div(Int num, Int den);
Int ceil_div(Int num, Int den);

// Non-negative remainder, i.e. num - den * floor_div(num, den) for den > 0.
Int mod_floor(Int num, Int den);

/// floor(sqrt(n)) for n >= 0. Newton iteration seeded above the root,
/// followed by a correction step so that s*s <= n < (s+1)*(s+1) holds
/// regardless of how the iteration terminated.
Int isqrt(Int n);

bool is_perfect_square(Int n);

/// floor(-2 sqrt(n)) for n >= 1, computed as -ceil(sqrt(4n)).
Int floor_neg_2sqrt(Int n);

/// ceil(2 sqrt(n)) for n >= 1.
Int ceil_2sqrt(Int n);

/// The real number a + b sqrt(m), m >= 0.
struct Surd {
    Int a = 0;
    Int b = 0;
    Int m = 0;

    friend bool operator==(const Surd&, const Surd&) = default;
};

/// Exact sign of a + b sqrt(m): -1, 0 or +1. Squares are compared in
/// 128-bit arithmetic; an intermediate that does not fit throws
/// OverflowError.
int surd_sign(const Surd& x);

std::string to_string(const Surd& x);

/// (a + b sqrt(m)) / den with den > 0. Used for bounds whose natural
/// form carries a rational coefficient.
struct SurdFraction {
    Surd num;
    Int den = 1;

    friend bool operator==(const SurdFraction&, const SurdFraction&) = default;
};

/// Sign of (value - x), decided exactly.
int compare(Int value, const SurdFraction& x);

/// Decimal approximation for presentation only; never used in decisions.
long double approximate(const SurdFraction& x);

} // namespace bnloci
