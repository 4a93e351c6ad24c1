#pragma once

// Brill-Noether numbers, Pflueger's rho_k and the gonality invariant kappa.

#include <compare>
#include <string>
#include <vector>

#include "bnloci/exact_arith.hpp"

namespace bnloci {

/// The Brill-Noether locus of genus-g curves carrying a g^r_d.
struct BNLocus {
    Int g = 0;
    Int r = 0;
    Int d = 0;

    friend auto operator<=>(const BNLocus&, const BNLocus&) = default;
};

std::string to_string(const BNLocus& locus);

enum class KappaBranch { ClosedFirstCase, ClosedSecondCase, BruteForce, SerreDualReduction };

std::string to_string(KappaBranch branch);

struct KappaResult {
    Int value = 0;
    KappaBranch branch = KappaBranch::BruteForce;
    Int rho = 0;
    Int gamma = 0;
};

/// g - (r+1)(g-d+r)
Int rho(Int g, Int r, Int d);
inline Int rho(const BNLocus& l) { return rho(l.g, l.r, l.d); }

/// Clifford index d - 2r.
Int clifford_index(Int r, Int d);

/// min(r, g-d+r-1)
Int r_prime(Int g, Int r, Int d);

/// max over l in {0..r'} of rho(g, r-l, d) - l*k, by enumeration.
/// When r' < 0 only the l = 0 term is taken.
Int rho_pflueger(Int g, Int r, Int d, Int k);

/// Largest k <= floor((g+3)/2) with rho_k >= 0, scanning every k in
/// [2, floor((g+3)/2)].
KappaResult kappa_brute(Int g, Int r, Int d);

/// Closed formula, valid for d <= g-1:
///   floor(d/r)                                 if g+1 > floor(d/r) + d
///   g + 1 - gamma + floor(-2 sqrt(-rho))       otherwise
KappaResult kappa_closed(Int g, Int r, Int d);

/// Closed formula when d <= g-1, the closed formula on the Serre dual when
/// that lands in range, brute force otherwise.
KappaResult kappa(Int g, Int r, Int d);
inline KappaResult kappa(const BNLocus& l) { return kappa(l.g, l.r, l.d); }

/// (g, g-d+r-1, 2g-2-d); an involution.
BNLocus serre_dual(Int g, Int r, Int d);
inline BNLocus serre_dual(const BNLocus& l) { return serre_dual(l.g, l.r, l.d); }

/// One step of each trivial containment: M^r_{g,d} is contained in
/// M^r_{g,d+1} always, and in M^{r-1}_{g,d-1} when rho(g,r-1,d-1) < 0.
std::vector<BNLocus> trivial_specializations(Int g, Int r, Int d);

} // namespace bnloci
