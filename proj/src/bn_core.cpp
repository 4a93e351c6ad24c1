#include "bnloci/bn_core.hpp"

#include <algorithm>

namespace bnloci {

std::string to_string(const BNLocus& l) {
    return "(" + std::to_string(l.g) + "," + std::to_string(l.r) + "," + std::to_string(l.d) + ")";
}

std::string to_string(KappaBranch branch) {
    switch (branch) {
    case KappaBranch::ClosedFirstCase: return "closed_first_case";
    case KappaBranch::ClosedSecondCase: return "closed_second_case";
    case KappaBranch::BruteForce: return "brute_force";
    case KappaBranch::SerreDualReduction: return "serre_dual_reduction";
    }
    return "unknown";
}

Int rho(Int g, Int r, Int d) {
    if (g < 1 || r < 0 || d < 0) throw DomainError("rho requires g >= 1, r >= 0, d >= 0");
    const Wide h1 = checked_add(checked_sub(g, d), r);
    return narrow(checked_sub(g, checked_mul(checked_add(r, 1), h1)));
}

Int clifford_index(Int r, Int d) {
    if (r < 0 || d < 0) throw DomainError("clifford_index requires r >= 0, d >= 0");
    return narrow(checked_sub(d, checked_mul(2, r)));
}

Int r_prime(Int g, Int r, Int d) {
    if (g < 1) throw DomainError("r_prime requires g >= 1");
    return std::min(r, narrow(checked_sub(checked_add(checked_sub(g, d), r), 1)));
}

Int rho_pflueger(Int g, Int r, Int d, Int k) {
    if (g < 2 || r < 0 || d < 0) throw DomainError("rho_pflueger requires g >= 2, r >= 0, d >= 0");
    if (k < 2) throw DomainError("rho_pflueger requires k >= 2");
    const Int top = std::max<Int>(0, r_prime(g, r, d));
    Int best = rho(g, r, d);
    for (Int l = 1; l <= top; ++l) {
        const Int term = narrow(checked_sub(rho(g, r - l, d), checked_mul(l, k)));
        best = std::max(best, term);
    }
    return best;
}

namespace {

void require_admissible(Int g, Int r, Int d, const char* who) {
    if (g < 2 || r < 0 || d < 0) throw DomainError(std::string(who) + " requires g >= 2, r >= 0, d >= 0");
    if (rho(g, r, d) >= 0) throw DomainError("kappa undefined outside rho<0");
}

} // namespace

KappaResult kappa_brute(Int g, Int r, Int d) {
    require_admissible(g, r, d, "kappa_brute");
    if (clifford_index(r, d) < 0) throw DomainError("kappa_brute requires d - 2r >= 0");
    if (g - d + r < 1) throw DomainError("kappa_brute requires g - d + r >= 1");

    const Int cap = (g + 3) / 2;
    Int found = 0;
    Int previous = 0;
    for (Int k = 2; k <= cap; ++k) {
        const Int value = rho_pflueger(g, r, d, k);
        if (k > 2 && value > previous) throw InternalError("rho_k increased in k at " + to_string(BNLocus{g, r, d}));
        previous = value;
        if (value >= 0) found = k;
    }
    if (found == 0) throw InternalError("no k >= 2 with rho_k >= 0 at " + to_string(BNLocus{g, r, d}));
    if (found == cap) throw InternalError("rho_k >= 0 at the general-gonality cap while rho < 0 at " + to_string(BNLocus{g, r, d}));
    return {found, KappaBranch::BruteForce, rho(g, r, d), clifford_index(r, d)};
}

KappaResult kappa_closed(Int g, Int r, Int d) {
    require_admissible(g, r, d, "kappa_closed");
    if (r < 1) throw DomainError("kappa_closed requires r >= 1");
    if (d > g - 1) throw DomainError("kappa_closed requires d <= g - 1");
    const Int gamma = clifford_index(r, d);
    if (gamma < 0) throw DomainError("kappa_closed requires d - 2r >= 0");

    const Int rh = rho(g, r, d);
    const Int quotient = d / r;
    if (g + 1 > quotient + d) return {quotient, KappaBranch::ClosedFirstCase, rh, gamma};
    return {g + 1 - gamma + floor_neg_2sqrt(-rh), KappaBranch::ClosedSecondCase, rh, gamma};
}

KappaResult kappa(Int g, Int r, Int d) {
    require_admissible(g, r, d, "kappa");
    if (d <= g - 1) return kappa_closed(g, r, d);

    const Int dual_r = g - d + r - 1;
    const Int dual_d = 2 * g - 2 - d;
    if (dual_r >= 1 && dual_d >= 0 && dual_d <= g - 1 && clifford_index(dual_r, dual_d) >= 0) {
        KappaResult out = kappa_closed(g, dual_r, dual_d);
        out.branch = KappaBranch::SerreDualReduction;
        out.rho = rho(g, r, d);
        out.gamma = clifford_index(r, d);
        return out;
    }
    return kappa_brute(g, r, d);
}

BNLocus serre_dual(Int g, Int r, Int d) {
    const Int dual_r = g - d + r - 1;
    const Int dual_d = 2 * g - 2 - d;
    if (dual_r < 0 || dual_d < 0) throw DomainError("Serre dual of " + to_string(BNLocus{g, r, d}) + " has negative rank or degree");
    return {g, dual_r, dual_d};
}

std::vector<BNLocus> trivial_specializations(Int g, Int r, Int d) {
    std::vector<BNLocus> out{{g, r, d + 1}};
    if (r >= 1 && d >= 1 && rho(g, r - 1, d - 1) < 0) out.push_back({g, r - 1, d - 1});
    return out;
}

} // namespace bnloci
