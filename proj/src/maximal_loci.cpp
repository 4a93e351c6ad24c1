#include "bnloci/maximal_loci.hpp"

#include <algorithm>

namespace bnloci {

std::string to_string(RankRange range) {
    switch (range) {
    case RankRange::MaximalRanks: return "maximal";
    case RankRange::PaperRange: return "paper";
    case RankRange::CeilBound: return "ceil";
    }
    return "unknown";
}

std::optional<RankRange> parse_rank_range(const std::string& name) {
    if (name == "maximal") return RankRange::MaximalRanks;
    if (name == "paper") return RankRange::PaperRange;
    if (name == "ceil") return RankRange::CeilBound;
    return std::nullopt;
}

Int d_max(Int g, Int r) {
    if (g < 2 || r < 1) throw DomainError("d_max requires g >= 2, r >= 1");
    return r + ceil_div(narrow(checked_mul(g, r)), r + 1) - 1;
}

bool is_expected_maximal(Int g, Int r, Int d) {
    if (g < 3 || r < 1) throw DomainError("is_expected_maximal requires g >= 3, r >= 1");
    if (d < 2 * r || d > g - 1) return false;
    return rho(g, r, d) < 0 && rho(g, r, d + 1) >= 0 && rho(g, r - 1, d - 1) >= 0;
}

Int r_max_expected(Int g) {
    if (g < 3) throw DomainError("r_max_expected requires g >= 3");
    const Int s = isqrt(g);
    if (g >= s * s + s) return r_ceil_bound(g);
    return s - 1;
}

Int r_ceil_bound(Int g) {
    if (g < 1) throw DomainError("r_ceil_bound requires g >= 1");
    const Int s = isqrt(g);
    // ceil(sqrt g) - 1
    return s * s == g ? s - 1 : s;
}

Int r_shifted_sqrt(Int g) {
    if (g < 1) throw DomainError("r_shifted_sqrt requires g >= 1");
    Int s = (isqrt(narrow(checked_mul(4, g))) - 1) / 2;
    while (s >= 0 && (2 * s + 1) * (2 * s + 1) > 4 * g) --s;
    while ((2 * s + 3) * (2 * s + 3) <= 4 * g) ++s;
    return s;
}

Int rank_range_top(Int g, RankRange range) {
    switch (range) {
    case RankRange::MaximalRanks: return r_max_expected(g);
    case RankRange::PaperRange: return r_shifted_sqrt(g);
    case RankRange::CeilBound: return r_ceil_bound(g);
    }
    throw DomainError("unknown rank range");
}

Int rho_at_dmax(Int g, Int r) {
    if (g < 3 || r < 1) throw DomainError("rho_at_dmax requires g >= 3, r >= 1");
    return -(r + 1 - mod_floor(g, r + 1));
}

Int kappa_at_dmax(Int g, Int r) {
    if (g < 3 || r < 1) throw DomainError("kappa_at_dmax requires g >= 3, r >= 1");
    if (r == 1) return ceil_div(g, 2);
    const Int neg_rho = r + 1 - mod_floor(g, r + 1);
    return g + r + 2 + floor_div(-narrow(checked_mul(g, r)), r + 1) + floor_neg_2sqrt(neg_rho);
}

KappaBounds kappa_bounds(Int g, Int r) {
    if (g < 3 || r < 1) throw DomainError("kappa_bounds requires g >= 3, r >= 1");
    // Scale everything by r+1: g/(r+1) + r = (g + r(r+1)) / (r+1).
    const Int base = narrow(checked_add(g, checked_mul(r, r + 1)));
    const Int two_r1 = narrow(checked_mul(2, r + 1));
    return {
        SurdFraction{Surd{base, -two_r1, r + 1}, r + 1},
        SurdFraction{Surd{base, 0, 0}, r + 1},
    };
}

bool f_criterion(Int g, Int r, Int delta) {
    if (delta < 1 || r < 1 || g < 3) throw DomainError("f_criterion requires delta >= 1, r >= 1, g >= 3");
    const Wide r1 = Wide{r} + 1;
    // f = A + B sqrt(r+1)
    const Wide a = checked_add(checked_mul(checked_mul(r1, delta), delta),
                               checked_mul(checked_sub(checked_mul(r1, r1), g), delta));
    const Wide b = checked_add(checked_mul(checked_mul(2, r1), delta), checked_mul(checked_mul(2, r1), r1));
    return surd_sign(Surd{narrow(a), narrow(b), narrow(r1)}) <= 0;
}

bool genus_threshold_holds(Int g, Int r) {
    if (r < 2) throw DomainError("genus_threshold_holds requires r >= 2");
    const Wide r1 = Wide{r} + 1;
    // g - (r+1)^2 >= (4(r+1)^2 + 2(r+1)) sqrt(r+1)
    const Wide t = checked_sub(g, checked_mul(r1, r1));
    const Wide coef = checked_add(checked_mul(checked_mul(4, r1), r1), checked_mul(2, r1));
    return surd_sign(Surd{narrow(t), narrow(checked_sub(0, coef)), narrow(r1)}) >= 0;
}

Int genus_threshold(Int r) {
    if (r < 2) throw DomainError("genus_threshold requires r >= 2");
    const Int r1 = r + 1;
    // The bound lies within one of the approximation from below using
    // integer square roots: (r+1)^{5/2} >= (r+1)^2 isqrt(r+1).
    const Int s = isqrt(r1);
    Int g = narrow(checked_add(checked_add(checked_mul(checked_mul(4 * r1, r1), s), checked_mul(r1, r1)),
                               checked_mul(2 * r1, s)));
    while (!genus_threshold_holds(g, r)) ++g;
    while (g > 0 && genus_threshold_holds(g - 1, r)) --g;
    return g;
}

bool ineq_holds_all_s(Int g, Int r, RankRange range) {
    const Int top = rank_range_top(g, range);
    if (r > top && range == RankRange::MaximalRanks)
        throw DomainError("rank " + std::to_string(r) + " has no expected maximal locus in genus " + std::to_string(g));
    const Int k = kappa_at_dmax(g, r);
    for (Int s = r + 1; s <= top; ++s)
        if (k <= kappa_at_dmax(g, s)) return false;
    return true;
}

Int scan_start(Int r) {
    if (r < 1) throw DomainError("scan_start requires r >= 1");
    // r_max_expected >= r needs g >= r^2 roughly; start a little below.
    Int g = std::max<Int>(3, r * r - r);
    while (r_max_expected(g) < r) ++g;
    return g;
}

namespace {

std::vector<Int> failing_genera(Int r, RankRange range) {
    if (r < 2) throw DomainError("G(r) is defined for r >= 2");
    std::vector<Int> out;
    const Int hi = genus_threshold(r);
    for (Int g = scan_start(r); g <= hi; ++g)
        if (!ineq_holds_all_s(g, r, range)) out.push_back(g);
    return out;
}

} // namespace

Int compute_G(Int r, RankRange range) {
    const auto fails = failing_genera(r, range);
    return fails.empty() ? scan_start(r) : fails.back() + 1;
}

std::set<Int> exceptional_genera(Int r, RankRange range) {
    const auto fails = failing_genera(r, range);
    return {fails.begin(), fails.end()};
}

std::vector<MaximalLocusRecord> enumerate_expected_maximal(Int g) {
    if (g < 3) throw DomainError("enumerate_expected_maximal requires g >= 3");

    std::vector<Int> by_filter;
    for (Int r = 1; r <= g; ++r)
        if (is_expected_maximal(g, r, d_max(g, r))) by_filter.push_back(r);

    const Int top = r_max_expected(g);
    std::vector<Int> by_range;
    for (Int r = 1; r <= top; ++r) by_range.push_back(r);
    if (by_filter != by_range)
        throw InternalError("rank range and definitional filter disagree in genus " + std::to_string(g));

    std::vector<MaximalLocusRecord> out;
    for (Int r : by_range) {
        const BNLocus locus{g, r, d_max(g, r)};
        MaximalLocusRecord rec{locus, rho(locus), kappa(locus), kappa_bounds(g, r)};
        if (rec.rho != rho_at_dmax(g, r)) throw InternalError("rho at d_max mismatch at " + to_string(locus));
        if (compare(rec.kappa.value, rec.bounds.lower) <= 0 || compare(rec.kappa.value, rec.bounds.upper) > 0)
            throw InternalError("kappa outside its bounds at " + to_string(locus));
        out.push_back(rec);
    }
    return out;
}

} // namespace bnloci
