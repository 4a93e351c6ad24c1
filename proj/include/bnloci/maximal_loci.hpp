#pragma once

// Expected maximal Brill-Noether loci M^r_g = M^r_{g, d_max(g,r)} and the
// machinery for comparing kappa across ranks.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bnloci/bn_core.hpp"

namespace bnloci {

/// Which higher ranks s > r are compared against in ineq_holds_all_s.
enum class RankRange {
    /// s up to r_max_expected(g): exactly the ranks with an expected maximal locus.
    MaximalRanks,
    /// s up to floor(sqrt(g) - 1/2).
    PaperRange,
    /// s up to ceil(sqrt(g) - 1), the coarse rank bound. Also counts ranks
    /// whose d_max locus is trivially contained in a lower-rank one.
    CeilBound,
};

std::string to_string(RankRange range);
std::optional<RankRange> parse_rank_range(const std::string& name);

struct KappaBounds {
    SurdFraction lower;  // exclusive: lower < kappa
    SurdFraction upper;  // inclusive: kappa <= upper
};

struct MaximalLocusRecord {
    BNLocus locus;
    Int rho = 0;
    KappaResult kappa;
    KappaBounds bounds;
};

/// r + ceil(gr/(r+1)) - 1, the largest d with rho(g,r,d) < 0.
Int d_max(Int g, Int r);

bool is_expected_maximal(Int g, Int r, Int d);

/// Top rank of an expected maximal locus in genus g.
Int r_max_expected(Int g);

/// ceil(sqrt(g) - 1)
Int r_ceil_bound(Int g);

/// Largest s with (2s+1)^2 <= 4g, i.e. floor(sqrt(g) - 1/2).
Int r_shifted_sqrt(Int g);

Int rank_range_top(Int g, RankRange range);

/// One record per rank 1..r_max_expected(g). The rank set is derived twice
/// (closed range and definitional filter); disagreement is an InternalError.
std::vector<MaximalLocusRecord> enumerate_expected_maximal(Int g);

/// -(r + 1 - (g mod (r+1)))
Int rho_at_dmax(Int g, Int r);

/// kappa(g, r, d_max(g,r)) by the specialized formula; ceil(g/2) for r = 1.
Int kappa_at_dmax(Int g, Int r);

/// g/(r+1) + r - 2 sqrt(r+1) < kappa <= g/(r+1) + r
KappaBounds kappa_bounds(Int g, Int r);

/// f(g,r,delta) <= 0, decided exactly. True implies M^r_g is not contained
/// in M^{r+delta}_g.
bool f_criterion(Int g, Int r, Int delta);

/// g >= 4(r+1)^{5/2} + (r+1)^2 + 2(r+1)^{3/2}, decided exactly.
bool genus_threshold_holds(Int g, Int r);

/// Smallest g for which genus_threshold_holds(g, r).
Int genus_threshold(Int r);

/// kappa_at_dmax(g,r) > kappa_at_dmax(g,s) for every r < s <= top of range.
bool ineq_holds_all_s(Int g, Int r, RankRange range = RankRange::MaximalRanks);

/// Smallest genus at which rank r has an expected maximal locus.
Int scan_start(Int r);

/// One past the largest genus in [scan_start(r), genus_threshold(r)] where
/// ineq_holds_all_s fails; scan_start(r) if none fails.
Int compute_G(Int r, RankRange range = RankRange::MaximalRanks);

/// Genera below compute_G(r) in the scan where ineq_holds_all_s fails.
std::set<Int> exceptional_genera(Int r, RankRange range = RankRange::MaximalRanks);

} // namespace bnloci
