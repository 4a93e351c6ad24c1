#pragma once

// Non-containment certificates between Brill-Noether loci of one genus and
// per-genus reports on the maximality of the expected maximal loci.
//
// Only non-containment is ever proven. A pair with no certificate is Open,
// never "contained", unless it is a trivial containment.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bnloci/bn_core.hpp"
#include "bnloci/ledger.hpp"
#include "bnloci/maximal_loci.hpp"

namespace bnloci {

enum class CertificateRule { KappaGap, Dimension, DivisorCriterion, EquidimensionalFlip, External };

std::string to_string(CertificateRule rule);

struct NonContainmentCertificate;

// The general k-gonal curve with k = kappa(source) lies in source, not in target.
struct KappaGapWitness {
    Int k = 0;
    Int target_kappa = 0;
};

// Codimension -rho(source) < -rho(target), with the latter exact (<= 3).
struct DimensionWitness {
    Int rho_source = 0;
    Int rho_target = 0;
};

// gamma(target) > gamma(source) + ceil(2 sqrt(-rho(source))) - 2, rho(target) = -1.
struct DivisorWitness {
    Int gamma_source = 0;
    Int gamma_target = 0;
    Int ceil_term = 0;
    Int rho_source = 0;
};

// Both loci are irreducible divisors; non-containment one way gives the other.
struct FlipWitness {
    std::shared_ptr<const NonContainmentCertificate> reverse;
};

struct ExternalWitness {
    std::string cite;
};

using Witness = std::variant<KappaGapWitness, DimensionWitness, DivisorWitness, FlipWitness, ExternalWitness>;

struct NonContainmentCertificate {
    BNLocus source;
    BNLocus target;
    CertificateRule rule = CertificateRule::KappaGap;
    Witness witness;
};

/// Re-check a certificate from its witness alone, recomputing kappa, rho and
/// gamma. External certificates pass when the citation is non-empty.
bool verify(const NonContainmentCertificate& cert);

std::optional<NonContainmentCertificate> noncontainment_by_kappa(const BNLocus& source, const BNLocus& target);
std::optional<NonContainmentCertificate> noncontainment_by_dimension(const BNLocus& source, const BNLocus& target);

/// Requires rho(target) = -1. Source rank 1 is left to the kappa rule.
std::optional<NonContainmentCertificate> divisor_noncontainment(const BNLocus& source, const BNLocus& target);

enum class NumericType { Identical, SerreDual, DistinctInvariants };

std::string to_string(NumericType type);

NumericType classify_numeric_type(const BNLocus& a, const BNLocus& b);

/// Every locus reachable from `source` by repeated trivial specialization
/// with degree at most 2g - 2.
std::vector<BNLocus> trivial_closure(const BNLocus& source);

enum class PairState { Established, TrivialContainment, Open };

std::string to_string(PairState state);

struct PairStatus {
    PairState state = PairState::Open;
    std::optional<NonContainmentCertificate> certificate;
};

/// Trivial containment first, then the first certificate in the order
/// KappaGap, Dimension, DivisorCriterion, EquidimensionalFlip, External.
PairStatus pair_status(const BNLocus& source, const BNLocus& target, const Ledger& ledger);

struct GenusReport {
    Int g = 0;
    std::vector<MaximalLocusRecord> loci;
    // Keyed by (source, target), ordered by (r, d).
    std::map<std::pair<BNLocus, BNLocus>, PairStatus> pairs;
    std::vector<std::pair<BNLocus, BNLocus>> open_pairs;

    bool verified() const { return open_pairs.empty(); }
};

GenusReport genus_report(Int g, const Ledger& ledger);

} // namespace bnloci
