#include "bnloci/certificates.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bnloci {

std::string to_string(CertificateRule rule) {
    switch (rule) {
    case CertificateRule::KappaGap: return "kappa_gap";
    case CertificateRule::Dimension: return "dimension";
    case CertificateRule::DivisorCriterion: return "divisor_criterion";
    case CertificateRule::EquidimensionalFlip: return "equidimensional_flip";
    case CertificateRule::External: return "external";
    }
    return "unknown";
}

std::string to_string(NumericType type) {
    switch (type) {
    case NumericType::Identical: return "identical";
    case NumericType::SerreDual: return "serre_dual";
    case NumericType::DistinctInvariants: return "distinct_invariants";
    }
    return "unknown";
}

std::string to_string(PairState state) {
    switch (state) {
    case PairState::Established: return "established";
    case PairState::TrivialContainment: return "trivial_containment";
    case PairState::Open: return "open";
    }
    return "unknown";
}

namespace {

void require_same_genus(const BNLocus& a, const BNLocus& b) {
    if (a.g != b.g) throw DomainError("loci " + to_string(a) + " and " + to_string(b) + " have different genus");
}

void require_admissible(const BNLocus& l) {
    if (rho(l) >= 0) throw DomainError("locus " + to_string(l) + " has rho >= 0");
}

bool divisor_inequality(const BNLocus& source, Int gamma_target, Int ceil_term) {
    const Int gamma_source = clifford_index(source.r, source.d);
    return gamma_target > gamma_source + ceil_term - 2;
}

bool source_in_second_case(const BNLocus& source) {
    return source.g + 1 <= source.d / source.r + source.d;
}

bool verify_unchecked(const NonContainmentCertificate& cert) {
    const auto& src = cert.source;
    const auto& tgt = cert.target;
    if (src.g != tgt.g || src == tgt) return false;
    if (rho(src) >= 0 || rho(tgt) >= 0) return false;

    switch (cert.rule) {
    case CertificateRule::KappaGap: {
        const auto* w = std::get_if<KappaGapWitness>(&cert.witness);
        return w && kappa(src).value == w->k && kappa(tgt).value == w->target_kappa && w->k > w->target_kappa;
    }
    case CertificateRule::Dimension: {
        const auto* w = std::get_if<DimensionWitness>(&cert.witness);
        return w && rho(src) == w->rho_source && rho(tgt) == w->rho_target && -w->rho_source < -w->rho_target &&
               -w->rho_target <= 3;
    }
    case CertificateRule::DivisorCriterion: {
        const auto* w = std::get_if<DivisorWitness>(&cert.witness);
        if (!w || src.r < 2 || rho(tgt) != -1) return false;
        return w->rho_source == rho(src) && w->gamma_source == clifford_index(src.r, src.d) &&
               w->gamma_target == clifford_index(tgt.r, tgt.d) && w->ceil_term == ceil_2sqrt(-w->rho_source) &&
               source_in_second_case(src) && divisor_inequality(src, w->gamma_target, w->ceil_term);
    }
    case CertificateRule::EquidimensionalFlip: {
        const auto* w = std::get_if<FlipWitness>(&cert.witness);
        if (!w || !w->reverse) return false;
        const auto& rev = *w->reverse;
        return rho(src) == -1 && rho(tgt) == -1 && rev.source == tgt && rev.target == src &&
               rev.rule != CertificateRule::EquidimensionalFlip && verify(rev);
    }
    case CertificateRule::External: {
        const auto* w = std::get_if<ExternalWitness>(&cert.witness);
        return w && !w->cite.empty();
    }
    }
    return false;
}

} // namespace

bool verify(const NonContainmentCertificate& cert) {
    try {
        return verify_unchecked(cert);
    } catch (const DomainError&) {
        return false;
    }
}

std::optional<NonContainmentCertificate> noncontainment_by_kappa(const BNLocus& source, const BNLocus& target) {
    require_same_genus(source, target);
    require_admissible(source);
    require_admissible(target);
    const Int ks = kappa(source).value;
    const Int kt = kappa(target).value;
    if (ks <= kt) return std::nullopt;
    return NonContainmentCertificate{source, target, CertificateRule::KappaGap, KappaGapWitness{ks, kt}};
}

std::optional<NonContainmentCertificate> noncontainment_by_dimension(const BNLocus& source, const BNLocus& target) {
    require_same_genus(source, target);
    require_admissible(source);
    require_admissible(target);
    const Int rs = rho(source);
    const Int rt = rho(target);
    // Codimension is exact only for -3 <= rho <= -1.
    if (!(-rs < -rt && -rt <= 3)) return std::nullopt;
    return NonContainmentCertificate{source, target, CertificateRule::Dimension, DimensionWitness{rs, rt}};
}

std::optional<NonContainmentCertificate> divisor_noncontainment(const BNLocus& source, const BNLocus& target) {
    require_same_genus(source, target);
    if (rho(target) != -1) throw DomainError("divisor criterion requires rho(target) = -1");
    require_admissible(source);
    if (source.r < 2 || !source_in_second_case(source)) return std::nullopt;

    const Int rs = rho(source);
    const Int ceil_term = ceil_2sqrt(-rs);
    const Int gt = clifford_index(target.r, target.d);
    if (!divisor_inequality(source, gt, ceil_term)) return std::nullopt;
    return NonContainmentCertificate{source, target, CertificateRule::DivisorCriterion,
                                     DivisorWitness{clifford_index(source.r, source.d), gt, ceil_term, rs}};
}

NumericType classify_numeric_type(const BNLocus& a, const BNLocus& b) {
    require_same_genus(a, b);
    if (a == b) return NumericType::Identical;
    if (a.g - a.d + a.r - 1 >= 0 && 2 * a.g - 2 - a.d >= 0 && serre_dual(a) == b) return NumericType::SerreDual;
    if (rho(a) == rho(b) && clifford_index(a.r, a.d) == clifford_index(b.r, b.d))
        throw InternalError("equal rho and gamma but neither identical nor Serre dual: " + to_string(a) + ", " +
                            to_string(b));
    return NumericType::DistinctInvariants;
}

std::vector<BNLocus> trivial_closure(const BNLocus& source) {
    std::set<BNLocus> seen{source};
    std::deque<BNLocus> queue{source};
    while (!queue.empty()) {
        const BNLocus cur = queue.front();
        queue.pop_front();
        for (const auto& next : trivial_specializations(cur.g, cur.r, cur.d)) {
            if (next.d > 2 * next.g - 2) continue;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    seen.erase(source);
    return {seen.begin(), seen.end()};
}

namespace {

std::optional<NonContainmentCertificate> first_certificate(const BNLocus& source, const BNLocus& target,
                                                           const Ledger& ledger, bool allow_flip) {
    if (auto c = noncontainment_by_kappa(source, target)) return c;
    if (auto c = noncontainment_by_dimension(source, target)) return c;
    if (rho(target) == -1)
        if (auto c = divisor_noncontainment(source, target)) return c;
    if (allow_flip && rho(source) == -1 && rho(target) == -1 && source != target) {
        if (auto rev = first_certificate(target, source, ledger, false)) {
            return NonContainmentCertificate{
                source, target, CertificateRule::EquidimensionalFlip,
                FlipWitness{std::make_shared<const NonContainmentCertificate>(std::move(*rev))}};
        }
    }
    if (auto cite = ledger.lookup(source, target))
        return NonContainmentCertificate{source, target, CertificateRule::External, ExternalWitness{*cite}};
    return std::nullopt;
}

} // namespace

PairStatus pair_status(const BNLocus& source, const BNLocus& target, const Ledger& ledger) {
    require_same_genus(source, target);
    require_admissible(source);
    require_admissible(target);
    if (source == target) throw DomainError("pair_status needs two distinct loci");

    const auto closure = trivial_closure(source);
    if (std::binary_search(closure.begin(), closure.end(), target)) return {PairState::TrivialContainment, std::nullopt};

    if (auto cert = first_certificate(source, target, ledger, true)) {
        if (!verify(*cert)) throw InternalError("emitted certificate failed re-verification");
        return {PairState::Established, std::move(cert)};
    }
    return {PairState::Open, std::nullopt};
}

GenusReport genus_report(Int g, const Ledger& ledger) {
    GenusReport report;
    report.g = g;
    report.loci = enumerate_expected_maximal(g);
    for (const auto& a : report.loci) {
        for (const auto& b : report.loci) {
            if (a.locus == b.locus) continue;
            auto status = pair_status(a.locus, b.locus, ledger);
            if (status.state == PairState::Open) report.open_pairs.emplace_back(a.locus, b.locus);
            report.pairs.emplace(std::pair{a.locus, b.locus}, std::move(status));
        }
    }
    return report;
}

} // namespace bnloci
