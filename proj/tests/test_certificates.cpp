#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bnloci/certificates.hpp"

using namespace bnloci;

namespace {

const std::string kLedgerPath = BNLOCI_DATA_DIR "/known.json";

} // namespace

TEST_CASE("noncontainment_by_kappa") {
    auto c = noncontainment_by_kappa({20, 3, 17}, {20, 4, 19});
    REQUIRE(c);
    CHECK(c->rule == CertificateRule::KappaGap);
    CHECK(std::get<KappaGapWitness>(c->witness).k == 6);
    CHECK(verify(*c));

    CHECK_FALSE(noncontainment_by_kappa({24, 2, 17}, {24, 4, 23}));
    CHECK_FALSE(noncontainment_by_kappa({24, 4, 23}, {24, 2, 17}));

    auto e = noncontainment_by_kappa({34, 2, 24}, {34, 4, 31});
    REQUIRE(e);
    CHECK(std::get<KappaGapWitness>(e->witness).k == 12);

    CHECK_THROWS_AS(noncontainment_by_kappa({20, 3, 17}, {21, 4, 20}), DomainError);
    CHECK_THROWS_AS(noncontainment_by_kappa({20, 3, 18}, {20, 4, 19}), DomainError);
}

TEST_CASE("noncontainment_by_dimension") {
    auto a = noncontainment_by_dimension({24, 4, 23}, {24, 2, 17});
    REQUIRE(a);
    CHECK(std::get<DimensionWitness>(a->witness).rho_source == -1);
    CHECK(std::get<DimensionWitness>(a->witness).rho_target == -3);
    CHECK(noncontainment_by_dimension({27, 3, 23}, {27, 2, 19}));
    CHECK_FALSE(noncontainment_by_dimension({20, 3, 17}, {20, 4, 19}));
    CHECK_FALSE(noncontainment_by_dimension({24, 2, 17}, {24, 4, 23}));
}

TEST_CASE("divisor_noncontainment") {
    auto a = divisor_noncontainment({34, 2, 24}, {34, 4, 31});
    REQUIRE(a);
    CHECK(a->rule == CertificateRule::DivisorCriterion);
    CHECK(verify(*a));
    CHECK_FALSE(divisor_noncontainment({19, 2, 14}, {19, 3, 17}));
    CHECK_FALSE(divisor_noncontainment({13, 2, 10}, {13, 1, 7}));
    CHECK_THROWS_AS(divisor_noncontainment({20, 3, 17}, {20, 4, 19}), DomainError);
}

TEST_CASE("classify_numeric_type") {
    CHECK(classify_numeric_type({20, 3, 17}, {20, 3, 17}) == NumericType::Identical);
    CHECK(classify_numeric_type({20, 3, 17}, {20, 5, 21}) == NumericType::SerreDual);
    CHECK(classify_numeric_type({20, 3, 17}, {20, 4, 19}) == NumericType::DistinctInvariants);
    CHECK_THROWS_AS(classify_numeric_type({20, 3, 17}, {21, 3, 17}), DomainError);
}

TEST_CASE("trivial closure stays within degree 2g-2") {
    const auto closure = trivial_closure({10, 2, 6});
    CHECK(std::binary_search(closure.begin(), closure.end(), BNLocus{10, 2, 7}));
    CHECK(std::binary_search(closure.begin(), closure.end(), BNLocus{10, 2, 18}));
    CHECK_FALSE(std::binary_search(closure.begin(), closure.end(), BNLocus{10, 2, 19}));
    for (const auto& l : closure) CHECK(l.d <= 18);
}

TEST_CASE("pair_status") {
    const Ledger known = Ledger::load(kLedgerPath);
    const Ledger empty;

    auto a = pair_status({20, 1, 10}, {20, 2, 15}, empty);
    CHECK(a.state == PairState::Established);
    CHECK(a.certificate->rule == CertificateRule::KappaGap);

    CHECK(pair_status({21, 3, 18}, {21, 4, 20}, known).state == PairState::Open);

    // rho = -1 versus rho = -2: dimension applies before the ledger is consulted.
    auto c = pair_status({20, 2, 15}, {20, 1, 10}, known);
    CHECK(c.state == PairState::Established);
    CHECK(c.certificate->rule == CertificateRule::Dimension);

    auto d = pair_status({20, 3, 17}, {20, 1, 10}, known);
    CHECK(d.state == PairState::Established);
    CHECK(d.certificate->rule == CertificateRule::External);
    CHECK(pair_status({20, 3, 17}, {20, 1, 10}, empty).state == PairState::Open);

    // A trivially contained target.
    CHECK(pair_status({21, 4, 19}, {21, 3, 18}, empty).state == PairState::TrivialContainment);
    CHECK(pair_status({20, 3, 16}, {20, 3, 17}, empty).state == PairState::TrivialContainment);
}

TEST_CASE("equidimensional flip on divisors") {
    // g = 23: M^1_{23,12}, M^2_{23,17}, M^3_{23,20} all have rho = -1.
    const Ledger empty;
    const BNLocus a{23, 2, 17}, b{23, 3, 20};
    REQUIRE(rho(a) == -1);
    REQUIRE(rho(b) == -1);
    const auto ab = pair_status(a, b, empty);
    const auto ba = pair_status(b, a, empty);
    CHECK(ab.state == PairState::Established);
    CHECK(ba.state == PairState::Established);
    const bool one_flip = (ab.certificate->rule == CertificateRule::EquidimensionalFlip) !=
                          (ba.certificate->rule == CertificateRule::EquidimensionalFlip);
    CHECK(one_flip);
}

TEST_CASE("corrupted witnesses fail verification") {
    auto c = *noncontainment_by_kappa({20, 3, 17}, {20, 4, 19});
    auto bad = c;
    std::get<KappaGapWitness>(bad.witness).k = 7;
    CHECK_FALSE(verify(bad));
    bad = c;
    bad.target = {20, 2, 15};
    CHECK_FALSE(verify(bad));
    bad = c;
    bad.rule = CertificateRule::Dimension;
    CHECK_FALSE(verify(bad));

    auto dim = *noncontainment_by_dimension({24, 4, 23}, {24, 2, 17});
    std::get<DimensionWitness>(dim.witness).rho_target = -4;
    CHECK_FALSE(verify(dim));

    auto div = *divisor_noncontainment({34, 2, 24}, {34, 4, 31});
    std::get<DivisorWitness>(div.witness).ceil_term = 2;
    CHECK_FALSE(verify(div));

    NonContainmentCertificate ext{{20, 3, 17}, {20, 1, 10}, CertificateRule::External, ExternalWitness{""}};
    CHECK_FALSE(verify(ext));
}

TEST_CASE("every certificate in genus reports re-verifies") {
    const Ledger known = Ledger::load(kLedgerPath);
    for (Int g = 3; g <= 120; ++g) {
        const auto report = genus_report(g, known);
        for (const auto& [pair, st] : report.pairs) {
            if (st.certificate) REQUIRE(verify(*st.certificate));
            // Never both established and trivially contained.
            REQUIRE((st.state != PairState::Established || st.certificate.has_value()));
        }
    }
}

TEST_CASE("genus reports") {
    const Ledger known = Ledger::load(kLedgerPath);
    const auto r20 = genus_report(20, known);
    CHECK(r20.verified());
    CHECK(r20.pairs.size() == 12);

    const auto r21 = genus_report(21, known);
    REQUIRE(r21.open_pairs.size() == 1);
    CHECK(r21.open_pairs.front() == std::pair{BNLocus{21, 3, 18}, BNLocus{21, 4, 20}});

    const auto bare = genus_report(20, Ledger{});
    CHECK_FALSE(bare.verified());
    const auto& open = bare.open_pairs;
    CHECK(std::find(open.begin(), open.end(), std::pair{BNLocus{20, 3, 17}, BNLocus{20, 1, 10}}) != open.end());
    const auto& key = bare.pairs.at({BNLocus{20, 3, 17}, BNLocus{20, 4, 19}});
    CHECK(key.state == PairState::Established);
    CHECK(key.certificate->rule == CertificateRule::KappaGap);
}

TEST_CASE("kappa engine subsumes the same-rho Clifford comparison") {
    for (Int g = 3; g <= 80; ++g) {
        std::vector<BNLocus> loci;
        for (Int r = 1; 2 * r <= g - 1; ++r)
            for (Int d = 2 * r; d <= g - 1; ++d)
                if (rho(g, r, d) < 0 && g + 1 <= d / r + d) loci.push_back({g, r, d});
        for (const auto& a : loci)
            for (const auto& b : loci) {
                if (rho(a) != rho(b) || clifford_index(a.r, a.d) >= clifford_index(b.r, b.d)) continue;
                REQUIRE_MESSAGE(noncontainment_by_kappa(a, b).has_value(), to_string(a) << " vs " << to_string(b));
            }
    }
}

TEST_CASE("rho = -2 sources against divisors") {
    for (Int g = 10; g <= 150; ++g) {
        std::vector<BNLocus> minus1, minus2;
        for (Int r = 1; 2 * r <= g - 1; ++r)
            for (Int d = 2 * r; d <= g - 1; ++d) {
                if (rho(g, r, d) == -1) minus1.push_back({g, r, d});
                if (rho(g, r, d) == -2 && r >= 2) minus2.push_back({g, r, d});
            }
        for (const auto& s : minus2)
            for (const auto& t : minus1) {
                if (clifford_index(t.r, t.d) - clifford_index(s.r, s.d) < 2) continue;
                REQUIRE_MESSAGE(divisor_noncontainment(s, t).has_value(), to_string(s) << " vs " << to_string(t));
            }
    }
}

TEST_CASE("ledger parsing") {
    CHECK(Ledger::parse("").empty());
    CHECK(Ledger::parse("[]").empty());
    const auto lines = Ledger::parse(
        "{\"g\": 20, \"source\": [1, 10], \"target\": [2, 15], \"cite\": \"x\"}\n"
        "\n"
        "{\"g\": 20, \"source\": [2, 15], \"target\": [1, 10], \"cite\": \"y\"}\n");
    CHECK(lines.size() == 2);
    CHECK(lines.lookup({20, 2, 15}, {20, 1, 10}) == "y");
    CHECK_FALSE(lines.lookup({20, 1, 10}, {20, 3, 17}).has_value());

    CHECK_THROWS_AS(Ledger::parse("[{\"g\": 20, \"source\": [1, 10], \"target\": [2, 15], \"cite\": \"x\", \"extra\": 1}]"),
                    LedgerError);
    CHECK_THROWS_AS(Ledger::parse("[{\"g\": 20, \"source\": [1, 10], \"target\": [2, 15]}]"), LedgerError);
    CHECK_THROWS_AS(Ledger::parse("[{\"g\": 20, \"source\": [1, 10], \"target\": [2, 15], \"cite\": \"x\"},"
                                  " {\"g\": 20, \"source\": [1, 10], \"target\": [2, 15], \"cite\": \"z\"}]"),
                    LedgerError);
    CHECK_THROWS_AS(Ledger::parse("[{\"g\": 20, \"source\": [1], \"target\": [2, 15], \"cite\": \"x\"}]"), LedgerError);
    CHECK_THROWS_AS(Ledger::parse("[{\"g\": \"20\", \"source\": [1, 10], \"target\": [2, 15], \"cite\": \"x\"}]"),
                    LedgerError);
    CHECK_THROWS_AS(Ledger::parse("[{"), LedgerError);
    CHECK_THROWS_AS(Ledger::load("/nonexistent/ledger.json"), LedgerError);
    CHECK(Ledger::load(kLedgerPath).size() == 22);
}
