#include "bnloci/selftest.hpp"

#include <functional>

#include "bnloci/certificates.hpp"
#include "bnloci/maximal_loci.hpp"

namespace bnloci {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.checks;
        if (ok) return;
        if (result_.failures++ == 0) result_.first_failure = describe();
    }

    // Evaluates `body`, turning any library exception into a failure.
    void guarded(const std::function<void()>& body, const std::string& where) {
        try {
            body();
        } catch (const std::exception& err) {
            check(false, [&] { return where + ": " + err.what(); });
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

template <typename Fn>
void for_each_closed_range_triple(Int gmax, Fn&& fn) {
    for (Int g = 3; g <= gmax; ++g)
        for (Int r = 1; 2 * r <= g - 1; ++r)
            for (Int d = 2 * r; d <= g - 1; ++d)
                if (rho(g, r, d) < 0) fn(g, r, d);
}

SuiteResult oracle_equivalence(const SelftestOptions& opt) {
    Suite s("oracle_equivalence");
    for_each_closed_range_triple(opt.gmax, [&](Int g, Int r, Int d) {
        s.guarded(
            [&] {
                Int closed = kappa_closed(g, r, d).value;
                if (opt.inject_fault && *opt.inject_fault == BNLocus{g, r, d}) ++closed;
                const Int brute = kappa_brute(g, r, d).value;
                s.check(closed == brute, [&] {
                    return "kappa_closed" + to_string(BNLocus{g, r, d}) + " = " + std::to_string(closed) +
                           " but brute force gives " + std::to_string(brute);
                });
            },
            to_string(BNLocus{g, r, d}));
    });
    return s.take();
}

SuiteResult rho_k_properties(const SelftestOptions& opt) {
    Suite s("rho_k_monotone_and_kappa_at_least_2");
    for_each_closed_range_triple(opt.gmax, [&](Int g, Int r, Int d) {
        s.guarded(
            [&] {
                Int prev = rho_pflueger(g, r, d, 2);
                s.check(prev >= clifford_index(r, d), [&] { return "rho_2 < d - 2r at " + to_string(BNLocus{g, r, d}); });
                for (Int k = 3; k <= g + 1; ++k) {
                    const Int cur = rho_pflueger(g, r, d, k);
                    s.check(cur <= prev, [&] { return "rho_k increases at " + to_string(BNLocus{g, r, d}); });
                    prev = cur;
                }
                s.check(rho_pflueger(g, r, d, g + 1) == rho(g, r, d),
                        [&] { return "rho_k does not stabilize at " + to_string(BNLocus{g, r, d}); });
                s.check(kappa(g, r, d).value >= 2, [&] { return "kappa < 2 at " + to_string(BNLocus{g, r, d}); });
            },
            to_string(BNLocus{g, r, d}));
    });
    return s.take();
}

SuiteResult serre_duality(const SelftestOptions& opt) {
    Suite s("serre_duality");
    for (Int g = 3; g <= opt.gmax; ++g) {
        for (Int r = 1; r <= g; ++r) {
            for (Int d = 2 * r; d <= 2 * g - 2; ++d) {
                if (rho(g, r, d) >= 0 || g - d + r - 1 < 1) continue;
                const BNLocus a{g, r, d};
                s.guarded(
                    [&] {
                        const BNLocus b = serre_dual(a);
                        s.check(serre_dual(b) == a, [&] { return "serre_dual not an involution at " + to_string(a); });
                        s.check(rho(a) == rho(b), [&] { return "rho not dual invariant at " + to_string(a); });
                        for (Int k = 2; k <= (g + 3) / 2; ++k)
                            s.check(rho_pflueger(g, a.r, a.d, k) == rho_pflueger(g, b.r, b.d, k),
                                    [&] { return "rho_k differs on dual pair at " + to_string(a); });
                        if (g - d + r >= 1)
                            s.check(kappa(a).value == kappa_brute(g, r, d).value,
                                    [&] { return "kappa dispatch differs from brute force at " + to_string(a); });
                    },
                    to_string(a));
            }
        }
    }
    return s.take();
}

SuiteResult maximal_formulas(const SelftestOptions& opt) {
    Suite s("maximal_loci_formulas");
    for (Int g = 3; g <= opt.gmax; ++g) {
        s.guarded(
            [&] {
                for (const auto& rec : enumerate_expected_maximal(g)) {
                    const Int r = rec.locus.r;
                    s.check(rec.rho == rho_at_dmax(g, r), [&] { return "rho_at_dmax mismatch at " + to_string(rec.locus); });
                    s.check(kappa_at_dmax(g, r) == rec.kappa.value,
                            [&] { return "kappa_at_dmax mismatch at " + to_string(rec.locus); });
                    s.check(kappa_brute(g, r, rec.locus.d).value == rec.kappa.value,
                            [&] { return "kappa brute mismatch at " + to_string(rec.locus); });
                    s.check(compare(rec.kappa.value, rec.bounds.lower) > 0 && compare(rec.kappa.value, rec.bounds.upper) <= 0,
                            [&] { return "bounds violated at " + to_string(rec.locus); });
                }
            },
            "genus " + std::to_string(g));
    }
    return s.take();
}

SuiteResult certificate_reverification(const SelftestOptions& opt) {
    Suite s("certificate_reverification");
    const Ledger empty;
    for (Int g = 3; g <= opt.gmax; ++g) {
        s.guarded(
            [&] {
                const auto report = genus_report(g, empty);
                for (const auto& [pair, status] : report.pairs) {
                    if (!status.certificate) continue;
                    auto cert = *status.certificate;
                    s.check(verify(cert), [&] { return "certificate fails " + to_string(pair.first) + " -> " + to_string(pair.second); });
                    // A corrupted witness must be rejected.
                    if (auto* w = std::get_if<KappaGapWitness>(&cert.witness)) {
                        w->k += 1;
                        s.check(!verify(cert), [&] { return "corrupted kappa witness accepted at " + to_string(pair.first); });
                    } else if (auto* w = std::get_if<DimensionWitness>(&cert.witness)) {
                        w->rho_source -= 1;
                        s.check(!verify(cert), [&] { return "corrupted dimension witness accepted at " + to_string(pair.first); });
                    }
                }
            },
            "genus " + std::to_string(g));
    }
    return s.take();
}

} // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
    if (options.gmax < 10) throw DomainError("selftest requires gmax >= 10");
    return {
        oracle_equivalence(options),
        rho_k_properties(options),
        serre_duality(options),
        maximal_formulas(options),
        certificate_reverification(options),
    };
}

} // namespace bnloci
