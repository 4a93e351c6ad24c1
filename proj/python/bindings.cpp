#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "bnloci/bn_core.hpp"
#include "bnloci/certificates.hpp"
#include "bnloci/exact_arith.hpp"
#include "bnloci/ledger.hpp"
#include "bnloci/maximal_loci.hpp"

namespace py = pybind11;
using namespace bnloci;

namespace {

py::tuple locus_tuple(const BNLocus& l) { return py::make_tuple(l.g, l.r, l.d); }

py::dict certificate_dict(const NonContainmentCertificate& c) {
    py::dict out;
    out["source"] = locus_tuple(c.source);
    out["target"] = locus_tuple(c.target);
    out["rule"] = to_string(c.rule);
    std::visit(
        [&](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, KappaGapWitness>) {
                out["k"] = w.k;
                out["target_kappa"] = w.target_kappa;
            } else if constexpr (std::is_same_v<T, DimensionWitness>) {
                out["rho_source"] = w.rho_source;
                out["rho_target"] = w.rho_target;
            } else if constexpr (std::is_same_v<T, DivisorWitness>) {
                out["gamma_source"] = w.gamma_source;
                out["gamma_target"] = w.gamma_target;
                out["ceil_term"] = w.ceil_term;
            } else if constexpr (std::is_same_v<T, FlipWitness>) {
                if (w.reverse) out["reverse"] = certificate_dict(*w.reverse);
            } else {
                out["cite"] = w.cite;
            }
        },
        c.witness);
    return out;
}

py::object status_object(const PairStatus& st) {
    py::dict out;
    out["status"] = to_string(st.state);
    out["certificate"] = st.certificate ? py::object(certificate_dict(*st.certificate)) : py::none();
    return std::move(out);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Brill-Noether loci, Pflueger's rho_k, the gonality invariant kappa and non-containment certificates";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
    py::register_exception<LedgerError>(m, "LedgerError", PyExc_ValueError);

    m.def("isqrt", &isqrt, py::arg("n"));
    m.def("floor_neg_2sqrt", &floor_neg_2sqrt, py::arg("n"));
    m.def("ceil_2sqrt", &ceil_2sqrt, py::arg("n"));
    m.def(
        "surd_sign", [](Int a, Int b, Int mm) { return surd_sign(Surd{a, b, mm}); }, py::arg("a"), py::arg("b"),
        py::arg("m"), "Exact sign of a + b*sqrt(m)");

    py::enum_<KappaBranch>(m, "KappaBranch")
        .value("ClosedFirstCase", KappaBranch::ClosedFirstCase)
        .value("ClosedSecondCase", KappaBranch::ClosedSecondCase)
        .value("BruteForce", KappaBranch::BruteForce)
        .value("SerreDualReduction", KappaBranch::SerreDualReduction);

    py::class_<KappaResult>(m, "KappaResult")
        .def_readonly("value", &KappaResult::value)
        .def_readonly("branch", &KappaResult::branch)
        .def_readonly("rho", &KappaResult::rho)
        .def_readonly("gamma", &KappaResult::gamma)
        .def("__repr__", [](const KappaResult& k) {
            return "KappaResult(value=" + std::to_string(k.value) + ", branch=" + to_string(k.branch) + ")";
        });

    m.def("rho", py::overload_cast<Int, Int, Int>(&rho), py::arg("g"), py::arg("r"), py::arg("d"));
    m.def("clifford_index", &clifford_index, py::arg("r"), py::arg("d"));
    m.def("r_prime", &r_prime, py::arg("g"), py::arg("r"), py::arg("d"));
    m.def("rho_pflueger", &rho_pflueger, py::arg("g"), py::arg("r"), py::arg("d"), py::arg("k"));
    m.def("kappa", py::overload_cast<Int, Int, Int>(&kappa), py::arg("g"), py::arg("r"), py::arg("d"));
    m.def("kappa_closed", &kappa_closed, py::arg("g"), py::arg("r"), py::arg("d"));
    m.def("kappa_brute", &kappa_brute, py::arg("g"), py::arg("r"), py::arg("d"));
    m.def(
        "serre_dual", [](Int g, Int r, Int d) { return locus_tuple(serre_dual(g, r, d)); }, py::arg("g"),
        py::arg("r"), py::arg("d"));
    m.def(
        "trivial_specializations",
        [](Int g, Int r, Int d) {
            py::list out;
            for (const auto& l : trivial_specializations(g, r, d)) out.append(locus_tuple(l));
            return out;
        },
        py::arg("g"), py::arg("r"), py::arg("d"));

    py::enum_<RankRange>(m, "RankRange")
        .value("MaximalRanks", RankRange::MaximalRanks)
        .value("PaperRange", RankRange::PaperRange)
        .value("CeilBound", RankRange::CeilBound);

    py::class_<MaximalLocusRecord>(m, "MaximalLocusRecord")
        .def_property_readonly("locus", [](const MaximalLocusRecord& r) { return locus_tuple(r.locus); })
        .def_readonly("rho", &MaximalLocusRecord::rho)
        .def_readonly("kappa", &MaximalLocusRecord::kappa)
        .def_property_readonly("lower_bound_approx",
                               [](const MaximalLocusRecord& r) { return static_cast<double>(approximate(r.bounds.lower)); })
        .def_property_readonly("upper_bound_approx",
                               [](const MaximalLocusRecord& r) { return static_cast<double>(approximate(r.bounds.upper)); });

    m.def("d_max", &d_max, py::arg("g"), py::arg("r"));
    m.def("is_expected_maximal", &is_expected_maximal, py::arg("g"), py::arg("r"), py::arg("d"));
    m.def("r_max_expected", &r_max_expected, py::arg("g"));
    m.def("enumerate_expected_maximal", &enumerate_expected_maximal, py::arg("g"));
    m.def("rho_at_dmax", &rho_at_dmax, py::arg("g"), py::arg("r"));
    m.def("kappa_at_dmax", &kappa_at_dmax, py::arg("g"), py::arg("r"));
    m.def("f_criterion", &f_criterion, py::arg("g"), py::arg("r"), py::arg("delta"));
    m.def("genus_threshold_holds", &genus_threshold_holds, py::arg("g"), py::arg("r"));
    m.def("ineq_holds_all_s", &ineq_holds_all_s, py::arg("g"), py::arg("r"),
          py::arg("s_range") = RankRange::MaximalRanks);
    m.def("compute_G", &compute_G, py::arg("r"), py::arg("s_range") = RankRange::MaximalRanks);
    m.def("exceptional_genera", &exceptional_genera, py::arg("r"), py::arg("s_range") = RankRange::MaximalRanks);

    py::class_<Ledger>(m, "Ledger")
        .def(py::init<>())
        .def_static("parse", &Ledger::parse, py::arg("text"))
        .def_static("load", &Ledger::load, py::arg("path"))
        .def("__len__", &Ledger::size);

    m.def(
        "pair_status",
        [](std::tuple<Int, Int, Int> s, std::tuple<Int, Int, Int> t, const Ledger& ledger) {
            auto [g1, r1, d1] = s;
            auto [g2, r2, d2] = t;
            return status_object(pair_status({g1, r1, d1}, {g2, r2, d2}, ledger));
        },
        py::arg("source"), py::arg("target"), py::arg("ledger") = Ledger{});

    m.def(
        "genus_report",
        [](Int g, const Ledger& ledger) {
            const auto report = genus_report(g, ledger);
            py::dict out;
            out["g"] = report.g;
            py::list loci, pairs, open;
            for (const auto& rec : report.loci) loci.append(py::make_tuple(rec.locus.r, rec.locus.d));
            for (const auto& [key, st] : report.pairs) {
                py::dict p = status_object(st);
                p["source"] = py::make_tuple(key.first.r, key.first.d);
                p["target"] = py::make_tuple(key.second.r, key.second.d);
                pairs.append(p);
            }
            for (const auto& [s, t] : report.open_pairs)
                open.append(py::make_tuple(py::make_tuple(s.r, s.d), py::make_tuple(t.r, t.d)));
            out["loci"] = loci;
            out["pairs"] = pairs;
            out["open_pairs"] = open;
            out["verified"] = report.verified();
            return out;
        },
        py::arg("g"), py::arg("ledger") = Ledger{});
}
