#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bnloci/bn_core.hpp"
#include "bnloci/certificates.hpp"
#include "bnloci/ledger.hpp"
#include "bnloci/maximal_loci.hpp"
#include "bnloci/selftest.hpp"

namespace bnloci::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Output documents

struct Table {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

struct Document {
    std::string command;
    json inputs = json::object();
    json result;
    // Shown in table format. The first table is also the csv payload.
    std::vector<Table> tables;
    std::vector<std::string> notes;
    // For single-value commands the table format is just this value.
    std::optional<std::string> scalar;
    // Overrides the csv payload.
    std::optional<Table> csv;
    int exit_code = kOk;
};

std::string fixed4(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4Lf", x);
    return buf;
}

double rounded4(long double x) { return static_cast<double>(std::round(x * 10000.0L) / 10000.0L); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << "\r\n";
    };
    line(t.headers);
    for (const auto& row : t.rows) line(row);
}

void write_table(const Table& t, std::ostream& out) {
    if (!t.title.empty()) out << t.title << "\n";
    std::vector<std::size_t> width(t.headers.size(), 0);
    for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << s << "\n";
    };
    line(t.headers);
    for (const auto& row : t.rows) line(row);
}

void render(const Document& doc, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json top = json::object();
        top["command"] = doc.command;
        top["inputs"] = doc.inputs;
        top["result"] = doc.result;
        out << top.dump(2) << "\n";
    } else if (format == "csv") {
        if (doc.csv) write_csv(*doc.csv, out);
        else if (!doc.tables.empty()) write_csv(doc.tables.front(), out);
        else if (doc.scalar) write_csv(Table{"", {"value"}, {{*doc.scalar}}}, out);
    } else {
        if (doc.scalar) out << *doc.scalar << "\n";
        for (std::size_t i = 0; i < doc.tables.size(); ++i) {
            if (i) out << "\n";
            write_table(doc.tables[i], out);
        }
        for (const auto& note : doc.notes) out << note << "\n";
    }
}

// ---------------------------------------------------------------------------
// Conversions

std::string str(Int x) { return std::to_string(x); }

std::string rd(const BNLocus& l) { return "(" + str(l.r) + "," + str(l.d) + ")"; }

BNLocus parse_locus(const std::string& text, const std::string& flag) {
    std::vector<Int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + " expects g,r,d with non-negative integers, got '" + text + "'");
        }
    }
    if (parts.size() != 3) throw UsageError(flag + " expects g,r,d, got '" + text + "'");
    return {parts[0], parts[1], parts[2]};
}

json locus_json(const BNLocus& l) { return json::array({l.r, l.d}); }

json surd_json(const SurdFraction& x) {
    return {{"a", x.num.a}, {"b", x.num.b}, {"m", x.num.m}, {"den", x.den}};
}

json kappa_json(const KappaResult& k) {
    return {{"value", k.value}, {"branch", to_string(k.branch)}, {"rho", k.rho}, {"gamma", k.gamma}};
}

json record_json(const MaximalLocusRecord& rec) {
    return {{"r", rec.locus.r},
            {"d", rec.locus.d},
            {"rho", rec.rho},
            {"kappa", rec.kappa.value},
            {"kappa_branch", to_string(rec.kappa.branch)},
            {"lower_bound", surd_json(rec.bounds.lower)},
            {"upper_bound", surd_json(rec.bounds.upper)},
            {"lower_bound_approx", rounded4(approximate(rec.bounds.lower))},
            {"upper_bound_approx", rounded4(approximate(rec.bounds.upper))}};
}

std::vector<std::string> record_row(const MaximalLocusRecord& rec) {
    return {str(rec.locus.r), str(rec.locus.d), str(rec.rho), str(rec.kappa.value),
            fixed4(approximate(rec.bounds.lower)), fixed4(approximate(rec.bounds.upper))};
}

const std::vector<std::string> kRecordHeaders{"r", "d_max", "rho", "kappa", "lower_bound_approx", "upper_bound_approx"};

json witness_json(const Witness& w);

json certificate_json(const NonContainmentCertificate& c) {
    return {{"source", locus_json(c.source)},
            {"target", locus_json(c.target)},
            {"rule", to_string(c.rule)},
            {"witness", witness_json(c.witness)}};
}

json witness_json(const Witness& w) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, KappaGapWitness>)
                return {{"k", v.k}, {"target_kappa", v.target_kappa}};
            else if constexpr (std::is_same_v<T, DimensionWitness>)
                return {{"rho_source", v.rho_source}, {"rho_target", v.rho_target}};
            else if constexpr (std::is_same_v<T, DivisorWitness>)
                return {{"gamma_source", v.gamma_source},
                        {"gamma_target", v.gamma_target},
                        {"ceil_2sqrt_neg_rho_source", v.ceil_term},
                        {"rho_source", v.rho_source}};
            else if constexpr (std::is_same_v<T, FlipWitness>)
                return {{"reverse", v.reverse ? certificate_json(*v.reverse) : json(nullptr)}};
            else
                return {{"cite", v.cite}};
        },
        w);
}

std::string witness_text(const NonContainmentCertificate& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, KappaGapWitness>)
                return "k=" + str(v.k) + " > " + str(v.target_kappa);
            else if constexpr (std::is_same_v<T, DimensionWitness>)
                return "rho " + str(v.rho_source) + " vs " + str(v.rho_target);
            else if constexpr (std::is_same_v<T, DivisorWitness>)
                return "gamma " + str(v.gamma_target) + " > " + str(v.gamma_source) + "+" + str(v.ceil_term) + "-2";
            else if constexpr (std::is_same_v<T, FlipWitness>)
                return v.reverse ? "reverse " + to_string(v.reverse->rule) : "reverse missing";
            else
                return v.cite;
        },
        c.witness);
}

json status_json(const PairStatus& st) {
    json out = {{"status", to_string(st.state)}};
    out["certificate"] = st.certificate ? certificate_json(*st.certificate) : json(nullptr);
    return out;
}

Ledger load_ledger(const std::string& path) { return path.empty() ? Ledger{} : Ledger::load(path); }

// ---------------------------------------------------------------------------
// Commands

struct Args {
    std::string format = "table";
    Int g = 0, r = 0, d = 0, k = 0;
    std::string method = "both";
    std::string ledger;
    std::string s_range = "maximal";
    Int r_min = 2, r_max = 10;
    std::string out_path;
    std::string source, target;
    Int gmax = 60;
    std::string inject_fault;
};

RankRange rank_range(const Args& a) {
    auto range = parse_rank_range(a.s_range);
    if (!range) throw UsageError("--s-range must be one of maximal, paper, ceil");
    return *range;
}

Document cmd_scalar(const std::string& name, json inputs, Int value) {
    Document doc;
    doc.command = name;
    doc.inputs = std::move(inputs);
    doc.result = {{"value", value}};
    doc.scalar = str(value);
    return doc;
}

Document cmd_kappa(const Args& a) {
    Document doc;
    doc.command = "kappa";
    doc.inputs = {{"g", a.g}, {"r", a.r}, {"d", a.d}, {"method", a.method}};
    if (a.method != "closed" && a.method != "brute" && a.method != "both")
        throw UsageError("--method must be one of closed, brute, both");

    Table t{"", {"method", "kappa", "branch", "rho", "gamma"}, {}};
    std::optional<KappaResult> closed, brute;
    if (a.method != "brute") {
        closed = kappa(a.g, a.r, a.d);
        doc.result["closed"] = kappa_json(*closed);
        t.rows.push_back({"closed", str(closed->value), to_string(closed->branch), str(closed->rho), str(closed->gamma)});
    }
    if (a.method != "closed") {
        brute = kappa_brute(a.g, a.r, a.d);
        doc.result["brute"] = kappa_json(*brute);
        t.rows.push_back({"brute", str(brute->value), to_string(brute->branch), str(brute->rho), str(brute->gamma)});
    }
    const Int value = closed ? closed->value : brute->value;
    doc.result["value"] = value;
    doc.scalar = str(value);
    doc.tables.push_back(std::move(t));
    if (closed && brute && closed->value != brute->value) {
        doc.result["agree"] = false;
        doc.notes.push_back("error: closed formula and brute force disagree");
        doc.exit_code = kInternal;
    } else if (closed && brute) {
        doc.result["agree"] = true;
    }
    return doc;
}

Document cmd_maximal(const Args& a) {
    Document doc;
    doc.command = "maximal";
    doc.inputs = {{"g", a.g}};
    if (a.g < 3) throw DomainError("maximal requires g >= 3");
    Table t{"", kRecordHeaders, {}};
    doc.result["loci"] = json::array();
    for (const auto& rec : enumerate_expected_maximal(a.g)) {
        doc.result["loci"].push_back(record_json(rec));
        t.rows.push_back(record_row(rec));
    }
    doc.tables.push_back(std::move(t));
    return doc;
}

Document report_document(const GenusReport& report, json inputs) {
    Document doc;
    doc.command = "report";
    doc.inputs = std::move(inputs);

    Table loci{"expected maximal loci", kRecordHeaders, {}};
    json jloci = json::array();
    for (const auto& rec : report.loci) {
        loci.rows.push_back(record_row(rec));
        jloci.push_back(record_json(rec));
    }

    Table pairs{"pairs", {"source", "target", "status", "rule", "witness"}, {}};
    json jpairs = json::array();
    for (const auto& [key, st] : report.pairs) {
        json p = status_json(st);
        p["source"] = locus_json(key.first);
        p["target"] = locus_json(key.second);
        jpairs.push_back(std::move(p));
        pairs.rows.push_back({rd(key.first), rd(key.second), to_string(st.state),
                              st.certificate ? to_string(st.certificate->rule) : "",
                              st.certificate ? witness_text(*st.certificate) : ""});
    }

    json open = json::array();
    std::string open_text;
    for (const auto& [s, t] : report.open_pairs) {
        open.push_back(json::array({locus_json(s), locus_json(t)}));
        if (!open_text.empty()) open_text += ", ";
        open_text += rd(s) + "⊄?" + rd(t);
    }

    doc.result = {{"g", report.g},
                  {"loci", jloci},
                  {"pairs", jpairs},
                  {"conjecture_status", report.verified() ? "verified" : "open_pairs"},
                  {"open_pairs", open}};
    // csv: the pair matrix
    doc.tables.push_back(std::move(pairs));
    doc.tables.push_back(std::move(loci));
    doc.notes.push_back(report.verified() ? "conjecture_status: Verified" : "conjecture_status: OpenPairs: " + open_text);
    return doc;
}

Document cmd_report(const Args& a) {
    if (a.g < 3) throw DomainError("report requires g >= 3");
    const Ledger ledger = load_ledger(a.ledger);
    json inputs = {{"g", a.g}};
    inputs["ledger"] = a.ledger.empty() ? json(nullptr) : json(a.ledger);
    return report_document(genus_report(a.g, ledger), std::move(inputs));
}

Document cmd_gtable(const Args& a) {
    if (a.r_min < 2 || a.r_min > a.r_max) throw UsageError("need 2 <= --r-min <= --r-max");
    const RankRange range = rank_range(a);
    Document doc;
    doc.command = "gtable";
    doc.inputs = {{"r_min", a.r_min}, {"r_max", a.r_max}, {"s_range", to_string(range)}};
    Table t{"", {"r", "G"}, {}};
    doc.result["table"] = json::array();
    for (Int r = a.r_min; r <= a.r_max; ++r) {
        const Int G = compute_G(r, range);
        t.rows.push_back({str(r), str(G)});
        doc.result["table"].push_back({{"r", r}, {"G", G}});
    }
    doc.tables.push_back(std::move(t));
    return doc;
}

Document cmd_exceptional(const Args& a) {
    if (a.r < 2) throw UsageError("--r must be at least 2");
    const RankRange range = rank_range(a);
    Document doc;
    doc.command = "exceptional";
    doc.inputs = {{"r", a.r}, {"s_range", to_string(range)}};
    const auto genera = exceptional_genera(a.r, range);
    std::string line;
    Table t{"", {"g"}, {}};
    for (Int g : genera) {
        line += (line.empty() ? "" : " ") + str(g);
        t.rows.push_back({str(g)});
    }
    doc.result = {{"genera", json(std::vector<Int>(genera.begin(), genera.end()))}, {"G", compute_G(a.r, range)}};
    doc.scalar = line;
    doc.csv = std::move(t);
    return doc;
}

Document cmd_check(const Args& a) {
    const BNLocus src = parse_locus(a.source, "--source");
    const BNLocus tgt = parse_locus(a.target, "--target");
    const Ledger ledger = load_ledger(a.ledger);
    Document doc;
    doc.command = "check";
    doc.inputs = {{"source", {src.g, src.r, src.d}}, {"target", {tgt.g, tgt.r, tgt.d}}};
    doc.inputs["ledger"] = a.ledger.empty() ? json(nullptr) : json(a.ledger);

    const NumericType type = classify_numeric_type(src, tgt);
    const PairStatus st = pair_status(src, tgt, ledger);
    doc.result = status_json(st);
    doc.result["numeric_type"] = to_string(type);
    doc.result["kappa_source"] = kappa(src).value;
    doc.result["kappa_target"] = kappa(tgt).value;
    doc.result["rho_source"] = rho(src);
    doc.result["rho_target"] = rho(tgt);

    Table t{"", {"source", "target", "status", "rule", "witness"}, {}};
    t.rows.push_back({to_string(src), to_string(tgt), to_string(st.state),
                      st.certificate ? to_string(st.certificate->rule) : "",
                      st.certificate ? witness_text(*st.certificate) : ""});
    doc.tables.push_back(std::move(t));
    return doc;
}

Document cmd_selftest(const Args& a) {
    SelftestOptions opt;
    opt.gmax = a.gmax;
    if (a.gmax < 10) throw UsageError("--gmax must be at least 10");
    if (!a.inject_fault.empty()) opt.inject_fault = parse_locus(a.inject_fault, "--inject-fault");

    Document doc;
    doc.command = "selftest";
    doc.inputs = {{"gmax", a.gmax}};
    Table t{"", {"suite", "checks", "failures", "status"}, {}};
    doc.result["suites"] = json::array();
    bool all = true;
    for (const auto& s : run_selftest(opt)) {
        all = all && s.passed();
        t.rows.push_back({s.name, std::to_string(s.checks), std::to_string(s.failures), s.passed() ? "pass" : "FAIL"});
        json js = {{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"passed", s.passed()}};
        if (!s.passed()) {
            js["first_failure"] = s.first_failure;
            doc.notes.push_back(s.name + ": " + s.first_failure);
        }
        doc.result["suites"].push_back(std::move(js));
    }
    doc.result["passed"] = all;
    doc.tables.push_back(std::move(t));
    if (!all) doc.exit_code = kInternal;
    return doc;
}

Document figure_document(Int g) {
    if (g < 3) throw DomainError("figure requires g >= 3");
    Document doc;
    doc.command = "figure";
    doc.inputs = {{"g", g}};
    Table t{"", kRecordHeaders, {}};
    doc.result["rows"] = json::array();
    for (const auto& rec : enumerate_expected_maximal(g)) {
        t.rows.push_back(record_row(rec));
        doc.result["rows"].push_back(record_json(rec));
    }
    doc.tables.push_back(std::move(t));
    return doc;
}

// ---------------------------------------------------------------------------

void add_format(CLI::App* sub, Args& a) {
    sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
}

void add_gr(CLI::App* sub, Args& a, bool with_d) {
    sub->add_option("--g", a.g, "Genus")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--r", a.r, "Rank")->required()->check(CLI::NonNegativeNumber);
    if (with_d) sub->add_option("--d", a.d, "Degree")->required()->check(CLI::NonNegativeNumber);
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brill-Noether loci: rho, Pflueger rho_k, gonality invariant kappa, and non-containment certificates"};
    app.require_subcommand(1);
    Args a;

    auto* c_rho = app.add_subcommand("rho", "Brill-Noether number g - (r+1)(g-d+r)");
    add_gr(c_rho, a, true);
    add_format(c_rho, a);

    auto* c_gamma = app.add_subcommand("gamma", "Clifford index d - 2r");
    c_gamma->add_option("--r", a.r)->required()->check(CLI::NonNegativeNumber);
    c_gamma->add_option("--d", a.d)->required()->check(CLI::NonNegativeNumber);
    c_gamma->add_option("--g", a.g, "Ignored; accepted for symmetry")->check(CLI::NonNegativeNumber);
    add_format(c_gamma, a);

    auto* c_rhok = app.add_subcommand("rhok", "Pflueger's rho_k");
    add_gr(c_rhok, a, true);
    c_rhok->add_option("--k", a.k, "Gonality")->required()->check(CLI::NonNegativeNumber);
    add_format(c_rhok, a);

    auto* c_kappa = app.add_subcommand("kappa", "Largest gonality k with the general k-gonal curve in the locus");
    add_gr(c_kappa, a, true);
    c_kappa->add_option("--method", a.method, "closed, brute or both");
    add_format(c_kappa, a);

    auto* c_dmax = app.add_subcommand("dmax", "Degree of the expected maximal locus of rank r");
    add_gr(c_dmax, a, false);
    add_format(c_dmax, a);

    auto* c_maximal = app.add_subcommand("maximal", "Expected maximal loci of a genus");
    c_maximal->add_option("--g", a.g)->required()->check(CLI::NonNegativeNumber);
    add_format(c_maximal, a);

    auto* c_report = app.add_subcommand("report", "Pairwise non-containment status of the expected maximal loci");
    c_report->add_option("--g", a.g)->required()->check(CLI::NonNegativeNumber);
    c_report->add_option("--ledger", a.ledger, "JSON ledger of externally established non-containments");
    add_format(c_report, a);

    auto* c_gtable = app.add_subcommand("gtable", "Table of G(r)");
    c_gtable->add_option("--r-min", a.r_min);
    c_gtable->add_option("--r-max", a.r_max);
    c_gtable->add_option("--s-range", a.s_range, "maximal, paper or ceil");
    add_format(c_gtable, a);

    auto* c_exc = app.add_subcommand("exceptional", "Genera below G(r) where the kappa inequality fails");
    c_exc->add_option("--r", a.r)->required();
    c_exc->add_option("--s-range", a.s_range, "maximal, paper or ceil");
    add_format(c_exc, a);

    auto* c_fig = app.add_subcommand("figure", "CSV of kappa(g, r, d_max(g,r)) and its bounds over r");
    c_fig->add_option("--g", a.g)->required()->check(CLI::NonNegativeNumber);
    c_fig->add_option("--out", a.out_path, "Output CSV path (stdout if omitted)");

    auto* c_check = app.add_subcommand("check", "Non-containment query for one ordered pair");
    c_check->add_option("--source", a.source, "g,r,d")->required();
    c_check->add_option("--target", a.target, "g,s,e")->required();
    c_check->add_option("--ledger", a.ledger);
    add_format(c_check, a);

    auto* c_self = app.add_subcommand("selftest", "Run the internal consistency suites");
    c_self->add_option("--gmax", a.gmax, "Largest genus covered");
    c_self->add_option("--inject-fault", a.inject_fault, "g,r,d whose closed-form kappa is perturbed")->group("");
    add_format(c_self, a);

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        Document doc;
        if (c_rho->parsed()) {
            doc = cmd_scalar("rho", {{"g", a.g}, {"r", a.r}, {"d", a.d}}, rho(a.g, a.r, a.d));
        } else if (c_gamma->parsed()) {
            doc = cmd_scalar("gamma", {{"r", a.r}, {"d", a.d}}, clifford_index(a.r, a.d));
        } else if (c_rhok->parsed()) {
            doc = cmd_scalar("rhok", {{"g", a.g}, {"r", a.r}, {"d", a.d}, {"k", a.k}}, rho_pflueger(a.g, a.r, a.d, a.k));
        } else if (c_kappa->parsed()) {
            doc = cmd_kappa(a);
        } else if (c_dmax->parsed()) {
            doc = cmd_scalar("dmax", {{"g", a.g}, {"r", a.r}}, d_max(a.g, a.r));
        } else if (c_maximal->parsed()) {
            doc = cmd_maximal(a);
        } else if (c_report->parsed()) {
            doc = cmd_report(a);
        } else if (c_gtable->parsed()) {
            doc = cmd_gtable(a);
        } else if (c_exc->parsed()) {
            doc = cmd_exceptional(a);
        } else if (c_check->parsed()) {
            doc = cmd_check(a);
        } else if (c_self->parsed()) {
            doc = cmd_selftest(a);
        } else if (c_fig->parsed()) {
            doc = figure_document(a.g);
            if (a.out_path.empty()) {
                render(doc, "csv", out);
            } else {
                std::ofstream file(a.out_path, std::ios::binary);
                if (!file) throw UsageError("cannot write " + a.out_path);
                render(doc, "csv", file);
                file.close();
                if (!file) throw UsageError("cannot write " + a.out_path);
                out << "wrote " << doc.tables.front().rows.size() << " rows to " << a.out_path << "\n";
            }
            return kOk;
        }
        render(doc, a.format, out);
        return doc.exit_code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const LedgerError& e) {
        err << "error: ledger: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace bnloci::cli
