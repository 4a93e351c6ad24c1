#include "bnloci/ledger.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace bnloci {

namespace {

using nlohmann::json;

Int integer_field(const json& value, const std::string& what) {
    if (!value.is_number_integer()) throw LedgerError(what + " must be an integer");
    return value.get<Int>();
}

std::pair<Int, Int> rank_degree(const json& value, const std::string& what) {
    if (!value.is_array() || value.size() != 2) throw LedgerError(what + " must be a two-element array [rank, degree]");
    return {integer_field(value[0], what + "[0]"), integer_field(value[1], what + "[1]")};
}

void add_entry(Ledger& ledger, const json& entry, const std::string& where) {
    static const std::set<std::string> allowed{"g", "source", "target", "cite"};
    if (!entry.is_object()) throw LedgerError(where + ": entry must be an object");
    for (const auto& [key, _] : entry.items())
        if (!allowed.contains(key)) throw LedgerError(where + ": unknown field '" + key + "'");
    for (const auto& key : allowed)
        if (!entry.contains(key)) throw LedgerError(where + ": missing field '" + key + "'");

    const Int g = integer_field(entry["g"], where + ": g");
    if (g < 3) throw LedgerError(where + ": g must be at least 3");
    const auto [r, d] = rank_degree(entry["source"], where + ": source");
    const auto [s, e] = rank_degree(entry["target"], where + ": target");
    if (r < 0 || d < 0 || s < 0 || e < 0) throw LedgerError(where + ": ranks and degrees must be non-negative");
    if (!entry["cite"].is_string() || entry["cite"].get<std::string>().empty())
        throw LedgerError(where + ": cite must be a non-empty string");

    try {
        ledger.add({g, r, d}, {g, s, e}, entry["cite"].get<std::string>());
    } catch (const LedgerError& err) {
        throw LedgerError(where + ": " + err.what());
    }
}

} // namespace

Ledger Ledger::parse(const std::string& text) {
    Ledger out;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return out;

    if (text[first] == '[') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& err) {
            throw LedgerError(std::string("malformed ledger: ") + err.what());
        }
        for (std::size_t i = 0; i < doc.size(); ++i) add_entry(out, doc[i], "entry " + std::to_string(i));
        return out;
    }

    std::istringstream lines(text);
    std::string line;
    for (int lineno = 1; std::getline(lines, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json entry;
        try {
            entry = json::parse(line);
        } catch (const json::parse_error& err) {
            throw LedgerError("line " + std::to_string(lineno) + ": " + err.what());
        }
        add_entry(out, entry, "line " + std::to_string(lineno));
    }
    return out;
}

Ledger Ledger::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LedgerError("cannot read ledger " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void Ledger::add(const BNLocus& source, const BNLocus& target, std::string cite) {
    if (source.g != target.g) throw LedgerError("source and target genus differ");
    if (!entries_.emplace(std::pair{source, target}, std::move(cite)).second)
        throw LedgerError("duplicate entry " + to_string(source) + " -> " + to_string(target));
}

std::optional<std::string> Ledger::lookup(const BNLocus& source, const BNLocus& target) const {
    auto it = entries_.find({source, target});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

} // namespace bnloci
