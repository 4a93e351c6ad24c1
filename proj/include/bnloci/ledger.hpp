#pragma once

// Externally established non-containments, each carrying its citation.
//
// File format: either a JSON array of entries or one JSON object per line:
//   {"g": 20, "source": [2, 15], "target": [1, 10], "cite": "..."}
// Unknown fields and duplicate (g, source, target) entries are rejected.

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bnloci/bn_core.hpp"

namespace bnloci {

class LedgerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Ledger {
public:
    Ledger() = default;

    static Ledger parse(const std::string& text);
    static Ledger load(const std::filesystem::path& path);

    void add(const BNLocus& source, const BNLocus& target, std::string cite);

    std::optional<std::string> lookup(const BNLocus& source, const BNLocus& target) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::map<std::pair<BNLocus, BNLocus>, std::string> entries_;
};

} // namespace bnloci
