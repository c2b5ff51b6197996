#pragma once

#include <fstream>

#include "twistlink/json_io.hpp"

namespace twistlink {

// Append-only newline-delimited JSON ledger.  Result digests hash the
// canonical JSON bytes, so re-running an identical invocation reproduces the
// digest exactly; runtimes live outside the digest.
struct RunLedgerEntry {
    std::string command;
    std::string input_digest;
    ordered_json parameters;
    std::string result_digest;
    ordered_json counts;
    long long runtime_ms = 0;
};

inline std::string digest_string(const std::string& bytes) { return hex64(fnv1a64(bytes.data(), bytes.size())); }

inline ordered_json ledger_entry_to_json(const RunLedgerEntry& e) {
    ordered_json j;
    j["command"] = e.command;
    j["input_digest"] = e.input_digest;
    j["parameters"] = e.parameters;
    j["result_digest"] = e.result_digest;
    j["counts"] = e.counts;
    j["runtime_ms"] = e.runtime_ms;
    return j;
}

inline void append_ledger(const std::string& path, const RunLedgerEntry& e) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open ledger file " + path);
    out << ledger_entry_to_json(e).dump() << "\n";
}

}  // namespace twistlink
