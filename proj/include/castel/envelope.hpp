#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "castel/bigint.hpp"
#include "castel/citations.hpp"

namespace castel {

// values are flat name -> decimal-string pairs; list results use
// zero-padded index suffixes so lexicographic key order is emission order
struct ResultEnvelope {
    std::string command;
    std::map<std::string, std::string> values;
    std::vector<Rule> citations;  // first-seen order, deduplicated
    std::vector<std::string> warnings;
    bool ok = true;
    std::string error;
    long long checks_failed = 0;

    void cite_rule(Rule r) {
        for (Rule c : citations)
            if (c == r) return;
        citations.push_back(r);
    }

    void put(const std::string& key, const std::string& v) { values[key] = v; }
    void put(const std::string& key, const char* v) { values[key] = v; }
    void put(const std::string& key, const BigInteger& v) { values[key] = to_decimal(v); }
    void put(const std::string& key, const BigRational& v) { values[key] = to_decimal(v); }
    void put(const std::string& key, long long v) { values[key] = std::to_string(v); }
    void put(const std::string& key, bool v) { values[key] = v ? "true" : "false"; }
};

inline std::string indexed(const std::string& base, std::size_t i) {
    std::string n = std::to_string(i);
    if (n.size() < 2) n.insert(n.begin(), '0');
    return base + "." + n;
}

inline nlohmann::json envelope_to_json(const ResultEnvelope& e) {
    nlohmann::json j;
    j["command"] = e.command;
    j["ok"] = e.ok;
    if (!e.ok) j["error"] = e.error;
    j["checks_failed"] = e.checks_failed;
    j["values"] = nlohmann::json::object();
    for (const auto& [k, v] : e.values) j["values"][k] = v;
    j["warnings"] = e.warnings;
    j["citations"] = nlohmann::json::array();
    for (Rule r : e.citations) {
        const Citation& c = cite(r);
        j["citations"].push_back({{"key", std::string(c.key)},
                                  {"label", std::string(c.label)},
                                  {"fragment", std::string(c.fragment)}});
    }
    return j;
}

inline std::string envelope_to_text(const ResultEnvelope& e) {
    std::ostringstream out;
    out << "command: " << e.command << "\n";
    out << "status: " << (e.ok ? "ok" : "error") << "\n";
    if (!e.ok) out << "error: " << e.error << "\n";
    if (e.checks_failed > 0) out << "checks failed: " << e.checks_failed << "\n";
    for (const auto& [k, v] : e.values) out << k << ": " << v << "\n";
    if (!e.warnings.empty()) {
        out << "warnings:\n";
        for (const auto& w : e.warnings) out << "  - " << w << "\n";
    }
    if (!e.citations.empty()) {
        out << "citations:\n";
        for (Rule r : e.citations) {
            const Citation& c = cite(r);
            out << "  " << c.label << ": " << c.fragment << "\n";
        }
    }
    return out.str();
}

}  // namespace castel
