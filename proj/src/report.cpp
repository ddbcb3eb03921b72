#include "hopfore/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>

namespace hopfore {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
    return os.str();
}

std::string report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["digest"] = r.digest;
    j["verdict"] = r.verdict;
    nlohmann::ordered_json notes = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    j["notes"] = notes;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : r.diag.entries) {
        nlohmann::ordered_json je;
        je["check"] = e.check;
        je["subject"] = e.subject;
        je["residual"] = e.residual;
        je["pass"] = e.pass;
        entries.push_back(je);
    }
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << r.command;
    for (const auto& i : r.inputs) os << " " << i;
    os << "\n";
    for (const auto& [k, v] : r.notes) os << "  " << k << ": " << v << "\n";
    for (const auto& e : r.diag.entries) {
        os << "  [" << (e.pass ? "pass" : "FAIL") << "] " << e.check << " / " << e.subject;
        if (!e.pass) os << "  residual: " << e.residual;
        os << "\n";
    }
    os << "verdict: " << r.verdict << "\n";
    return os.str();
}

} // namespace hopfore
