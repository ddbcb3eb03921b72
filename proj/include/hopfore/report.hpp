#ifndef HOPFORE_REPORT_HPP
#define HOPFORE_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "hopfore/diagnostics.hpp"

namespace hopfore {

/// Result of one command invocation. Serialization contains no timestamps
/// or environment data, so identical inputs give byte-identical output.
struct Report {
    std::string command;
    std::vector<std::string> inputs; ///< input names (paths, entry names)
    std::string digest;              ///< hex digest of command + input bytes
    std::string verdict;             ///< Pass | Fail | Solved | NoSolution
    Diagnostic diag;
    std::vector<std::pair<std::string, std::string>> notes; ///< ordered extras

    bool success() const { return verdict == "Pass" || verdict == "Solved"; }
};

/// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(const std::string& data);

/// Stable JSON with a top-level "schema": 1 and fixed key order.
std::string report_json(const Report& r);
std::string report_text(const Report& r);

} // namespace hopfore

#endif
