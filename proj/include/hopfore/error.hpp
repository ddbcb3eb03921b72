#ifndef HOPFORE_ERROR_HPP
#define HOPFORE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace hopfore {

/// Structured error: `kind` is a stable machine-readable tag (e.g.
/// "DivisionByZero", "FieldMismatch", "DegreeCapExceeded"), `what()` carries
/// the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

} // namespace hopfore

#endif
