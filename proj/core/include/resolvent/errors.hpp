#pragma once

#include <stdexcept>
#include <string>

namespace resolvent {

// Exit-code categories used by the CLI; library errors carry one so the
// front end never has to re-classify.
enum class ErrorKind {
    input,       // malformed or out-of-contract input          -> exit 1
    degenerate,  // multiple seed root, singular recurrence ... -> exit 2
    internal,    // invariant violated (homogenization failed)  -> exit 2
};

class SolverError : public std::runtime_error {
public:
    SolverError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace resolvent
