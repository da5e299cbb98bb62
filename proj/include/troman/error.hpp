#pragma once

#include <stdexcept>
#include <string>

namespace troman {

/// Precondition or input-format violation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed result contradicts a proven statement (for instance the
/// structural infinity recognizer disagrees with the bondage search).
/// Carries the offending graph in graph6 form so it can be replayed.
class InconsistencyError : public std::logic_error {
public:
    InconsistencyError(const std::string& what, std::string graph6)
        : std::logic_error(what + " [graph6: " + graph6 + "]"), graph6_(std::move(graph6))
    {
    }

    const std::string& graph6() const { return graph6_; }

private:
    std::string graph6_;
};

} // namespace troman
