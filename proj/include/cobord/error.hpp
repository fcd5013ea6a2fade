#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

// Contract violation on a public operation (bad input, mixed rings, ...).
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariant (e.g. a symmetrizer division left a remainder).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg)
{
    if (!cond)
        throw error(msg);
}

inline void bug_check(bool cond, const std::string& msg)
{
    if (!cond)
        throw internal_error(msg);
}

} // namespace cobord
