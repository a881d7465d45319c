#ifndef BIGENIC_ERRORS_HPP
#define BIGENIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bigenic {

// Bad input: malformed files, arity violations, broken invariants in
// caller-supplied data. CLI exit status 1.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Request exceeds the configured desk-scale limits. CLI exit status 2.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// The knowledge base derived contradictory facts, or a verified lemma was
// violated. Always a bug somewhere; never silently resolved. CLI exit
// status 3.
class inconsistency_error : public std::runtime_error {
public:
    explicit inconsistency_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace bigenic

#endif
