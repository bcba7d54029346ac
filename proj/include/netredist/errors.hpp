#pragma once

#include <stdexcept>
#include <string>

namespace netredist {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Distinct input-rejection reasons, surfaced by the loaders and builders so
// callers (and tests) can tell *why* an instance was refused.
enum class InputErrorCode {
    syntax,                // not valid JSON / not an object
    missing_field,         // required key absent
    bad_value,             // wrong JSON type where a specific one is required
    bad_money,             // unparseable money literal
    negative_valuation,    // valuations must be >= 0
    duplicate_id,          // agent id declared twice
    unknown_id,            // reference to an undeclared agent
    owner_conflict,        // owner listed as an agent, or agent named like owner
    self_edge,             // agent lists itself as neighbour
    duplicate_edge,        // same neighbour listed twice in one declaration
    invite_not_neighbour,  // strategy invites someone outside the true neighbour set
    disconnected,          // some agent unreachable from the owner in the true network
    absent_reachable,      // profile marks an agent absent although an invitation chain reaches them
};

const char* to_string(InputErrorCode code);

class MalformedInputError : public Error {
public:
    MalformedInputError(InputErrorCode code, const std::string& detail)
        : Error(std::string("malformed input [") + to_string(code) + "]: " + detail),
          code_(code) {}
    InputErrorCode code() const { return code_; }

private:
    InputErrorCode code_;
};

// Lookup of an agent that is not a vertex of the graph at hand.
class MissingAgentError : public Error {
public:
    explicit MissingAgentError(const std::string& id)
        : Error("no such agent in this graph: " + id) {}
};

// An operation's structural precondition does not hold (e.g. sibling_block on
// a non-child, or asking for the owner's dominated set).
class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& what) : Error(what) {}
};

// Operations that need at least one bidder.
class EmptyInstanceError : public Error {
public:
    explicit EmptyInstanceError(const std::string& what) : Error(what) {}
};

// Bad generator / sweep / audit configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Aggregations that need more data than they were given.
class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& what) : Error(what) {}
};

}  // namespace netredist
