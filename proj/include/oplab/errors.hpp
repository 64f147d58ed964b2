#pragma once

#include <stdexcept>
#include <string>

namespace oplab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input bytes (bad JSON line, unparsable vector text, ...).
struct ParseError : Error {
    using Error::Error;
};

// Structurally fine input that violates a record/type invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Bad argument to an in-process operation.
struct ArgumentError : Error {
    using Error::Error;
};

// A reservation would push the ledger past its limit.
struct BudgetExhausted : Error {
    using Error::Error;
};

// Endpoint unreachable / request failed after the client's retry policy.
struct TransportError : Error {
    using Error::Error;
};

// Endpoint reachable but the reply violates the wire contract.
struct ProtocolError : Error {
    using Error::Error;
};

// Judge kept answering but never produced a parsable verdict.
struct JudgeFailure : Error {
    using Error::Error;
};

// Run configuration is semantically unusable (infeasible plan, missing endpoint, ...).
struct ConfigError : Error {
    using Error::Error;
};

// I/O failure writing or reading artifact files.
struct IoError : Error {
    using Error::Error;
};

}  // namespace oplab
