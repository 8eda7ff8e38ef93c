#pragma once

#include <stdexcept>
#include <string>

namespace parhox {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    InvalidInput,
    SizeLimit,
    NotNormalized,
    NotIdempotent,
    NotCommuting,
    PreconditionFailed,
    ActionMismatch,
    AssociativityFailure,
    CompletionDiverged,
    NotARepresentation,
    NotCovariant,
    IsomorphismFailure,
    EquivarianceFailure,
    PropertyFailure,
    SchemaError,
    IOError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace parhox
