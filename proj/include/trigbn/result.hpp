#ifndef TRIGBN_RESULT_HPP
#define TRIGBN_RESULT_HPP

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace trigbn {

enum class ErrorKind {
    DomainRejection,    // parameters fail the validator
    OutOfScope,         // outside the supported (d, r) range
    InconsistentParams, // parameters contradict each other
    Precondition,       // operation called outside its stated regime
    ParseError,
};

struct Error {
    ErrorKind kind;
    std::string message;
};

inline Error domain_rejection(std::string msg) { return {ErrorKind::DomainRejection, std::move(msg)}; }
inline Error out_of_scope(std::string msg) { return {ErrorKind::OutOfScope, std::move(msg)}; }
inline Error inconsistent_params(std::string msg) { return {ErrorKind::InconsistentParams, std::move(msg)}; }
inline Error precondition_failed(std::string msg) { return {ErrorKind::Precondition, std::move(msg)}; }
inline Error parse_error(std::string msg) { return {ErrorKind::ParseError, std::move(msg)}; }

/// Value-or-error return type used for every operation that can reject
/// its input.
template <typename T>
class Result {
public:
    Result(T value) : v_(std::move(value)) {}
    Result(Error err) : v_(std::move(err)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const {
        assert(ok());
        return std::get<T>(v_);
    }
    T& value() {
        assert(ok());
        return std::get<T>(v_);
    }
    const Error& error() const {
        assert(!ok());
        return std::get<Error>(v_);
    }

private:
    std::variant<T, Error> v_;
};

} // namespace trigbn

#endif
