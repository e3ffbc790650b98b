#ifndef LPC_ERROR_HPP
#define LPC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lpc {

enum class ErrorKind {
    NotAnEdge,
    UnknownVertex,
    PatternTooLarge,
    NotP4Free,
    NotConnected,
    InstanceTooLarge,
    MalformedWitness,
    AdjacentPair,
    DistanceNotExceeding,
    NotInClass,
    NotLinearForest,
    CapTooLargeForExhaustive,
    TooManyElements,
    OddP,
    TooLarge,
    NotConnectedCore,
    ParseError,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotAnEdge: return "NotAnEdge";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::PatternTooLarge: return "PatternTooLarge";
        case ErrorKind::NotP4Free: return "NotP4Free";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorKind::MalformedWitness: return "MalformedWitness";
        case ErrorKind::AdjacentPair: return "AdjacentPair";
        case ErrorKind::DistanceNotExceeding: return "DistanceNotExceeding";
        case ErrorKind::NotInClass: return "NotInClass";
        case ErrorKind::NotLinearForest: return "NotLinearForest";
        case ErrorKind::CapTooLargeForExhaustive: return "CapTooLargeForExhaustive";
        case ErrorKind::TooManyElements: return "TooManyElements";
        case ErrorKind::OddP: return "OddP";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotConnectedCore: return "NotConnectedCore";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // Input errors come from malformed files/arguments; the rest are violated
    // preconditions of library operations.
    bool is_input_error() const {
        return kind_ == ErrorKind::ParseError || kind_ == ErrorKind::TooManyElements;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace lpc

#endif
