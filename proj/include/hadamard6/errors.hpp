#pragma once

#include <stdexcept>
#include <string>

namespace hadamard6 {

enum class ErrorKind {
    OutOfRange,            // parameter outside its documented domain
    DegenerateMap,         // Moebius map with |alpha| = |beta| used as a bijection
    NearPole,              // Moebius denominator below tolerance
    RegimeMismatch,        // builder called in the wrong degeneracy regime
    VerificationFailed,    // constructed matrix failed the internal Hadamard check
    ExceptionalDirection,  // theta->0 limit requested on an excluded direction
    ZeroEntry,             // dephasing hit a zero in the first row/column
    NotHadamard,           // operation requires a Hadamard matrix
    ParseError,            // malformed matrix file
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::DegenerateMap: return "DegenerateMap";
        case ErrorKind::NearPole: return "NearPole";
        case ErrorKind::RegimeMismatch: return "RegimeMismatch";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::ExceptionalDirection: return "ExceptionalDirection";
        case ErrorKind::ZeroEntry: return "ZeroEntry";
        case ErrorKind::NotHadamard: return "NotHadamard";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

}  // namespace hadamard6
