#ifndef NULLWIDTH_ERROR_HPP
#define NULLWIDTH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nw {

/** Error categories, mapped to CLI exit codes by the frontend. */
enum class ErrorCode {
    Usage,               // bad arguments / malformed input files
    Infeasible,          // linear system has no solution (w not a coboundary, ...)
    NoIntegralClass,     // no integral cocycle in the affine space of the input
    BoxTooSmall,         // branch-and-bound box exhausted without a feasible point
    SizeLimit,           // instance exceeds the oracle's size guard
    DegreeCapExceeded,   // polynomial primitive not found within the coefficient-degree cap
    PreconditionViolated,
    IdentityFailure,     // an internal exact identity failed; signals a pipeline bug
    NotNullhomotopic,    // certificate requested for an input with nonzero Hopf number
    GenerationExhausted, // instance generator ran out of retries
    NoRegularValue,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Usage: return "Usage";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::NoIntegralClass: return "NoIntegralClass";
        case ErrorCode::BoxTooSmall: return "BoxTooSmall";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::IdentityFailure: return "IdentityFailure";
        case ErrorCode::NotNullhomotopic: return "NotNullhomotopic";
        case ErrorCode::GenerationExhausted: return "GenerationExhausted";
        case ErrorCode::NoRegularValue: return "NoRegularValue";
    }
    return "Unknown";
}

}  // namespace nw

#endif
