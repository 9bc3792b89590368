#ifndef ADMIS_ERRORS_HPP
#define ADMIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace admis {

enum class ErrorCode {
    ZeroDivision,
    CompositeModulus,
    NotMonic,
    NotIrreducible,
    IndexObstruction,
    NotGaloisField,
    NotIrreducibleOverK,
    DegenerateGenerator,
    InconsistentPresentation,
    NotPGroup,
    OrderBudgetExceeded,
    SearchBudgetExceeded,
    FactorBudgetExceeded,
    PrimeDoesNotDivideOrder,
    ParseError,
    SelfCheckFailed,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroDivision: return "ZeroDivision";
        case ErrorCode::CompositeModulus: return "CompositeModulus";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::IndexObstruction: return "IndexObstruction";
        case ErrorCode::NotGaloisField: return "NotGaloisField";
        case ErrorCode::NotIrreducibleOverK: return "NotIrreducibleOverK";
        case ErrorCode::DegenerateGenerator: return "DegenerateGenerator";
        case ErrorCode::InconsistentPresentation: return "InconsistentPresentation";
        case ErrorCode::NotPGroup: return "NotPGroup";
        case ErrorCode::OrderBudgetExceeded: return "OrderBudgetExceeded";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::FactorBudgetExceeded: return "FactorBudgetExceeded";
        case ErrorCode::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SelfCheckFailed: return "SelfCheckFailed";
    }
    return "Error";
}

/* All recoverable failures are thrown as Error; the engine maps arithmetic
 * obstructions and exhausted budgets to Undetermined verdicts, the CLI maps
 * them to exit codes. */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace admis

#endif
