#pragma once

#include <stdexcept>
#include <string>

namespace plumb {

// Exit codes used by the command-line front end.
enum class ErrorCode : int {
    Schema = 2,
    MathPrecondition = 3,
    Verification = 4,
};

class PlumbError : public std::runtime_error {
public:
    PlumbError(ErrorCode c, const std::string& kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), code_(c), kind_(kind) {}
    ErrorCode code() const noexcept { return code_; }
    const std::string& kind() const noexcept { return kind_; }

private:
    ErrorCode code_;
    std::string kind_;
};

struct SchemaError : PlumbError {
    explicit SchemaError(const std::string& m) : PlumbError(ErrorCode::Schema, "SchemaError", m) {}
};

#define PLUMB_MATH_ERROR(Name)                                                   \
    struct Name : PlumbError {                                                   \
        explicit Name(const std::string& m)                                      \
            : PlumbError(ErrorCode::MathPrecondition, #Name, m) {}               \
    }

PLUMB_MATH_ERROR(NotApplicable);
PLUMB_MATH_ERROR(LosesDefiniteness);
PLUMB_MATH_ERROR(NotNegativeDefinite);
PLUMB_MATH_ERROR(GradingParity);
PLUMB_MATH_ERROR(InsufficientDepth);
PLUMB_MATH_ERROR(NotZHS);
PLUMB_MATH_ERROR(AD3Violated);
PLUMB_MATH_ERROR(InvalidArgument);

#undef PLUMB_MATH_ERROR

}  // namespace plumb
