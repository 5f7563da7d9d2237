#ifndef TRIET_ERRORS_HPP
#define TRIET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace triet {

// Base for all domain errors. `code()` is the stable machine-readable name
// used by the CLI's error JSON; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define TRIET_DEFINE_ERROR(Name)                           \
    class Name : public Error {                            \
    public:                                                \
        explicit Name(const std::string& what)             \
            : Error(#Name, what) {}                        \
    }

TRIET_DEFINE_ERROR(FieldMismatch);
TRIET_DEFINE_ERROR(DivisionByZero);
TRIET_DEFINE_ERROR(SyntaxError);
TRIET_DEFINE_ERROR(MixedFields);
TRIET_DEFINE_ERROR(OrderViolation);
TRIET_DEFINE_ERROR(OutOfDomain);
TRIET_DEFINE_ERROR(CapExceeded);
TRIET_DEFINE_ERROR(NotMinimal);
TRIET_DEFINE_ERROR(NotAFactor);
TRIET_DEFINE_ERROR(NotEndomorphism);
TRIET_DEFINE_ERROR(PeriodicCycle);
TRIET_DEFINE_ERROR(NotASubstitutionSeed);
TRIET_DEFINE_ERROR(NotPrimitive);
TRIET_DEFINE_ERROR(Degenerate);
TRIET_DEFINE_ERROR(FieldEscape);
TRIET_DEFINE_ERROR(UnknownLetter);

#undef TRIET_DEFINE_ERROR

} // namespace triet

#endif
