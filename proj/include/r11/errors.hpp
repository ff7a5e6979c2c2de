#pragma once

#include <stdexcept>
#include <string>

namespace r11 {

// Root of every error raised by the library. Each subclass names the
// precondition that was violated so callers can catch selectively.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define R11_DEFINE_ERROR(Name)                                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    }

R11_DEFINE_ERROR(LightConeError);
R11_DEFINE_ERROR(LightConeSingularity);
R11_DEFINE_ERROR(DomainError);
R11_DEFINE_ERROR(NotUnimodular);
R11_DEFINE_ERROR(OutOfDomain);
R11_DEFINE_ERROR(DegenerateElement);
R11_DEFINE_ERROR(SingularDenominator);
R11_DEFINE_ERROR(BadRadius);
R11_DEFINE_ERROR(PVDivergence);
R11_DEFINE_ERROR(ConvergenceError);
R11_DEFINE_ERROR(NonInvertible);
R11_DEFINE_ERROR(SchemaError);

#undef R11_DEFINE_ERROR

}  // namespace r11
