#pragma once

#include <stdexcept>
#include <string>

namespace surftop {

// Base error carrying a stable machine-readable name used by the CLI's JSON
// error objects.  Subclasses exist per failure mode named in the contracts.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SURFTOP_DEFINE_ERROR(cls)                                \
    class cls : public error {                                   \
    public:                                                      \
        explicit cls(const std::string& msg = #cls)              \
            : error(#cls, msg) {}                                \
    }

SURFTOP_DEFINE_ERROR(ZeroPolynomial);
SURFTOP_DEFINE_ERROR(BothConstantInV);
SURFTOP_DEFINE_ERROR(ConstantInV);
SURFTOP_DEFINE_ERROR(SingularMap);
SURFTOP_DEFINE_ERROR(GenericityFailed);
SURFTOP_DEFINE_ERROR(VerticalLineComponent);
SURFTOP_DEFINE_ERROR(PlanarComponentInAxis);
SURFTOP_DEFINE_ERROR(NormalizationFailed);
SURFTOP_DEFINE_ERROR(HypothesesUnreachable);
SURFTOP_DEFINE_ERROR(FxVanished);
SURFTOP_DEFINE_ERROR(StepBudgetExceeded);
SURFTOP_DEFINE_ERROR(NoIntersection);
SURFTOP_DEFINE_ERROR(ProjectionAmbiguous);
SURFTOP_DEFINE_ERROR(PrecisionExhausted);
SURFTOP_DEFINE_ERROR(ParseError);
SURFTOP_DEFINE_ERROR(IoError);
SURFTOP_DEFINE_ERROR(InternalError);

#undef SURFTOP_DEFINE_ERROR

} // namespace surftop
