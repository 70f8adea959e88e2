#pragma once

#include <stdexcept>
#include <string>

namespace qgr {

// Base class for all failures raised by the library.  Callers that only
// want a broad exit code can catch this and inspect `kind()`.
class Error : public std::runtime_error {
public:
    explicit Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// A pivot (or exported quantity) could not be certified below the working
// truncation order.  Callers retry with a larger order.
struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& w)
        : Error("InsufficientPrecision", w) {}
};

struct SingularAtZero : Error {
    explicit SingularAtZero(const std::string& w) : Error("SingularAtZero", w) {}
};

struct NotInLattice : Error {
    explicit NotInLattice(const std::string& w) : Error("NotInLattice", w) {}
};

struct NonTermination : Error {
    explicit NonTermination(const std::string& w) : Error("NonTermination", w) {}
};

struct ValidationFailure : Error {
    explicit ValidationFailure(const std::string& w) : Error("ValidationFailure", w) {}
};

struct TriangularityViolation : Error {
    explicit TriangularityViolation(const std::string& w)
        : Error("TriangularityViolation", w) {}
};

struct NotComparable : Error {
    explicit NotComparable(const std::string& w) : Error("NotComparable", w) {}
};

struct NotScalar : Error {
    explicit NotScalar(const std::string& w) : Error("NotScalar", w) {}
};

struct WeightMismatch : Error {
    explicit WeightMismatch(const std::string& w) : Error("WeightMismatch", w) {}
};

struct NormalizationFailure : Error {
    explicit NormalizationFailure(const std::string& w)
        : Error("NormalizationFailure", w) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error("ConfigError", w) {}
};

}  // namespace qgr
