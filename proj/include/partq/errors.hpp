#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace partq {

// Error taxonomy shared by the library and the CLI exit codes:
// input errors reject malformed or inconsistent arguments, state errors
// signal a valid object in the wrong state for the requested operation,
// capacity errors guard the enumeration caps.
class Error : public std::runtime_error {
public:
    enum class Category { input, state, capacity };

    Error(Category category, std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message),
          category_(category),
          kind_(std::move(kind)) {}

    Category category() const noexcept { return category_; }
    const std::string& kind() const noexcept { return kind_; }

private:
    Category category_;
    std::string kind_;
};

struct OverlapError : Error {
    explicit OverlapError(const std::string& m) : Error(Category::input, "OverlapError", m) {}
};
struct CoverError : Error {
    explicit CoverError(const std::string& m) : Error(Category::input, "CoverError", m) {}
};
struct EmptyBlockError : Error {
    explicit EmptyBlockError(const std::string& m) : Error(Category::input, "EmptyBlockError", m) {}
};
struct UniverseMismatch : Error {
    explicit UniverseMismatch(const std::string& m) : Error(Category::input, "UniverseMismatch", m) {}
};
struct AtomNotInUniverse : Error {
    explicit AtomNotInUniverse(const std::string& m) : Error(Category::input, "AtomNotInUniverse", m) {}
};
struct EmptySupport : Error {
    explicit EmptySupport(const std::string& m) : Error(Category::input, "EmptySupport", m) {}
};
struct ZeroProbability : Error {
    explicit ZeroProbability(const std::string& m) : Error(Category::input, "ZeroProbability", m) {}
};
struct NonPositiveProbability : Error {
    explicit NonPositiveProbability(const std::string& m)
        : Error(Category::input, "NonPositiveProbability", m) {}
};
struct MissingDistance : Error {
    explicit MissingDistance(const std::string& m) : Error(Category::input, "MissingDistance", m) {}
};
struct MissingTheta : Error {
    explicit MissingTheta(const std::string& m) : Error(Category::input, "MissingTheta", m) {}
};
struct ThetaSumMismatch : Error {
    explicit ThetaSumMismatch(const std::string& m) : Error(Category::input, "ThetaSumMismatch", m) {}
};
struct RankDeficientBasis : Error {
    explicit RankDeficientBasis(const std::string& m)
        : Error(Category::input, "RankDeficientBasis", m) {}
};
struct InvalidDistribution : Error {
    explicit InvalidDistribution(const std::string& m)
        : Error(Category::input, "InvalidDistribution", m) {}
};
struct InvalidDensityMatrix : Error {
    explicit InvalidDensityMatrix(const std::string& m)
        : Error(Category::input, "InvalidDensityMatrix", m) {}
};
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& m) : Error(Category::input, "InvalidArgument", m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(Category::input, "ParseError", m) {}
};

struct NotPureState : Error {
    explicit NotPureState(const std::string& m) : Error(Category::state, "NotPureState", m) {}
};
struct ExclusionViolated : Error {
    explicit ExclusionViolated(const std::string& m)
        : Error(Category::state, "ExclusionViolated", m) {}
};

struct SizeCapExceeded : Error {
    explicit SizeCapExceeded(const std::string& m)
        : Error(Category::capacity, "SizeCapExceeded", m) {}
};

}  // namespace partq
