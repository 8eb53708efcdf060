#ifndef GALOIS_EQUIV_ERROR_HPP
#define GALOIS_EQUIV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace galois_equiv {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GALOIS_EQUIV_DEFINE_ERROR(Name)     \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    }

GALOIS_EQUIV_DEFINE_ERROR(InvalidArgument);
GALOIS_EQUIV_DEFINE_ERROR(InvalidExtension);
GALOIS_EQUIV_DEFINE_ERROR(InternalInvariantViolation);
GALOIS_EQUIV_DEFINE_ERROR(Unsupported);
GALOIS_EQUIV_DEFINE_ERROR(FactorizationIncomplete);
GALOIS_EQUIV_DEFINE_ERROR(NoWitnessFound);
GALOIS_EQUIV_DEFINE_ERROR(DimensionMismatch);
GALOIS_EQUIV_DEFINE_ERROR(Singular);
GALOIS_EQUIV_DEFINE_ERROR(UnknownGenerator);
GALOIS_EQUIV_DEFINE_ERROR(InvalidGroupData);
GALOIS_EQUIV_DEFINE_ERROR(CapExceeded);
GALOIS_EQUIV_DEFINE_ERROR(NotEquivalent);
GALOIS_EQUIV_DEFINE_ERROR(NotIrreducible);
GALOIS_EQUIV_DEFINE_ERROR(BadWitness);
GALOIS_EQUIV_DEFINE_ERROR(BudgetExhausted);
GALOIS_EQUIV_DEFINE_ERROR(EndomorphismCheckFailed);

#undef GALOIS_EQUIV_DEFINE_ERROR

/// Malformed input. `where` is "line:column" for syntax errors and a JSON
/// pointer for structural ones.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)), message_(what) {}

    const std::string& where() const noexcept { return where_; }
    /// The diagnostic without its position.
    const std::string& message() const noexcept { return message_; }

private:
    std::string where_;
    std::string message_;
};

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_ERROR_HPP
