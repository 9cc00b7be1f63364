#ifndef COHOMCHECK_ERRORS_HPP
#define COHOMCHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cohomcheck {

// Base class for all failures raised by the library. Mathematical
// refutations (non-membership, failed identities) are never thrown;
// they are returned as values so callers can report them. Exceptions
// mark contract violations: wrong context, impossible division,
// malformed input, out-of-range parameters.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two polynomials from structurally different variable contexts were mixed.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

// A negative exponent appeared where a plain polynomial was demanded.
class NegativeExponentError : public Error {
public:
    explicit NegativeExponentError(const std::string& what) : Error(what) {}
};

// An exact division (coefficient-wise or scalar) does not come out evenly.
class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

// Textual polynomial input violates the grammar.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Degree queried on the zero polynomial.
class ZeroPolynomialError : public Error {
public:
    explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};

// Monomial enumeration would not terminate (a variable carries weight zero).
class UnboundedSearchError : public Error {
public:
    explicit UnboundedSearchError(const std::string& what) : Error(what) {}
};

// Parameters outside the stated range of a lemma or summation identity.
class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

// Matrix/vector shapes do not line up.
class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

// A computation larger than the default desk-scale guard was requested
// without the explicit override.
class SizeGuardError : public Error {
public:
    explicit SizeGuardError(const std::string& what) : Error(what) {}
};

} // namespace cohomcheck

#endif
