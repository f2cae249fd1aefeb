#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

#include "refsev/errors.hpp"

namespace refsev {

using BigInt = mpz_class;

BigInt factorial(long n);
BigInt binomial(long n, long k);

/// Element of Z[i], used as the value ring for evaluation at y = -1
/// (half-integer exponents of y become powers of i).
struct GaussianInt {
    BigInt re;
    BigInt im;

    bool operator==(const GaussianInt&) const = default;
    std::string str() const;
};

enum class EvalPoint { One, MinusOne };

/// Laurent polynomial in y^(1/2) with integer coefficients.
///
/// Terms are keyed by twice the exponent of y, so the key e2 stands for
/// y^(e2/2); integer powers of y have even keys.  The zero polynomial has
/// no terms, and no stored coefficient is ever zero.
class LaurentY {
public:
    LaurentY() = default;
    LaurentY(long value);
    explicit LaurentY(BigInt value);

    /// coeff * y^(half_exponent_doubled / 2)
    static LaurentY term(int half_exponent_doubled, BigInt coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int e2) const;
    int min_exponent2() const;
    int max_exponent2() const;

    LaurentY& operator+=(const LaurentY& rhs);
    LaurentY& operator-=(const LaurentY& rhs);
    LaurentY operator+(const LaurentY& rhs) const;
    LaurentY operator-(const LaurentY& rhs) const;
    LaurentY operator-() const;
    LaurentY operator*(const LaurentY& rhs) const;
    LaurentY& operator*=(const LaurentY& rhs);
    LaurentY operator*(const BigInt& scalar) const;
    bool operator==(const LaurentY&) const = default;

    /// Invariant under y^(1/2) -> y^(-1/2)?
    bool is_symmetric() const;
    bool has_negative_coeff() const;

    GaussianInt eval(EvalPoint point) const;

    /// gcd of the absolute values of all coefficients (0 for the zero poly).
    BigInt content() const;
    /// Divide every coefficient by g; g must divide exactly.
    LaurentY divided_by(const BigInt& g) const;

    std::string str() const;

private:
    std::map<int, BigInt> terms_;
    void add_term(int e2, const BigInt& c);
    friend LaurentY divide_exact(const LaurentY&, const LaurentY&);
};

/// Quantum integer [n] = y^((n-1)/2) + y^((n-3)/2) + ... + y^(-(n-1)/2),
/// with [0] = 0 and [-n] = -[n].
LaurentY quantum_integer(long n);

/// Exact polynomial division; throws DomainError when the quotient does not
/// exist in the Laurent polynomial ring.
LaurentY divide_exact(const LaurentY& num, const LaurentY& den);

/// LaurentY scaled by 1/den with den a positive integer, kept in lowest
/// terms (den > 0 and gcd(content(num), den) = 1).
class RationalLaurentY {
public:
    RationalLaurentY() : den_(1) {}
    RationalLaurentY(long value) : num_(value), den_(1) {}
    RationalLaurentY(LaurentY num, BigInt den = BigInt(1));

    const LaurentY& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }

    /// Throws DomainError when the denominator has not cleared.
    const LaurentY& as_integral() const;

    RationalLaurentY& operator+=(const RationalLaurentY& rhs);
    RationalLaurentY operator+(const RationalLaurentY& rhs) const;
    RationalLaurentY operator-() const;
    RationalLaurentY operator*(const RationalLaurentY& rhs) const;
    RationalLaurentY operator*(const LaurentY& rhs) const;
    RationalLaurentY operator*(const BigInt& scalar) const;
    /// Multiply by 1/d (d != 0).
    RationalLaurentY divided_by(const BigInt& d) const;
    bool operator==(const RationalLaurentY&) const = default;

    std::string str() const;

private:
    LaurentY num_;
    BigInt den_; // > 0
    void reduce();
};

} // namespace refsev
