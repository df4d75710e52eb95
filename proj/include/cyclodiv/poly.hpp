#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclodiv {

using BigInt = mpz_class;

/// Dense univariate polynomial over Z. Coefficients are stored in
/// ascending degree order and kept normalized: the leading entry is never
/// zero, and the zero polynomial has no coefficients at all.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(std::size_t degree, const BigInt& c = 1);
    /// x^n - 1
    static IntPoly x_pow_minus_one(std::size_t n);

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    /// True for c*x^k with c != 0.
    bool is_monomial() const;

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    BigInt coeff(std::size_t i) const;
    const BigInt& leading() const;

    /// Largest absolute value among the coefficients (0 for the zero polynomial).
    BigInt max_abs_coeff() const;
    /// gcd of the coefficients, nonnegative.
    BigInt content() const;
    /// Exponent of the largest power of x dividing this (0 for zero).
    std::size_t x_valuation() const;

    /// f(x^k)
    IntPoly substitute_power(std::size_t k) const;
    /// Divides every coefficient by x^k; requires x^k | this.
    IntPoly shift_down(std::size_t k) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

IntPoly operator-(const IntPoly& a);
IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const BigInt& c);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& a, unsigned exponent);

struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division with remainder by a monic divisor, exact over Z.
/// Throws PreconditionError if h is zero or not monic.
DivRem divrem_monic(const IntPoly& g, const IntPoly& h);

/// g / h when the division is exact, nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& g, const IntPoly& h);

/// Exact Horner evaluation.
BigInt eval(const IntPoly& f, const BigInt& t);

/// eval(f, t) mod m in [0, m), reducing at every Horner step. m must be >= 1.
BigInt eval_mod(const IntPoly& f, const BigInt& t, const BigInt& m);

IntPoly derivative(const IntPoly& f);

/// Primitive part: f / content(f), with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

/// gcd over Q[x], returned as a primitive polynomial with positive leading
/// coefficient. Uses the primitive polynomial remainder sequence.
IntPoly gcd_primitive_prs(const IntPoly& a, const IntPoly& b);

/// Squarefree over Q (equivalently, nonzero discriminant for monic f).
/// Throws PreconditionError on the zero polynomial.
bool is_squarefree(const IntPoly& f);

/// Canonical rendering: descending powers, explicit signs, no '*', e.g.
/// "x^4 + x^3 - x - 1", "2x^2 - 3", "0".
std::string render(const IntPoly& f);

/// Ascending comma-separated coefficients, "0" for the zero polynomial.
std::string render_coeffs(const IntPoly& f);

} // namespace cyclodiv
