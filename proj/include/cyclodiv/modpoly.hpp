#pragma once

#include <cstdint>
#include <vector>

#include "cyclodiv/numtheory.hpp"
#include "cyclodiv/poly.hpp"

namespace cyclodiv {

/// Primes at or below this bound get their roots by exhaustive evaluation;
/// above it roots_mod uses randomized splitting.
inline constexpr std::uint64_t kExhaustiveRootBound = 100'000;

/// Polynomial over F_p for a 64-bit prime p, ascending residues in [0, p).
class FpPoly {
public:
    /// Throws PreconditionError unless p is prime. Residues are reduced.
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    explicit FpPoly(std::uint64_t p) : FpPoly(p, {}) {}

    std::uint64_t modulus() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint64_t eval(std::uint64_t t) const;

    static FpPoly x(std::uint64_t p);
    static FpPoly one(std::uint64_t p);

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

private:
    struct Unchecked {};
    FpPoly(Unchecked, std::uint64_t p, std::vector<std::uint64_t> coeffs);
    void normalize();

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;

    friend FpPoly add(const FpPoly&, const FpPoly&);
    friend FpPoly sub(const FpPoly&, const FpPoly&);
    friend FpPoly mul(const FpPoly&, const FpPoly&);
    friend FpPoly rem(const FpPoly&, const FpPoly&);
    friend FpPoly quot(const FpPoly&, const FpPoly&);
    friend FpPoly make_monic(const FpPoly&);
    friend FpPoly reduce(const IntPoly&, std::uint64_t);
};

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
/// a mod b; b must be nonzero.
FpPoly rem(const FpPoly& a, const FpPoly& b);
/// floor(a / b); b must be nonzero.
FpPoly quot(const FpPoly& a, const FpPoly& b);
FpPoly make_monic(const FpPoly& a);

/// Coefficientwise reduction of f into F_p[x].
FpPoly reduce(const IntPoly& f, std::uint64_t p);

/// base^e mod h by square-and-multiply.
FpPoly powmod(const FpPoly& base, const BigInt& e, const FpPoly& h);

/// x^e mod h; h must be monic with degree >= 1.
FpPoly powmod_x(const BigInt& e, const FpPoly& h);

/// Monic gcd (the zero polynomial when both inputs are zero).
/// Throws PreconditionError on a modulus mismatch.
FpPoly gcd_fp(const FpPoly& a, const FpPoly& b);

/// gcd(x^q - x, f mod q): the product of the distinct linear factors of f.
FpPoly linear_part(const IntPoly& f, std::uint64_t q);

/// f mod q is a product of deg f distinct linear factors. f must be monic.
bool splits_completely(const IntPoly& f, std::uint64_t q);

/// All r in [0, q) with f(r) = 0 mod q, ascending. Throws PreconditionError
/// if f mod q is zero. The randomized path (q > kExhaustiveRootBound) seeds
/// its generator from (seed, q, f), so the result never depends on call order.
std::vector<std::uint64_t> roots_mod(const IntPoly& f, std::uint64_t q,
                                     std::uint64_t seed = kDefaultSeed);

/// Same, always using the randomized splitting path. Exposed for tests.
std::vector<std::uint64_t> roots_mod_split(const IntPoly& f, std::uint64_t q,
                                           std::uint64_t seed = kDefaultSeed);

/// (h mod p) | (g mod p) in F_p[x]. Throws PreconditionError if h = 0 mod p.
bool modp_divides(const IntPoly& h, const IntPoly& g, std::uint64_t p);

} // namespace cyclodiv
