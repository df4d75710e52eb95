#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclodiv/numtheory.hpp"
#include "cyclodiv/poly.hpp"

namespace cyclodiv {

/// A monic polynomial written as x^e0 * prod Phi_d^e.
struct CycloFactorization {
    unsigned e0 = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> factors; // strictly ascending d, e >= 1

    /// Throws PreconditionError when the invariants above are violated.
    void validate() const;
    std::size_t degree() const;
    std::uint64_t max_index() const; // 0 when there are no factors
    bool has_index(std::uint64_t d) const;

    friend bool operator==(const CycloFactorization&, const CycloFactorization&) = default;
};

/// Phi_d. Results are memoized in a bounded, thread-safe cache.
IntPoly cyclotomic(std::uint64_t d);

/// Phi_d without the cache, built from x^d - 1 by repeated exact division
/// by Phi_e for the proper divisors e of d. Quadratic in d; used as an
/// independent reference.
IntPoly cyclotomic_by_division(std::uint64_t d);

IntPoly expand(const CycloFactorization& c);

struct ClassifyResult {
    std::optional<CycloFactorization> factorization;
    /// What is left after stripping x^e0 and every cyclotomic factor found.
    /// Constant 1 exactly when factorization is present.
    IntPoly residual;
    /// Cyclotomic factors that were stripped (also filled on rejection).
    CycloFactorization partial;
    /// Largest d tested against the final residual.
    std::uint64_t search_bound = 0;
};

/// Decides whether f is x^e0 times a product of cyclotomic polynomials.
/// Candidates d are tried in ascending order with multiplicity, limited by
/// phi(d) <= deg(residual) and d <= 2 deg(residual)^2. Throws
/// PreconditionError for zero or non-monic f.
ClassifyResult classify_cyclotomic_product(const IntPoly& f);

struct SubstitutionIdentity {
    std::uint64_t d = 0;
    std::uint64_t p = 0;
    bool p_divides_d = false;
    IntPoly lhs; // Phi_d(x^p)
    IntPoly rhs; // Phi_pd or Phi_pd * Phi_d
    bool holds = false;
};

/// Phi_d(x^p) against Phi_pd(x) (p | d) or Phi_pd(x) Phi_d(x) (p does not divide d).
SubstitutionIdentity cyclotomic_substitution_identity(std::uint64_t d, std::uint64_t p);

struct SharedPrime {
    BigInt prime;
    std::optional<int> exponent; // a with m/n = prime^a, when it exists
    bool holds = false;
};

struct SharedPrimeCheck {
    std::uint64_t n = 0, m = 0;
    BigInt b;
    BigInt value_n, value_m, gcd;
    std::vector<SharedPrime> shared;
    bool gcd_fully_factored = true;
    bool holds = false; // every exposed shared prime satisfies m/n = p^a
};

/// For every prime p dividing gcd(Phi_n(b), Phi_m(b)), check that m/n is an
/// integral (possibly negative) power of p. Throws PreconditionError if
/// b < 2 or n, m < 1.
SharedPrimeCheck shared_prime_ratio_check(std::uint64_t n, std::uint64_t m, const BigInt& b,
                                          std::uint64_t seed = kDefaultSeed);

/// x^M - 1 == prod_{d | M} Phi_d(x)
bool product_of_cyclotomics_equals(std::uint64_t M);

/// "Phi_d^e" style rendering, e.g. "x^2 * Phi_1 * Phi_3^2".
std::string render(const CycloFactorization& c);

} // namespace cyclodiv
