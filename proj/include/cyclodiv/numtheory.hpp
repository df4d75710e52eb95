#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclodiv/poly.hpp"

namespace cyclodiv {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c1c1'0ULL;
inline constexpr std::uint64_t kDefaultTrialBound = 100'000;

/// Composites above this size are not attacked with Pollard rho; they are
/// returned as an unfactored cofactor instead.
BigInt default_rho_cutoff(); // 10^24

/// Prime factorization, possibly partial.
struct FactorMap {
    std::vector<std::pair<BigInt, unsigned>> primes; // ascending by prime
    std::optional<BigInt> cofactor;                  // unfactored part > 1

    bool complete() const { return !cofactor.has_value(); }
    /// prod p^e * cofactor
    BigInt product() const;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Sieve of Eratosthenes; exactly the primes <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Deterministic Miller-Rabin for n < 2^64 with the witness set
/// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which is exact below
/// 3.3 * 10^24.
bool is_prime(std::uint64_t n);

/// For n < 2^64 this is the deterministic test above. Larger n use
/// Baillie-PSW (strong base-2 Miller-Rabin plus a strong Lucas test with
/// Selfridge parameters). No BPSW pseudoprime is known, but none has been
/// ruled out either, so results above 2^64 are probable primes.
bool is_prime(const BigInt& n);

/// Smallest prime strictly greater than n.
BigInt next_prime(const BigInt& n);
std::uint64_t next_prime(std::uint64_t n);

/// Trial division by primes <= trial_bound, then Brent's variant of
/// Pollard rho on composite parts <= rho_cutoff. Anything left over is
/// reported as FactorMap::cofactor. The rho sequence constants are drawn
/// from `seed`.
FactorMap factor(const BigInt& n, std::uint64_t trial_bound = kDefaultTrialBound,
                 std::uint64_t seed = kDefaultSeed);
FactorMap factor(const BigInt& n, std::uint64_t trial_bound, std::uint64_t seed,
                 const BigInt& rho_cutoff);

/// Full factorization of a machine integer; never partial.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Least k >= 1 with r^k = 1 mod q. Throws PreconditionError if q is not
/// prime or q | r, BudgetExhausted if q - 1 cannot be fully factored.
std::uint64_t multiplicative_order(const BigInt& r, std::uint64_t q);
std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
/// Ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t largest_prime_factor(std::uint64_t n); // 1 for n = 1

/// Product of the distinct primes of n; rad(0) = rad(1) = 1. Throws
/// BudgetExhausted if n cannot be fully factored.
BigInt radical(const BigInt& n, std::uint64_t seed = kDefaultSeed);

/// True iff every prime dividing a also divides b (rad(a) | b), decided by
/// repeated gcd stripping without factoring a. Only b mod a is needed.
bool radical_divides(const BigInt& a, const BigInt& b_mod_a);

} // namespace cyclodiv
