#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclodiv/numtheory.hpp"
#include "cyclodiv/poly.hpp"

namespace cyclodiv {

/// Fraction of primes q <= prime_limit modulo which f splits into distinct
/// linear factors. The density is kept as an exact ratio; judging how close
/// it is to a limit is left to the caller.
struct SplitDensityReport {
    IntPoly polynomial;
    std::uint64_t prime_limit = 0;
    std::uint64_t primes_tested = 0;
    std::uint64_t split_count = 0;
    std::vector<std::uint64_t> split_primes;

    double density() const;
    /// "split/tested" in lowest terms.
    std::string density_fraction() const;
    /// Fixed six-digit decimal, locale independent.
    std::string density_decimal() const;
};

/// Throws PreconditionError unless f is monic, nonconstant and squarefree.
SplitDensityReport split_density(const IntPoly& f, std::uint64_t prime_limit, unsigned threads = 1);

struct RootOrders {
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> roots;  // ascending
    std::vector<std::uint64_t> orders; // order of roots[i] modulo prime
};

struct OrderProfile {
    IntPoly polynomial;
    std::uint64_t prime_limit = 0;
    std::vector<RootOrders> records; // one per split prime, ascending
    std::uint64_t max_order_seen = 0;
};

/// Multiplicative orders of the roots of f at every split prime <= prime_limit.
/// Throws PreconditionError unless f is monic, squarefree, with f(0) != 0.
OrderProfile root_order_profile(const IntPoly& f, std::uint64_t prime_limit, unsigned threads = 1,
                                std::uint64_t seed = kDefaultSeed);

struct ImplicationAtPrime {
    std::uint64_t prime = 0;
    bool implication_held = false; // every root of h mod q is a root of g mod q
    bool probative = false;        // q exceeds every |remainder coefficient|
};

enum class ImplicationOutcome {
    divides,        // h | g, and the implication held at a qualifying prime
    does_not_divide, // h does not divide g, and the implication failed there
    inconsistent,   // implication and exact division disagree
    inconclusive,   // no qualifying split prime within the budget
};

std::string to_string(ImplicationOutcome o);

struct ImplicationVerdict {
    IntPoly g, h;
    IntPoly remainder;
    BigInt remainder_bound; // max |r_i|
    bool exact_divides = false;
    std::vector<ImplicationAtPrime> primes; // non-probative preview, then the qualifying prime
    std::optional<ImplicationAtPrime> qualifying;
    std::uint64_t primes_examined = 0;
    ImplicationOutcome outcome = ImplicationOutcome::inconclusive;
};

inline constexpr std::uint64_t kImplicationPreviewLimit = 100;

/// Root implication test for h | g. Split primes q <= kImplicationPreviewLimit
/// and q <= the remainder bound are recorded as non-probative; then primes
/// above the bound are examined in ascending order, at most prime_budget of
/// them, until h splits completely modulo one. Throws PreconditionError
/// unless g and h are monic and h is squarefree.
ImplicationVerdict root_implication_divides(const IntPoly& g, const IntPoly& h,
                                            std::uint64_t prime_budget, std::uint64_t seed = kDefaultSeed);

} // namespace cyclodiv
