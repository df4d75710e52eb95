#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclodiv/cyclotomic.hpp"
#include "cyclodiv/poly.hpp"

namespace cyclodiv {

inline constexpr std::uint64_t kDefaultSearchLimit = 10'000;

/// f(p) | f(p^p) for a monic f and a prime p. f(p^p) is only reduced modulo
/// |f(p)|, never materialized. When f(p) = 0 the answer is f(p^p) = 0.
bool check_at_prime(const IntPoly& f, std::uint64_t p);

struct PrimeCheck {
    std::uint64_t prime = 0;
    BigInt value;   // f(p)
    BigInt residue; // f(p^p) mod |f(p)|, or f(p^p) itself when f(p) = 0 (then only 0 or 1 = nonzero)
    bool passed = false;
};

PrimeCheck check_at_prime_detail(const IntPoly& f, std::uint64_t p);

/// Outcome of checking f(p) | f(p^p) over every prime in [lo, hi].
struct DivisibilityReport {
    IntPoly polynomial;
    std::uint64_t lo = 2, hi = 2;
    std::vector<std::uint64_t> failures; // ascending
    std::uint64_t passes_count = 0;
    /// Next prime after the largest failure, or lo. Empirical only.
    std::uint64_t candidate_n = 2;
    /// max d + 1 (2 without cyclotomic factors) when f is a cyclotomic product.
    std::optional<std::uint64_t> theory_n;
    std::optional<CycloFactorization> factorization;
    /// False when a failure was seen at or beyond theory_n.
    bool consistent = true;
};

/// Throws PreconditionError unless f is monic and 2 <= lo <= hi.
DivisibilityReport scan(const IntPoly& f, std::uint64_t lo, std::uint64_t hi, unsigned threads = 1);

/// Smallest prime p <= search_limit with f(p) not dividing f(p^p).
std::optional<std::uint64_t> find_failing_prime(const IntPoly& f,
                                                std::uint64_t search_limit = kDefaultSearchLimit,
                                                unsigned threads = 1);

struct NecessaryCheck {
    bool consistent = false;
    bool vacuous = false; // f is a power of x
    BigInt value_at_one;
    std::string reason;
};

/// A monic f that is not a power of x can only satisfy the property for
/// every prime if f(1) = 0.
NecessaryCheck n2_necessary_check(const IntPoly& f);

/// (x - 1) * prod Phi_p over the given distinct primes. Throws
/// PreconditionError on duplicates or non-primes.
CycloFactorization n2_sufficient_family(std::vector<std::uint64_t> primes);

/// 1 in the index set, all other indices prime, every multiplicity 1.
bool in_sufficient_family(const CycloFactorization& c);

enum class N2Status {
    sufficient_family,
    necessary_violated,
    obstructed,
    empirically_consistent_unknown,
    empirically_refuted,
    not_cyclotomic_product,
};

std::string to_string(N2Status s);

struct ObstructionWitness {
    enum class Kind {
        peel,        // d in A, p | d, d/p not in A
        phi6_branch, // 6 in A, largest prime 3, no power of 3 in A
    };
    Kind kind = Kind::peel;
    std::uint64_t d = 0;
    std::uint64_t p = 0; // the prime at which the property must fail
};

struct N2Verdict {
    N2Status status = N2Status::empirically_consistent_unknown;
    std::optional<ObstructionWitness> witness;
    std::optional<std::uint64_t> failing_prime;
    std::vector<std::string> notes;
};

/// Peeling argument on the index set of c. Requires at least one index
/// d >= 2. Returns sufficient_family, obstructed (with witness), or
/// empirically_consistent_unknown; never scans primes.
N2Verdict n2_structural_obstruction(const CycloFactorization& c);

/// Full analysis of f against the property from N = 2: classification,
/// the f(1) = 0 condition, the structural obstruction and an empirical scan
/// over primes <= check_limit. Throws InvariantBreach if a structural
/// witness does not fail empirically.
N2Verdict n2_analyze(const IntPoly& f, std::uint64_t check_limit = 1000, unsigned threads = 1);

struct RadicalViolation {
    std::uint64_t n = 0;
    BigInt value;        // f(n)
    BigInt radical;      // rad(f(n)), when fully factored
    BigInt target_mod;   // f(n^rad(n)) mod |f(n)|
    std::uint64_t rad_n = 1;
};

struct RadicalReport {
    IntPoly polynomial;
    std::uint64_t n_limit = 0;
    std::uint64_t checked = 0;
    std::optional<RadicalViolation> violation; // first one
};

/// rad(f(n)) | f(n^rad(n)) for 0 <= n <= n_limit, stopping at the first
/// violation. Throws PreconditionError if f has a negative coefficient.
RadicalReport radical_property_check(const IntPoly& f, std::uint64_t n_limit);

} // namespace cyclodiv
