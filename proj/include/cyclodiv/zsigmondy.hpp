#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclodiv/numtheory.hpp"

namespace cyclodiv {

/// The only (b, d) with b >= 2 where Phi_d(b) has no primitive prime divisor.
enum class ZsigmondyException { none, b2_d1, b2_d6, mersenne_d2 };

std::string to_string(ZsigmondyException e);
ZsigmondyException zsigmondy_exception(const BigInt& b, std::uint64_t d);

inline constexpr std::uint64_t kPrimitiveTrialBound = 10'000'000;

/// Primitive prime divisor analysis of Phi_d(b).
///
/// Every prime factor of Phi_d(b) other than the largest prime l of d is
/// primitive, and primitive primes are 1 mod d. Dividing out l therefore
/// splits the value into a non-primitive part (a power of l) and a cofactor
/// made only of primitive primes, and the existence of a primitive divisor
/// reduces to cofactor > 1 without any factoring.
struct PrimitiveDivisorReport {
    BigInt b;
    std::uint64_t d = 0;
    BigInt value; // Phi_d(b)
    ZsigmondyException exception = ZsigmondyException::none;
    std::uint64_t stripped_prime = 1; // l, or 1 for d = 1
    unsigned stripped_count = 0;
    BigInt nonprimitive_part = 1;
    BigInt primitive_cofactor = 1;
    std::optional<BigInt> smallest_primitive_prime;
    bool cofactor_unfactored = false;
};

/// Throws PreconditionError for b < 2 or d < 1. Throws InvariantBreach if
/// the report contradicts the exception list or the congruence structure.
PrimitiveDivisorReport analyze(const BigInt& b, std::uint64_t d,
                               std::uint64_t trial_bound = kPrimitiveTrialBound,
                               std::uint64_t seed = kDefaultSeed);

/// analyze() over 2 <= b <= b_max, 1 <= d <= d_max, ordered by b then d.
std::vector<PrimitiveDivisorReport> zsigmondy_scan(std::uint64_t b_max, std::uint64_t d_max,
                                                   unsigned threads = 1,
                                                   std::uint64_t trial_bound = kPrimitiveTrialBound,
                                                   std::uint64_t seed = kDefaultSeed);

/// Where analyze() places the prime q | Phi_d(b): true for the primitive
/// cofactor, false for the stripped part.
bool classified_primitive(const PrimitiveDivisorReport& r, const BigInt& q);

/// Brute-force definition: q | Phi_d(b) and q divides no Phi_i(b), i < d.
/// Throws PreconditionError if q does not divide Phi_d(b).
bool primitivity_oracle(const BigInt& b, std::uint64_t d, const BigInt& q);

} // namespace cyclodiv
