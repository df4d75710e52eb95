#include "cyclodiv/zsigmondy.hpp"

#include "cyclodiv/cyclotomic.hpp"
#include "cyclodiv/errors.hpp"
#include "parallel.hpp"

namespace cyclodiv {

std::string to_string(ZsigmondyException e)
{
    switch (e) {
    case ZsigmondyException::none: return "none";
    case ZsigmondyException::b2_d1: return "b2_d1";
    case ZsigmondyException::b2_d6: return "b2_d6";
    case ZsigmondyException::mersenne_d2: return "mersenne_d2";
    }
    return "none";
}

ZsigmondyException zsigmondy_exception(const BigInt& b, std::uint64_t d)
{
    if (b == 2 && d == 1)
        return ZsigmondyException::b2_d1;
    if (b == 2 && d == 6)
        return ZsigmondyException::b2_d6;
    if (d == 2) {
        const BigInt s = b + 1;
        // b = 2^a - 1 with a >= 1
        if (s >= 2 && mpz_popcount(s.get_mpz_t()) == 1)
            return ZsigmondyException::mersenne_d2;
    }
    return ZsigmondyException::none;
}

namespace {

// Smallest prime factor of c, all of whose prime factors are 1 mod d.
std::optional<BigInt> smallest_primitive(const BigInt& c, std::uint64_t d, std::uint64_t trial_bound,
                                         std::uint64_t seed, bool& unfactored)
{
    unfactored = false;
    if (c == 1)
        return std::nullopt;
    if (is_prime(c))
        return c;
    // Every divisor is 1 mod d, so the first hit is the least prime factor.
    for (std::uint64_t q = d + 1; q <= trial_bound; q += d) {
        if (BigInt(std::to_string(q)) * q > c)
            break;
        if (mpz_divisible_ui_p(c.get_mpz_t(), q))
            return BigInt(std::to_string(q));
    }
    if (c <= default_rho_cutoff()) {
        FactorMap fm = factor(c, 0, seed);
        if (fm.complete())
            return fm.primes.front().first;
    }
    unfactored = true;
    return std::nullopt;
}

} // namespace

PrimitiveDivisorReport analyze(const BigInt& b, std::uint64_t d, std::uint64_t trial_bound,
                               std::uint64_t seed)
{
    if (b < 2)
        throw PreconditionError("zsigmondy: base must be >= 2");
    if (d < 1)
        throw PreconditionError("zsigmondy: index must be >= 1");

    PrimitiveDivisorReport r;
    r.b = b;
    r.d = d;
    r.value = eval(cyclotomic(d), b);
    r.exception = zsigmondy_exception(b, d);
    r.primitive_cofactor = r.value;
    if (d > 1) {
        r.stripped_prime = largest_prime_factor(d);
        while (mpz_divisible_ui_p(r.primitive_cofactor.get_mpz_t(), r.stripped_prime)) {
            mpz_divexact_ui(r.primitive_cofactor.get_mpz_t(), r.primitive_cofactor.get_mpz_t(),
                            r.stripped_prime);
            r.nonprimitive_part *= r.stripped_prime;
            ++r.stripped_count;
        }
        if (d > 2 && r.stripped_count > 1)
            throw InvariantBreach("more than one factor " + std::to_string(r.stripped_prime) +
                                  " stripped from Phi_" + std::to_string(d) + "(" + b.get_str() + ")");
    }

    r.smallest_primitive_prime =
        smallest_primitive(r.primitive_cofactor, d, trial_bound, seed, r.cofactor_unfactored);

    if ((r.exception == ZsigmondyException::none) != (r.primitive_cofactor > 1))
        throw InvariantBreach("primitive cofactor of Phi_" + std::to_string(d) + "(" + b.get_str() +
                              ") disagrees with the exception list");
    if (r.smallest_primitive_prime) {
        const BigInt& q = *r.smallest_primitive_prime;
        if (q <= d || !mpz_congruent_ui_p(q.get_mpz_t(), 1, d))
            throw InvariantBreach("primitive prime " + q.get_str() + " of Phi_" + std::to_string(d) + "(" +
                                  b.get_str() + ") is not 1 mod d or not above d");
    }
    return r;
}

std::vector<PrimitiveDivisorReport> zsigmondy_scan(std::uint64_t b_max, std::uint64_t d_max,
                                                   unsigned threads, std::uint64_t trial_bound,
                                                   std::uint64_t seed)
{
    if (b_max < 2 || d_max < 1)
        throw PreconditionError("zsigmondy_scan: need b_max >= 2 and d_max >= 1");
    const std::size_t cells = static_cast<std::size_t>((b_max - 1) * d_max);
    return detail::parallel_map<PrimitiveDivisorReport>(cells, threads, [&](std::size_t i) {
        const std::uint64_t b = 2 + i / d_max;
        const std::uint64_t d = 1 + i % d_max;
        return analyze(BigInt(std::to_string(b)), d, trial_bound, seed);
    });
}

bool classified_primitive(const PrimitiveDivisorReport& r, const BigInt& q)
{
    if (mpz_divisible_p(r.primitive_cofactor.get_mpz_t(), q.get_mpz_t()))
        return true;
    if (mpz_divisible_p(r.nonprimitive_part.get_mpz_t(), q.get_mpz_t()))
        return false;
    throw PreconditionError(q.get_str() + " does not divide the analyzed value");
}

bool primitivity_oracle(const BigInt& b, std::uint64_t d, const BigInt& q)
{
    if (!mpz_divisible_p(eval(cyclotomic(d), b).get_mpz_t(), q.get_mpz_t()))
        throw PreconditionError("primitivity_oracle: q does not divide Phi_d(b)");
    for (std::uint64_t i = 1; i < d; ++i)
        if (mpz_divisible_p(eval(cyclotomic(i), b).get_mpz_t(), q.get_mpz_t()))
            return false;
    return true;
}

} // namespace cyclodiv
