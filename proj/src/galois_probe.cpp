#include "cyclodiv/galois_probe.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "cyclodiv/errors.hpp"
#include "cyclodiv/modpoly.hpp"
#include "parallel.hpp"

namespace cyclodiv {

namespace {

void require_monic_nonconstant(const IntPoly& f, const char* who)
{
    if (!f.is_monic() || *f.degree() < 1)
        throw PreconditionError(std::string(who) + ": polynomial must be monic of degree >= 1");
}

void require_squarefree(const IntPoly& f, const char* who)
{
    if (!is_squarefree(f))
        throw PreconditionError(std::string(who) + ": polynomial has a repeated factor (zero discriminant)");
}

} // namespace

double SplitDensityReport::density() const
{
    return primes_tested == 0 ? 0.0 : static_cast<double>(split_count) / static_cast<double>(primes_tested);
}

std::string SplitDensityReport::density_fraction() const
{
    if (primes_tested == 0)
        return "0/0";
    const std::uint64_t g = std::gcd(split_count, primes_tested);
    return std::to_string(split_count / g) + "/" + std::to_string(primes_tested / g);
}

std::string SplitDensityReport::density_decimal() const
{
    // integer arithmetic keeps the rendering identical on every platform
    if (primes_tested == 0)
        return "0.000000";
    const unsigned __int128 scaled =
        (static_cast<unsigned __int128>(split_count) * 1'000'000 * 2 + primes_tested) / (2 * primes_tested);
    const auto whole = static_cast<std::uint64_t>(scaled / 1'000'000);
    const auto frac = static_cast<std::uint64_t>(scaled % 1'000'000);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%llu.%06llu", static_cast<unsigned long long>(whole),
                  static_cast<unsigned long long>(frac));
    return buf;
}

SplitDensityReport split_density(const IntPoly& f, std::uint64_t prime_limit, unsigned threads)
{
    require_monic_nonconstant(f, "split_density");
    require_squarefree(f, "split_density");

    SplitDensityReport report;
    report.polynomial = f;
    report.prime_limit = prime_limit;
    const auto primes = primes_up_to(prime_limit);
    auto split = detail::parallel_map<char>(primes.size(), threads,
                                            [&](std::size_t i) -> char { return splits_completely(f, primes[i]); });
    report.primes_tested = primes.size();
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (split[i])
            report.split_primes.push_back(primes[i]);
    report.split_count = report.split_primes.size();
    return report;
}

OrderProfile root_order_profile(const IntPoly& f, std::uint64_t prime_limit, unsigned threads,
                                std::uint64_t seed)
{
    require_monic_nonconstant(f, "root_order_profile");
    if (f.coeff(0) == 0)
        throw PreconditionError("root_order_profile: f(0) = 0; strip the power of x first");
    require_squarefree(f, "root_order_profile");

    OrderProfile profile;
    profile.polynomial = f;
    profile.prime_limit = prime_limit;
    const auto primes = primes_up_to(prime_limit);
    const BigInt f0 = f.coeff(0);

    auto rows = detail::parallel_map<std::optional<RootOrders>>(primes.size(), threads, [&](std::size_t i) {
        const std::uint64_t q = primes[i];
        std::optional<RootOrders> row;
        // a root 0 mod q has no multiplicative order
        if (mpz_divisible_ui_p(f0.get_mpz_t(), q) || !splits_completely(f, q))
            return row;
        row.emplace();
        row->prime = q;
        row->roots = roots_mod(f, q, seed);
        if (row->roots.size() != *f.degree())
            throw InvariantBreach("split prime " + std::to_string(q) + " yielded the wrong number of roots");
        for (std::uint64_t r : row->roots)
            row->orders.push_back(multiplicative_order(r, q));
        return row;
    });
    for (auto& row : rows) {
        if (!row)
            continue;
        for (std::uint64_t o : row->orders)
            profile.max_order_seen = std::max(profile.max_order_seen, o);
        profile.records.push_back(std::move(*row));
    }
    return profile;
}

std::string to_string(ImplicationOutcome o)
{
    switch (o) {
    case ImplicationOutcome::divides: return "divides";
    case ImplicationOutcome::does_not_divide: return "does_not_divide";
    case ImplicationOutcome::inconsistent: return "inconsistent";
    case ImplicationOutcome::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

bool implication_holds(const IntPoly& g, const IntPoly& h, std::uint64_t q, std::uint64_t seed)
{
    const FpPoly gq = reduce(g, q);
    for (std::uint64_t r : roots_mod(h, q, seed))
        if (gq.eval(r) != 0)
            return false;
    return true;
}

} // namespace

ImplicationVerdict root_implication_divides(const IntPoly& g, const IntPoly& h, std::uint64_t prime_budget,
                                            std::uint64_t seed)
{
    if (!g.is_monic())
        throw PreconditionError("root_implication: g must be monic");
    require_monic_nonconstant(h, "root_implication");
    require_squarefree(h, "root_implication");

    ImplicationVerdict v;
    v.g = g;
    v.h = h;
    v.remainder = divrem_monic(g, h).remainder;
    v.remainder_bound = v.remainder.max_abs_coeff();
    v.exact_divides = v.remainder.is_zero();

    for (std::uint64_t q : primes_up_to(kImplicationPreviewLimit)) {
        if (BigInt(std::to_string(q)) > v.remainder_bound)
            break;
        if (splits_completely(h, q))
            v.primes.push_back({q, implication_holds(g, h, q, seed), false});
    }

    // primes above 2^62 would overflow the 64-bit field arithmetic
    BigInt limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 2, 62);
    if (v.remainder_bound < limit) {
        std::uint64_t q = next_prime(static_cast<std::uint64_t>(v.remainder_bound.get_ui()));
        if (v.remainder_bound == 0)
            q = 2;
        for (std::uint64_t n = 0; n < prime_budget; ++n, q = next_prime(q)) {
            ++v.primes_examined;
            if (!splits_completely(h, q))
                continue;
            ImplicationAtPrime at{q, implication_holds(g, h, q, seed), true};
            v.primes.push_back(at);
            v.qualifying = at;
            break;
        }
    }

    if (v.qualifying) {
        if (v.qualifying->implication_held != v.exact_divides)
            v.outcome = ImplicationOutcome::inconsistent;
        else
            v.outcome = v.exact_divides ? ImplicationOutcome::divides : ImplicationOutcome::does_not_divide;
    }
    return v;
}

} // namespace cyclodiv
