#include "cyclodiv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "cyclodiv/errors.hpp"

namespace cyclodiv {

namespace {

constexpr std::size_t kCacheCapacity = 8192;

// P / (x^e - 1), assuming exact division.
std::vector<BigInt> divide_by_binomial(const std::vector<BigInt>& p, std::size_t e)
{
    const std::size_t n = p.size() - 1;
    std::vector<BigInt> q(n - e + 1);
    for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = -p[i];
        if (i >= e)
            q[i] += q[i - e];
    }
    return q;
}

std::vector<BigInt> multiply_by_binomial(const std::vector<BigInt>& p, std::size_t e)
{
    std::vector<BigInt> r(p.size() + e);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + e] += p[i];
        r[i] -= p[i];
    }
    return r;
}

// Phi_d = prod_{e | d} (x^e - 1)^mu(d/e)
IntPoly cyclotomic_uncached(std::uint64_t d)
{
    std::vector<BigInt> acc{1};
    std::vector<std::uint64_t> denominators;
    for (std::uint64_t e : divisors(d)) {
        const int mu = moebius(d / e);
        if (mu == 1)
            acc = multiply_by_binomial(acc, e);
        else if (mu == -1)
            denominators.push_back(e);
    }
    for (std::uint64_t e : denominators)
        acc = divide_by_binomial(acc, e);
    return IntPoly(std::move(acc));
}

class CycloCache {
public:
    IntPoly get(std::uint64_t d)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(d);
            if (it != map_.end())
                return it->second;
        }
        IntPoly value = cyclotomic_uncached(d);
        std::unique_lock lock(mutex_);
        if (map_.size() < kCacheCapacity)
            map_.insert_or_assign(d, value);
        return value;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, IntPoly> map_;
};

CycloCache& cache()
{
    static CycloCache instance;
    return instance;
}

} // namespace

void CycloFactorization::validate() const
{
    std::uint64_t prev = 0;
    for (const auto& [d, e] : factors) {
        if (d == 0)
            throw PreconditionError("cyclotomic index must be positive");
        if (d <= prev)
            throw PreconditionError("cyclotomic indices must be strictly ascending");
        if (e == 0)
            throw PreconditionError("multiplicities must be positive");
        prev = d;
    }
}

std::size_t CycloFactorization::degree() const
{
    std::size_t deg = e0;
    for (const auto& [d, e] : factors)
        deg += static_cast<std::size_t>(e) * euler_phi(d);
    return deg;
}

std::uint64_t CycloFactorization::max_index() const
{
    return factors.empty() ? 0 : factors.back().first;
}

bool CycloFactorization::has_index(std::uint64_t d) const
{
    for (const auto& f : factors)
        if (f.first == d)
            return true;
    return false;
}

IntPoly cyclotomic(std::uint64_t d)
{
    if (d == 0)
        throw PreconditionError("cyclotomic: index must be >= 1");
    return cache().get(d);
}

IntPoly cyclotomic_by_division(std::uint64_t d)
{
    if (d == 0)
        throw PreconditionError("cyclotomic: index must be >= 1");
    std::map<std::uint64_t, IntPoly> memo;
    for (std::uint64_t e : divisors(d)) {
        IntPoly g = IntPoly::x_pow_minus_one(e);
        for (const auto& [k, phi] : memo) {
            if (e % k != 0)
                continue;
            auto q = exact_divide(g, phi);
            if (!q)
                throw InvariantBreach("x^e - 1 is not divisible by Phi_k for k | e");
            g = std::move(*q);
        }
        memo.emplace(e, std::move(g));
    }
    return memo.at(d);
}

IntPoly expand(const CycloFactorization& c)
{
    c.validate();
    IntPoly acc = IntPoly::monomial(c.e0);
    for (const auto& [d, e] : c.factors)
        acc = acc * pow(cyclotomic(d), e);
    return acc;
}

ClassifyResult classify_cyclotomic_product(const IntPoly& f)
{
    if (f.is_zero())
        throw PreconditionError("classify: zero polynomial");
    if (!f.is_monic())
        throw PreconditionError("classify: polynomial is not monic");

    ClassifyResult out;
    out.partial.e0 = static_cast<unsigned>(f.x_valuation());
    IntPoly rest = f.shift_down(out.partial.e0);

    for (std::uint64_t d = 1;; ++d) {
        const std::uint64_t deg = *rest.degree();
        if (deg == 0 || d > 2 * deg * deg)
            break;
        out.search_bound = d;
        if (euler_phi(d) > deg)
            continue;
        const IntPoly phi = cyclotomic(d);
        unsigned mult = 0;
        while (*rest.degree() >= *phi.degree()) {
            auto q = exact_divide(rest, phi);
            if (!q)
                break;
            rest = std::move(*q);
            ++mult;
        }
        if (mult)
            out.partial.factors.emplace_back(d, mult);
    }

    out.residual = rest;
    if (rest == IntPoly{1})
        out.factorization = out.partial;
    return out;
}

SubstitutionIdentity cyclotomic_substitution_identity(std::uint64_t d, std::uint64_t p)
{
    if (d == 0)
        throw PreconditionError("substitution identity: d must be >= 1");
    if (!is_prime(p))
        throw PreconditionError("substitution identity: p must be prime");
    SubstitutionIdentity out;
    out.d = d;
    out.p = p;
    out.p_divides_d = d % p == 0;
    out.lhs = cyclotomic(d).substitute_power(p);
    out.rhs = out.p_divides_d ? cyclotomic(p * d) : cyclotomic(p * d) * cyclotomic(d);
    out.holds = out.lhs == out.rhs;
    return out;
}

namespace {

// a with ratio = p^a, or nullopt.
std::optional<int> log_exact(std::uint64_t num, std::uint64_t den, const BigInt& p)
{
    int sign = 1;
    if (num % den != 0) {
        if (den % num != 0)
            return std::nullopt;
        std::swap(num, den);
        sign = -1;
    }
    BigInt r = num / den;
    int a = 0;
    while (r > 1 && mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        ++a;
    }
    if (r != 1)
        return std::nullopt;
    return sign * a;
}

} // namespace

SharedPrimeCheck shared_prime_ratio_check(std::uint64_t n, std::uint64_t m, const BigInt& b,
                                          std::uint64_t seed)
{
    if (n == 0 || m == 0)
        throw PreconditionError("shared_prime_ratio_check: indices must be >= 1");
    if (b < 2)
        throw PreconditionError("shared_prime_ratio_check: base must be >= 2");
    SharedPrimeCheck out;
    out.n = n;
    out.m = m;
    out.b = b;
    out.value_n = eval(cyclotomic(n), b);
    out.value_m = eval(cyclotomic(m), b);
    mpz_gcd(out.gcd.get_mpz_t(), out.value_n.get_mpz_t(), out.value_m.get_mpz_t());
    out.holds = true;
    if (out.gcd > 1) {
        FactorMap fm = factor(out.gcd, kDefaultTrialBound, seed);
        out.gcd_fully_factored = fm.complete();
        for (const auto& [p, e] : fm.primes) {
            SharedPrime sp;
            sp.prime = p;
            sp.exponent = log_exact(m, n, p);
            sp.holds = sp.exponent.has_value();
            out.holds = out.holds && sp.holds;
            out.shared.push_back(std::move(sp));
        }
    }
    return out;
}

bool product_of_cyclotomics_equals(std::uint64_t M)
{
    if (M == 0)
        throw PreconditionError("product identity: M must be >= 1");
    IntPoly acc{1};
    for (std::uint64_t d : divisors(M))
        acc = acc * cyclotomic(d);
    return acc == IntPoly::x_pow_minus_one(M);
}

std::string render(const CycloFactorization& c)
{
    std::string s;
    auto append = [&](const std::string& t) {
        if (!s.empty())
            s += " * ";
        s += t;
    };
    if (c.e0 == 1)
        append("x");
    else if (c.e0 > 1)
        append("x^" + std::to_string(c.e0));
    for (const auto& [d, e] : c.factors)
        append("Phi_" + std::to_string(d) + (e > 1 ? "^" + std::to_string(e) : ""));
    return s.empty() ? "1" : s;
}

} // namespace cyclodiv
