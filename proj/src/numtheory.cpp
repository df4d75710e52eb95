#include "cyclodiv/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "cyclodiv/errors.hpp"

namespace cyclodiv {

namespace {

constexpr std::uint64_t kSmallPrimeCache = 1u << 20;
constexpr int kRhoAttempts = 24;

const std::vector<std::uint64_t>& small_primes()
{
    static const std::vector<std::uint64_t> cache = primes_up_to(kSmallPrimeCache);
    return cache;
}

BigInt to_big(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

bool fits_u64(const BigInt& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const BigInt& n)
{
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
    return v;
}

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a)
{
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

bool strong_probable_prime_base2(const BigInt& n)
{
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt x;
    BigInt two = 2;
    mpz_powm(x.get_mpz_t(), two.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const BigInt nm1 = n - 1;
    if (x == 1 || x == nm1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1)
            return true;
    }
    return false;
}

// x / 2 mod n for odd n.
void half_mod(BigInt& x, const BigInt& n)
{
    if (mpz_odd_p(x.get_mpz_t()))
        x += n;
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
}

// Strong Lucas probable prime test with Selfridge's method A parameters.
bool strong_lucas_probable_prime(const BigInt& n)
{
    if (mpz_perfect_square_p(n.get_mpz_t()))
        return false;
    long dval = 5;
    for (;;) {
        BigInt dd = dval;
        int j = mpz_jacobi(dd.get_mpz_t(), n.get_mpz_t());
        if (j == -1)
            break;
        if (j == 0 && abs(dd) != n)
            return false;
        dval = dval > 0 ? -(dval + 2) : -dval + 2;
    }
    const BigInt D = dval;
    const BigInt P = 1;
    const BigInt Q = BigInt(1 - dval) / 4;

    BigInt d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    BigInt U = 1, V = P, Qk = Q;
    mpz_mod(Qk.get_mpz_t(), Qk.get_mpz_t(), n.get_mpz_t());
    BigInt Qm = Qk;
    const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        U = U * V % n;
        V = V * V - 2 * Qk;
        mpz_mod(V.get_mpz_t(), V.get_mpz_t(), n.get_mpz_t());
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            BigInt u2 = P * U + V;
            BigInt v2 = D * U + P * V;
            mpz_mod(u2.get_mpz_t(), u2.get_mpz_t(), n.get_mpz_t());
            mpz_mod(v2.get_mpz_t(), v2.get_mpz_t(), n.get_mpz_t());
            half_mod(u2, n);
            half_mod(v2, n);
            U = u2;
            V = v2;
            Qk = Qk * Qm % n;
        }
    }
    if (U == 0 || V == 0)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = V * V - 2 * Qk;
        mpz_mod(V.get_mpz_t(), V.get_mpz_t(), n.get_mpz_t());
        if (V == 0)
            return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial
// factor of the odd composite n, or 0 if every attempt degenerated.
std::uint64_t rho_brent_u64(std::uint64_t n, std::mt19937_64& rng)
{
    if (n % 2 == 0)
        return 2;
    for (int attempt = 0; attempt < kRhoAttempts; ++attempt) {
        const std::uint64_t c = rng() % (n - 1) + 1;
        std::uint64_t y = rng() % n;
        const std::uint64_t m = 128;
        std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](std::uint64_t v) {
            std::uint64_t s = mulmod(v, v, n) + c;
            if (s < c || s >= n)
                s -= n;
            return s;
        };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
    return 0;
}

BigInt rho_brent(const BigInt& n, std::mt19937_64& rng)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    gmp_randclass state(gmp_randinit_default);
    state.seed(static_cast<unsigned long>(rng()));
    for (int attempt = 0; attempt < kRhoAttempts; ++attempt) {
        const BigInt c = state.get_z_range(n - 1) + 1;
        BigInt y = state.get_z_range(n);
        const std::uint64_t m = 128;
        BigInt g = 1, q = 1, x, ys, diff;
        std::uint64_t r = 1;
        auto step = [&](BigInt& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    diff = x - y;
                    q = q * diff % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
    return 0;
}

void split_u64(std::uint64_t n, std::mt19937_64& rng, std::map<std::uint64_t, unsigned>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = rho_brent_u64(n, rng);
    if (d == 0) {
        // Rho cannot fail on every attempt for a 64-bit composite in
        // practice; fall back to exhaustive trial division if it does.
        for (std::uint64_t p = 3;; p += 2)
            if (n % p == 0) {
                d = p;
                break;
            }
    }
    split_u64(d, rng, out);
    split_u64(n / d, rng, out);
}

} // namespace

BigInt default_rho_cutoff()
{
    BigInt c;
    mpz_ui_pow_ui(c.get_mpz_t(), 10, 24);
    return c;
}

BigInt FactorMap::product() const
{
    BigInt acc = 1;
    for (const auto& [p, e] : primes) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        acc *= pe;
    }
    if (cofactor)
        acc *= *cofactor;
    return acc;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : witnesses) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    for (std::uint64_t a : witnesses)
        if (!miller_rabin_u64(n, a))
            return false;
    return true;
}

bool is_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    if (fits_u64(n))
        return is_prime(to_u64(n));
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    if (mpz_even_p(n.get_mpz_t()))
        return false;
    return strong_probable_prime_base2(n) && strong_lucas_probable_prime(n);
}

BigInt next_prime(const BigInt& n)
{
    if (n < 2)
        return 2;
    BigInt c = n + 1;
    if (mpz_even_p(c.get_mpz_t()) && c != 2)
        ++c;
    while (!is_prime(c))
        c += 2;
    return c;
}

std::uint64_t next_prime(std::uint64_t n)
{
    return to_u64(next_prime(to_big(n)));
}

FactorMap factor(const BigInt& n, std::uint64_t trial_bound, std::uint64_t seed)
{
    return factor(n, trial_bound, seed, default_rho_cutoff());
}

FactorMap factor(const BigInt& n, std::uint64_t trial_bound, std::uint64_t seed,
                 const BigInt& rho_cutoff)
{
    if (n < 1)
        throw PreconditionError("factor: n must be >= 1");

    std::map<BigInt, unsigned> found;
    BigInt rest = n;

    const std::vector<std::uint64_t>* trial = &small_primes();
    std::vector<std::uint64_t> extended;
    if (trial_bound > kSmallPrimeCache) {
        extended = primes_up_to(trial_bound);
        trial = &extended;
    }
    for (std::uint64_t p : *trial) {
        if (p > trial_bound || rest == 1)
            break;
        if (BigInt(p) * p > rest) {
            // rest has no factor <= sqrt(rest), so it is prime
            break;
        }
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++found[to_big(p)];
        }
    }

    BigInt cofactor = 1;
    std::mt19937_64 rng(seed);
    std::vector<BigInt> pending;
    if (rest > 1)
        pending.push_back(rest);
    while (!pending.empty()) {
        BigInt m = std::move(pending.back());
        pending.pop_back();
        if (m == 1)
            continue;
        if (is_prime(m)) {
            ++found[m];
            continue;
        }
        if (m > rho_cutoff) {
            cofactor *= m;
            continue;
        }
        if (fits_u64(m)) {
            std::map<std::uint64_t, unsigned> local;
            split_u64(to_u64(m), rng, local);
            for (const auto& [p, e] : local)
                found[to_big(p)] += e;
            continue;
        }
        BigInt d = rho_brent(m, rng);
        if (d == 0) {
            cofactor *= m;
            continue;
        }
        pending.push_back(d);
        pending.push_back(m / d);
    }

    FactorMap out;
    for (auto& [p, e] : found)
        out.primes.emplace_back(p, e);
    if (cofactor > 1)
        out.cofactor = cofactor;
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n)
{
    if (n == 0)
        throw PreconditionError("factor_u64: n must be >= 1");
    std::map<std::uint64_t, unsigned> found;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (n % p == 0) {
            n /= p;
            ++found[p];
        }
    }
    std::mt19937_64 rng(kDefaultSeed);
    split_u64(n, rng, found);
    return {found.begin(), found.end()};
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t q)
{
    if (!is_prime(q))
        throw PreconditionError("multiplicative_order: modulus is not prime");
    r %= q;
    if (r == 0)
        throw PreconditionError("multiplicative_order: r is divisible by q");
    std::uint64_t order = q - 1;
    for (const auto& [p, e] : factor_u64(q - 1)) {
        for (unsigned i = 0; i < e; ++i) {
            if (powmod(r, order / p, q) != 1)
                break;
            order /= p;
        }
    }
    return order;
}

std::uint64_t multiplicative_order(const BigInt& r, std::uint64_t q)
{
    if (q < 2)
        throw PreconditionError("multiplicative_order: modulus is not prime");
    BigInt rm;
    mpz_mod(rm.get_mpz_t(), r.get_mpz_t(), to_big(q).get_mpz_t());
    return multiplicative_order(to_u64(rm), q);
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0)
        throw PreconditionError("euler_phi: n must be >= 1");
    std::uint64_t phi = n;
    for (const auto& [p, e] : factor_u64(n))
        phi = phi / p * (p - 1);
    return phi;
}

int moebius(std::uint64_t n)
{
    if (n == 0)
        throw PreconditionError("moebius: n must be >= 1");
    int mu = 1;
    for (const auto& [p, e] : factor_u64(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0)
        throw PreconditionError("divisors: n must be >= 1");
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factor_u64(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    if (n <= 1)
        return out;
    for (const auto& [p, e] : factor_u64(n))
        out.push_back(p);
    return out;
}

std::uint64_t largest_prime_factor(std::uint64_t n)
{
    auto ps = prime_divisors(n);
    return ps.empty() ? 1 : ps.back();
}

BigInt radical(const BigInt& n, std::uint64_t seed)
{
    BigInt m = abs(n);
    if (m <= 1)
        return 1;
    FactorMap fm = factor(m, kDefaultTrialBound, seed);
    if (!fm.complete())
        throw BudgetExhausted("radical: could not factor " + m.get_str());
    BigInt r = 1;
    for (const auto& [p, e] : fm.primes)
        r *= p;
    return r;
}

bool radical_divides(const BigInt& a, const BigInt& b_mod_a)
{
    BigInt c = abs(a);
    if (c <= 1)
        return true;
    BigInt g, b;
    for (;;) {
        mpz_mod(b.get_mpz_t(), b_mod_a.get_mpz_t(), c.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
        if (g == 1)
            return c == 1;
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        if (c == 1)
            return true;
    }
}

} // namespace cyclodiv
