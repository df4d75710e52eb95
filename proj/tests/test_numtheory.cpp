#include <doctest.h>

#include <random>

#include "cyclodiv/errors.hpp"
#include "cyclodiv/numtheory.hpp"

using namespace cyclodiv;

namespace {

bool naive_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

BigInt pow_big(unsigned long base, unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

} // namespace

TEST_CASE("small primality against trial division")
{
    for (std::uint64_t n = 0; n < 20000; ++n)
        REQUIRE(is_prime(n) == naive_prime(n));
    auto ps = primes_up_to(1000);
    CHECK(ps.size() == 168);
    CHECK(ps.front() == 2);
    CHECK(ps.back() == 997);
    CHECK(primes_up_to(1).empty());
}

TEST_CASE("large primality")
{
    CHECK(is_prime(std::uint64_t{2305843009213693951ULL})); // 2^61 - 1
    CHECK_FALSE(is_prime(std::uint64_t{3215031751ULL}));     // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(std::uint64_t{18446744073709551615ULL}));
    CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
    CHECK(is_prime(pow_big(2, 89) - 1));
    CHECK_FALSE(is_prime(pow_big(2, 89) + 1));
    CHECK_FALSE(is_prime(BigInt(pow_big(2, 61) - 1) * (pow_big(2, 31) - 1)));
    CHECK(next_prime(std::uint64_t{1000}) == 1009);
    CHECK(next_prime(BigInt(13)) == 17);
    CHECK(next_prime(pow_big(2, 64)) == pow_big(2, 64) + 13);
}

TEST_CASE("factor fixtures")
{
    auto f = factor(124);
    CHECK(f.complete());
    REQUIRE(f.primes.size() == 2);
    CHECK(f.primes[0] == std::pair<BigInt, unsigned>(2, 2));
    CHECK(f.primes[1] == std::pair<BigInt, unsigned>(31, 1));

    CHECK(factor(1).primes.empty());
    CHECK_THROWS_AS(factor(0), PreconditionError);

    // two primes above the trial bound, needs rho
    BigInt n = BigInt(1000000007) * BigInt(998244353);
    auto g = factor(n);
    CHECK(g.complete());
    CHECK(g.primes.size() == 2);
    CHECK(g.product() == n);

    // above the rho cutoff with no small factor
    BigInt big = (pow_big(2, 89) - 1) * (pow_big(2, 61) - 1);
    auto h = factor(big);
    CHECK_FALSE(h.complete());
    CHECK(h.product() == big);
}

TEST_CASE("factor reconstructs random values")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t n = rng() % 1'000'000'000'000ULL + 1;
        auto fm = factor(BigInt(static_cast<unsigned long>(n)));
        REQUIRE(fm.complete());
        REQUIRE(fm.product() == static_cast<unsigned long>(n));
        for (auto& [p, e] : fm.primes)
            REQUIRE(is_prime(p));
        auto fu = factor_u64(n);
        std::uint64_t back = 1;
        for (auto [p, e] : fu)
            for (unsigned k = 0; k < e; ++k)
                back *= p;
        REQUIRE(back == n);
    }
}

TEST_CASE("multiplicative order")
{
    CHECK(multiplicative_order(std::uint64_t{3}, 11) == 5);
    CHECK(multiplicative_order(std::uint64_t{2}, 7) == 3);
    CHECK(multiplicative_order(std::uint64_t{1}, 13) == 1);
    CHECK(multiplicative_order(BigInt(-1), 13) == 2);
    CHECK_THROWS_AS(multiplicative_order(std::uint64_t{3}, 12), PreconditionError);
    CHECK_THROWS_AS(multiplicative_order(std::uint64_t{22}, 11), PreconditionError);

    std::mt19937_64 rng(22);
    auto ps = primes_up_to(2000);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t q = ps[rng() % ps.size()];
        std::uint64_t r = rng() % (q - 1) + 1;
        std::uint64_t k = multiplicative_order(r, q);
        REQUIRE((q - 1) % k == 0);
        REQUIRE(powmod(r, k, q) == 1);
        for (std::uint64_t j = 1; j < k; ++j)
            REQUIRE(powmod(r, j, q) != 1);
    }
}

TEST_CASE("arithmetic functions")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(largest_prime_factor(1) == 1);
    CHECK(largest_prime_factor(91) == 13);

    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::uint64_t sum = 0;
        int mu = 0;
        for (auto d : divisors(n)) {
            sum += euler_phi(d);
            mu += moebius(d);
        }
        REQUIRE(sum == n);
        REQUIRE(mu == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("radical")
{
    CHECK(radical(0) == 1);
    CHECK(radical(1) == 1);
    CHECK(radical(360) == 30);
    CHECK(radical(-12) == 6);
    CHECK(radical_divides(12, 6));
    CHECK_FALSE(radical_divides(3, 5 % 3));
    CHECK(radical_divides(1, 0));
    CHECK(radical_divides(8, 2));
    CHECK_FALSE(radical_divides(45, 10));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        unsigned long a = rng() % 100000 + 1, b = rng() % 100000;
        BigInt ra = radical(BigInt(a));
        bool want = (BigInt(b) % ra) == 0;
        REQUIRE(radical_divides(BigInt(a), BigInt(b % a)) == want);
    }
}

TEST_CASE("modular helpers")
{
    CHECK(mulmod(~0ULL - 1, ~0ULL - 1, ~0ULL) == 1);
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(powmod(5, 0, 7) == 1);
}
