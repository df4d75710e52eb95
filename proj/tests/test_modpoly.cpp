#include <doctest.h>

#include <random>

#include "cyclodiv/cyclotomic.hpp"
#include "cyclodiv/errors.hpp"
#include "cyclodiv/modpoly.hpp"

using namespace cyclodiv;

namespace {

std::vector<std::uint64_t> brute_roots(const IntPoly& f, std::uint64_t q)
{
    FpPoly g = reduce(f, q);
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < q; ++r)
        if (g.eval(r) == 0)
            out.push_back(r);
    return out;
}

} // namespace

TEST_CASE("construction")
{
    FpPoly a(7, {8, 14, 3});
    CHECK(a.coeffs() == std::vector<std::uint64_t>{1, 0, 3});
    CHECK(*a.degree() == 2);
    CHECK(FpPoly(5, {0, 0}).is_zero());
    CHECK_THROWS_AS(FpPoly(9, {1}), PreconditionError);
    CHECK(reduce(IntPoly{-1, 0, 1}, 5).coeffs() == std::vector<std::uint64_t>{4, 0, 1});
}

TEST_CASE("field arithmetic")
{
    FpPoly a(5, {1, 2, 3}), b(5, {4, 1});
    CHECK(add(a, b) == FpPoly(5, {0, 3, 3}));
    CHECK(sub(a, a).is_zero());
    CHECK(mul(a, b) == FpPoly(5, {4, 4, 4, 3}));
    FpPoly q = quot(a, b), r = rem(a, b);
    CHECK(add(mul(q, b), r) == a);
    CHECK(make_monic(FpPoly(5, {2, 4})) == FpPoly(5, {3, 1}));
    CHECK_THROWS(gcd_fp(FpPoly(5, {1}), FpPoly(7, {1})));
}

TEST_CASE("division identity for large moduli")
{
    std::uint64_t p = 18446744073709551557ULL;
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::uint64_t> ca(9), cb(5);
        for (auto& v : ca)
            v = rng();
        for (auto& v : cb)
            v = rng();
        cb.back() = 1;
        FpPoly a(p, ca), b(p, cb);
        CHECK(add(mul(quot(a, b), b), rem(a, b)) == a);
        CHECK(rem(mul(a, b), b).is_zero());
    }
}

TEST_CASE("powmod_x")
{
    FpPoly h(5, {1, 0, 1}); // x^2 + 1 over F_5
    CHECK(powmod_x(5, h) == FpPoly::x(5));
    CHECK(powmod_x(2, h) == FpPoly(5, {4}));
    CHECK(powmod_x(0, h) == FpPoly::one(5));
    CHECK(powmod(FpPoly(5, {1, 1}), 5, FpPoly(5, {0, 0, 0, 0, 0, 0, 1})) == FpPoly(5, {1, 0, 0, 0, 0, 1}));
}

TEST_CASE("gcd")
{
    FpPoly a = mul(FpPoly(7, {1, 1}), FpPoly(7, {2, 1}));
    FpPoly b = mul(FpPoly(7, {1, 1}), FpPoly(7, {3, 1}));
    CHECK(gcd_fp(a, b) == FpPoly(7, {1, 1}));
    CHECK(gcd_fp(FpPoly(7), FpPoly(7)).is_zero());
    CHECK(gcd_fp(FpPoly(7, {3, 6}), FpPoly(7)) == FpPoly(7, {4, 1}));
}

TEST_CASE("splitting")
{
    IntPoly f{-1, -1, 0, 1, 1}; // (x-1)(x+1)(x^2+x+1)
    CHECK(splits_completely(f, 13));
    CHECK_FALSE(splits_completely(f, 5));
    CHECK_FALSE(splits_completely(f, 3)); // repeated root mod 3
    CHECK(splits_completely(IntPoly{1, 0, 1}, 5));
    CHECK_FALSE(splits_completely(IntPoly{1, 0, 1}, 7));
    CHECK_THROWS_AS(splits_completely(IntPoly{1, 2}, 5), PreconditionError);

    std::uint64_t first = 0;
    for (std::uint64_t q = 2; q < 100 && !first; ++q)
        if (is_prime(q) && splits_completely(f, q))
            first = q;
    CHECK(first == 7);
    CHECK(*linear_part(f, 13).degree() == 4);
    CHECK(*linear_part(f, 5).degree() == 2);
}

TEST_CASE("roots")
{
    CHECK(roots_mod(cyclotomic(5), 11) == std::vector<std::uint64_t>{3, 4, 5, 9});
    CHECK(roots_mod(IntPoly{1, 0, 1}, 7).empty());
    CHECK(roots_mod(IntPoly{0, 0, 1}, 7) == std::vector<std::uint64_t>{0});
    CHECK_THROWS_AS(roots_mod(IntPoly{-7, 7}, 7), PreconditionError);
}

TEST_CASE("roots agree with brute force")
{
    std::mt19937_64 rng(32);
    auto ps = primes_up_to(10000);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t q = ps[rng() % ps.size()];
        std::size_t deg = rng() % 6 + 1;
        std::vector<BigInt> c(deg + 1);
        for (auto& v : c)
            v = static_cast<long>(rng() % 41) - 20;
        c.back() = 1;
        IntPoly f(c);
        auto want = brute_roots(f, q);
        REQUIRE(roots_mod(f, q) == want);
        REQUIRE(roots_mod_split(f, q, rng()) == want);
    }
}

TEST_CASE("randomized roots for large primes")
{
    std::uint64_t q = 1'000'000'007;
    IntPoly f = IntPoly{-3, 1} * IntPoly{-5, 1} * IntPoly{-999'999'000, 1} * IntPoly{1, 0, 1};
    auto r = roots_mod(f, q);
    for (auto v : r)
        CHECK(reduce(f, q).eval(v) == 0);
    // 1e9+7 = 3 mod 4, so x^2+1 has no roots
    CHECK(r == std::vector<std::uint64_t>{3, 5, 999'999'000});
    CHECK(roots_mod(f, q, 1) == roots_mod(f, q, 2));

    auto phi12 = roots_mod(cyclotomic(12), 1'000'000'009);
    CHECK(phi12.size() == 4);
    for (auto v : phi12)
        CHECK(multiplicative_order(v, 1'000'000'009) == 12);
    CHECK(roots_mod(cyclotomic(8), 1'000'000'007).empty());
}

TEST_CASE("cyclotomic roots have exact order d")
{
    auto ps = primes_up_to(2000);
    for (std::uint64_t d = 1; d <= 30; ++d)
        for (auto q : ps) {
            if (d % q == 0)
                continue;
            bool split = splits_completely(cyclotomic(d), q);
            REQUIRE(split == (d == 1 || q % d == 1));
            if (!split)
                continue;
            for (auto r : roots_mod(cyclotomic(d), q))
                REQUIRE(multiplicative_order(r, q) == d);
        }
}

TEST_CASE("modp_divides")
{
    CHECK(modp_divides(IntPoly{1, 0, 1}, IntPoly{1, 2, 1}, 2));
    CHECK_FALSE(modp_divides(IntPoly{1, 0, 1}, IntPoly{1, 2, 1}, 3));
    CHECK(modp_divides(IntPoly{1, 1}, IntPoly{-1, 0, 1}, 5));
    CHECK_THROWS_AS(modp_divides(IntPoly{3}, IntPoly{1, 1}, 3), PreconditionError);
}
