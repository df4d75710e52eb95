#include "cyclodiv/modpoly.hpp"

#include <algorithm>
#include <random>

#include "cyclodiv/errors.hpp"

namespace cyclodiv {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void check_same_field(const FpPoly& a, const FpPoly& b)
{
    if (a.modulus() != b.modulus())
        throw PreconditionError("polynomials over different prime fields");
}

} // namespace

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    if (!is_prime(p))
        throw PreconditionError("FpPoly: modulus " + std::to_string(p) + " is not prime");
    for (auto& c : c_)
        c %= p_;
    normalize();
}

FpPoly::FpPoly(Unchecked, std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs))
{
    normalize();
}

void FpPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

std::optional<std::size_t> FpPoly::degree() const
{
    if (c_.empty())
        return std::nullopt;
    return c_.size() - 1;
}

std::uint64_t FpPoly::eval(std::uint64_t t) const
{
    t %= p_;
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = mulmod(acc, t, p_) + c_[i];
        if (acc >= p_)
            acc -= p_;
    }
    return acc;
}

FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
FpPoly FpPoly::one(std::uint64_t p) { return FpPoly(p, {1}); }

FpPoly add(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    const std::uint64_t p = a.p_;
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
        std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
        x += y;
        if (x >= p || x < y)
            x -= p;
        v[i] = x;
    }
    return FpPoly(FpPoly::Unchecked{}, p, std::move(v));
}

FpPoly sub(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    const std::uint64_t p = a.p_;
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
        std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
        v[i] = x >= y ? x - y : x + (p - y);
    }
    return FpPoly(FpPoly::Unchecked{}, p, std::move(v));
}

FpPoly mul(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    const std::uint64_t p = a.p_;
    if (a.c_.empty() || b.c_.empty())
        return FpPoly(FpPoly::Unchecked{}, p, {});
    const std::size_t n = a.c_.size() + b.c_.size() - 1;
    std::vector<std::uint64_t> v(n, 0);
    if (p < (1ULL << 32)) {
        // products fit in 64 bits, so 128-bit sums cannot overflow
        std::vector<unsigned __int128> acc(n, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                acc[i + j] += a.c_[i] * b.c_[j];
        for (std::size_t i = 0; i < n; ++i)
            v[i] = static_cast<std::uint64_t>(acc[i] % p);
    } else {
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                const std::uint64_t t = mulmod(a.c_[i], b.c_[j], p);
                std::uint64_t& x = v[i + j];
                x = x >= p - t ? x - (p - t) : x + t;
            }
    }
    return FpPoly(FpPoly::Unchecked{}, p, std::move(v));
}

namespace {

// Long division; returns {quotient, remainder}.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
divide(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::uint64_t p)
{
    if (b.empty())
        throw PreconditionError("polynomial division by zero in F_p[x]");
    std::vector<std::uint64_t> r = a;
    const std::size_t db = b.size() - 1;
    if (r.size() <= db)
        return {{}, r};
    const std::uint64_t inv = inverse_mod(b.back(), p);
    std::vector<std::uint64_t> q(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        const std::uint64_t t = mulmod(r[i], inv, p);
        q[i - db] = t;
        if (t == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j) {
            const std::uint64_t s = mulmod(t, b[j], p);
            std::uint64_t& x = r[i - db + j];
            x = x >= s ? x - s : x + (p - s);
        }
    }
    r.resize(db);
    return {q, r};
}

} // namespace

FpPoly rem(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    return FpPoly(FpPoly::Unchecked{}, a.p_, divide(a.c_, b.c_, a.p_).second);
}

FpPoly quot(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    return FpPoly(FpPoly::Unchecked{}, a.p_, divide(a.c_, b.c_, a.p_).first);
}

FpPoly make_monic(const FpPoly& a)
{
    if (a.c_.empty() || a.c_.back() == 1)
        return a;
    const std::uint64_t inv = inverse_mod(a.c_.back(), a.p_);
    std::vector<std::uint64_t> v = a.c_;
    for (auto& c : v)
        c = mulmod(c, inv, a.p_);
    return FpPoly(FpPoly::Unchecked{}, a.p_, std::move(v));
}

FpPoly reduce(const IntPoly& f, std::uint64_t p)
{
    if (!is_prime(p))
        throw PreconditionError("reduce: modulus " + std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> v;
    v.reserve(f.coeffs().size());
    BigInt r;
    for (const auto& c : f.coeffs()) {
        v.push_back(mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p));
    }
    return FpPoly(FpPoly::Unchecked{}, p, std::move(v));
}

FpPoly powmod(const FpPoly& base, const BigInt& e, const FpPoly& h)
{
    if (h.is_zero())
        throw PreconditionError("powmod: zero modulus polynomial");
    if (e < 0)
        throw PreconditionError("powmod: negative exponent");
    FpPoly result = rem(FpPoly::one(h.modulus()), h);
    if (e == 0)
        return result;
    const FpPoly b = rem(base, h);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result), h);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = rem(mul(result, b), h);
    }
    return result;
}

FpPoly powmod_x(const BigInt& e, const FpPoly& h)
{
    if (!h.is_monic() || *h.degree() < 1)
        throw PreconditionError("powmod_x: modulus polynomial must be monic of degree >= 1");
    return powmod(FpPoly::x(h.modulus()), e, h);
}

FpPoly gcd_fp(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

FpPoly linear_part(const IntPoly& f, std::uint64_t q)
{
    FpPoly fq = make_monic(reduce(f, q));
    if (fq.is_zero())
        throw PreconditionError("f is zero modulo " + std::to_string(q));
    if (*fq.degree() == 0)
        return fq;
    FpPoly xq = powmod_x(BigInt(std::to_string(q)), fq);
    return gcd_fp(fq, sub(xq, rem(FpPoly::x(q), fq)));
}

bool splits_completely(const IntPoly& f, std::uint64_t q)
{
    if (!f.is_monic() || *f.degree() < 1)
        throw PreconditionError("splits_completely: f must be monic of degree >= 1");
    return linear_part(f, q).degree() == f.degree();
}

namespace {

void split_linear(const FpPoly& g, std::mt19937_64& rng, std::vector<std::uint64_t>& out)
{
    const std::uint64_t p = g.modulus();
    const std::size_t deg = *g.degree();
    if (deg == 0)
        return;
    if (deg == 1) {
        out.push_back(g.coeffs()[0] == 0 ? 0 : p - g.coeffs()[0]);
        return;
    }
    if (p == 2) {
        for (std::uint64_t r = 0; r < 2; ++r)
            if (g.eval(r) == 0)
                out.push_back(r);
        return;
    }
    const BigInt half = BigInt(std::to_string((p - 1) / 2));
    for (;;) {
        const std::uint64_t a = rng() % p;
        FpPoly shifted(p, {a, 1});
        FpPoly t = sub(powmod(shifted, half, g), FpPoly::one(p));
        FpPoly h = gcd_fp(g, t);
        const std::size_t dh = h.degree().value_or(0);
        if (dh > 0 && dh < deg) {
            split_linear(h, rng, out);
            split_linear(quot(g, h), rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::uint64_t> roots_mod_split(const IntPoly& f, std::uint64_t q, std::uint64_t seed)
{
    FpPoly lin = linear_part(f, q);
    std::uint64_t s = splitmix64(seed ^ splitmix64(q));
    for (std::uint64_t c : reduce(f, q).coeffs())
        s = splitmix64(s ^ c);
    std::mt19937_64 rng(s);
    std::vector<std::uint64_t> out;
    split_linear(lin, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> roots_mod(const IntPoly& f, std::uint64_t q, std::uint64_t seed)
{
    FpPoly fq = reduce(f, q);
    if (fq.is_zero())
        throw PreconditionError("roots_mod: f is zero modulo " + std::to_string(q));
    if (q > kExhaustiveRootBound)
        return roots_mod_split(f, q, seed);
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < q; ++r)
        if (fq.eval(r) == 0)
            out.push_back(r);
    return out;
}

bool modp_divides(const IntPoly& h, const IntPoly& g, std::uint64_t p)
{
    FpPoly hp = reduce(h, p);
    if (hp.is_zero())
        throw PreconditionError("modp_divides: h is zero modulo " + std::to_string(p));
    return rem(reduce(g, p), make_monic(hp)).is_zero();
}

} // namespace cyclodiv
