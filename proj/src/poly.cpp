#include "cyclodiv/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cyclodiv/errors.hpp"

namespace cyclodiv {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& c)
{
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n)
{
    std::vector<BigInt> v(n + 1);
    v[n] += 1;
    v[0] -= 1;
    return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

bool IntPoly::is_monomial() const
{
    return !coeffs_.empty() && x_valuation() == coeffs_.size() - 1;
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const
{
    if (coeffs_.empty())
        throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigInt IntPoly::max_abs_coeff() const
{
    BigInt best = 0;
    for (const auto& c : coeffs_)
        if (abs(c) > best)
            best = abs(c);
    return best;
}

BigInt IntPoly::content() const
{
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

std::size_t IntPoly::x_valuation() const
{
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0)
        ++k;
    return coeffs_.empty() ? 0 : k;
}

IntPoly IntPoly::substitute_power(std::size_t k) const
{
    if (k == 0)
        return constant(eval(*this, 1));
    if (coeffs_.empty())
        return {};
    std::vector<BigInt> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * k] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shift_down(std::size_t k) const
{
    if (k == 0 || coeffs_.empty())
        return *this;
    if (x_valuation() < k)
        throw PreconditionError("shift_down: x^k does not divide the polynomial");
    return IntPoly(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

IntPoly operator-(const IntPoly& a)
{
    std::vector<BigInt> v = a.coeffs();
    for (auto& c : v)
        c = -c;
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<BigInt> v(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        v[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i)
        v[i] += y[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<BigInt> v(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const BigInt& c)
{
    std::vector<BigInt> v = a.coeffs();
    for (auto& x : v)
        x *= c;
    return IntPoly(std::move(v));
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly pow(const IntPoly& a, unsigned exponent)
{
    IntPoly result{1};
    IntPoly base = a;
    while (exponent) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

DivRem divrem_monic(const IntPoly& g, const IntPoly& h)
{
    if (h.is_zero())
        throw PreconditionError("division by the zero polynomial");
    if (!h.is_monic())
        throw PreconditionError("divisor is not monic");

    const auto& hc = h.coeffs();
    const std::size_t dh = hc.size() - 1;
    std::vector<BigInt> r = g.coeffs();
    if (r.size() <= dh)
        return {IntPoly{}, g};

    std::vector<BigInt> q(r.size() - dh);
    for (std::size_t i = r.size(); i-- > dh;) {
        const BigInt lead = r[i];
        q[i - dh] = lead;
        if (lead == 0)
            continue;
        for (std::size_t j = 0; j < dh; ++j)
            mpz_submul(r[i - dh + j].get_mpz_t(), lead.get_mpz_t(), hc[j].get_mpz_t());
        r[i] = 0;
    }
    r.resize(dh);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> exact_divide(const IntPoly& g, const IntPoly& h)
{
    auto [q, r] = divrem_monic(g, h);
    if (!r.is_zero())
        return std::nullopt;
    return std::move(q);
}

BigInt eval(const IntPoly& f, const BigInt& t)
{
    BigInt acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= t;
        acc += c[i];
    }
    return acc;
}

BigInt eval_mod(const IntPoly& f, const BigInt& t, const BigInt& m)
{
    if (m <= 0)
        throw PreconditionError("eval_mod: modulus must be positive");
    BigInt tm;
    mpz_mod(tm.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    BigInt acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= tm;
        acc += c[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

IntPoly derivative(const IntPoly& f)
{
    const auto& c = f.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<BigInt> v(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        v[i - 1] = c[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

IntPoly primitive_part(const IntPoly& f)
{
    if (f.is_zero())
        return f;
    BigInt g = f.content();
    if (f.leading() < 0)
        g = -g;
    std::vector<BigInt> v = f.coeffs();
    for (auto& c : v)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

namespace {

// lc(b)^k * a mod b, computed by repeated leading-term elimination.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    const std::size_t db = *b.degree();
    const BigInt& lb = b.leading();
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    while (r.size() > db) {
        const std::size_t shift = r.size() - 1 - db;
        const BigInt lr = r.back();
        for (auto& c : r)
            c *= lb;
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
        while (!r.empty() && r.back() == 0)
            r.pop_back();
    }
    return IntPoly(std::move(r));
}

} // namespace

IntPoly gcd_primitive_prs(const IntPoly& a, const IntPoly& b)
{
    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    if (*x.degree() < *y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

bool is_squarefree(const IntPoly& f)
{
    if (f.is_zero())
        throw PreconditionError("is_squarefree: zero polynomial");
    if (*f.degree() == 0)
        return true;
    return *gcd_primitive_prs(f, derivative(f)).degree() == 0;
}

std::string render(const IntPoly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    const auto& c = f.coeffs();
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        BigInt mag = abs(c[i]);
        if (first) {
            if (c[i] < 0)
                out << '-';
        } else {
            out << (c[i] < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1)
            out << mag.get_str();
        if (i >= 1)
            out << 'x';
        if (i >= 2)
            out << '^' << i;
    }
    return out.str();
}

std::string render_coeffs(const IntPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i)
            s += ',';
        s += f.coeffs()[i].get_str();
    }
    return s;
}

} // namespace cyclodiv
