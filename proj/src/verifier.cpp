#include "cyclodiv/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cyclodiv/errors.hpp"
#include "cyclodiv/numtheory.hpp"
#include "parallel.hpp"

namespace cyclodiv {

namespace {

constexpr std::size_t kChunk = 64;

void require_monic(const IntPoly& f, const char* who)
{
    if (!f.is_monic())
        throw PreconditionError(std::string(who) + ": polynomial must be monic");
}

} // namespace

PrimeCheck check_at_prime_detail(const IntPoly& f, std::uint64_t p)
{
    require_monic(f, "check_at_prime");
    if (!is_prime(p))
        throw PreconditionError("check_at_prime: " + std::to_string(p) + " is not prime");

    PrimeCheck out;
    out.prime = p;
    const BigInt bp = BigInt(std::to_string(p));
    out.value = eval(f, bp);
    const BigInt m = abs(out.value);

    if (m == 0) {
        // p is an integer root; p^p is a root only if it lies within the
        // Cauchy bound 1 + max |a_i| of a monic polynomial.
        const BigInt bound = f.max_abs_coeff() + 1;
        const double log2_pp = static_cast<double>(p) * std::log2(static_cast<double>(p));
        if (log2_pp > static_cast<double>(mpz_sizeinbase(bound.get_mpz_t(), 2)) + 1) {
            out.residue = 1;
            out.passed = false;
            return out;
        }
        BigInt pp;
        mpz_pow_ui(pp.get_mpz_t(), bp.get_mpz_t(), p);
        const BigInt v = eval(f, pp);
        out.residue = v == 0 ? 0 : 1;
        out.passed = v == 0;
        return out;
    }
    if (m == 1) {
        out.residue = 0;
        out.passed = true;
        return out;
    }
    BigInt t;
    mpz_powm_ui(t.get_mpz_t(), bp.get_mpz_t(), p, m.get_mpz_t());
    out.residue = eval_mod(f, t, m);
    out.passed = out.residue == 0;
    return out;
}

bool check_at_prime(const IntPoly& f, std::uint64_t p) { return check_at_prime_detail(f, p).passed; }

DivisibilityReport scan(const IntPoly& f, std::uint64_t lo, std::uint64_t hi, unsigned threads)
{
    require_monic(f, "scan");
    if (lo < 2 || lo > hi)
        throw PreconditionError("scan: need 2 <= lo <= hi");

    DivisibilityReport report;
    report.polynomial = f;
    report.lo = lo;
    report.hi = hi;

    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : primes_up_to(hi))
        if (p >= lo)
            primes.push_back(p);

    auto passed = detail::parallel_map<char>(primes.size(), threads,
                                             [&](std::size_t i) -> char { return check_at_prime(f, primes[i]); });
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (passed[i])
            ++report.passes_count;
        else
            report.failures.push_back(primes[i]);
    }
    report.candidate_n = report.failures.empty() ? lo : next_prime(report.failures.back());

    ClassifyResult cls = classify_cyclotomic_product(f);
    if (cls.factorization) {
        report.factorization = cls.factorization;
        report.theory_n = cls.factorization->max_index() + 1;
        if (*report.theory_n < 2)
            report.theory_n = 2;
        report.consistent = std::none_of(report.failures.begin(), report.failures.end(),
                                         [&](std::uint64_t p) { return p >= *report.theory_n; });
    }
    return report;
}

std::optional<std::uint64_t> find_failing_prime(const IntPoly& f, std::uint64_t search_limit,
                                                unsigned threads)
{
    require_monic(f, "find_failing_prime");
    const auto primes = primes_up_to(search_limit);
    const std::size_t step = kChunk * std::max(1u, threads);
    for (std::size_t start = 0; start < primes.size(); start += step) {
        const std::size_t n = std::min(step, primes.size() - start);
        auto passed = detail::parallel_map<char>(
            n, threads, [&](std::size_t i) -> char { return check_at_prime(f, primes[start + i]); });
        for (std::size_t i = 0; i < n; ++i)
            if (!passed[i])
                return primes[start + i];
    }
    return std::nullopt;
}

NecessaryCheck n2_necessary_check(const IntPoly& f)
{
    require_monic(f, "n2_necessary_check");
    NecessaryCheck out;
    out.value_at_one = eval(f, 1);
    if (f.is_monomial()) {
        out.vacuous = true;
        out.consistent = true;
        out.reason = "power of x";
        return out;
    }
    out.consistent = out.value_at_one == 0;
    out.reason = out.consistent ? "f(1) = 0, so x - 1 divides f"
                                : "f(1) = " + out.value_at_one.get_str() + " is nonzero";
    return out;
}

CycloFactorization n2_sufficient_family(std::vector<std::uint64_t> primes)
{
    std::sort(primes.begin(), primes.end());
    if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
        throw PreconditionError("n2_sufficient_family: primes must be distinct");
    CycloFactorization c;
    c.factors.emplace_back(1, 1);
    for (std::uint64_t p : primes) {
        if (!is_prime(p))
            throw PreconditionError("n2_sufficient_family: " + std::to_string(p) + " is not prime");
        c.factors.emplace_back(p, 1);
    }
    return c;
}

bool in_sufficient_family(const CycloFactorization& c)
{
    if (!c.has_index(1))
        return false;
    for (const auto& [d, e] : c.factors)
        if (e != 1 || (d != 1 && !is_prime(d)))
            return false;
    return true;
}

std::string to_string(N2Status s)
{
    switch (s) {
    case N2Status::sufficient_family: return "sufficient_family";
    case N2Status::necessary_violated: return "necessary_violated";
    case N2Status::obstructed: return "obstructed";
    case N2Status::empirically_consistent_unknown: return "empirically_consistent_unknown";
    case N2Status::empirically_refuted: return "empirically_refuted";
    case N2Status::not_cyclotomic_product: return "not_cyclotomic_product";
    }
    return "unknown";
}

N2Verdict n2_structural_obstruction(const CycloFactorization& c)
{
    c.validate();
    if (c.max_index() < 2)
        throw PreconditionError("n2_structural_obstruction: need a cyclotomic factor with d >= 2");

    N2Verdict out;
    if (in_sufficient_family(c)) {
        out.status = N2Status::sufficient_family;
        out.notes.push_back("x - 1 times distinct prime-index cyclotomics");
        return out;
    }

    std::set<std::uint64_t> indices;
    std::uint64_t top_prime = 1;
    for (const auto& [d, e] : c.factors) {
        indices.insert(d);
        top_prime = std::max(top_prime, largest_prime_factor(d));
    }

    for (std::uint64_t d : indices) {
        if (d % top_prime != 0)
            continue;
        for (std::uint64_t p : prime_divisors(d)) {
            if (p == 2 && d == 6)
                continue;
            if (!indices.count(d / p)) {
                out.status = N2Status::obstructed;
                out.witness = ObstructionWitness{ObstructionWitness::Kind::peel, d, p};
                out.notes.push_back("Phi_" + std::to_string(d) + "(" + std::to_string(p) +
                                    ") has a prime factor > " + std::to_string(d) +
                                    " that can only divide Phi_" + std::to_string(d / p) + " at " +
                                    std::to_string(p) + "^" + std::to_string(p));
                return out;
            }
        }
    }

    if (indices.count(6) && top_prime == 3) {
        bool power_of_three = false;
        for (std::uint64_t d : indices) {
            std::uint64_t k = d;
            while (k % 3 == 0)
                k /= 3;
            power_of_three = power_of_three || k == 1;
        }
        if (!power_of_three) {
            out.status = N2Status::obstructed;
            out.witness = ObstructionWitness{ObstructionWitness::Kind::phi6_branch, 6, 2};
            out.notes.push_back("3 = Phi_6(2) divides f(2) but f(4) has no power-of-3 index factor");
            return out;
        }
    }

    out.status = N2Status::empirically_consistent_unknown;
    out.notes.push_back("no structural obstruction found");
    return out;
}

N2Verdict n2_analyze(const IntPoly& f, std::uint64_t check_limit, unsigned threads)
{
    require_monic(f, "n2_analyze");
    N2Verdict out;
    if (f.is_monomial()) {
        out.status = N2Status::sufficient_family;
        out.notes.push_back("power of x");
        return out;
    }

    const NecessaryCheck nec = n2_necessary_check(f);
    const ClassifyResult cls = classify_cyclotomic_product(f);
    auto empirical = [&] {
        if (check_limit >= 2)
            out.failing_prime = find_failing_prime(f, check_limit, threads);
    };

    if (!cls.factorization) {
        out.status = nec.consistent ? N2Status::not_cyclotomic_product : N2Status::necessary_violated;
        out.notes.push_back("not a product of x and cyclotomic polynomials");
        if (!nec.consistent)
            out.notes.push_back(nec.reason);
        empirical();
        return out;
    }

    const CycloFactorization& c = *cls.factorization;
    std::optional<N2Verdict> structural;
    if (c.max_index() >= 2) {
        structural = n2_structural_obstruction(c);
        if (structural->witness && check_at_prime(f, structural->witness->p))
            throw InvariantBreach("structural witness p = " + std::to_string(structural->witness->p) +
                                  " passes the divisibility check for " + render(f));
    }

    if (!nec.consistent) {
        out.status = N2Status::necessary_violated;
        out.notes.push_back(nec.reason);
        if (structural && structural->witness)
            out.witness = structural->witness;
        empirical();
        return out;
    }
    if (structural && structural->status != N2Status::empirically_consistent_unknown) {
        out.status = structural->status;
        out.witness = structural->witness;
        out.notes = structural->notes;
        if (out.status == N2Status::obstructed)
            out.failing_prime = out.witness->p;
        return out;
    }

    empirical();
    out.status = out.failing_prime ? N2Status::empirically_refuted
                                   : N2Status::empirically_consistent_unknown;
    if (structural)
        out.notes = structural->notes;
    out.notes.push_back(out.failing_prime ? "divisibility fails at a small prime"
                                          : "no failure up to " + std::to_string(check_limit));
    return out;
}

RadicalReport radical_property_check(const IntPoly& f, std::uint64_t n_limit)
{
    for (const auto& c : f.coeffs())
        if (c < 0)
            throw PreconditionError("radical_property_check: coefficients must be nonnegative");

    RadicalReport report;
    report.polynomial = f;
    report.n_limit = n_limit;
    for (std::uint64_t n = 0; n <= n_limit; ++n) {
        ++report.checked;
        const BigInt bn = BigInt(std::to_string(n));
        const BigInt value = eval(f, bn);
        const BigInt a = abs(value);
        if (a <= 1)
            continue;
        const std::uint64_t rad_n = n <= 1 ? 1 : [&] {
            std::uint64_t r = 1;
            for (std::uint64_t p : prime_divisors(n))
                r *= p;
            return r;
        }();
        BigInt t;
        mpz_powm_ui(t.get_mpz_t(), bn.get_mpz_t(), rad_n, a.get_mpz_t());
        const BigInt target_mod = eval_mod(f, t, a);

        FactorMap fm = factor(a);
        bool ok;
        BigInt rad = 0;
        if (fm.complete()) {
            rad = 1;
            for (const auto& [p, e] : fm.primes)
                rad *= p;
            ok = mpz_divisible_p(target_mod.get_mpz_t(), rad.get_mpz_t());
        } else {
            ok = radical_divides(a, target_mod);
        }
        if (!ok) {
            report.violation = RadicalViolation{n, value, rad, target_mod, rad_n};
            break;
        }
    }
    return report;
}

} // namespace cyclodiv
