// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cyclodiv/cyclotomic.hpp"
#include "cyclodiv/galois_probe.hpp"
#include "cyclodiv/parse.hpp"
#include "cyclodiv/report_json.hpp"
#include "cyclodiv/verifier.hpp"
#include "cyclodiv/zsigmondy.hpp"

using namespace cyclodiv;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
    Json doc = Json::object();
};

void fail(Result& r, const std::string& why)
{
    if (r.pass)
        r.detail = why;
    r.pass = false;
}

std::uint64_t kSeed = kDefaultSeed;

std::vector<CycloFactorization> random_factorizations()
{
    std::mt19937_64 rng(kSeed);
    std::vector<CycloFactorization> out;
    while (out.size() < 500) {
        CycloFactorization c;
        c.e0 = static_cast<unsigned>(rng() % 4);
        std::size_t budget = 60 - c.e0;
        std::size_t target = rng() % (budget + 1);
        std::size_t deg = 0;
        for (std::uint64_t d = 1; d <= 30; ++d) {
            if (rng() % 4 != 0)
                continue;
            unsigned e = static_cast<unsigned>(rng() % 3 + 1);
            while (e > 0 && deg + e * euler_phi(d) > target)
                --e;
            if (e == 0)
                continue;
            c.factors.push_back({d, e});
            deg += e * euler_phi(d);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::pair<IntPoly, std::uint64_t>> load_corpus()
{
    std::ifstream in(CYCLODIV_TEST_DATA "/nonfamily_corpus.txt");
    std::vector<std::pair<IntPoly, std::uint64_t>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto semi = line.find(';');
        out.emplace_back(parse_poly(line.substr(0, semi)), std::stoull(line.substr(semi + 1)));
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> family_subsets()
{
    const std::vector<std::uint64_t> pool = {2, 3, 5, 7, 11, 13};
    std::vector<std::vector<std::uint64_t>> out;
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
        if (std::popcount(mask) > 3)
            continue;
        std::vector<std::uint64_t> s;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (1u << i))
                s.push_back(pool[i]);
        out.push_back(s);
    }
    return out;
}

Result cyclotomic_correctness(unsigned)
{
    Result r;
    for (std::uint64_t m = 1; m <= 200; ++m)
        if (!product_of_cyclotomics_equals(m))
            fail(r, "x^M - 1 product fails at M = " + std::to_string(m));
    for (std::uint64_t d = 1; d <= 1000; ++d)
        if (*cyclotomic(d).degree() != euler_phi(d))
            fail(r, "degree mismatch at d = " + std::to_string(d));
    if (r.pass)
        r.detail = "M <= 200, d <= 1000";
    return r;
}

Result classifier_round_trip(unsigned)
{
    Result r;
    std::size_t mismatches = 0;
    Json rows = Json::array();
    for (const auto& c : random_factorizations()) {
        auto got = classify_cyclotomic_product(expand(c));
        if (!got.factorization || !(*got.factorization == c))
            ++mismatches;
        rows.push_back(render(c));
    }
    r.doc = Json{{"factorizations", rows}, {"mismatches", mismatches}};
    if (mismatches)
        fail(r, std::to_string(mismatches) + " mismatches");
    else
        r.detail = "500 factorizations, 0 mismatches";
    return r;
}

Result sufficiency(unsigned threads)
{
    Result r;
    std::size_t failures = 0, checks = 0;
    Json rows = Json::array();
    for (const auto& c : random_factorizations()) {
        std::uint64_t lo = std::max<std::uint64_t>(2, c.max_index() + 1);
        auto rep = scan(expand(c), lo, 1000, threads);
        failures += rep.failures.size();
        checks += rep.passes_count + rep.failures.size();
        rows.push_back(Json{{"lo", lo}, {"failures", rep.failures}});
    }
    r.doc = Json{{"scans", rows}, {"failures", failures}};
    if (failures)
        fail(r, std::to_string(failures) + " failures above max d");
    else
        r.detail = std::to_string(checks) + " prime checks, 0 failures";
    return r;
}

Result necessity(unsigned threads)
{
    Result r;
    auto corpus = load_corpus();
    if (corpus.size() != 50)
        fail(r, "corpus has " + std::to_string(corpus.size()) + " entries");
    Json rows = Json::array();
    std::size_t mismatches = 0;
    for (const auto& [f, want] : corpus) {
        auto got = find_failing_prime(f, 10000, threads);
        rows.push_back(Json{{"polynomial", render(f)}, {"failing_prime", got ? Json(*got) : Json(nullptr)}});
        if (got != want) {
            ++mismatches;
            fail(r, render(f) + ": expected " + std::to_string(want));
        }
    }
    r.doc = Json{{"corpus", rows}};
    if (r.pass)
        r.detail = "50 polynomials, all failing primes match";
    return r;
}

Result hand_fixtures(unsigned threads)
{
    Result r;
    IntPoly f{1, 1, 1};
    auto rep = scan(f, 2, 1000, threads);
    if (rep.failures != std::vector<std::uint64_t>{3})
        fail(r, "x^2+x+1 failures differ from {3}");
    auto at3 = check_at_prime_detail(f, 3);
    if (eval(f, 27) != 757 || at3.value != 13 || at3.residue != 3)
        fail(r, "757 = 58 * 13 + 3 not reproduced");
    if (rep.theory_n != 4u)
        fail(r, "theory_N != 4");

    IntPoly g{-1, -1, 0, 1, 1};
    auto at2 = check_at_prime_detail(g, 2);
    if (eval(g, 4) != 315 || at2.value != 21 || !at2.passed)
        fail(r, "315 = 15 * 21 not reproduced");
    auto rep2 = scan(g, 2, 1000, threads);
    if (!rep2.failures.empty())
        fail(r, "x^4+x^3-x-1 fails somewhere <= 1000");
    r.doc = Json{{"phi3", to_json(rep)}, {"phi1phi2phi3", to_json(rep2)}};
    if (r.pass)
        r.detail = "x^2+x+1 fails only at 3, theory_N 4; x^4+x^3-x-1 passes everywhere";
    return r;
}

Result zsigmondy_grid(unsigned threads)
{
    Result r;
    auto grid = zsigmondy_scan(20, 30, threads);
    std::set<std::pair<unsigned long, std::uint64_t>> expected = {{2, 1}, {2, 6}, {3, 2}, {7, 2}, {15, 2}};
    std::set<std::pair<unsigned long, std::uint64_t>> seen;
    std::size_t primes_found = 0;
    Json rows = Json::array();
    for (const auto& c : grid) {
        rows.push_back(to_json(c));
        if (c.primitive_cofactor == 1)
            seen.insert({c.b.get_ui(), c.d});
        if (c.exception != ZsigmondyException::none && c.primitive_cofactor != 1)
            fail(r, "exception cell with a primitive cofactor at b = " + c.b.get_str());
        if (c.exception == ZsigmondyException::none && c.primitive_cofactor <= 1)
            fail(r, "no primitive cofactor at b = " + c.b.get_str() + ", d = " + std::to_string(c.d));
        if (c.smallest_primitive_prime) {
            ++primes_found;
            const BigInt& q = *c.smallest_primitive_prime;
            if (q <= c.d || q % c.d != 1 % c.d)
                fail(r, "primitive prime " + q.get_str() + " violates q > d, q = 1 mod d");
        }
    }
    if (seen != expected)
        fail(r, "exception cells differ from (2,1), (2,6), (3,2), (7,2), (15,2)");
    r.doc = Json{{"cells", rows}};
    if (r.pass)
        r.detail = std::to_string(grid.size()) + " cells, 5 exceptions, " + std::to_string(primes_found) +
                   " primitive primes checked";
    return r;
}

Result primitivity_agreement(unsigned)
{
    Result r;
    std::size_t compared = 0, skipped = 0;
    for (unsigned long b = 2; b <= 12; ++b)
        for (std::uint64_t d = 1; d <= 20; ++d) {
            auto rep = analyze(b, d);
            auto fm = factor(rep.value);
            if (!fm.complete()) {
                ++skipped;
                continue;
            }
            for (const auto& [q, e] : fm.primes) {
                ++compared;
                if (classified_primitive(rep, q) != primitivity_oracle(b, d, q))
                    fail(r, "disagreement at b = " + std::to_string(b) + ", d = " + std::to_string(d) +
                                ", q = " + q.get_str());
            }
        }
    r.doc = Json{{"compared", compared}, {"skipped", skipped}};
    if (r.pass)
        r.detail = std::to_string(compared) + " prime factors compared, " + std::to_string(skipped) +
                   " values not fully factored";
    return r;
}

Result substitution_identity(unsigned)
{
    Result r;
    std::size_t divides = 0, coprime = 0;
    for (std::uint64_t d = 1; d <= 60; ++d)
        for (std::uint64_t p : {2, 3, 5, 7, 11}) {
            auto s = cyclotomic_substitution_identity(d, p);
            (s.p_divides_d ? divides : coprime)++;
            if (!s.holds)
                fail(r, "identity fails at d = " + std::to_string(d) + ", p = " + std::to_string(p));
        }
    if (divides == 0 || coprime == 0)
        fail(r, "a branch was not exercised");
    r.doc = Json{{"p_divides_d", divides}, {"p_coprime_d", coprime}};
    if (r.pass)
        r.detail = std::to_string(divides) + " cases with p | d, " + std::to_string(coprime) + " with p coprime";
    return r;
}

IntPoly random_monic(std::mt19937_64& rng, std::size_t deg, long bound)
{
    std::vector<BigInt> c(deg + 1);
    for (auto& v : c)
        v = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    c.back() = 1;
    return IntPoly(std::move(c));
}

bool coefficients_within(const IntPoly& f, long bound)
{
    return f.max_abs_coeff() <= bound;
}

Result root_implication(unsigned)
{
    Result r;
    std::mt19937_64 rng(kSeed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t divisible = 0, violations = 0, inconclusive = 0, pairs = 0;
    std::uint64_t largest_prime = 0;
    while (pairs < 1000) {
        IntPoly h = random_monic(rng, rng() % 4 + 1, 9);
        if (!is_squarefree(h))
            continue;
        IntPoly g;
        if (pairs % 2 == 0) {
            std::size_t room = 8 - *h.degree();
            g = h * random_monic(rng, rng() % (room + 1), 3);
            if (!coefficients_within(g, 9))
                continue;
        } else {
            g = random_monic(rng, rng() % 9, 9);
        }
        ++pairs;
        auto v = root_implication_divides(g, h, 100000, kSeed);
        divisible += v.exact_divides;
        if (v.qualifying)
            largest_prime = std::max(largest_prime, v.qualifying->prime);
        if (v.outcome == ImplicationOutcome::inconclusive)
            ++inconclusive;
        else if ((v.outcome == ImplicationOutcome::divides) != v.exact_divides ||
                 v.outcome == ImplicationOutcome::inconsistent)
            ++violations;
    }
    if (violations)
        fail(r, std::to_string(violations) + " violations");
    if (inconclusive)
        fail(r, std::to_string(inconclusive) + " pairs without a qualifying prime");
    r.doc = Json{{"pairs", pairs}, {"divisible", divisible}, {"violations", violations}, {"inconclusive", inconclusive}};
    if (r.pass)
        r.detail = "1000 pairs (" + std::to_string(divisible) + " with h | g), 0 violations, largest qualifying prime " +
                   std::to_string(largest_prime);
    return r;
}

Result split_densities(unsigned threads)
{
    Result r;
    struct Case {
        std::string name;
        IntPoly f;
        double expected, tolerance;
    };
    std::vector<Case> cases;
    for (std::uint64_t d : {3, 4, 5, 8, 12})
        cases.push_back({"Phi_" + std::to_string(d), cyclotomic(d), 1.0 / double(euler_phi(d)), 0.03});
    cases.push_back({"x^2 + 1", IntPoly{1, 0, 1}, 0.5, 0.02});
    cases.push_back({"(x^2 - 2)(x^2 - 3)", IntPoly{-2, 0, 1} * IntPoly{-3, 0, 1}, 0.25, 0.02});
    Json rows = Json::array();
    std::ostringstream detail;
    for (const auto& c : cases) {
        auto rep = split_density(c.f, 200000, threads);
        rows.push_back(Json{{"name", c.name}, {"split", rep.split_count}, {"tested", rep.primes_tested},
                            {"density", rep.density_decimal()}});
        detail << c.name << " " << rep.density_decimal() << "; ";
        if (std::fabs(rep.density() - c.expected) > c.tolerance)
            fail(r, c.name + " density " + rep.density_decimal() + " outside tolerance");
    }
    r.doc = Json{{"densities", rows}};
    if (r.pass) {
        r.detail = detail.str();
        r.detail.resize(r.detail.size() - 2);
    }
    return r;
}

Result root_orders(unsigned threads)
{
    Result r;
    std::size_t roots_checked = 0;
    for (std::uint64_t d = 1; d <= 30; ++d) {
        auto prof = root_order_profile(cyclotomic(d), 10000, threads, kSeed);
        for (const auto& rec : prof.records) {
            if (d % rec.prime == 0)
                continue;
            for (auto o : rec.orders) {
                ++roots_checked;
                if (o != d)
                    fail(r, "root of order " + std::to_string(o) + " for Phi_" + std::to_string(d) + " mod " +
                                std::to_string(rec.prime));
            }
        }
    }
    Json maxima = Json::array();
    std::uint64_t previous = 0;
    for (std::uint64_t limit : {1000, 10000, 100000}) {
        auto prof = root_order_profile(IntPoly{-2, 0, 1}, limit, threads, kSeed);
        maxima.push_back(prof.max_order_seen);
        if (prof.max_order_seen <= previous)
            fail(r, "x^2 - 2 max order not increasing at limit " + std::to_string(limit));
        previous = prof.max_order_seen;
    }
    r.doc = Json{{"roots_checked", roots_checked}, {"x2_minus_2_max_orders", maxima}};
    if (r.pass)
        r.detail = std::to_string(roots_checked) + " cyclotomic roots of exact order d; x^2 - 2 maxima " +
                   maxima.dump();
    return r;
}

Result family_sufficiency(unsigned threads)
{
    Result r;
    Json rows = Json::array();
    auto subsets = family_subsets();
    for (const auto& s : subsets) {
        auto rep = scan(expand(n2_sufficient_family(s)), 2, 500, threads);
        rows.push_back(Json{{"primes", s}, {"failures", rep.failures}});
        if (!rep.failures.empty())
            fail(r, "family fails at p = " + std::to_string(rep.failures.front()));
    }
    r.doc = Json{{"family", rows}};
    if (r.pass)
        r.detail = std::to_string(subsets.size()) + " subsets pass on [2, 500]";
    return r;
}

Result necessity_probe(unsigned threads)
{
    Result r;
    std::vector<IntPoly> polys;
    for (const auto& c : random_factorizations())
        polys.push_back(expand(c));
    for (const auto& [f, p] : load_corpus())
        polys.push_back(f);
    for (const auto& s : family_subsets())
        polys.push_back(expand(n2_sufficient_family(s)));

    std::size_t clean = 0;
    Json rows = Json::array();
    for (const auto& f : polys) {
        if (f.is_monomial())
            continue;
        auto rep = scan(f, 2, 1000, threads);
        if (!rep.failures.empty())
            continue;
        ++clean;
        rows.push_back(render(f));
        if (eval(f, 1) != 0)
            fail(r, render(f) + " passes on [2, 1000] but f(1) != 0");
    }
    r.doc = Json{{"zero_failure_polynomials", rows}};
    if (r.pass)
        r.detail = std::to_string(clean) + " of " + std::to_string(polys.size()) +
                   " polynomials pass on [2, 1000]; all have f(1) = 0";
    return r;
}

Result structural_agreement(unsigned)
{
    Result r;
    std::mt19937_64 rng(kSeed + 14);
    std::size_t witnesses = 0;
    Json rows = Json::array();
    for (int i = 0; i < 100; ++i) {
        CycloFactorization c;
        for (std::uint64_t d = 2; d <= 30; ++d)
            if (rng() % 6 == 0)
                c.factors.push_back({d, 1});
        if (c.factors.empty())
            c.factors.push_back({rng() % 29 + 2, 1});
        auto v = n2_structural_obstruction(c);
        Json row{{"set", render(c)}, {"status", to_string(v.status)}};
        if (v.witness) {
            ++witnesses;
            bool failed = !check_at_prime(expand(c), v.witness->p);
            row["witness"] = Json::array({v.witness->d, v.witness->p});
            row["fails_at_witness"] = failed;
            if (!failed)
                fail(r, "witness (" + std::to_string(v.witness->d) + ", " + std::to_string(v.witness->p) +
                            ") passes for " + render(c));
        }
        rows.push_back(row);
    }
    r.doc = Json{{"sets", rows}};
    if (r.pass)
        r.detail = "100 sets, " + std::to_string(witnesses) + " witnesses, all fail at their prime";
    return r;
}

Result radical_property(unsigned)
{
    Result r;
    Json rows = Json::array();
    for (long a : {1, 2, 3})
        for (std::size_t m = 0; m <= 4; ++m) {
            auto rep = radical_property_check(IntPoly::monomial(m, a), 10000);
            rows.push_back(to_json(rep));
            if (rep.violation)
                fail(r, render(IntPoly::monomial(m, a)) + " violates at n = " + std::to_string(rep.violation->n));
        }
    auto x1 = radical_property_check(IntPoly{1, 1}, 10000);
    rows.push_back(to_json(x1));
    if (!x1.violation || x1.violation->n != 2 || x1.violation->radical != 3 || x1.violation->target_mod != 2)
        fail(r, "x + 1 does not fail at n = 2 with rad(3) not dividing 5");
    r.doc = Json{{"reports", rows}};
    if (r.pass)
        r.detail = "a x^m passes for n <= 10^4; x + 1 fails at n = 2";
    return r;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Result(unsigned)> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "cyclotomic correctness", cyclotomic_correctness},
        {2, "classifier round trip", classifier_round_trip},
        {3, "sufficiency beyond the largest index", sufficiency},
        {4, "non-family corpus failing primes", necessity},
        {5, "hand-derived fixtures", hand_fixtures},
        {6, "primitive divisor grid", zsigmondy_grid},
        {7, "primitivity oracle agreement", primitivity_agreement},
        {8, "substitution identity", substitution_identity},
        {9, "root implication vs exact division", root_implication},
        {10, "split densities", split_densities},
        {11, "root orders", root_orders},
        {12, "x - 1 times distinct prime cyclotomics", family_sufficiency},
        {13, "f(1) = 0 for zero-failure polynomials", necessity_probe},
        {14, "structural witnesses fail empirically", structural_agreement},
        {15, "radical property", radical_property},
    };

    bool all = true;
    std::vector<std::string> single_thread(criteria.size());
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run(1);
        } catch (const std::exception& e) {
            fail(r, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        single_thread[i] = dump(r.doc);
        all = all && r.pass;
        std::printf("criterion %2d: %s  %s (%s) [%.1fs]\n", c.id, r.pass ? "PASS" : "FAIL", c.title,
                    r.detail.c_str(), secs);
        std::fflush(stdout);
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> differing;
    for (std::size_t i = 1; i < criteria.size(); ++i) {
        std::string eight;
        try {
            eight = dump(criteria[i].run(8).doc);
        } catch (const std::exception& e) {
            eight = e.what();
        }
        if (eight != single_thread[i])
            differing.push_back(criteria[i].id);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string which;
    for (int id : differing)
        which += (which.empty() ? "" : ", ") + std::to_string(id);
    bool det = differing.empty();
    all = all && det;
    std::printf("criterion 16: %s  determinism (criteria 2-15 JSON %s under 1 and 8 threads) [%.1fs]\n",
                det ? "PASS" : "FAIL", det ? "byte-identical" : ("differs for " + which).c_str(), secs);
    return all ? 0 : 1;
}
