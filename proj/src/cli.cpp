#include "cyclodiv/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "cyclodiv/errors.hpp"
#include "cyclodiv/parse.hpp"
#include "cyclodiv/report_json.hpp"

namespace cyclodiv {

namespace {

struct Globals {
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    bool coeffs = false;
    std::string out_path;
    std::string csv_path;
};

struct CsvRow {
    std::uint64_t prime;
    bool passed;
    std::string detail;
};

struct Outcome {
    Json doc;
    std::string text;
    int exit_code = exit_ok;
    std::string failure; // stderr message for a nonzero exit
    std::optional<std::vector<CsvRow>> csv;
};

std::vector<std::uint64_t> parse_u64_list(const std::string& s)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw ParseError("expected a comma-separated list of integers", 0);
        }
        if (used != item.size())
            throw ParseError("expected a comma-separated list of integers", used);
        out.push_back(v);
    }
    return out;
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

std::string report_text(const DivisibilityReport& r)
{
    std::ostringstream t;
    t << "f(x) = " << render(r.polynomial) << "\n";
    t << "primes in [" << r.lo << ", " << r.hi << "]: " << r.passes_count << " pass, " << r.failures.size()
      << " fail\n";
    if (!r.failures.empty())
        t << "failures: " << join(r.failures) << "\n";
    t << "candidate N (empirical): " << r.candidate_n << "\n";
    if (r.theory_n)
        t << "theory N: " << *r.theory_n << " (" << render(*r.factorization) << ")\n";
    else
        t << "theory N: none (not a cyclotomic product)\n";
    if (!r.consistent)
        t << "INCONSISTENT: failure at or beyond theory N\n";
    return t.str();
}

std::vector<CsvRow> report_csv(const IntPoly& f, const DivisibilityReport& r)
{
    std::vector<CsvRow> rows;
    std::size_t k = 0;
    for (std::uint64_t p : primes_up_to(r.hi)) {
        if (p < r.lo)
            continue;
        const bool failed = k < r.failures.size() && r.failures[k] == p;
        if (failed) {
            ++k;
            const PrimeCheck c = check_at_prime_detail(f, p);
            rows.push_back({p, false, "f(p)=" + c.value.get_str() + " residue=" + c.residue.get_str()});
        } else {
            rows.push_back({p, true, ""});
        }
    }
    return rows;
}

Outcome inconsistent_check(Outcome o, const DivisibilityReport& r)
{
    if (!r.consistent) {
        o.exit_code = exit_invariant;
        o.failure = "divisibility report is INCONSISTENT with the cyclotomic sufficiency bound";
    }
    return o;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Divisibility f(p) | f(p^p) for monic integer polynomials, cyclotomic products "
                 "and primitive prime divisors"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit the versioned JSON document instead of text");
    app.add_option("--seed", g.seed, "Seed for randomized factoring and root splitting");
    app.add_option("--threads", g.threads, "Worker threads for prime scans")->check(CLI::Range(1u, 256u));
    app.add_flag("--coeffs", g.coeffs, "Read polynomials as ascending comma-separated coefficients");
    app.add_option("--out", g.out_path, "Also write the JSON document to this file");
    app.add_option("--csv", g.csv_path, "Write per-prime rows of scan reports to this CSV file");

    std::string poly_text, poly2_text, lemma = "substitution", primes_text = "2,3,5,7";
    std::uint64_t d = 0, lo = 2, hi = 1000, limit = 0, budget = 100'000, b_max = 20, d_max = 30;
    std::uint64_t m_max = 200, n_index = 1, m_index = 1, n_limit = 10'000, check_limit = 1000;
    std::string base_text;

    std::function<Outcome()> action;
    auto poly = [&](const std::string& s) { return g.coeffs ? parse_coeffs(s) : parse_poly(s); };

    auto* cyc = app.add_subcommand("cyclotomic", "Print the d-th cyclotomic polynomial");
    cyc->add_option("d", d)->required();
    cyc->callback([&] {
        action = [&] {
            const IntPoly phi = cyclotomic(d == 0 ? throw PreconditionError("index must be >= 1") : d);
            Outcome o;
            o.doc = with_schema("cyclotomic", Json{{"d", d}, {"degree", *phi.degree()}, {"polynomial", poly_json(phi)}});
            o.text = "Phi_" + std::to_string(d) + "(x) = " + render(phi) + "\n";
            return o;
        };
    });

    auto* cls = app.add_subcommand("classify", "Decide whether f is x^e0 times a product of cyclotomics");
    cls->add_option("poly", poly_text)->required();
    cls->callback([&] {
        action = [&] {
            const IntPoly f = poly(poly_text);
            const ClassifyResult r = classify_cyclotomic_product(f);
            Outcome o;
            o.doc = with_schema("classify", Json{{"polynomial", poly_json(f)}});
            const Json body = to_json(r);
            for (auto& [k, v] : body.items())
                o.doc[k] = v;
            if (r.factorization)
                o.text = render(f) + " = " + render(*r.factorization) + "\n";
            else
                o.text = render(f) + ": not in family; residual " + render(r.residual) + " after " +
                         render(r.partial) + "\n";
            return o;
        };
    });

    auto* ver = app.add_subcommand("verify", "Check f(p) | f(p^p) for every prime in a range");
    ver->add_option("poly", poly_text)->required();
    ver->add_option("--from", lo, "Smallest prime to test");
    ver->add_option("--to", hi, "Largest prime to test");
    ver->callback([&] {
        action = [&] {
            const IntPoly f = poly(poly_text);
            const DivisibilityReport r = scan(f, lo, hi, g.threads);
            Outcome o;
            o.doc = with_schema("verify", to_json(r));
            o.text = report_text(r);
            o.csv = report_csv(f, r);
            return inconsistent_check(std::move(o), r);
        };
    });

    auto* minn = app.add_subcommand("min-n", "Empirical and theoretical threshold N(f)");
    minn->add_option("poly", poly_text)->required();
    minn->add_option("--limit", hi, "Scan primes up to this bound");
    minn->callback([&] {
        action = [&] {
            const IntPoly f = poly(poly_text);
            const DivisibilityReport r = scan(f, 2, hi, g.threads);
            Outcome o;
            o.doc = with_schema("min-n", Json{{"polynomial", poly_json(f)},
                                              {"limit", hi},
                                              {"failures", r.failures},
                                              {"candidate_N", r.candidate_n},
                                              {"theory_N", r.theory_n ? Json(*r.theory_n) : Json(nullptr)},
                                              {"empirical", true},
                                              {"consistent", r.consistent}});
            o.text = "candidate N (empirical, primes <= " + std::to_string(hi) + "): " +
                     std::to_string(r.candidate_n) + "\ntheory N: " +
                     (r.theory_n ? std::to_string(*r.theory_n) : std::string("none")) + "\n";
            return inconsistent_check(std::move(o), r);
        };
    });

    auto* fc = app.add_subcommand("find-counterexample", "Smallest prime where f(p) does not divide f(p^p)");
    fc->add_option("poly", poly_text)->required();
    fc->add_option("--limit", limit, "Search bound (default 10000)");
    fc->callback([&] {
        action = [&] {
            const IntPoly f = poly(poly_text);
            const std::uint64_t lim = limit ? limit : kDefaultSearchLimit;
            const auto p = find_failing_prime(f, lim, g.threads);
            Outcome o;
            o.doc = with_schema("find-counterexample", Json{{"polynomial", poly_json(f)},
                                                            {"search_limit", lim},
                                                            {"found", p.has_value()},
                                                            {"failing_prime", p ? Json(*p) : Json(nullptr)}});
            if (p) {
                o.text = "f(p) does not divide f(p^p) at p = " + std::to_string(*p) + "\n";
            } else {
                o.text = "none found up to " + std::to_string(lim) + " (inconclusive)\n";
                o.exit_code = exit_inconclusive;
            }
            return o;
        };
    });

    auto* zs = app.add_subcommand("zsigmondy", "Primitive prime divisor analysis of Phi_d(b)");
    zs->add_option("b", base_text)->required();
    zs->add_option("d", d)->required();
    zs->callback([&] {
        action = [&] {
            BigInt b;
            if (b.set_str(base_text, 10) != 0)
                throw ParseError("base is not an integer", 0);
            const PrimitiveDivisorReport r = analyze(b, d, kPrimitiveTrialBound, g.seed);
            Outcome o;
            o.doc = with_schema("zsigmondy", to_json(r));
            std::ostringstream t;
            t << "Phi_" << d << "(" << b.get_str() << ") = " << r.value.get_str() << "\n";
            t << "exception: " << to_string(r.exception) << "\n";
            t << "non-primitive part: " << r.nonprimitive_part.get_str() << ", primitive cofactor: "
              << r.primitive_cofactor.get_str() << "\n";
            if (r.smallest_primitive_prime)
                t << "smallest primitive prime: " << r.smallest_primitive_prime->get_str() << "\n";
            else if (r.cofactor_unfactored)
                t << "primitive prime exists, cofactor beyond the factoring budget\n";
            o.text = t.str();
            return o;
        };
    });

    auto* zscan = app.add_subcommand("zsigmondy-scan", "Primitive divisor analysis over a (b, d) grid");
    zscan->add_option("--b-max", b_max);
    zscan->add_option("--d-max", d_max);
    zscan->callback([&] {
        action = [&] {
            const auto reports = zsigmondy_scan(b_max, d_max, g.threads, kPrimitiveTrialBound, g.seed);
            Json rows = Json::array(), exceptions = Json::array();
            std::ostringstream t;
            for (const auto& r : reports) {
                rows.push_back(to_json(r));
                if (r.exception != ZsigmondyException::none) {
                    exceptions.push_back(Json::array({r.b.get_str(), r.d}));
                    t << "exception at b = " << r.b.get_str() << ", d = " << r.d << " ("
                      << to_string(r.exception) << ")\n";
                }
            }
            t << reports.size() << " cells, " << exceptions.size() << " exceptions\n";
            Outcome o;
            o.doc = with_schema("zsigmondy-scan",
                                Json{{"b_max", b_max}, {"d_max", d_max}, {"exceptions", exceptions}, {"reports", rows}});
            o.text = t.str();
            return o;
        };
    });

    auto* sd = app.add_subcommand("split-density", "Fraction of primes modulo which f splits completely");
    sd->add_option("poly", poly_text)->required();
    sd->add_option("--limit", limit)->required();
    sd->callback([&] {
        action = [&] {
            const IntPoly f = poly(poly_text);
            const SplitDensityReport r = split_density(f, limit, g.threads);
            Outcome o;
            o.doc = with_schema("split-density", to_json(r));
            o.text = render(f) + " splits completely modulo " + std::to_string(r.split_count) + " of " +
                     std::to_string(r.primes_tested) + " primes <= " + std::to_string(limit) + " (" +
                     r.density_decimal() + ")\n";
            std::vector<CsvRow> rows;
            std::size_t k = 0;
            for (std::uint64_t p : primes_up_to(limit)) {
                const bool split = k < r.split_primes.size() && r.split_primes[k] == p;
                k += split;
                rows.push_back({p, split, split ? "split" : ""});
            }
            o.csv = std::move(rows);
            return o;
        };
    });

    auto* ro = app.add_subcommand("root-orders", "Multiplicative orders of roots at split primes");
    ro->add_option("poly", poly_text)->required();
    ro->add_option("--limit", limit)->required();
    ro->callback([&] {
        action = [&] {
            const IntPoly f = poly(poly_text);
            const OrderProfile p = root_order_profile(f, limit, g.threads, g.seed);
            Outcome o;
            o.doc = with_schema("root-orders", to_json(p));
            o.text = std::to_string(p.records.size()) + " split primes <= " + std::to_string(limit) +
                     ", max root order " + std::to_string(p.max_order_seen) + "\n";
            std::vector<CsvRow> rows;
            for (const auto& r : p.records)
                rows.push_back({r.prime, true, "orders=" + join(r.orders)});
            o.csv = std::move(rows);
            return o;
        };
    });

    auto* ri = app.add_subcommand("root-implication", "Root implication test for h | g at a large split prime");
    ri->add_option("dividend", poly_text, "g")->required();
    ri->add_option("divisor", poly2_text, "h (monic, squarefree)")->required();
    ri->add_option("--budget", budget, "Primes above the remainder bound to examine");
    ri->callback([&] {
        action = [&] {
            const ImplicationVerdict v = root_implication_divides(poly(poly_text), poly(poly2_text), budget, g.seed);
            Outcome o;
            o.doc = with_schema("root-implication", to_json(v));
            o.text = "outcome: " + to_string(v.outcome) +
                     (v.qualifying ? " (at q = " + std::to_string(v.qualifying->prime) + ")" : std::string()) +
                     "\nexact division: " + (v.exact_divides ? "h | g" : "h does not divide g") + "\n";
            if (v.outcome == ImplicationOutcome::inconclusive)
                o.exit_code = exit_inconclusive;
            if (v.outcome == ImplicationOutcome::inconsistent) {
                o.exit_code = exit_invariant;
                o.failure = "root implication disagrees with exact division";
            }
            return o;
        };
    });

    auto* nf = app.add_subcommand("n2-family", "(x - 1) * prod Phi_p over distinct primes, checked from p = 2");
    nf->add_option("--primes", primes_text, "Comma-separated distinct primes (may be empty)");
    nf->add_option("--check-limit", check_limit);
    nf->callback([&] {
        action = [&] {
            const auto ps = parse_u64_list(primes_text);
            const CycloFactorization c = n2_sufficient_family(ps);
            const IntPoly f = expand(c);
            const DivisibilityReport r = scan(f, 2, std::max<std::uint64_t>(2, check_limit), g.threads);
            Outcome o;
            o.doc = with_schema("n2-family", Json{{"primes", ps},
                                                  {"factorization", factorization_json(c)},
                                                  {"polynomial", poly_json(f)},
                                                  {"report", to_json(r)}});
            o.text = render(c) + " = " + render(f) + "\n" + report_text(r);
            if (!r.failures.empty()) {
                o.exit_code = exit_invariant;
                o.failure = "family polynomial fails at p = " + std::to_string(r.failures.front());
            }
            return o;
        };
    });

    auto* na = app.add_subcommand("n2-analyze", "Can f satisfy the property for every prime p >= 2?");
    na->add_option("poly", poly_text)->required();
    na->add_option("--check-limit", check_limit);
    na->callback([&] {
        action = [&] {
            const IntPoly f = poly(poly_text);
            const N2Verdict v = n2_analyze(f, check_limit, g.threads);
            Outcome o;
            o.doc = with_schema("n2-analyze", Json{{"polynomial", poly_json(f)}});
            const Json body = to_json(v);
            for (auto& [k, val] : body.items())
                o.doc[k] = val;
            std::ostringstream t;
            t << "status: " << to_string(v.status) << "\n";
            if (v.witness)
                t << "witness: d = " << v.witness->d << ", p = " << v.witness->p << "\n";
            if (v.failing_prime)
                t << "failing prime: " << *v.failing_prime << "\n";
            for (const auto& n : v.notes)
                t << "note: " << n << "\n";
            o.text = t.str();
            return o;
        };
    });

    auto* rc = app.add_subcommand("radical-check", "rad(f(n)) | f(n^rad(n)) for 0 <= n <= limit");
    rc->add_option("poly", poly_text)->required();
    rc->add_option("--n-limit", n_limit);
    rc->callback([&] {
        action = [&] {
            const IntPoly f = poly(poly_text);
            const RadicalReport r = radical_property_check(f, n_limit);
            Outcome o;
            o.doc = with_schema("radical-check", to_json(r));
            if (r.violation)
                o.text = "violation at n = " + std::to_string(r.violation->n) + ": rad(" +
                         r.violation->value.get_str() + ") does not divide f(n^" +
                         std::to_string(r.violation->rad_n) + ")\n";
            else
                o.text = "no violation for 0 <= n <= " + std::to_string(n_limit) + "\n";
            return o;
        };
    });

    auto* ic = app.add_subcommand("identity-check", "Exact checks of cyclotomic identities");
    ic->add_option("--lemma", lemma, "substitution | product | ratio")
        ->check(CLI::IsMember({"substitution", "product", "ratio"}));
    ic->add_option("--d-max", d_max);
    ic->add_option("--primes", primes_text);
    ic->add_option("--m-max", m_max);
    ic->add_option("--n", n_index);
    ic->add_option("--m", m_index);
    ic->add_option("--b", base_text);
    ic->callback([&] {
        action = [&] {
            Outcome o;
            Json violations = Json::array();
            std::uint64_t checked = 0;
            if (lemma == "substitution") {
                const auto ps = parse_u64_list(primes_text);
                for (std::uint64_t dd = 1; dd <= d_max; ++dd)
                    for (std::uint64_t p : ps) {
                        const auto s = cyclotomic_substitution_identity(dd, p);
                        ++checked;
                        if (!s.holds)
                            violations.push_back(to_json(s));
                    }
                o.doc = with_schema("identity-check", Json{{"lemma", lemma},
                                                           {"d_max", d_max},
                                                           {"primes", ps},
                                                           {"checked", checked},
                                                           {"violations", violations},
                                                           {"holds", violations.empty()}});
            } else if (lemma == "product") {
                for (std::uint64_t M = 1; M <= m_max; ++M) {
                    ++checked;
                    if (!product_of_cyclotomics_equals(M))
                        violations.push_back(M);
                }
                o.doc = with_schema("identity-check", Json{{"lemma", lemma},
                                                           {"m_max", m_max},
                                                           {"checked", checked},
                                                           {"violations", violations},
                                                           {"holds", violations.empty()}});
            } else {
                BigInt b;
                if (base_text.empty() || b.set_str(base_text, 10) != 0)
                    throw ParseError("--b must be an integer", 0);
                const SharedPrimeCheck s = shared_prime_ratio_check(n_index, m_index, b, g.seed);
                checked = 1;
                if (!s.holds)
                    violations.push_back(to_json(s));
                o.doc = with_schema("identity-check", Json{{"lemma", lemma}, {"checked", checked}});
                const Json body = to_json(s);
                for (auto& [k, v] : body.items())
                    o.doc[k] = v;
                if (!s.gcd_fully_factored && s.holds) {
                    o.exit_code = exit_inconclusive;
                    o.failure = "gcd not fully factored within the budget";
                }
            }
            o.text = lemma + ": " + std::to_string(checked) + " checked, " + std::to_string(violations.size()) +
                     " violations\n";
            if (!violations.empty()) {
                o.exit_code = exit_invariant;
                o.failure = "identity violated";
            }
            return o;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? exit_ok : exit_parse_error;
    }

    try {
        Outcome o = action();
        const std::string doc = dump(o.doc);
        out << (g.json ? doc : o.text);
        if (!g.out_path.empty()) {
            std::ofstream f(g.out_path, std::ios::binary);
            if (!f)
                throw PreconditionError("cannot open " + g.out_path);
            f << doc;
        }
        if (!g.csv_path.empty()) {
            if (!o.csv)
                throw PreconditionError("--csv is only available for scan reports");
            std::ofstream f(g.csv_path, std::ios::binary);
            if (!f)
                throw PreconditionError("cannot open " + g.csv_path);
            f << "prime,passed,detail\n";
            for (const auto& row : *o.csv)
                f << row.prime << ',' << (row.passed ? "true" : "false") << ',' << row.detail << '\n';
        }
        if (!o.failure.empty())
            err << "error: " << o.failure << "\n";
        return o.exit_code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return exit_inconclusive;
    } catch (const InvariantBreach& e) {
        err << "invariant breach: " << e.what() << "\n";
        return exit_invariant;
    }
}

} // namespace cyclodiv
