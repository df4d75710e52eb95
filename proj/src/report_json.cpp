#include "cyclodiv/report_json.hpp"

namespace cyclodiv {

Json big_json(const BigInt& v) { return v.get_str(); }

Json poly_json(const IntPoly& f)
{
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back(c.get_str());
    return Json{{"text", render(f)}, {"coeffs", coeffs}};
}

Json factorization_json(const CycloFactorization& c)
{
    Json factors = Json::array();
    for (const auto& [d, e] : c.factors)
        factors.push_back(Json::array({d, e}));
    return Json{{"e0", c.e0}, {"factors", factors}, {"text", render(c)}};
}

Json to_json(const ClassifyResult& r)
{
    Json j;
    j["in_family"] = r.factorization.has_value();
    const CycloFactorization& c = r.factorization ? *r.factorization : r.partial;
    j["e0"] = c.e0;
    Json factors = Json::array();
    for (const auto& [d, e] : c.factors)
        factors.push_back(Json::array({d, e}));
    j["factors"] = factors;
    j["factored_form"] = render(c);
    j["residual"] = poly_json(r.residual);
    j["search_bound"] = r.search_bound;
    return j;
}

Json to_json(const DivisibilityReport& r)
{
    Json j;
    j["polynomial"] = poly_json(r.polynomial);
    j["prime_range"] = Json::array({r.lo, r.hi});
    j["failures"] = r.failures;
    j["passes_count"] = r.passes_count;
    j["candidate_N"] = r.candidate_n;
    j["theory_N"] = r.theory_n ? Json(*r.theory_n) : Json(nullptr);
    j["factorization"] = r.factorization ? factorization_json(*r.factorization) : Json(nullptr);
    j["empirical"] = true;
    j["consistent"] = r.consistent;
    return j;
}

Json to_json(const N2Verdict& v)
{
    Json j;
    j["status"] = to_string(v.status);
    if (v.witness) {
        j["witness"] = Json{{"kind", v.witness->kind == ObstructionWitness::Kind::peel ? "peel" : "phi6_branch"},
                            {"d", v.witness->d},
                            {"p", v.witness->p}};
    } else {
        j["witness"] = nullptr;
    }
    j["failing_prime"] = v.failing_prime ? Json(*v.failing_prime) : Json(nullptr);
    j["notes"] = v.notes;
    return j;
}

Json to_json(const RadicalReport& r)
{
    Json j;
    j["polynomial"] = poly_json(r.polynomial);
    j["n_limit"] = r.n_limit;
    j["checked"] = r.checked;
    j["clean"] = !r.violation.has_value();
    if (r.violation) {
        const auto& v = *r.violation;
        j["violation"] = Json{{"n", v.n},
                              {"rad_n", v.rad_n},
                              {"value", big_json(v.value)},
                              {"radical", v.radical == 0 ? Json(nullptr) : big_json(v.radical)},
                              {"target_mod_value", big_json(v.target_mod)}};
    } else {
        j["violation"] = nullptr;
    }
    return j;
}

Json to_json(const PrimitiveDivisorReport& r)
{
    Json j;
    j["b"] = big_json(r.b);
    j["d"] = r.d;
    j["value"] = big_json(r.value);
    j["exception_tag"] = to_string(r.exception);
    j["stripped_prime"] = r.stripped_prime;
    j["stripped_count"] = r.stripped_count;
    j["nonprimitive_part"] = big_json(r.nonprimitive_part);
    j["primitive_cofactor"] = big_json(r.primitive_cofactor);
    j["smallest_primitive_prime"] =
        r.smallest_primitive_prime ? big_json(*r.smallest_primitive_prime) : Json(nullptr);
    j["cofactor_unfactored"] = r.cofactor_unfactored;
    return j;
}

Json to_json(const SplitDensityReport& r)
{
    Json j;
    j["polynomial"] = poly_json(r.polynomial);
    j["prime_limit"] = r.prime_limit;
    j["primes_tested"] = r.primes_tested;
    j["split_count"] = r.split_count;
    j["density"] = r.density_fraction();
    j["density_decimal"] = r.density_decimal();
    return j;
}

Json to_json(const OrderProfile& p)
{
    Json j;
    j["polynomial"] = poly_json(p.polynomial);
    j["prime_limit"] = p.prime_limit;
    j["split_primes"] = p.records.size();
    j["max_order_seen"] = p.max_order_seen;
    Json rows = Json::array();
    for (const auto& r : p.records)
        rows.push_back(Json{{"prime", r.prime}, {"roots", r.roots}, {"orders", r.orders}});
    j["records"] = rows;
    return j;
}

Json to_json(const ImplicationVerdict& v)
{
    Json j;
    j["g"] = poly_json(v.g);
    j["h"] = poly_json(v.h);
    j["remainder"] = poly_json(v.remainder);
    j["remainder_bound"] = big_json(v.remainder_bound);
    j["exact_divides"] = v.exact_divides;
    Json rows = Json::array();
    for (const auto& p : v.primes)
        rows.push_back(Json{{"prime", p.prime}, {"implication_held", p.implication_held}, {"probative", p.probative}});
    j["primes"] = rows;
    j["qualifying_prime"] = v.qualifying ? Json(v.qualifying->prime) : Json(nullptr);
    j["primes_examined"] = v.primes_examined;
    j["outcome"] = to_string(v.outcome);
    return j;
}

Json to_json(const SubstitutionIdentity& s)
{
    return Json{{"d", s.d},
                {"p", s.p},
                {"p_divides_d", s.p_divides_d},
                {"lhs", poly_json(s.lhs)},
                {"rhs", poly_json(s.rhs)},
                {"holds", s.holds}};
}

Json to_json(const SharedPrimeCheck& s)
{
    Json shared = Json::array();
    for (const auto& sp : s.shared)
        shared.push_back(Json{{"prime", big_json(sp.prime)},
                              {"exponent", sp.exponent ? Json(*sp.exponent) : Json(nullptr)},
                              {"holds", sp.holds}});
    return Json{{"n", s.n},
                {"m", s.m},
                {"b", big_json(s.b)},
                {"value_n", big_json(s.value_n)},
                {"value_m", big_json(s.value_m)},
                {"gcd", big_json(s.gcd)},
                {"shared", shared},
                {"gcd_fully_factored", s.gcd_fully_factored},
                {"holds", s.holds}};
}

Json with_schema(const std::string& name, const Json& body)
{
    Json j;
    j["schema"] = "cyclodiv." + name + "/1";
    for (auto it = body.begin(); it != body.end(); ++it)
        j[it.key()] = it.value();
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace cyclodiv
