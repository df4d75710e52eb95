#pragma once

#include <string>

#include <json.hpp>

#include "cyclodiv/cyclotomic.hpp"
#include "cyclodiv/galois_probe.hpp"
#include "cyclodiv/verifier.hpp"
#include "cyclodiv/zsigmondy.hpp"

namespace cyclodiv {

using Json = nlohmann::ordered_json;

/// Values that can exceed 64 bits are emitted as decimal strings.
Json big_json(const BigInt& v);
Json poly_json(const IntPoly& f);
Json factorization_json(const CycloFactorization& c);

Json to_json(const ClassifyResult& r);
Json to_json(const DivisibilityReport& r);
Json to_json(const N2Verdict& v);
Json to_json(const RadicalReport& r);
Json to_json(const PrimitiveDivisorReport& r);
Json to_json(const SplitDensityReport& r);
Json to_json(const OrderProfile& p);
Json to_json(const ImplicationVerdict& v);
Json to_json(const SubstitutionIdentity& s);
Json to_json(const SharedPrimeCheck& s);

/// Stamps the versioned "schema" field as the first key.
Json with_schema(const std::string& name, const Json& body);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

} // namespace cyclodiv
