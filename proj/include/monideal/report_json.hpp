#ifndef MONIDEAL_REPORT_JSON_HPP
#define MONIDEAL_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "monideal/hypergraph.hpp"
#include "monideal/ideal.hpp"
#include "monideal/ntf.hpp"
#include "monideal/polarization.hpp"
#include "monideal/search.hpp"
#include "monideal/text.hpp"

namespace monideal {

/// Key order is insertion order so rendered files are stable.
using Json = nlohmann::ordered_json;

/// Version of schema/monideal.schema.json that the output follows.
std::string schema_version();

Json to_json(const Monomial& m, const VarNames& names = {});
Json to_json(const MonomialIdeal& ideal, const VarNames& names = {});
Json to_json(const MonomialPrime& prime, const VarNames& names = {});
Json to_json(const Hypergraph& h, const VarNames& names = {});
Json to_json(const VarSet& vars);
Json to_json(const MinorSpec& spec);
Json to_json(const std::vector<MonomialPrime>& primes, const VarNames& names = {});

/// Each flat variable tagged with its base variable and copy number.
Json to_json(const PolarContext& ctx, const VarNames& base_names = {});
Json to_json(const NtfVerdict& v, const MonomialPrime& maximal, const VarNames& names = {});
Json to_json(const MinorsNtf& m);
Json to_json(const CheckResult& c);
Json to_json(const FaridiReport& r, const VarNames& base_names = {});
Json to_json(const SearchHit& hit);
Json to_json(const AnalysisReport& r, const VarNames& names = {});

/// Inverses of the above. Throw UsageError on malformed input.
Monomial monomial_from_json(const Json& j);
MonomialIdeal ideal_from_json(const Json& j);
MonomialPrime prime_from_json(const Json& j);
Hypergraph hypergraph_from_json(const Json& j);
VarSet varset_from_json(const Json& j);

/// {variables, ideal} describing a parsed input.
Json input_json(const MonomialIdeal& input, const VarNames& names);
/// {schema_version, command, input, result}: the shape of every CLI --json document.
Json envelope(const std::string& command, Json input, Json result);

/// Human-readable table for `analyze`.
std::string render_text(const AnalysisReport& r, const VarNames& names = {});

}  // namespace monideal

#endif  // MONIDEAL_REPORT_JSON_HPP
