#include "monideal/report_json.hpp"

#include <algorithm>
#include <limits>

namespace monideal {

std::string schema_version() { return MONIDEAL_SCHEMA_VERSION; }

namespace {

Json names_json(const VarNames& names, std::size_t dim) {
  Json out = Json::array();
  for (VarId v = 0; v < dim; ++v) out.push_back(names.name(v));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("JSON object lacks field '") + key + "'");
  return j.at(key);
}

std::size_t index_of(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw UsageError("expected a non-negative integer in JSON");
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Monomial& m, const VarNames& names) {
  return Json{{"exponents", m.exponents()}, {"text", to_string(m, names)}};
}

Json to_json(const MonomialIdeal& ideal, const VarNames& names) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
  return Json{{"ring_dim", ideal.ring_dim()}, {"generators", gens}, {"text", to_string(ideal, names)}};
}

Json to_json(const VarSet& vars) { return Json(vars.members()); }

Json to_json(const MonomialPrime& prime, const VarNames& names) {
  return Json{{"ring_dim", prime.ring_dim()}, {"vars", to_json(prime.vars())}, {"text", to_string(prime, names)}};
}

Json to_json(const std::vector<MonomialPrime>& primes, const VarNames& names) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(to_json(p, names));
  return out;
}

Json to_json(const Hypergraph& h, const VarNames& names) {
  Json edges = Json::array();
  Json text = Json::array();
  for (const auto& e : h.edges()) {
    edges.push_back(to_json(e));
    text.push_back(to_string(e, names));
  }
  return Json{{"n_vertices", h.n_vertices()}, {"edges", edges}, {"text", text}};
}

Json to_json(const MinorSpec& spec) {
  return Json{{"deleted", to_json(spec.deleted)}, {"contracted", to_json(spec.contracted)}};
}

Json to_json(const PolarContext& ctx, const VarNames& base_names) {
  Json vars = Json::array();
  VarNames polar = ctx.names(base_names);
  for (VarId v = 0; v < ctx.polar_dim(); ++v) {
    ShadowVar s = ctx.shadow(v);
    vars.push_back(Json{{"flat", v}, {"base", s.base}, {"copy", s.copy}, {"name", polar.name(v)}});
  }
  return Json{{"base_dim", ctx.base_dim()},
              {"polar_dim", ctx.polar_dim()},
              {"copies_per_var", ctx.copies_per_var()},
              {"variables", vars}};
}

Json to_json(const NtfVerdict& v, const MonomialPrime& maximal, const VarNames& names) {
  Json powers = Json::array();
  for (const auto& row : v.per_power) {
    bool m_in = std::binary_search(row.ass.begin(), row.ass.end(), maximal);
    powers.push_back(Json{{"t", row.power},
                          {"ass", to_json(row.ass, names)},
                          {"embedded", to_json(row.embedded, names)},
                          {"symbolic_equal", row.symbolic_equal},
                          {"maximal_associated", m_in}});
  }
  return Json{{"bound_used", v.bound_used},
              {"onset", optional_json(v.onset)},
              {"certified_ntf_up_to", v.certified_ntf_up_to},
              {"resource_error", optional_json(v.resource_error)},
              {"powers", powers}};
}

Json to_json(const MinorsNtf& m) {
  return Json{{"all_ntf", m.all_ntf},
              {"certified", m.certified()},
              {"minors_checked", m.minors_checked},
              {"max_bound_used", m.max_bound_used},
              {"failing_minor", m.failing_minor ? to_json(*m.failing_minor) : Json(nullptr)},
              {"failing_onset", optional_json(m.failing_onset)},
              {"resource_error", optional_json(m.resource_error)}};
}

Json to_json(const CheckResult& c) {
  return Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
}

Json to_json(const FaridiReport& r, const VarNames& base_names) {
  VarNames polar = r.polarization.context.names(base_names);
  Json fibers = Json::array();
  for (const auto& [p, n] : r.fiber_sizes) fibers.push_back(Json{{"prime", to_json(p, base_names)}, {"fiber_size", n}});
  return Json{{"power", r.power},
              {"context", to_json(r.polarization.context, base_names)},
              {"polarized_ideal", to_json(r.polarization.ideal, polar)},
              {"polarized_primes", to_json(r.polarized_primes, polar)},
              {"base_primes", to_json(r.base_primes, base_names)},
              {"fibers", fibers},
              {"stray", to_json(r.stray, polar)},
              {"into", r.into},
              {"onto", r.onto}};
}

Json to_json(const SearchHit& hit) {
  return Json{{"hypergraph", to_json(hit.graph)},
              {"alpha0", hit.alpha0},
              {"beta1", hit.beta1},
              {"unmixed", hit.unmixed},
              {"good_edge", hit.good_edge ? to_json(*hit.good_edge) : Json(nullptr)},
              {"bound", hit.bound},
              {"onset", optional_json(hit.onset)},
              {"onset_check", Json{{"status", to_string(hit.onset_check)}, {"detail", hit.onset_detail}}}};
}

Json to_json(const AnalysisReport& r, const VarNames& names) {
  Json matching = Json::array();
  for (const auto& g : r.matching_generators) matching.push_back(to_json(g, names));
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json window(nullptr);
  if (r.window)
    window = Json{{"from", r.window->from}, {"to", r.window->to}, {"primes", to_json(r.window->primes, names)}};
  const MonomialPrime m = support_maximal(r.ideal);
  return Json{{"ideal", to_json(r.ideal, names)},
              {"ring_dim", r.ring_dim},
              {"effective_dim", r.effective_dim},
              {"maximal", to_json(m, names)},
              {"alpha0", r.alpha0},
              {"beta1", r.matching.size},
              {"matching", matching},
              {"min_primes", to_json(r.min_primes, names)},
              {"unmixed", r.unmixed},
              {"konig", r.konig},
              {"packing",
               Json{{"holds", r.packing.holds},
                    {"failing_minor", r.packing.failing_minor ? to_json(*r.packing.failing_minor) : Json(nullptr)}}},
              {"good_edge", r.good_edge ? to_json(*r.good_edge, names) : Json(nullptr)},
              {"reduction",
               Json{{"isolated", to_json(r.reduction.isolated)},
                    {"components", r.reduction.components},
                    {"connected", r.reduction.connected},
                    {"applied", r.reduction.applied}}},
              {"bound", Json{{"value", r.bound}, {"rule", r.bound_rule}}},
              {"ntf", to_json(r.ntf, m, names)},
              {"minors", to_json(r.minors)},
              {"checks", checks},
              {"stabilization", window},
              {"errors", r.errors}};
}

Monomial monomial_from_json(const Json& j) {
  const Json& e = j.is_object() ? field(j, "exponents") : j;
  if (!e.is_array()) throw UsageError("monomial exponents must be an array");
  std::vector<Exponent> exps;
  for (const auto& x : e) {
    std::size_t v = index_of(x);
    if (v > std::numeric_limits<Exponent>::max()) throw UsageError("exponent out of range in JSON");
    exps.push_back(static_cast<Exponent>(v));
  }
  return Monomial(std::move(exps));
}

MonomialIdeal ideal_from_json(const Json& j) {
  std::size_t d = index_of(field(j, "ring_dim"));
  std::vector<Monomial> gens;
  for (const auto& g : field(j, "generators")) {
    Monomial m = monomial_from_json(g);
    if (m.dim() != d) throw UsageError("generator length differs from ring_dim");
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(d, std::move(gens));
}

VarSet varset_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("variable set must be an array");
  VarSet s;
  for (const auto& x : j) s.insert(index_of(x));
  return s;
}

MonomialPrime prime_from_json(const Json& j) {
  return MonomialPrime(index_of(field(j, "ring_dim")), varset_from_json(field(j, "vars")));
}

Hypergraph hypergraph_from_json(const Json& j) {
  std::vector<VarSet> edges;
  for (const auto& e : field(j, "edges")) edges.push_back(varset_from_json(e));
  return Hypergraph(index_of(field(j, "n_vertices")), std::move(edges));
}

Json input_json(const MonomialIdeal& input, const VarNames& names) {
  return Json{{"variables", names_json(names, input.ring_dim())}, {"ideal", to_json(input, names)}};
}

Json envelope(const std::string& command, Json input, Json result) {
  return Json{{"schema_version", schema_version()},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)}};
}

}  // namespace monideal
