// Command-line front end for the monideal library.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monideal/decomposition.hpp"
#include "monideal/hypergraph.hpp"
#include "monideal/ntf.hpp"
#include "monideal/polarization.hpp"
#include "monideal/report_json.hpp"
#include "monideal/search.hpp"
#include "monideal/text.hpp"

namespace {

using namespace monideal;

enum Exit : int { kComputed = 0, kPredicateFalse = 1, kUsage = 2, kResource = 3 };

struct Options {
  bool json = false;
  std::string input;
  std::string format = "auto";
  Budget budget;
  int t = 1;
  std::optional<int> bound;
  std::string rule = "half";
  std::string by;
  std::string deleted;
  std::string contracted;
  bool oracle = false;
  bool primes = false;
};

struct SearchOptions {
  std::size_t d_min = 1;
  std::size_t d_max = 5;
  std::string edge_size = "2";
  std::size_t max_edges = 0;
  bool no_dedup = false;
  std::string predicate = "minimally-non-packing";
  bool discard_unmixed = false;
  std::size_t max_candidates = 0;
  std::string resume;
};

std::string read_source(const std::string& source) {
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream file(source);
  if (file) return {std::istreambuf_iterator<char>(file), {}};
  return source;
}

ParsedInput load(const Options& o) {
  std::string text = read_source(o.input);
  if (o.format == "edge-list") return parse_edge_list(text);
  if (o.format == "ideal-expr") return parse_ideal_expr(text);
  return parse_input(text);
}

/// Parses a monomial such as "x1*x2^2" against the variable names of the input.
Monomial parse_monomial(const std::string& text, const ParsedInput& in) {
  ParsedInput m = parse_ideal_expr("(" + text + ")");
  if (m.ideal.size() != 1) throw UsageError("expected a single monomial, got '" + text + "'");
  std::vector<Exponent> e(in.ideal.ring_dim(), 0);
  const Monomial& g = m.ideal.generators().front();
  for (VarId v = 0; v < g.dim(); ++v) {
    if (g[v] == 0) continue;
    auto idx = in.names.find(m.names.name(v));
    if (!idx) throw UsageError("unknown variable '" + m.names.name(v) + "'");
    e[*idx] = g[v];
  }
  return Monomial(std::move(e));
}

VarSet parse_var_list(const std::string& text, const ParsedInput& in) {
  VarSet s;
  std::string name;
  std::istringstream stream(text);
  while (std::getline(stream, name, ',')) {
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }), name.end());
    if (name.empty()) continue;
    auto idx = in.names.find(name);
    if (!idx) throw UsageError("unknown variable '" + name + "'");
    s.insert(*idx);
  }
  return s;
}

const Hypergraph& require_hypergraph(const ParsedInput& in) {
  if (!in.hypergraph) throw UsageError("this command needs a square-free proper ideal or an edge list");
  return *in.hypergraph;
}

BoundRule parse_rule(const std::string& rule) {
  if (rule == "half") return BoundRule::HalfDimension;
  if (rule == "beta-star") return BoundRule::BetaStarPlusOne;
  throw UsageError("unknown bound rule '" + rule + "'");
}

void emit(const Options& o, const std::string& command, const ParsedInput& in, Json result, const std::string& text) {
  if (o.json)
    std::cout << envelope(command, input_json(in.ideal, in.names), std::move(result)).dump(2) << '\n';
  else
    std::cout << text;
}

std::string prime_lines(const std::vector<MonomialPrime>& primes, const VarNames& names) {
  std::string out;
  for (const auto& p : primes) out += to_string(p, names) + '\n';
  return out;
}

int run(const std::string& command, const Options& o) {
  const ParsedInput in = load(o);
  const VarNames& names = in.names;

  if (command == "ass") {
    AssResult r = o.oracle ? ass_witness_oracle(in.ideal, o.budget) : associated_primes(in.ideal, o.budget);
    Json witnesses = Json::array();
    std::string text;
    for (const auto& p : r.primes) {
      text += to_string(p, names);
      if (auto it = r.witnesses.find(p); it != r.witnesses.end()) {
        witnesses.push_back(Json{{"prime", to_json(p, names)}, {"witness", to_json(it->second, names)}});
        text += "  witness " + to_string(it->second, names);
      }
      text += '\n';
    }
    Json result{{"method", o.oracle ? "witness-oracle" : "decomposition"}, {"primes", to_json(r.primes, names)}};
    if (o.oracle) result["witnesses"] = witnesses;
    emit(o, command, in, result, text);
    return kComputed;
  }
  if (command == "min-primes") {
    auto primes = minimal_primes(in.ideal);
    emit(o, command, in, Json{{"primes", to_json(primes, names)}}, prime_lines(primes, names));
    return kComputed;
  }
  if (command == "power") {
    if (o.t < 1) throw UsageError("power must be positive");
    if (o.t > o.budget.max_power) throw ResourceError("power " + std::to_string(o.t) + " exceeds --max-power");
    MonomialIdeal p = power(in.ideal, o.t);
    emit(o, command, in, Json{{"t", o.t}, {"ideal", to_json(p, names)}}, to_string(p, names) + '\n');
    return kComputed;
  }
  if (command == "symbolic") {
    if (o.t < 1) throw UsageError("power must be positive");
    if (o.t > o.budget.max_power) throw ResourceError("power " + std::to_string(o.t) + " exceeds --max-power");
    MonomialIdeal s = symbolic_power(in.ideal, o.t);
    bool same = s == power(in.ideal, o.t);
    emit(o, command, in, Json{{"t", o.t}, {"ideal", to_json(s, names)}, {"equals_ordinary_power", same}},
         to_string(s, names) + "\nequals ordinary power: " + (same ? "true" : "false") + '\n');
    return kComputed;
  }
  if (command == "colon") {
    Monomial m = parse_monomial(o.by, in);
    MonomialIdeal q = colon(in.ideal, m);
    emit(o, command, in, Json{{"by", to_json(m, names)}, {"ideal", to_json(q, names)}}, to_string(q, names) + '\n');
    return kComputed;
  }
  if (command == "polarize") {
    if (o.t < 1) throw UsageError("power must be positive");
    if (o.t > o.budget.max_power) throw ResourceError("power " + std::to_string(o.t) + " exceeds --max-power");
    MonomialIdeal j = power(in.ideal, o.t);
    Polarization pol = polarize_ideal(j);
    VarNames pnames = pol.context.names(names);
    Json result{{"t", o.t},
                {"context", to_json(pol.context, names)},
                {"ideal", to_json(pol.ideal, pnames)},
                {"shadow_prefix", has_shadow_prefix_property(pol.context, pol.ideal)}};
    std::string text = to_string(pol.ideal, pnames) + '\n';
    if (o.primes) {
      auto polar_primes = minimal_primes(pol.ideal);
      auto base = associated_primes(j, o.budget).primes;
      Json rows = Json::array();
      std::set<MonomialPrime> hit;
      bool into = true;
      text += "\nminimal primes of the polarization\n";
      for (const auto& q : polar_primes) {
        MonomialPrime p = depolarize_prime(pol.context, q);
        bool in_ass = std::binary_search(base.begin(), base.end(), p);
        into = into && in_ass;
        if (in_ass) hit.insert(p);
        rows.push_back(Json{{"prime", to_json(q, pnames)}, {"depolarized", to_json(p, names)}, {"in_ass", in_ass}});
        text += "  " + to_string(q, pnames) + " -> " + to_string(p, names) + (in_ass ? "" : "  (not in Ass)") + '\n';
      }
      bool onto = hit.size() == base.size();
      result["primes"] = rows;
      result["base_ass"] = to_json(base, names);
      result["into"] = into;
      result["onto"] = onto;
      text += std::string("into Ass: ") + (into ? "true" : "false") + "\nonto Ass: " + (onto ? "true" : "false") + '\n';
    }
    emit(o, command, in, result, text);
    return kComputed;
  }
  if (command == "minor") {
    const Hypergraph& h = require_hypergraph(in);
    MinorSpec spec{parse_var_list(o.deleted, in), parse_var_list(o.contracted, in)};
    if (spec.deleted.intersects(spec.contracted)) throw UsageError("a variable cannot be both deleted and contracted");
    MinorResult r = apply_minor(h, spec);
    Json result{{"spec", to_json(spec)}};
    std::string text;
    switch (r.kind) {
      case MinorResult::Kind::Proper: {
        MonomialIdeal ideal = edge_ideal(r.graph);
        result["kind"] = "proper";
        result["ideal"] = to_json(ideal, names);
        result["hypergraph"] = to_json(r.graph, names);
        text = to_string(ideal, names) + '\n';
        break;
      }
      case MinorResult::Kind::ZeroIdeal:
        result["kind"] = "zero";
        text = "(0)\n";
        break;
      case MinorResult::Kind::UnitIdeal:
        result["kind"] = "unit";
        text = "(1)\n";
        break;
    }
    emit(o, command, in, result, text);
    return kComputed;
  }
  if (command == "invariants") {
    const Hypergraph& h = require_hypergraph(in);
    Matching mt = beta1(h);
    std::size_t a0 = alpha0(h);
    auto mins = minimal_primes(in.ideal);
    bool unmixed = is_unmixed(in.ideal, o.budget);
    auto good = find_good_edge(in.ideal);
    Json matching = Json::array();
    std::string mtext;
    for (std::size_t i : mt.edges) {
      Monomial g = Monomial::from_support(in.ideal.ring_dim(), h.edges()[i]);
      matching.push_back(to_json(g, names));
      mtext += " " + to_string(g, names);
    }
    Json result{{"alpha0", a0},
                {"beta1", mt.size},
                {"matching", matching},
                {"konig", a0 == mt.size},
                {"effective_dim", effective_dimension(h)},
                {"components", connected_components(h).size()},
                {"isolated", to_json(isolated_vertices(h))},
                {"unmixed", unmixed},
                {"good_edge", good ? to_json(*good, names) : Json(nullptr)},
                {"min_primes", to_json(mins, names)}};
    std::ostringstream text;
    text << "alpha0: " << a0 << "\nbeta1: " << mt.size << "  via" << mtext << "\nkonig: " << (a0 == mt.size ? "true" : "false")
         << "\nunmixed: " << (unmixed ? "true" : "false") << "\ngood edge: " << (good ? to_string(*good, names) : "none")
         << "\nminimal primes:\n"
         << prime_lines(mins, names);
    emit(o, command, in, result, text.str());
    return kComputed;
  }
  if (command == "konig") {
    const Hypergraph& h = require_hypergraph(in);
    std::size_t a0 = alpha0(h);
    std::size_t b1 = beta1(h).size;
    bool holds = a0 == b1;
    emit(o, command, in, Json{{"holds", holds}, {"alpha0", a0}, {"beta1", b1}},
         std::string("konig: ") + (holds ? "true" : "false") + " (alpha0 " + std::to_string(a0) + ", beta1 " +
             std::to_string(b1) + ")\n");
    return holds ? kComputed : kPredicateFalse;
  }
  if (command == "packing") {
    const Hypergraph& h = require_hypergraph(in);
    PackingResult r = packing(h, o.budget.max_minors);
    std::string text = std::string("packing: ") + (r.holds ? "true" : "false") + '\n';
    if (r.failing_minor)
      text += "failing minor: delete " + to_string(r.failing_minor->deleted, names) + " contract " +
              to_string(r.failing_minor->contracted, names) + '\n';
    emit(o, command, in,
         Json{{"holds", r.holds}, {"failing_minor", r.failing_minor ? to_json(*r.failing_minor) : Json(nullptr)}},
         text);
    return r.holds ? kComputed : kPredicateFalse;
  }
  if (command == "ntf") {
    require_hypergraph(in);
    int bound = o.bound ? *o.bound : default_bound(in.ideal, parse_rule(o.rule), o.budget);
    NtfVerdict v = ntf_verdict(in.ideal, bound, o.budget);
    std::ostringstream text;
    for (const auto& row : v.per_power) {
      text << "t=" << row.power << "  Ass:";
      for (const auto& p : row.ass) text << ' ' << to_string(p, names);
      if (!row.embedded.empty()) {
        text << "  embedded:";
        for (const auto& p : row.embedded) text << ' ' << to_string(p, names);
      }
      text << '\n';
    }
    if (v.onset)
      text << "not NTF: embedded prime at t=" << *v.onset << '\n';
    else
      text << "certified NTF up to " << v.certified_ntf_up_to << '\n';
    if (v.resource_error) text << "stopped early: " << *v.resource_error << '\n';
    emit(o, command, in, to_json(v, support_maximal(in.ideal), names), text.str());
    if (v.onset) return kPredicateFalse;
    return v.resource_error ? kResource : kComputed;
  }
  if (command == "analyze") {
    require_hypergraph(in);
    AnalysisConfig cfg;
    cfg.budget = o.budget;
    cfg.bound = o.bound;
    cfg.rule = parse_rule(o.rule);
    AnalysisReport r = analyze(in.ideal, cfg);
    emit(o, command, in, to_json(r, names), render_text(r, names));
    return r.errors.empty() ? kComputed : kResource;
  }
  throw UsageError("unknown command " + command);
}

int run_search(const SearchOptions& s, const Options& o) {
  SearchConfig cfg;
  cfg.d_min = s.d_min;
  cfg.d_max = s.d_max;
  auto dash = s.edge_size.find('-');
  try {
    cfg.edge_size_min = std::stoul(s.edge_size.substr(0, dash));
    cfg.edge_size_max = dash == std::string::npos ? cfg.edge_size_min : std::stoul(s.edge_size.substr(dash + 1));
  } catch (const std::logic_error&) {
    throw UsageError("--edge-size expects K or K-L");
  }
  cfg.max_edges = s.max_edges;
  cfg.dedup = s.no_dedup ? Dedup::None : Dedup::PermutationCanonical;
  cfg.predicate = parse_search_predicate(s.predicate);
  cfg.discard_unmixed = s.discard_unmixed;
  cfg.budget = o.budget;
  cfg.max_candidates = s.max_candidates;
  if (!s.resume.empty()) cfg.resume = s.resume;

  auto line = [](const SearchHit& h) {
    std::string out = "d=" + std::to_string(h.graph.n_vertices()) + "  ";
    for (const auto& e : h.graph.edges()) out += to_string(e) + " ";
    out += " beta1=" + std::to_string(h.beta1) + " onset=" + (h.onset ? std::to_string(*h.onset) : "none") +
           " unmixed=" + (h.unmixed ? "yes" : "no") + " onset-check=" + to_string(h.onset_check);
    return out;
  };
  SearchOutcome out = search(cfg, [&](const SearchHit& h) {
    if (!o.json) std::cout << line(h) << '\n' << std::flush;
  });
  if (o.json) {
    Json hits = Json::array();
    for (const auto& h : out.hits) hits.push_back(to_json(h));
    Json input{{"d_min", cfg.d_min},
               {"d_max", cfg.d_max},
               {"edge_size", Json::array({cfg.edge_size_min, cfg.edge_size_max})},
               {"max_edges", cfg.max_edges},
               {"dedup", s.no_dedup ? "none" : "permutation-canonical"},
               {"predicate", to_string(cfg.predicate)},
               {"discard_unmixed", cfg.discard_unmixed}};
    Json result{{"hits", hits},
                {"candidates", out.candidates},
                {"complete", out.complete},
                {"resume_token", out.resume_token ? Json(*out.resume_token) : Json(nullptr)},
                {"stop_reason", out.stop_reason ? Json(*out.stop_reason) : Json(nullptr)}};
    std::cout << envelope("search", input, result).dump(2) << '\n';
  } else {
    std::cout << out.hits.size() << " hit(s), " << out.candidates << " candidate(s) examined\n";
  }
  if (!out.complete) {
    std::cerr << "search stopped: " << *out.stop_reason << "\nresume with --resume '" << *out.resume_token << "'\n";
    return kResource;
  }
  return kComputed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated primes, symbolic powers and packing checks for monomial ideals"};
  app.require_subcommand(0, 1);
  Options o;
  SearchOptions s;
  bool version = false;
  app.add_flag("--version", version, "Print the JSON schema version and exit");
  app.add_flag("--json", o.json, "Machine-readable output")->group("Global");
  app.add_option("--max-box", o.budget.max_box, "Monomials the witness oracle may scan")
      ->capture_default_str()
      ->group("Global");
  app.add_option("--max-power", o.budget.max_power, "Largest power any command will form")
      ->capture_default_str()
      ->group("Global");
  app.add_option("--max-minors", o.budget.max_minors, "Largest minor enumeration (3^n specs)")
      ->capture_default_str()
      ->group("Global");
  app.fallthrough();

  auto input_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "File path, '-' for stdin, or inline text")->required();
    sub->add_option("--format", o.format, "auto, edge-list or ideal-expr")
        ->check(CLI::IsMember({"auto", "edge-list", "ideal-expr"}))
        ->capture_default_str();
    return sub;
  };
  auto bound_opts = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "Scan powers 1..N (default from --rule)");
    sub->add_option("--rule", o.rule, "Default bound: half = ceil((d+1)/2), beta-star = beta*+1")
        ->check(CLI::IsMember({"half", "beta-star"}))
        ->capture_default_str();
  };

  input_cmd("ass", "Associated primes")->add_flag("--oracle", o.oracle, "Use the colon-witness scan and print witnesses");
  input_cmd("min-primes", "Minimal primes");
  input_cmd("power", "Ordinary power I^t")->add_option("-t,--t", o.t, "Exponent")->required();
  input_cmd("symbolic", "Symbolic power I^(t) of a square-free ideal")->add_option("-t,--t", o.t, "Exponent")->required();
  input_cmd("colon", "Colon ideal (I : m)")->add_option("--by", o.by, "Monomial such as x1*x2^2")->required();
  {
    CLI::App* sub = input_cmd("polarize", "Polarization of I^t");
    sub->add_option("-t,--t", o.t, "Exponent")->capture_default_str();
    sub->add_flag("--primes", o.primes, "List minimal primes of the polarization with their depolarizations");
  }
  {
    CLI::App* sub = input_cmd("minor", "Deletion/contraction minor");
    sub->add_option("--delete", o.deleted, "Comma-separated variables set to 0");
    sub->add_option("--contract", o.contracted, "Comma-separated variables set to 1");
  }
  input_cmd("invariants", "alpha0, beta1, minimal primes, unmixedness, good edge");
  input_cmd("konig", "König property (exit 1 when false)");
  input_cmd("packing", "Packing property (exit 1 when false)");
  bound_opts(input_cmd("ntf", "Embedded primes of I^t up to a bound (exit 1 on an embedded prime)"));
  bound_opts(input_cmd("analyze", "Full report with every theorem check"));

  CLI::App* search_cmd = app.add_subcommand("search", "Enumerate small hypergraphs matching a predicate");
  search_cmd->add_option("--d-min", s.d_min, "Smallest vertex count")->capture_default_str();
  search_cmd->add_option("--d-max", s.d_max, "Largest vertex count")->capture_default_str();
  search_cmd->add_option("--edge-size", s.edge_size, "Edge size K or range K-L")->capture_default_str();
  search_cmd->add_option("--max-edges", s.max_edges, "Edge limit, 0 for none")->capture_default_str();
  search_cmd->add_flag("--no-dedup", s.no_dedup, "Report every labeling instead of one per isomorphism class");
  search_cmd->add_option("--predicate", s.predicate, "minimally-non-packing, onset-equals-beta1-plus-1, ntf-violation")
      ->check(CLI::IsMember({"minimally-non-packing", "onset-equals-beta1-plus-1", "ntf-violation"}))
      ->capture_default_str();
  search_cmd->add_flag("--discard-unmixed", s.discard_unmixed, "Drop unmixed candidates");
  search_cmd->add_option("--max-candidates", s.max_candidates, "Stop after this many edge subsets, 0 for none")
      ->capture_default_str();
  search_cmd->add_option("--resume", s.resume, "Token printed by a stopped run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kComputed : kUsage;
  }
  if (version) {
    std::cout << schema_version() << '\n';
    return kComputed;
  }
  auto subs = app.get_subcommands();
  if (subs.empty()) {
    std::cerr << app.help();
    return kUsage;
  }
  try {
    if (subs.front() == search_cmd) return run_search(s, o);
    return run(subs.front()->get_name(), o);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ArithmeticError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  }
}
