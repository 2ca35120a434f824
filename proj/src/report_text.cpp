#include <algorithm>
#include <iomanip>
#include <sstream>

#include "monideal/report_json.hpp"

namespace monideal {

namespace {

std::string join(const std::vector<MonomialPrime>& primes, const VarNames& names) {
  if (primes.empty()) return "-";
  std::string out;
  for (const auto& p : primes) out += (out.empty() ? "" : " ") + to_string(p, names);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const AnalysisReport& r, const VarNames& names) {
  std::ostringstream out;
  const MonomialPrime m = support_maximal(r.ideal);
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(18) << key << value << '\n';
  };
  row("ideal", to_string(r.ideal, names));
  row("variables", std::to_string(r.ring_dim) + " (effective " + std::to_string(r.effective_dim) + ")");
  row("alpha0", std::to_string(r.alpha0));
  std::string matching = std::to_string(r.matching.size);
  if (!r.matching_generators.empty()) {
    matching += "  via";
    for (const auto& g : r.matching_generators) matching += " " + to_string(g, names);
  }
  row("beta1", matching);
  row("konig", yes_no(r.konig));
  row("packing", yes_no(r.packing.holds));
  row("unmixed", yes_no(r.unmixed));
  row("good edge", r.good_edge ? to_string(*r.good_edge, names) : "none");
  row("min primes", join(r.min_primes, names));
  row("reduction", r.reduction.applied);
  row("bound", std::to_string(r.bound) + " (" + r.bound_rule + ")");
  std::string minors = r.minors.certified() ? "certified NTF (" + std::to_string(r.minors.minors_checked) + " checked)"
                                            : "not certified";
  if (r.minors.failing_onset) minors += ", a minor has onset " + std::to_string(*r.minors.failing_onset);
  row("proper minors", minors);

  out << "\n  t  I^t=I^(t)  m in Ass  embedded\n";
  for (const auto& p : r.ntf.per_power) {
    bool m_in = std::binary_search(p.ass.begin(), p.ass.end(), m);
    out << std::right << std::setw(3) << p.power << "  " << std::left << std::setw(9) << yes_no(p.symbolic_equal)
        << "  " << std::setw(8) << yes_no(m_in) << "  " << join(p.embedded, names) << '\n';
  }
  out << '\n';
  if (r.ntf.onset)
    row("onset", std::to_string(*r.ntf.onset));
  else
    row("onset", "none; certified NTF up to " + std::to_string(r.ntf.certified_ntf_up_to));
  if (r.window)
    row("stable Ass", "t=" + std::to_string(r.window->from) + ".." + std::to_string(r.window->to) + ": " +
                          join(r.window->primes, names));

  out << "\nchecks\n";
  for (const auto& c : r.checks)
    out << "  " << std::left << std::setw(26) << c.name << std::setw(15) << to_string(c.status) << c.detail << '\n';
  for (const auto& e : r.errors) out << "error: " << e << '\n';
  return out.str();
}

}  // namespace monideal
