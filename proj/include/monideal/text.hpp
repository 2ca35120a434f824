#ifndef MONIDEAL_TEXT_HPP
#define MONIDEAL_TEXT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/hypergraph.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// Display names for ring variables. Indices without an explicit name print
/// as x<i+1>.
class VarNames {
public:
  VarNames() = default;
  explicit VarNames(std::vector<std::string> names) : names_(std::move(names)) {}

  static VarNames numbered(std::size_t n);

  std::string name(VarId v) const;
  std::optional<VarId> find(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

private:
  std::vector<std::string> names_;
};

std::string to_string(const Monomial& m, const VarNames& names = {});
/// "(g1, g2, ...)" in canonical order; "(0)" for the zero ideal.
std::string to_string(const MonomialIdeal& ideal, const VarNames& names = {});
std::string to_string(const MonomialPrime& prime, const VarNames& names = {});
std::string to_string(const VarSet& vars, const VarNames& names = {});
/// Edge-list text: one edge per line, vertices separated by spaces.
std::string to_edge_list(const Hypergraph& h, const VarNames& names = {});

enum class InputFormat { EdgeList, IdealExpr };

struct ParsedInput {
  InputFormat format = InputFormat::IdealExpr;
  VarNames names;
  MonomialIdeal ideal;
  /// Present when the ideal is square-free and proper.
  std::optional<Hypergraph> hypergraph;
};

/// Parses either format; a leading '(' selects ideal-expr. Variables named
/// x1, x2, ... map to their numbers; any other naming is assigned indices in
/// order of first appearance. `min_dim` pads the ring with extra variables.
/// Throws ParseError with a 1-based line and column.
ParsedInput parse_input(std::string_view text, std::size_t min_dim = 0);
ParsedInput parse_ideal_expr(std::string_view text, std::size_t min_dim = 0);
ParsedInput parse_edge_list(std::string_view text, std::size_t min_dim = 0);

}  // namespace monideal

#endif  // MONIDEAL_TEXT_HPP
