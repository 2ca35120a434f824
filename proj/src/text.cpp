#include "monideal/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>

namespace monideal {

VarNames VarNames::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return VarNames(std::move(names));
}

std::string VarNames::name(VarId v) const {
  if (v < names_.size()) return names_[v];
  return "x" + std::to_string(v + 1);
}

std::optional<VarId> VarNames::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string to_string(const Monomial& m, const VarNames& names) {
  if (m.is_unit()) return "1";
  std::string out;
  for (VarId v = 0; v < m.dim(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.name(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal, const VarNames& names) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(ideal.generators()[i], names);
  }
  return out + ")";
}

std::string to_string(const VarSet& vars, const VarNames& names) {
  std::string out = "(";
  bool first = true;
  vars.for_each([&](VarId v) {
    if (!first) out += ", ";
    first = false;
    out += names.name(v);
  });
  return out + ")";
}

std::string to_string(const MonomialPrime& prime, const VarNames& names) { return to_string(prime.vars(), names); }

std::string to_edge_list(const Hypergraph& h, const VarNames& names) {
  std::string out;
  for (const auto& e : h.edges()) {
    bool first = true;
    e.for_each([&](VarId v) {
      if (!first) out += ' ';
      first = false;
      out += names.name(v);
    });
    out += '\n';
  }
  return out;
}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

/// Numbered mode when every name is x<k> with k >= 1.
std::optional<std::size_t> numbered_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return std::nullopt;
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
  if (ec != std::errc() || ptr != name.data() + name.size() || k == 0) return std::nullopt;
  return k;
}

/// Assigns indices to the names seen while parsing.
class NameTable {
public:
  void note(const Token& tok) {
    if (std::find(order_.begin(), order_.end(), tok.text) == order_.end()) {
      order_.push_back(tok.text);
      first_seen_.push_back(tok);
    }
  }

  void finalize(std::size_t min_dim) {
    bool numbered = std::all_of(order_.begin(), order_.end(),
                                [](const std::string& n) { return numbered_index(n).has_value(); });
    if (numbered) {
      std::size_t d = min_dim;
      for (const auto& n : order_) d = std::max(d, *numbered_index(n));
      if (d > VarSet::kCapacity) {
        const Token& t = first_seen_.back();
        throw ParseError("ring dimension exceeds " + std::to_string(VarSet::kCapacity), t.line, t.column);
      }
      names_ = VarNames::numbered(d);
      for (const auto& n : order_) index_[n] = *numbered_index(n) - 1;
    } else {
      std::vector<std::string> names = order_;
      for (std::size_t i = names.size(); i < min_dim; ++i) {
        std::string fresh = "x" + std::to_string(i + 1);
        while (std::find(names.begin(), names.end(), fresh) != names.end()) fresh += "_";
        names.push_back(fresh);
      }
      for (std::size_t i = 0; i < order_.size(); ++i) index_[order_[i]] = i;
      names_ = VarNames(std::move(names));
    }
  }

  VarId index(const std::string& name) const { return index_.at(name); }
  const VarNames& names() const { return names_; }
  std::size_t dim() const { return names_.size(); }

private:
  std::vector<std::string> order_;
  std::vector<Token> first_seen_;
  std::map<std::string, VarId> index_;
  VarNames names_;
};

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  Token read_name() {
    Token tok{"", line_, column_};
    if (!is_name_start(peek())) fail(std::string("expected a variable name, found ") + describe(peek()));
    while (!done() && is_name_char(peek())) tok.text += advance();
    return tok;
  }

  Token read_integer() {
    Token tok{"", line_, column_};
    if (std::isdigit(static_cast<unsigned char>(peek())) == 0) fail("expected an integer exponent");
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())) != 0) tok.text += advance();
    return tok;
  }

  static std::string describe(char c) {
    if (c == '\0') return "end of input";
    return std::string("'") + c + "'";
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct RawFactor {
  Token name;
  std::uint32_t exponent;
};

Exponent parse_exponent(const Token& tok) {
  std::uint64_t value = 0;
  for (char c : tok.text) {
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > std::numeric_limits<Exponent>::max())
      throw ParseError("exponent out of range", tok.line, tok.column);
  }
  return static_cast<Exponent>(value);
}

ParsedInput finish(InputFormat format, NameTable& table, const std::vector<std::vector<RawFactor>>& products,
                   std::size_t min_dim) {
  table.finalize(min_dim);
  const std::size_t d = table.dim();
  std::vector<Monomial> gens;
  for (const auto& product : products) {
    std::vector<std::uint32_t> e(d, 0);
    for (const auto& f : product) {
      auto& slot = e[table.index(f.name.text)];
      slot += f.exponent;
      if (slot > std::numeric_limits<Exponent>::max())
        throw ParseError("exponent out of range", f.name.line, f.name.column);
    }
    gens.emplace_back(std::vector<Exponent>(e.begin(), e.end()));
  }
  ParsedInput out;
  out.format = format;
  out.names = table.names();
  out.ideal = MonomialIdeal(d, std::move(gens));
  if (out.ideal.is_proper() && out.ideal.is_square_free()) out.hypergraph = hypergraph_of(out.ideal);
  return out;
}

}  // namespace

ParsedInput parse_ideal_expr(std::string_view text, std::size_t min_dim) {
  Cursor cur(text);
  NameTable table;
  std::vector<std::vector<RawFactor>> products;
  cur.skip_space();
  if (cur.peek() != '(') cur.fail("ideal expression must start with '('");
  cur.advance();
  cur.skip_space();
  if (cur.peek() == ')') {
    cur.advance();
  } else {
    while (true) {
      cur.skip_space();
      std::vector<RawFactor> product;
      if (std::isdigit(static_cast<unsigned char>(cur.peek())) != 0) {
        Token num = cur.read_integer();
        if (num.text == "0" && products.empty()) {
          cur.skip_space();
          if (cur.peek() != ')') cur.fail("the zero ideal is written (0)");
          cur.advance();
          break;
        }
        if (num.text != "1") throw ParseError("only the constants 1 and 0 are allowed", num.line, num.column);
        products.push_back({});
      } else {
        while (true) {
          cur.skip_space();
          Token name = cur.read_name();
          table.note(name);
          std::uint32_t exponent = 1;
          cur.skip_space();
          if (cur.peek() == '^') {
            cur.advance();
            cur.skip_space();
            exponent = parse_exponent(cur.read_integer());
            cur.skip_space();
          }
          product.push_back({name, exponent});
          if (cur.peek() != '*') break;
          cur.advance();
        }
        products.push_back(std::move(product));
      }
      cur.skip_space();
      if (cur.peek() == ',') {
        cur.advance();
        continue;
      }
      if (cur.peek() == ')') {
        cur.advance();
        break;
      }
      cur.fail("expected ',' or ')', found " + Cursor::describe(cur.peek()));
    }
  }
  cur.skip_space();
  if (!cur.done()) cur.fail("unexpected trailing input " + Cursor::describe(cur.peek()));
  return finish(InputFormat::IdealExpr, table, products, min_dim);
}

ParsedInput parse_edge_list(std::string_view text, std::size_t min_dim) {
  Cursor cur(text);
  NameTable table;
  std::vector<std::vector<RawFactor>> edges;
  std::vector<Token> edge_start;
  std::vector<RawFactor> current;
  auto close_edge = [&] {
    if (!current.empty()) {
      edges.push_back(std::move(current));
      current.clear();
    }
  };
  while (true) {
    // Whitespace other than newlines separates vertices.
    while (!cur.done() && cur.peek() != '\n' && std::isspace(static_cast<unsigned char>(cur.peek())) != 0)
      cur.advance();
    if (cur.done()) break;
    char c = cur.peek();
    if (c == '#') {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
      continue;
    }
    if (c == '\n' || c == '/') {
      cur.advance();
      close_edge();
      continue;
    }
    Token name = cur.read_name();
    if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())) && cur.peek() != '/' &&
        cur.peek() != '#')
      cur.fail("unexpected character " + Cursor::describe(cur.peek()) + " in vertex name");
    for (const auto& f : current)
      if (f.name.text == name.text) throw ParseError("duplicate variable '" + name.text + "' in edge", name.line, name.column);
    if (current.empty()) edge_start.push_back(name);
    table.note(name);
    current.push_back({name, 1});
  }
  close_edge();
  if (edges.empty()) throw ParseError("no edges", cur.line(), cur.column());

  ParsedInput out = finish(InputFormat::EdgeList, table, edges, min_dim);
  // Report a non-simple edge list at the offending edge rather than silently
  // minimalizing it.
  std::vector<VarSet> sets;
  for (const auto& e : edges) {
    VarSet s;
    for (const auto& f : e) s.insert(table.index(f.name.text));
    sets.push_back(s);
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[j].subset_of(sets[i]) && (sets[i] != sets[j] || j < i))
        throw ParseError(sets[i] == sets[j] ? "duplicate edge" : "edge contains another edge", edge_start[i].line,
                         edge_start[i].column);
  return out;
}

ParsedInput parse_input(std::string_view text, std::size_t min_dim) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) continue;
    if (c == '(') return parse_ideal_expr(text, min_dim);
    break;
  }
  return parse_edge_list(text, min_dim);
}

}  // namespace monideal
