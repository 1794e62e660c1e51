#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "boundsyn/common.hpp"

namespace boundsyn::ltl {

enum class Kind { Atom, True, False, Not, And, Or, Implies, Iff, Next, Until, Release, Finally, Globally };

int arity(Kind k);

/// Immutable LTL syntax tree. Copies share structure.
class Formula {
 public:
  Formula();  // true

  static Formula atom(std::string name);
  static Formula constant(bool value);
  static Formula unary(Kind kind, Formula child);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }
  const std::vector<Formula>& children() const { return node_->children; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  std::size_t size() const;
  std::set<std::string> atoms() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& f);
Formula operator&&(const Formula& a, const Formula& b);
Formula operator||(const Formula& a, const Formula& b);
Formula implies(const Formula& a, const Formula& b);
Formula iff(const Formula& a, const Formula& b);
Formula next(const Formula& f);
Formula finally(const Formula& f);
Formula globally(const Formula& f);
Formula until(const Formula& a, const Formula& b);
Formula release(const Formula& a, const Formula& b);

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Parses the textual syntax. Precedence, loosest first: `<->`, `->` (right),
/// `||`, `&&`, `U`/`R` (right), then the unary operators `!`, `X`, `F`, `G`.
Formula parse(std::string_view text);

/// Canonical fully parenthesized rendering; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Negation normal form over {atom, !atom, true, false, &&, ||, X, U, R}.
Formula to_nnf(const Formula& f);

Formula negate(const Formula& f);

/// (/\ assumptions) -> (/\ guarantees), with empty conjunctions read as true.
Formula assemble_spec(const std::vector<Formula>& assumptions, const std::vector<Formula>& guarantees);

}  // namespace boundsyn::ltl
