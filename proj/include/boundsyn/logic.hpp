#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "boundsyn/common.hpp"

namespace boundsyn::logic {

/// Variable ids are 1-based so that they coincide with DIMACS numbering.
using Var = std::uint32_t;

/// Handle to a node in a FormulaStore.
struct Formula {
  std::uint32_t id = 0;
  friend bool operator==(Formula a, Formula b) { return a.id == b.id; }
  friend bool operator!=(Formula a, Formula b) { return a.id != b.id; }
  friend bool operator<(Formula a, Formula b) { return a.id < b.id; }
};

enum class NodeKind : std::uint8_t { Const, Var, Not, And, Or, Xor, Ite };

struct Node {
  NodeKind kind;
  std::uint32_t payload;  // constant value or variable id
  std::vector<Formula> children;
};

/// Role tags let emitters and directories tell encoding variables apart.
enum class VarRole : std::uint8_t { Input, State, NextState, AutomatonState, NextAutomatonState, Reach, Rank, Transition, Output, Aux };

struct VarInfo {
  VarRole role;
  std::string name;
};

/// Hash-consed formula arena. Structurally equal constructions return the
/// same handle; light constant folding happens on construction.
class FormulaStore {
 public:
  FormulaStore();

  Var new_var(VarRole role, std::string name);
  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(vars_.size()); }
  const VarInfo& var_info(Var v) const { return vars_.at(v - 1); }

  Formula constant(bool value) const { return value ? true_ : false_; }
  Formula var(Var v);
  Formula lnot(Formula f);
  Formula land(std::vector<Formula> parts);
  Formula lor(std::vector<Formula> parts);
  Formula land(Formula a, Formula b) { return land(std::vector<Formula>{a, b}); }
  Formula lor(Formula a, Formula b) { return lor(std::vector<Formula>{a, b}); }
  Formula lxor(Formula a, Formula b);
  Formula iff(Formula a, Formula b) { return lnot(lxor(a, b)); }
  Formula implies(Formula a, Formula b) { return lor(lnot(a), b); }
  Formula ite(Formula c, Formula t, Formula e);

  const Node& node(Formula f) const { return nodes_.at(f.id); }
  std::size_t num_nodes() const { return nodes_.size(); }
  bool is_const(Formula f, bool value) const { return f == constant(value); }

  /// Number of distinct nodes reachable from the root.
  std::size_t dag_size(Formula root) const;
  /// Variables occurring in `root`, ascending.
  std::vector<Var> support(Formula root) const;

  bool evaluate(Formula root, const std::function<bool(Var)>& assignment) const;

  /// Copies `root` from `source` into this store, replacing each variable v by
  /// `mapping(v)`.
  Formula import(const FormulaStore& source, Formula root, const std::function<Formula(Var)>& mapping);

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };
  Formula intern(NodeKind kind, std::uint32_t payload, std::vector<Formula> children);

  std::vector<Node> nodes_;
  std::vector<VarInfo> vars_;
  std::vector<Formula> var_nodes_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> table_;
  Formula false_;
  Formula true_;
};

/// A little-endian vector of formulas (bit 0 first).
struct BitVec {
  std::vector<Formula> bits;
  std::size_t width() const { return bits.size(); }
};

BitVec fresh_bitvec(FormulaStore& store, int width, VarRole role, const std::string& name);
BitVec constant_bitvec(const FormulaStore& store, std::uint64_t value, int width);

/// Ripple comparator: x > y when strict, otherwise x >= y.
Formula bv_greater(FormulaStore& store, const BitVec& x, const BitVec& y, bool strict);
Formula bv_equal(FormulaStore& store, const BitVec& x, const BitVec& y);
/// Constraint that the unsigned value of x is strictly below `bound`.
Formula bv_less_than_const(FormulaStore& store, const BitVec& x, std::uint64_t bound);
Formula bv_equals_const(FormulaStore& store, const BitVec& x, std::uint64_t value);

enum class Quantifier { Exists, Forall };

struct QuantBlock {
  Quantifier quantifier;
  std::vector<Var> vars;
};

enum class Fragment { Sat, Qbf, Dqbf };

/// Matrix plus quantifier prefix. With `dependencies` set the problem is a
/// DQBF whose existentials depend exactly on the listed universals.
struct QuantifiedProblem {
  std::shared_ptr<FormulaStore> store;
  Formula matrix;
  std::vector<QuantBlock> prefix;
  std::optional<std::map<Var, std::vector<Var>>> dependencies;

  Fragment fragment() const;
  std::vector<Var> universals() const;
  std::vector<Var> existentials() const;
  /// Throws Error unless every variable is bound exactly once and DQBF
  /// dependency sets name universals only.
  void validate() const;
};

struct CountProfile {
  std::size_t existentials = 0;
  std::size_t universals = 0;
  std::size_t matrix_nodes = 0;
  friend bool operator==(const CountProfile&, const CountProfile&) = default;
};

CountProfile count_profile(const QuantifiedProblem& problem);

using Clause = std::vector<int>;

struct Cnf {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;
};

struct TseitinResult {
  Cnf cnf;
  /// Definition variable -> the store node it stands for. Original variables
  /// keep their ids and are not listed.
  std::map<Var, Formula> definitions;
};

/// Full (biconditional) Tseitin transformation of `root`.
TseitinResult tseitin(const FormulaStore& store, Formula root);

/// Tseitin variant used by the emitters and solvers: the root conjunction is
/// split and clause-shaped conjuncts (disjunctions, xor, iff, nand) are
/// written directly; every other subformula gets a definition variable.
TseitinResult clausify(const FormulaStore& store, Formula root);

class FormatError : public Error {
 public:
  using Error::Error;
};

std::string emit_dimacs(const QuantifiedProblem& problem);
std::string emit_qdimacs(const QuantifiedProblem& problem);
std::string emit_dqdimacs(const QuantifiedProblem& problem);
/// Picks the format that matches the problem's fragment.
std::string emit_matching(const QuantifiedProblem& problem);

/// Line-level image of a DIMACS, QDIMACS or DQDIMACS file.
struct ClauseFile {
  std::vector<std::string> comments;
  std::uint32_t num_vars = 0;
  struct Quant {
    char kind;  // 'a' or 'e'
    std::vector<int> vars;
  };
  std::vector<Quant> quantifiers;
  struct Dependency {
    int var;
    std::vector<int> deps;
  };
  std::vector<Dependency> dependencies;
  std::vector<Clause> clauses;
};

ClauseFile read_clause_file(std::string_view text);
std::string write_clause_file(const ClauseFile& file);

}  // namespace boundsyn::logic
