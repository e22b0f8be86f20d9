#ifndef DIAGLAB_FORMULA_HPP
#define DIAGLAB_FORMULA_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "diaglab/error.hpp"

namespace diaglab {

// Immutable propositional sentence. Connectives: ! & | -> <->.
// Copies are cheap (shared structure); values never change after
// construction, so Formula is safe to share across threads.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Iff };

  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula biconditional(Formula l, Formula r);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }    // unary operand too
  Formula right() const { return Formula(node_->right); }  // binary only

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  std::size_t hash() const { return node_->hash; }

  // Stable identity of the underlying node, used by caches.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    std::string name;  // atoms only
    std::shared_ptr<const Node> left, right;
    std::size_t hash;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Parses the concrete syntax; precedence ! > & > | > -> > <-> with the two
// arrows right-associative. Throws ParseError with 1-based line/column.
Formula parse_formula(std::string_view text);

// Minimal-parenthesis rendering; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

// Exact set of atom names occurring in f.
std::set<std::string> atoms(const Formula& f);
void collect_atoms(const Formula& f, std::set<std::string>& out);

// Truth value under a total assignment of the atoms that occur in f.
bool evaluate(const Formula& f,
              const std::function<bool(const std::string&)>& assignment);

// Complete satisfiability / entailment tests (DPLL over a Tseitin CNF).
bool is_consistent(const std::vector<Formula>& fs);
bool entails(const std::vector<Formula>& fs, const Formula& g);

}  // namespace diaglab

#endif
