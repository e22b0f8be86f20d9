#include "diaglab/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace diaglab::sat {

namespace {

// Clauses over signed 1-based variable ids.
using Clause = std::vector<int>;

// Tseitin block for one formula node: defining clauses plus the literal that
// represents the node's truth value. Full biconditional encoding, so the same
// block serves both asserted and negated occurrences.
struct Block {
  std::vector<Clause> clauses;
  int root = 0;
};

class TseitinCache {
 public:
  const Block& block(const Formula& f) {
    {
      std::shared_lock lock(mu_);
      auto it = blocks_.find(f.id());
      if (it != blocks_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = blocks_.find(f.id());
    if (it != blocks_.end()) return it->second;
    Block b;
    b.root = encode(f, b);
    // Keep the formula alive so node pointers stay unique keys.
    pinned_.push_back(f);
    return blocks_.emplace(f.id(), std::move(b)).first->second;
  }

  int var_count() {
    std::shared_lock lock(mu_);
    return next_var_ - 1;
  }

 private:
  int fresh_var() { return next_var_++; }

  int atom_var(const std::string& name) {
    auto it = atom_vars_.find(name);
    if (it != atom_vars_.end()) return it->second;
    int v = fresh_var();
    atom_vars_.emplace(name, v);
    return v;
  }

  // Returns a literal equivalent to f, appending defining clauses to b.
  // Atoms map to interned variables; every internal node gets a fresh
  // auxiliary variable, so auxiliaries never alias user atoms.
  int encode(const Formula& f, Block& b) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Atom:
        return atom_var(f.atom_name());
      case K::Not:
        return -encode(f.left(), b);
      case K::And: {
        int l = encode(f.left(), b), r = encode(f.right(), b);
        int v = fresh_var();
        b.clauses.push_back({-v, l});
        b.clauses.push_back({-v, r});
        b.clauses.push_back({v, -l, -r});
        return v;
      }
      case K::Or: {
        int l = encode(f.left(), b), r = encode(f.right(), b);
        int v = fresh_var();
        b.clauses.push_back({-v, l, r});
        b.clauses.push_back({v, -l});
        b.clauses.push_back({v, -r});
        return v;
      }
      case K::Implies: {
        int l = encode(f.left(), b), r = encode(f.right(), b);
        int v = fresh_var();
        b.clauses.push_back({-v, -l, r});
        b.clauses.push_back({v, l});
        b.clauses.push_back({v, -r});
        return v;
      }
      case K::Iff: {
        int l = encode(f.left(), b), r = encode(f.right(), b);
        int v = fresh_var();
        b.clauses.push_back({-v, -l, r});
        b.clauses.push_back({-v, l, -r});
        b.clauses.push_back({v, l, r});
        b.clauses.push_back({v, -l, -r});
        return v;
      }
    }
    std::abort();
  }

  std::shared_mutex mu_;
  std::unordered_map<const void*, Block> blocks_;
  std::unordered_map<std::string, int> atom_vars_;
  std::vector<Formula> pinned_;
  int next_var_ = 1;
};

TseitinCache& cache() {
  static TseitinCache c;
  return c;
}

// Recursive DPLL with unit propagation. Problem sizes here are tiny (tens of
// variables), so no watched literals or learning.
class Dpll {
 public:
  Dpll(std::vector<const Clause*> clauses, std::vector<Clause> units,
       int n_vars)
      : clauses_(std::move(clauses)), extra_(std::move(units)) {
    for (const Clause& c : extra_) clauses_.push_back(&c);
    value_.assign(static_cast<std::size_t>(n_vars) + 1, 0);
  }

  bool solve() { return search(); }

 private:
  // value_: 0 unassigned, 1 true, -1 false
  bool lit_true(int lit) const {
    int v = value_[static_cast<std::size_t>(std::abs(lit))];
    return v != 0 && (v > 0) == (lit > 0);
  }
  bool lit_false(int lit) const {
    int v = value_[static_cast<std::size_t>(std::abs(lit))];
    return v != 0 && (v > 0) != (lit > 0);
  }

  void assign(int lit, std::vector<int>& trail) {
    value_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : -1;
    trail.push_back(std::abs(lit));
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      value_[static_cast<std::size_t>(trail.back())] = 0;
      trail.pop_back();
    }
  }

  // Returns false on conflict; sets branch_lit to a literal from some
  // unresolved clause (0 when all clauses are satisfied).
  bool propagate(std::vector<int>& trail, int& branch_lit) {
    bool changed = true;
    while (changed) {
      changed = false;
      branch_lit = 0;
      for (const Clause* c : clauses_) {
        int unassigned = 0, n_unassigned = 0;
        bool satisfied = false;
        for (int lit : *c) {
          if (lit_true(lit)) {
            satisfied = true;
            break;
          }
          if (!lit_false(lit)) {
            ++n_unassigned;
            unassigned = lit;
          }
        }
        if (satisfied) continue;
        if (n_unassigned == 0) return false;  // conflict
        if (n_unassigned == 1) {
          assign(unassigned, trail);
          changed = true;
        } else if (branch_lit == 0) {
          branch_lit = unassigned;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    return search_rec(trail);
  }

  bool search_rec(std::vector<int>& trail) {
    std::size_t mark = trail.size();
    int branch = 0;
    if (!propagate(trail, branch)) {
      undo(trail, mark);
      return false;
    }
    if (branch == 0) return true;  // every clause satisfied
    std::size_t mark2 = trail.size();
    assign(branch, trail);
    if (search_rec(trail)) return true;
    undo(trail, mark2);
    assign(-branch, trail);
    if (search_rec(trail)) return true;
    undo(trail, mark);
    return false;
  }

  std::vector<const Clause*> clauses_;
  std::vector<Clause> extra_;
  std::vector<int> value_;
};

thread_local std::uint64_t t_checks = 0;

}  // namespace

bool check(std::span<const Formula> positives,
           std::span<const Formula> negatives) {
  ++t_checks;
  std::vector<const Clause*> clauses;
  std::vector<Clause> units;
  units.reserve(positives.size() + negatives.size());
  for (const Formula& f : positives) {
    const Block& b = cache().block(f);
    for (const Clause& c : b.clauses) clauses.push_back(&c);
    units.push_back({b.root});
  }
  for (const Formula& f : negatives) {
    const Block& b = cache().block(f);
    for (const Clause& c : b.clauses) clauses.push_back(&c);
    units.push_back({-b.root});
  }
  if (units.empty()) return true;
  return Dpll(std::move(clauses), std::move(units), cache().var_count())
      .solve();
}

std::uint64_t thread_checks() { return t_checks; }

}  // namespace diaglab::sat
