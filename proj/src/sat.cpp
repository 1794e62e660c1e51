#include "boundsyn/sat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

namespace boundsyn::sat {

namespace {

using Lit = std::uint32_t;
constexpr Lit kNoLit = ~Lit{0};
constexpr int kNoReason = -1;

inline Lit make_lit(int var, bool negated) { return (static_cast<Lit>(var) << 1) | (negated ? 1u : 0u); }
inline int var_of(Lit l) { return static_cast<int>(l >> 1); }
inline bool sign_of(Lit l) { return (l & 1u) != 0; }
inline Lit neg(Lit l) { return l ^ 1u; }

struct Clause {
  std::vector<Lit> lits;
  bool learnt = false;
  bool deleted = false;
  double activity = 0;
};

struct Watcher {
  int cref;
  Lit blocker;
};

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

}  // namespace

struct Solver::Impl {
  // Per variable (0-based internally).
  std::vector<std::int8_t> assign;  // -1 undef, 0 false, 1 true
  std::vector<int> level;
  std::vector<int> reason;
  std::vector<double> activity;
  std::vector<char> phase;
  std::vector<char> seen;
  std::vector<int> heap;
  std::vector<int> heap_pos;

  std::vector<Clause> clauses;
  std::vector<std::vector<Watcher>> watches;  // indexed by literal
  std::vector<Lit> trail;
  std::vector<int> trail_lim;
  std::size_t qhead = 0;
  bool unsat = false;

  double var_inc = 1.0;
  double cla_inc = 1.0;
  std::size_t num_learnts = 0;
  double max_learnts = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t decisions = 0;
  std::vector<std::int8_t> model;

  int nvars() const { return static_cast<int>(assign.size()); }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  // Lit value: 1 true, 0 false, -1 undef.
  int value(Lit l) const {
    const std::int8_t a = assign[var_of(l)];
    if (a < 0) return -1;
    return sign_of(l) ? 1 - a : a;
  }

  void grow(int n) {
    while (nvars() < n) {
      const int v = nvars();
      assign.push_back(-1);
      level.push_back(0);
      reason.push_back(kNoReason);
      activity.push_back(0);
      phase.push_back(1);  // prefer false
      seen.push_back(0);
      heap_pos.push_back(-1);
      watches.emplace_back();
      watches.emplace_back();
      heap_insert(v);
    }
  }

  // --- heap ordered by activity (max at top)
  bool heap_less(int a, int b) const { return activity[a] > activity[b]; }
  void heap_up(int i) {
    const int v = heap[i];
    while (i > 0) {
      const int parent = (i - 1) >> 1;
      if (!heap_less(v, heap[parent])) break;
      heap[i] = heap[parent];
      heap_pos[heap[i]] = i;
      i = parent;
    }
    heap[i] = v;
    heap_pos[v] = i;
  }
  void heap_down(int i) {
    const int v = heap[i];
    const int size = static_cast<int>(heap.size());
    while (2 * i + 1 < size) {
      int child = 2 * i + 1;
      if (child + 1 < size && heap_less(heap[child + 1], heap[child])) ++child;
      if (!heap_less(heap[child], v)) break;
      heap[i] = heap[child];
      heap_pos[heap[i]] = i;
      i = child;
    }
    heap[i] = v;
    heap_pos[v] = i;
  }
  void heap_insert(int v) {
    if (heap_pos[v] >= 0) return;
    heap_pos[v] = static_cast<int>(heap.size());
    heap.push_back(v);
    heap_up(heap_pos[v]);
  }
  int heap_pop() {
    const int top = heap[0];
    heap_pos[top] = -1;
    const int last = heap.back();
    heap.pop_back();
    if (!heap.empty()) {
      heap[0] = last;
      heap_pos[last] = 0;
      heap_down(0);
    }
    return top;
  }

  void bump_var(int v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (double& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    if (heap_pos[v] >= 0) heap_up(heap_pos[v]);
  }
  void bump_clause(Clause& c) {
    c.activity += cla_inc;
    if (c.activity > 1e20) {
      for (auto& d : clauses) {
        if (d.learnt) d.activity *= 1e-20;
      }
      cla_inc *= 1e-20;
    }
  }

  void enqueue(Lit l, int why) {
    const int v = var_of(l);
    assign[v] = sign_of(l) ? 0 : 1;
    level[v] = decision_level();
    reason[v] = why;
    trail.push_back(l);
  }

  void attach(int cref) {
    const Clause& c = clauses[cref];
    watches[neg(c.lits[0])].push_back({cref, c.lits[1]});
    watches[neg(c.lits[1])].push_back({cref, c.lits[0]});
  }

  bool add_clause(std::vector<Lit> lits) {
    if (unsat) return false;
    assert(decision_level() == 0);
    std::sort(lits.begin(), lits.end());
    std::vector<Lit> kept;
    Lit prev = kNoLit;
    for (Lit l : lits) {
      if (l == prev) continue;
      if (prev != kNoLit && l == neg(prev)) return true;  // tautology
      const int val = value(l);
      if (val == 1) return true;
      if (val == 0) continue;
      kept.push_back(l);
      prev = l;
    }
    if (kept.empty()) {
      unsat = true;
      return false;
    }
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      if (propagate() != kNoReason) unsat = true;
      return !unsat;
    }
    clauses.push_back(Clause{std::move(kept)});
    attach(static_cast<int>(clauses.size()) - 1);
    return true;
  }

  int propagate() {
    int conflict = kNoReason;
    while (qhead < trail.size()) {
      const Lit p = trail[qhead++];
      const Lit false_lit = neg(p);
      auto& ws = watches[p];
      std::size_t i = 0, j = 0;
      const std::size_t end = ws.size();
      while (i < end) {
        const Watcher w = ws[i++];
        if (value(w.blocker) == 1) {
          ws[j++] = w;
          continue;
        }
        Clause& c = clauses[w.cref];
        if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
        const Lit first = c.lits[0];
        if (first != w.blocker && value(first) == 1) {
          ws[j++] = {w.cref, first};
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k) {
          if (value(c.lits[k]) != 0) {
            std::swap(c.lits[1], c.lits[k]);
            watches[neg(c.lits[1])].push_back({w.cref, first});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {w.cref, first};
        if (value(first) == 0) {
          conflict = w.cref;
          qhead = trail.size();
          while (i < end) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (conflict != kNoReason) break;
    }
    return conflict;
  }

  bool redundant(Lit l) const {
    const int r = reason[var_of(l)];
    if (r == kNoReason) return false;
    for (Lit q : clauses[r].lits) {
      const int v = var_of(q);
      if (v == var_of(l)) continue;
      if (!seen[v] && level[v] > 0) return false;
    }
    return true;
  }

  void analyze(int conflict, std::vector<Lit>& learnt, int& backtrack_level) {
    learnt.assign(1, kNoLit);
    int path = 0;
    Lit p = kNoLit;
    int index = static_cast<int>(trail.size()) - 1;
    int cref = conflict;
    do {
      Clause& c = clauses[cref];
      if (c.learnt) bump_clause(c);
      for (std::size_t k = (p == kNoLit ? 0 : 1); k < c.lits.size(); ++k) {
        const Lit q = c.lits[k];
        const int v = var_of(q);
        if (seen[v] || level[v] == 0) continue;
        bump_var(v);
        seen[v] = 1;
        if (level[v] >= decision_level()) ++path;
        else learnt.push_back(q);
      }
      while (!seen[var_of(trail[index])]) --index;
      p = trail[index--];
      cref = reason[var_of(p)];
      seen[var_of(p)] = 0;
      --path;
    } while (path > 0);
    learnt[0] = neg(p);

    std::vector<Lit> all = learnt;
    std::size_t kept = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      if (!redundant(learnt[k])) learnt[kept++] = learnt[k];
    }
    learnt.resize(kept);
    for (Lit l : all) seen[var_of(l)] = 0;

    if (learnt.size() == 1) {
      backtrack_level = 0;
    } else {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k) {
        if (level[var_of(learnt[k])] > level[var_of(learnt[max_i])]) max_i = k;
      }
      std::swap(learnt[1], learnt[max_i]);
      backtrack_level = level[var_of(learnt[1])];
    }
  }

  void backtrack(int target) {
    if (decision_level() <= target) return;
    for (int k = static_cast<int>(trail.size()) - 1; k >= trail_lim[target]; --k) {
      const int v = var_of(trail[k]);
      phase[v] = sign_of(trail[k]) ? 1 : 0;
      assign[v] = -1;
      reason[v] = kNoReason;
      heap_insert(v);
    }
    trail.resize(trail_lim[target]);
    trail_lim.resize(target);
    qhead = trail.size();
  }

  bool locked(int cref) const {
    const Clause& c = clauses[cref];
    const int v = var_of(c.lits[0]);
    return reason[v] == cref && value(c.lits[0]) == 1;
  }

  void reduce_db() {
    std::vector<int> learnts;
    for (int i = 0; i < static_cast<int>(clauses.size()); ++i) {
      if (clauses[i].learnt && !clauses[i].deleted && clauses[i].lits.size() > 2 && !locked(i)) learnts.push_back(i);
    }
    std::sort(learnts.begin(), learnts.end(),
              [&](int a, int b) { return clauses[a].activity < clauses[b].activity; });
    for (std::size_t k = 0; k < learnts.size() / 2; ++k) {
      clauses[learnts[k]].deleted = true;
      clauses[learnts[k]].lits.clear();
      clauses[learnts[k]].lits.shrink_to_fit();
      --num_learnts;
    }
    for (auto& ws : watches) {
      ws.erase(std::remove_if(ws.begin(), ws.end(), [&](const Watcher& w) { return clauses[w.cref].deleted; }),
               ws.end());
    }
  }

  int pick_branch() {
    while (!heap.empty()) {
      const int v = heap_pop();
      if (assign[v] < 0) return v;
    }
    return -1;
  }

  Status search(std::int64_t conflict_budget, const Limits& limits, std::int64_t& global_budget) {
    std::vector<Lit> learnt;
    std::int64_t local = 0;
    while (true) {
      const int conflict = propagate();
      if (conflict != kNoReason) {
        ++conflicts;
        ++local;
        if (global_budget > 0) --global_budget;
        if (decision_level() == 0) return Status::Unsat;
        int bt = 0;
        analyze(conflict, learnt, bt);
        backtrack(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          Clause c{learnt, true};
          clauses.push_back(std::move(c));
          const int cref = static_cast<int>(clauses.size()) - 1;
          attach(cref);
          bump_clause(clauses[cref]);
          ++num_learnts;
          enqueue(learnt[0], cref);
        }
        var_inc /= 0.95;
        cla_inc /= 0.999;
        if (limits.stop && limits.stop->load(std::memory_order_relaxed)) return Status::Unknown;
        if (global_budget == 0) return Status::Unknown;
        continue;
      }
      if (local >= conflict_budget) {
        backtrack(0);
        return Status::Unknown;
      }
      if (static_cast<double>(num_learnts) - static_cast<double>(trail.size()) >= max_learnts) reduce_db();
      const int v = pick_branch();
      if (v < 0) return Status::Sat;
      ++decisions;
      trail_lim.push_back(static_cast<int>(trail.size()));
      enqueue(make_lit(v, phase[v] != 0), kNoReason);
    }
  }

  Status solve(const Limits& limits) {
    model.clear();
    if (unsat) return Status::Unsat;
    if (propagate() != kNoReason) {
      unsat = true;
      return Status::Unsat;
    }
    max_learnts = std::max<double>(clauses.size() / 3.0, 1000.0);
    std::int64_t global_budget = limits.max_conflicts < 0 ? -1 : limits.max_conflicts;
    if (global_budget == 0) return Status::Unknown;
    for (int restart = 0;; ++restart) {
      const auto budget = static_cast<std::int64_t>(luby(2.0, restart) * 100.0);
      const Status s = search(budget, limits, global_budget);
      if (s == Status::Sat) {
        model.assign(assign.begin(), assign.end());
        backtrack(0);
        return s;
      }
      if (s == Status::Unsat) {
        unsat = true;
        return s;
      }
      if ((limits.stop && limits.stop->load()) || global_budget == 0) {
        backtrack(0);
        return Status::Unknown;
      }
      max_learnts *= 1.05;
    }
  }
};

Solver::Solver() : impl_(new Impl) {}
Solver::~Solver() { delete impl_; }

void Solver::reserve_vars(int n) { impl_->grow(n); }
int Solver::num_vars() const { return impl_->nvars(); }

bool Solver::add_clause(const std::vector<int>& literals) {
  std::vector<Lit> lits;
  lits.reserve(literals.size());
  for (int l : literals) {
    if (l == 0) throw Error("literal 0 in clause");
    const int v = std::abs(l);
    impl_->grow(v);
    lits.push_back(make_lit(v - 1, l < 0));
  }
  return impl_->add_clause(std::move(lits));
}

Status Solver::solve(const Limits& limits) { return impl_->solve(limits); }

bool Solver::value(int var) const {
  if (var < 1 || var > static_cast<int>(impl_->model.size())) return false;
  return impl_->model[var - 1] == 1;
}

std::uint64_t Solver::conflicts() const { return impl_->conflicts; }
std::uint64_t Solver::decisions() const { return impl_->decisions; }

SatResult solve_cnf(const logic::Cnf& cnf, const Limits& limits) {
  Solver solver;
  solver.reserve_vars(static_cast<int>(cnf.num_vars));
  SatResult result;
  for (const auto& c : cnf.clauses) {
    if (!solver.add_clause(c)) {
      result.status = Status::Unsat;
      return result;
    }
  }
  result.status = solver.solve(limits);
  if (result.status == Status::Sat) {
    result.model.assign(cnf.num_vars + 1, false);
    for (std::uint32_t v = 1; v <= cnf.num_vars; ++v) result.model[v] = solver.value(static_cast<int>(v));
#ifndef NDEBUG
    for (const auto& c : cnf.clauses) {
      const bool satisfied = std::any_of(c.begin(), c.end(), [&](int l) { return result.model[std::abs(l)] == (l > 0); });
      assert(satisfied && "SAT model violates a clause");
    }
#endif
  }
  return result;
}

}  // namespace boundsyn::sat
