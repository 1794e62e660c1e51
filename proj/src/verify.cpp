#include "boundsyn/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace boundsyn {

RunGraph::RunGraph(int system_states, int automaton_states)
    : n_(system_states), m_(automaton_states), index_(static_cast<std::size_t>(system_states) * automaton_states, -1) {
  if (system_states < 1 || automaton_states < 1) throw Error("run graph needs at least one state on each side");
}

int RunGraph::add_vertex(int t, int q, bool rejecting) {
  if (t < 0 || t >= n_ || q < 0 || q >= m_) throw Error("run graph vertex out of range");
  int& slot = index_[static_cast<std::size_t>(t) * m_ + q];
  if (slot < 0) {
    slot = num_vertices();
    states_.emplace_back(t, q);
    rejecting_.push_back(rejecting ? 1 : 0);
    succ_.emplace_back();
    inputs_.emplace_back();
  }
  return slot;
}

void RunGraph::add_edge(int from, int to, Valuation input) {
  if (from < 0 || from >= num_vertices() || to < 0 || to >= num_vertices()) throw Error("run graph edge out of range");
  if (has_edge(from, to)) return;
  succ_[from].push_back(to);
  inputs_[from].push_back(input);
}

int RunGraph::vertex(int t, int q) const {
  if (t < 0 || t >= n_ || q < 0 || q >= m_) return -1;
  return index_[static_cast<std::size_t>(t) * m_ + q];
}

bool RunGraph::has_edge(int from, int to) const {
  const auto& s = succ_.at(from);
  return std::find(s.begin(), s.end(), to) != s.end();
}

RunGraph build_run_graph(const TransitionSystem& ts, const Ucw& automaton) {
  const Alphabet& alphabet = automaton.alphabet();
  if (ts.inputs() != alphabet.inputs || ts.outputs() != alphabet.outputs) {
    throw Error("system atoms do not match the automaton alphabet");
  }
  RunGraph g(ts.size(), automaton.num_states());
  const int init = g.add_vertex(0, automaton.initial(), automaton.rejecting(automaton.initial()));
  g.set_initial(init);
  std::deque<int> queue{init};
  std::vector<char> expanded;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (static_cast<int>(expanded.size()) <= v) expanded.resize(v + 1, 0);
    if (expanded[v]) continue;
    expanded[v] = 1;
    const int t = g.system_state(v);
    const int q = g.automaton_state(v);
    for (int i = 0; i < ts.num_input_valuations(); ++i) {
      const auto in = static_cast<Valuation>(i);
      const Valuation letter = alphabet.letter(in, ts.output(t, in));
      const int t2 = ts.successor(t, in);
      for (const UcwEdge& edge : automaton.edges(q)) {
        if (!edge.guard.evaluate(letter)) continue;
        const int before = g.num_vertices();
        const int w = g.add_vertex(t2, edge.target, automaton.rejecting(edge.target));
        g.add_edge(v, w, in);
        if (w == before) queue.push_back(w);
      }
    }
  }
  return g;
}

Annotation::Annotation(int system_states, int automaton_states)
    : n_(system_states), m_(automaton_states), values_(static_cast<std::size_t>(system_states) * automaton_states) {}

AnnotationCheck check_annotation(const RunGraph& g, const Annotation& lambda) {
  AnnotationCheck result;
  auto value = [&](int v) { return lambda.get(g.system_state(v), g.automaton_state(v)); };
  if (g.num_vertices() == 0 || !value(g.initial())) {
    result.valid = false;
    result.reason = "initial pair is not numbered";
    return result;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto lv = value(v);
    if (!lv) continue;
    for (int w : g.successors(v)) {
      const auto lw = value(w);
      const char* reason = nullptr;
      if (!lw) {
        reason = "successor of a numbered pair is unnumbered";
      } else if (g.rejecting(w) && !(*lw > *lv)) {
        reason = "rank must increase strictly into a rejecting state";
      } else if (!g.rejecting(w) && !(*lw >= *lv)) {
        reason = "rank must not decrease";
      }
      if (reason) {
        result.valid = false;
        result.from = {g.system_state(v), g.automaton_state(v)};
        result.to = {g.system_state(w), g.automaton_state(w)};
        result.reason = reason;
        return result;
      }
    }
  }
  return result;
}

namespace {

/// Kosaraju over the vertices reachable from the initial vertex. Components
/// come out in topological order of the condensation (sources first).
struct Components {
  std::vector<int> comp;  // -1 for unreachable vertices
  int count = 0;
};

Components reachable_components(const RunGraph& g) {
  const int nv = g.num_vertices();
  Components c;
  c.comp.assign(nv, -1);
  if (nv == 0) return c;
  std::vector<char> visited(nv, 0);
  std::vector<int> order;
  std::vector<std::pair<int, std::size_t>> stack{{g.initial(), 0}};
  visited[g.initial()] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& succ = g.successors(v);
    if (next < succ.size()) {
      const int w = succ[next++];
      if (!visited[w]) {
        visited[w] = 1;
        stack.emplace_back(w, 0);
      }
    } else {
      order.push_back(v);
      stack.pop_back();
    }
  }
  std::vector<std::vector<int>> pred(nv);
  for (int v = 0; v < nv; ++v) {
    if (!visited[v]) continue;
    for (int w : g.successors(v)) pred[w].push_back(v);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (c.comp[*it] >= 0) continue;
    std::vector<int> work{*it};
    c.comp[*it] = c.count;
    while (!work.empty()) {
      const int v = work.back();
      work.pop_back();
      for (int u : pred[v]) {
        if (visited[u] && c.comp[u] < 0) {
          c.comp[u] = c.count;
          work.push_back(u);
        }
      }
    }
    ++c.count;
  }
  return c;
}

/// Reachable components that contain a cycle through a rejecting vertex.
std::vector<char> bad_components(const RunGraph& g, const Components& c) {
  std::vector<char> has_rejecting(c.count, 0), cyclic(c.count, 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (c.comp[v] < 0) continue;
    if (g.rejecting(v)) has_rejecting[c.comp[v]] = 1;
    for (int w : g.successors(v)) {
      if (c.comp[w] == c.comp[v]) cyclic[c.comp[v]] = 1;
    }
  }
  std::vector<char> bad(c.count, 0);
  for (int k = 0; k < c.count; ++k) bad[k] = has_rejecting[k] && cyclic[k];
  return bad;
}

}  // namespace

std::optional<Annotation> infer_annotation(const RunGraph& g) {
  Annotation lambda(g.system_states(), g.automaton_states());
  if (g.num_vertices() == 0) return std::nullopt;
  const Components c = reachable_components(g);
  const auto bad = bad_components(g, c);
  if (std::any_of(bad.begin(), bad.end(), [](char b) { return b != 0; })) return std::nullopt;

  std::vector<std::vector<int>> members(c.count);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (c.comp[v] >= 0) members[c.comp[v]].push_back(v);
  }
  std::vector<std::uint64_t> rank(c.count, 0);
  // Sources first, so every incoming edge is final when a component is visited.
  for (int k = 0; k < c.count; ++k) {
    for (int v : members[k]) {
      for (int w : g.successors(v)) {
        const int kw = c.comp[w];
        if (kw == k) continue;
        rank[kw] = std::max(rank[kw], rank[k] + (g.rejecting(w) ? 1 : 0));
      }
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (c.comp[v] >= 0) lambda.set(g.system_state(v), g.automaton_state(v), rank[c.comp[v]]);
  }
  return lambda;
}

namespace {

/// Shortest edge path from `from` to `to` restricted to vertices accepted by
/// `allowed`; returns the input labels along it.
std::optional<std::vector<Valuation>> input_path(const RunGraph& g, int from, int to, bool nonempty,
                                                  const std::function<bool(int)>& allowed) {
  const int nv = g.num_vertices();
  std::vector<int> parent(nv, -2);
  std::vector<Valuation> via(nv, 0);
  std::deque<int> queue;
  auto relax = [&](int v) {
    const auto& succ = g.successors(v);
    const auto& ins = g.edge_inputs(v);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      const int w = succ[k];
      if (parent[w] != -2 || !allowed(w)) continue;
      parent[w] = v;
      via[w] = ins[k];
      queue.push_back(w);
    }
  };
  if (nonempty) {
    relax(from);
  } else {
    parent[from] = -1;
    queue.push_back(from);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    relax(v);
  }
  if (parent[to] == -2) return std::nullopt;
  std::vector<Valuation> inputs;
  int v = to;
  do {
    inputs.push_back(via[v]);
    v = parent[v];
  } while (v != from);
  std::reverse(inputs.begin(), inputs.end());
  return inputs;
}

}  // namespace

ModelCheckResult model_check(const TransitionSystem& ts, const Ucw& automaton) {
  const RunGraph g = build_run_graph(ts, automaton);
  const Components c = reachable_components(g);
  const auto bad = bad_components(g, c);
  ModelCheckResult result;
  int target = -1;
  for (int v = 0; v < g.num_vertices() && target < 0; ++v) {
    if (c.comp[v] >= 0 && bad[c.comp[v]] && g.rejecting(v)) target = v;
  }
  if (target < 0) return result;
  result.pass = false;
  auto anywhere = [](int) { return true; };
  const int k = c.comp[target];
  auto inside = [&](int w) { return c.comp[w] == k; };
  result.prefix = target == g.initial() ? std::vector<Valuation>{} : *input_path(g, g.initial(), target, false, anywhere);
  result.loop = *input_path(g, target, target, true, inside);
  return result;
}

std::pair<std::vector<Valuation>, std::vector<Valuation>> induced_lasso(const TransitionSystem& ts,
                                                                       const std::vector<Valuation>& prefix,
                                                                       const std::vector<Valuation>& loop) {
  if (loop.empty()) throw Error("lasso loop must be nonempty");
  const int shift = static_cast<int>(ts.inputs().size());
  std::vector<Valuation> letters;
  int state = 0;
  auto step = [&](Valuation in) {
    letters.push_back(in | (ts.output(state, in) << shift));
    state = ts.successor(state, in);
  };
  for (Valuation in : prefix) step(in);
  std::map<int, std::size_t> start_of_pass;  // system state -> letter index
  while (!start_of_pass.count(state)) {
    start_of_pass[state] = letters.size();
    for (Valuation in : loop) step(in);
  }
  const std::size_t cut = start_of_pass[state];
  return {std::vector<Valuation>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(cut)),
          std::vector<Valuation>(letters.begin() + static_cast<std::ptrdiff_t>(cut), letters.end())};
}

}  // namespace boundsyn
