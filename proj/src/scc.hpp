#pragma once

#include <algorithm>
#include <vector>

namespace boundsyn::detail {

/// Iterative Tarjan. Returns the component id of every vertex; ids are
/// assigned in reverse topological order of the condensation.
inline std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& graph, int* num_components = nullptr) {
  const int n = static_cast<int>(graph.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0, components = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < graph[v].size()) {
        const int w = graph[v][next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  if (num_components) *num_components = components;
  return comp;
}

/// Whether the component containing v has a cycle (size > 1 or a self loop).
inline std::vector<char> cyclic_components(const std::vector<std::vector<int>>& graph, const std::vector<int>& comp,
                                           int num_components) {
  std::vector<int> size(num_components, 0);
  std::vector<char> cyclic(num_components, 0);
  for (int v = 0; v < static_cast<int>(graph.size()); ++v) {
    ++size[comp[v]];
    for (int w : graph[v]) {
      if (w == v) cyclic[comp[v]] = 1;
    }
  }
  for (int c = 0; c < num_components; ++c) {
    if (size[c] > 1) cyclic[c] = 1;
  }
  return cyclic;
}

}  // namespace boundsyn::detail
