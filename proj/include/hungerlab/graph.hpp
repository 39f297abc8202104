#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace hungerlab {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// States reachable from `start` (including itself) along adjacency edges.
inline std::vector<bool> reachable_from(const Adjacency& adj, std::size_t start) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

struct Components {
    std::vector<std::size_t> id;  // component index per vertex
    std::size_t count = 0;
};

/// Tarjan's algorithm, iterative so deep chains do not blow the call stack.
inline Components strongly_connected_components(const Adjacency& adj) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = adj.size();
    Components out;
    out.id.assign(n, unvisited);

    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            auto& [u, edge] = call.back();
            if (edge < adj[u].size()) {
                const std::size_t w = adj[u][edge++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
                continue;
            }
            const std::size_t done = u;
            call.pop_back();
            if (!call.empty()) {
                const std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.id[w] = out.count;
                } while (w != done);
                ++out.count;
            }
        }
    }
    return out;
}

}  // namespace hungerlab
