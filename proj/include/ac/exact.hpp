#ifndef AC_EXACT_HPP
#define AC_EXACT_HPP

#include "ac/graph.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ac {

// Exact solvers refuse inputs beyond these sizes instead of silently
// degrading to bounds.
struct SolverCaps {
    int chromatic_max_n = 40;
    int clique_max_n = 40;
    int biclique_max_n = 30;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// omega: exact maximum clique size via branch and bound.
int clique_number(const Graph& g, const SolverCaps& caps = {});

// chi: exact via saturation-ordered branch and bound.
int chromatic_number(const Graph& g, const SolverCaps& caps = {});

// Exact coloring witness, colors 0..chi-1.
std::vector<int> exact_coloring(const Graph& g, const SolverCaps& caps = {});

// Greedy first-fit upper bound for an arbitrary vertex order; total.
int greedy_chromatic_bound(const Graph& g, std::span<const int> order);
std::vector<int> greedy_coloring(const Graph& g, std::span<const int> order);

// tau: largest t such that K_{t,t} occurs as a (not necessarily induced)
// subgraph; 0 for edgeless graphs.
int biclique_number(const Graph& g, const SolverCaps& caps = {});

bool valid_coloring(const Graph& g, const std::vector<int>& color);

} // namespace ac

#endif
