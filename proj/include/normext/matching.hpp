#pragma once

#include <optional>
#include <vector>

#include "normext/rational.hpp"

namespace normext {

/// Minimum-cost perfect matching on a square cost matrix with exact
/// rational arithmetic (Jonker-Volgenant style Hungarian algorithm with
/// potentials, O(n^3)). Returns the column assigned to each row.
std::vector<std::size_t> hungarian_assignment(const std::vector<std::vector<Rational>>& cost);

/// Total cost of the optimal assignment.
Rational hungarian_min_cost(const std::vector<std::vector<Rational>>& cost);

/// Minimum assignment cost by enumerating all n! permutations; oracle for
/// testing the Hungarian solver. Guarded to n <= 10.
Rational brute_force_min_cost(const std::vector<std::vector<Rational>>& cost);

/// Perfect matching on a bipartite adjacency matrix (rows to columns) via
/// Kuhn's augmenting paths; nullopt when no perfect matching exists.
std::optional<std::vector<std::size_t>> perfect_bipartite_matching(
    const std::vector<std::vector<char>>& adj);

} // namespace normext
