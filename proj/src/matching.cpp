#include "normext/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace normext {

namespace {

void check_square(const std::vector<std::vector<Rational>>& cost) {
    for (const auto& row : cost)
        if (row.size() != cost.size())
            throw std::invalid_argument("cost matrix must be square");
}

} // namespace

std::vector<std::size_t> hungarian_assignment(const std::vector<std::vector<Rational>>& cost) {
    check_square(cost);
    const std::size_t n = cost.size();
    if (n == 0) return {};

    // Row/column potentials; col_row[j] = row currently matched to column j,
    // with column n acting as the virtual start of each augmenting search.
    std::vector<Rational> u(n + 1), v(n + 1);
    const std::size_t none = n;
    std::vector<std::size_t> col_row(n + 1, none), way(n + 1, none);

    for (std::size_t i = 0; i < n; ++i) {
        col_row[n] = i;
        std::size_t j0 = n;
        std::vector<std::optional<Rational>> minv(n + 1);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            std::size_t i0 = col_row[j0];
            std::size_t j1 = n;
            std::optional<Rational> delta;
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j]) continue;
                Rational cur = cost[i0][j] - u[i0] - v[j];
                if (!minv[j] || cur < *minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (!delta || *minv[j] < *delta) {
                    delta = *minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[col_row[j]] = u[col_row[j]] + *delta;
                    v[j] = v[j] - *delta;
                } else if (minv[j]) {
                    minv[j] = *minv[j] - *delta;
                }
            }
            j0 = j1;
        } while (col_row[j0] != none);
        // Unwind the augmenting path recorded in way[].
        do {
            std::size_t j1 = way[j0];
            col_row[j0] = col_row[j1];
            j0 = j1;
        } while (j0 != n);
    }

    std::vector<std::size_t> row_col(n);
    for (std::size_t j = 0; j < n; ++j) row_col[col_row[j]] = j;
    return row_col;
}

Rational hungarian_min_cost(const std::vector<std::vector<Rational>>& cost) {
    std::vector<std::size_t> a = hungarian_assignment(cost);
    Rational total(0);
    for (std::size_t i = 0; i < a.size(); ++i) total = total + cost[i][a[i]];
    return total;
}

Rational brute_force_min_cost(const std::vector<std::vector<Rational>>& cost) {
    check_square(cost);
    const std::size_t n = cost.size();
    if (n == 0) return Rational(0);
    if (n > 10) throw std::invalid_argument("brute-force oracle limited to n <= 10");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<Rational> best;
    do {
        Rational total(0);
        for (std::size_t i = 0; i < n; ++i) total = total + cost[i][perm[i]];
        if (!best || total < *best) best = total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

namespace {

bool try_kuhn(std::size_t r, const std::vector<std::vector<char>>& adj,
              std::vector<char>& visited, std::vector<std::size_t>& col_row) {
    for (std::size_t c = 0; c < adj[r].size(); ++c) {
        if (!adj[r][c] || visited[c]) continue;
        visited[c] = 1;
        if (col_row[c] == adj.size() || try_kuhn(col_row[c], adj, visited, col_row)) {
            col_row[c] = r;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<std::vector<std::size_t>> perfect_bipartite_matching(
    const std::vector<std::vector<char>>& adj) {
    const std::size_t n = adj.size();
    for (const auto& row : adj)
        if (row.size() != n) throw std::invalid_argument("adjacency matrix must be square");
    std::vector<std::size_t> col_row(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<char> visited(n, 0);
        if (!try_kuhn(r, adj, visited, col_row)) return std::nullopt;
    }
    std::vector<std::size_t> row_col(n);
    for (std::size_t c = 0; c < n; ++c) row_col[col_row[c]] = c;
    return row_col;
}

} // namespace normext
