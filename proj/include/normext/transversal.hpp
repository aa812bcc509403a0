#pragma once

#include <cstdint>
#include <vector>

#include "normext/rational.hpp"

namespace normext {

/// Family of pairwise disjoint sets over integer labels, each of size
/// exactly k. Construction sorts each set and checks both invariants.
struct UniformCollection {
    std::int64_t k = 1;
    std::vector<std::vector<std::int64_t>> sets;

    UniformCollection(std::int64_t k_, std::vector<std::vector<std::int64_t>> sets_);

    std::vector<std::int64_t> support() const; // sorted union of the sets
};

/// Family of pairwise disjoint sets with no uniformity requirement; input
/// shape for the p-fractional variant.
struct Collection {
    std::vector<std::vector<std::int64_t>> sets;

    explicit Collection(std::vector<std::vector<std::int64_t>> sets_);

    std::vector<std::int64_t> support() const;
};

/// Exact rational square matrix with every row and column summing to 1;
/// construction verifies both families of sums.
struct DoublyStochasticMatrix {
    std::vector<std::vector<Rational>> entries;

    explicit DoublyStochasticMatrix(std::vector<std::vector<Rational>> entries_);

    std::size_t n() const { return entries.size(); }
};

struct BirkhoffTerm {
    Rational weight;                  // positive
    std::vector<std::size_t> perm;    // column assigned to each row
};

struct BirkhoffDecomposition {
    std::vector<BirkhoffTerm> terms;  // weights sum to exactly 1
};

/// Enlarge A and B to k-uniform disjoint collections C >= A, D >= B with
/// |C| = |D| and equal supports: append the fewest fresh labels making the
/// uncovered parts divisible by k, then block the uncovered parts
/// lexicographically.
std::pair<UniformCollection, UniformCollection> pad_collections(const UniformCollection& A,
                                                                const UniformCollection& B);

/// a_ij = |C_i intersect D_j| / k; requires equal supports and equal counts.
DoublyStochasticMatrix intersection_matrix(const UniformCollection& C,
                                           const UniformCollection& D);

/// Permutation s with M[i][s(i)] > 0 for every i; exists for every doubly
/// stochastic matrix.
std::vector<std::size_t> positive_permutation(const DoublyStochasticMatrix& M);

/// Exact convex decomposition into permutation matrices: repeatedly strip
/// the heaviest multiple of a positive-support permutation. At most as many
/// terms as M has positive entries.
BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& M);

/// Recombine a decomposition into the matrix it represents (test helper).
std::vector<std::vector<Rational>> recompose(const BirkhoffDecomposition& D, std::size_t n);

/// Set I with |I intersect C| = 1 for every C in A union B.
std::vector<std::int64_t> transversal(const UniformCollection& A, const UniformCollection& B);

/// Set I with |I intersect C| = |C|/p for every C in A union B; every set
/// size must be divisible by p. Implemented by splitting each set into
/// blocks of size p and taking a transversal of the block collections.
std::vector<std::int64_t> p_fractional_transversal(const Collection& A, const Collection& B,
                                                   std::int64_t p);

} // namespace normext
