#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "normext/group.hpp"
#include "normext/pseudonorm.hpp"
#include "normext/transversal.hpp"

namespace normext::corpus {

/// Canonical `orders` arrays, one per isomorphism type of finite abelian
/// group of order in [1, max_order]: ascending prime-power cyclic factors
/// ([1] stands for the trivial group).
std::vector<std::vector<std::int64_t>> abelian_group_orders(std::int64_t max_order);

/// Every subgroup of G; requires |G| <= 64. Sorted by size, then by
/// membership mask, so the listing is deterministic.
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& G);

struct PrimeQuotientPair {
    Subgroup sub;
    std::int64_t prime;
};

/// The proper subgroups H among `subgroups` whose quotient G/H has prime
/// exponent, with that prime.
std::vector<PrimeQuotientPair> prime_quotient_pairs(const FiniteAbelianGroup& G,
                                                    const std::vector<Subgroup>& subgroups);

/// Random valid pseudonorm on H: the metric closure of a random
/// nonnegative seed (small numerators, denominators in {1, 2, 4, 8},
/// occasional zeros).
Pseudonorm random_pseudonorm(const Subgroup& H, std::mt19937_64& rng);

/// Random internally disjoint k-uniform collection over labels
/// [0, ground); at most max_sets sets (at least one).
UniformCollection random_uniform_collection(std::int64_t k, std::int64_t ground,
                                            std::int64_t max_sets, std::mt19937_64& rng);

/// Random internally disjoint collection over [0, ground) with every set
/// size a positive multiple of p.
Collection random_p_collection(std::int64_t p, std::int64_t ground, std::mt19937_64& rng);

/// Random rational doubly stochastic matrix: a convex combination of
/// `terms` random permutation matrices with positive rational weights.
DoublyStochasticMatrix random_doubly_stochastic(std::size_t n, std::size_t terms,
                                                std::mt19937_64& rng);

} // namespace normext::corpus
