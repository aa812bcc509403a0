#include "normext/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace normext::corpus {

namespace {

std::int64_t rand_below(std::mt19937_64& rng, std::int64_t n) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

/// All partitions of e as non-increasing positive parts.
void partitions_of(std::int64_t e, std::int64_t max_part, std::vector<std::int64_t>& cur,
                   std::vector<std::vector<std::int64_t>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t part = std::min(e, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(e - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::int64_t>> partitions_of(std::int64_t e) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    partitions_of(e, e, cur, out);
    return out;
}

} // namespace

std::vector<std::vector<std::int64_t>> abelian_group_orders(std::int64_t max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    std::vector<std::vector<std::int64_t>> out;
    out.push_back({1});
    for (std::int64_t n = 2; n <= max_order; ++n) {
        // Factor n and collect the partition choices per prime.
        std::int64_t rest = n;
        std::vector<std::pair<std::int64_t, std::int64_t>> factors; // (p, exponent)
        for (std::int64_t p = 2; p * p <= rest; ++p) {
            if (rest % p) continue;
            std::int64_t e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        if (rest > 1) factors.emplace_back(rest, 1);

        std::vector<std::vector<std::int64_t>> shapes{{}}; // growing orders lists
        for (const auto& [p, e] : factors) {
            std::vector<std::vector<std::int64_t>> next;
            for (const auto& part : partitions_of(e)) {
                std::vector<std::int64_t> powers;
                powers.reserve(part.size());
                for (std::int64_t lambda : part) {
                    std::int64_t q = 1;
                    for (std::int64_t i = 0; i < lambda; ++i) q *= p;
                    powers.push_back(q);
                }
                for (const auto& base : shapes) {
                    std::vector<std::int64_t> combined = base;
                    combined.insert(combined.end(), powers.begin(), powers.end());
                    next.push_back(std::move(combined));
                }
            }
            shapes = std::move(next);
        }
        for (auto& orders : shapes) {
            std::sort(orders.begin(), orders.end());
            out.push_back(std::move(orders));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
                  const std::int64_t na =
                      std::accumulate(a.begin(), a.end(), std::int64_t{1}, std::multiplies<>());
                  const std::int64_t nb =
                      std::accumulate(b.begin(), b.end(), std::int64_t{1}, std::multiplies<>());
                  if (na != nb) return na < nb;
                  return a < b;
              });
    return out;
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& G) {
    const std::int64_t n = G.order();
    if (n > 64) throw std::invalid_argument("all_subgroups supports |G| <= 64");
    const std::size_t un = static_cast<std::size_t>(n);

    // Addition table on dense indices, so closures run on 64-bit masks.
    std::vector<std::int32_t> add(un * un);
    const std::vector<Element> elems = G.elements();
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j)
            add[i * un + j] = static_cast<std::int32_t>(G.index_of(G.add(elems[i], elems[j])));

    auto shift = [&](std::uint64_t mask, std::size_t g) {
        std::uint64_t out = 0;
        std::uint64_t m = mask;
        while (m) {
            const std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
            m &= m - 1;
            out |= std::uint64_t{1} << static_cast<std::size_t>(add[i * un + g]);
        }
        return out;
    };
    auto close_with = [&](std::uint64_t mask, std::size_t g) {
        std::uint64_t cur = mask;
        while (true) {
            const std::uint64_t next = cur | shift(cur, g);
            if (next == cur) return cur;
            cur = next;
        }
    };

    const std::uint64_t trivial = std::uint64_t{1} << static_cast<std::size_t>(
                                      G.index_of(G.zero()));
    std::vector<std::uint64_t> masks{trivial};
    std::map<std::uint64_t, bool> seen{{trivial, true}};
    std::queue<std::uint64_t> work;
    work.push(trivial);
    while (!work.empty()) {
        const std::uint64_t mask = work.front();
        work.pop();
        for (std::size_t g = 0; g < un; ++g) {
            if (mask & (std::uint64_t{1} << g)) continue;
            const std::uint64_t grown = close_with(mask | (std::uint64_t{1} << g), g);
            if (!seen.emplace(grown, true).second) continue;
            masks.push_back(grown);
            work.push(grown);
        }
    }

    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });

    std::vector<Subgroup> out;
    out.reserve(masks.size());
    for (const std::uint64_t mask : masks) {
        std::vector<Element> members;
        std::uint64_t m = mask;
        while (m) {
            const std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
            m &= m - 1;
            members.push_back(elems[i]);
        }
        out.push_back(Subgroup::from_members(G, members));
    }
    return out;
}

std::vector<PrimeQuotientPair> prime_quotient_pairs(const FiniteAbelianGroup& G,
                                                    const std::vector<Subgroup>& subgroups) {
    std::vector<PrimeQuotientPair> out;
    for (const Subgroup& H : subgroups) {
        if (H.is_whole_group()) continue;
        // Exponent of G/H: lcm over g of min j >= 1 with j*g in H.
        std::int64_t exponent = 1;
        for (std::int64_t i = 0; i < G.order(); ++i) {
            const Element g = G.element_at(i);
            Element acc = G.zero();
            std::int64_t ord = 0;
            for (std::int64_t j = 1; j <= G.order(); ++j) {
                acc = G.add(acc, g);
                if (H.contains(acc)) {
                    ord = j;
                    break;
                }
            }
            exponent = std::lcm(exponent, ord);
        }
        if (is_prime(exponent)) out.push_back({H, exponent});
    }
    return out;
}

Pseudonorm random_pseudonorm(const Subgroup& H, std::mt19937_64& rng) {
    static const std::int64_t kDens[] = {1, 2, 4, 8};
    const std::size_t n = H.elements().size();
    std::vector<Rational> seed(n);
    for (std::size_t i = 1; i < n; ++i) {
        if (rand_below(rng, 6) == 0) continue; // leave an occasional exact zero
        const std::int64_t num = 1 + rand_below(rng, 24);
        seed[i] = Rational(num, kDens[rand_below(rng, 4)]);
    }
    return closure_pseudonorm(H, seed);
}

UniformCollection random_uniform_collection(std::int64_t k, std::int64_t ground,
                                            std::int64_t max_sets, std::mt19937_64& rng) {
    if (k < 1 || ground < k || max_sets < 1)
        throw std::invalid_argument("random_uniform_collection: need 1 <= k <= ground");
    std::vector<std::int64_t> labels(static_cast<std::size_t>(ground));
    std::iota(labels.begin(), labels.end(), 0);
    for (std::size_t i = labels.size(); i > 1; --i)
        std::swap(labels[i - 1], labels[static_cast<std::size_t>(rand_below(
                                     rng, static_cast<std::int64_t>(i)))]);

    const std::int64_t fit = std::min(max_sets, ground / k);
    const std::int64_t count = 1 + rand_below(rng, fit);
    std::vector<std::vector<std::int64_t>> sets;
    sets.reserve(static_cast<std::size_t>(count));
    std::size_t pos = 0;
    for (std::int64_t s = 0; s < count; ++s) {
        std::vector<std::int64_t> set;
        set.reserve(static_cast<std::size_t>(k));
        for (std::int64_t t = 0; t < k; ++t) set.push_back(labels[pos++]);
        sets.push_back(std::move(set));
    }
    return UniformCollection(k, std::move(sets));
}

Collection random_p_collection(std::int64_t p, std::int64_t ground, std::mt19937_64& rng) {
    if (p < 2 || ground < p) throw std::invalid_argument("random_p_collection: need ground >= p");
    std::vector<std::int64_t> labels(static_cast<std::size_t>(ground));
    std::iota(labels.begin(), labels.end(), 0);
    for (std::size_t i = labels.size(); i > 1; --i)
        std::swap(labels[i - 1], labels[static_cast<std::size_t>(rand_below(
                                     rng, static_cast<std::int64_t>(i)))]);

    std::vector<std::vector<std::int64_t>> sets;
    std::size_t pos = 0;
    while (true) {
        const std::int64_t room = (ground - static_cast<std::int64_t>(pos)) / p;
        if (room < 1 || (!sets.empty() && rand_below(rng, 3) == 0)) break;
        const std::int64_t blocks = 1 + rand_below(rng, std::min<std::int64_t>(room, 3));
        std::vector<std::int64_t> set;
        set.reserve(static_cast<std::size_t>(blocks * p));
        for (std::int64_t t = 0; t < blocks * p; ++t) set.push_back(labels[pos++]);
        sets.push_back(std::move(set));
    }
    return Collection(std::move(sets));
}

DoublyStochasticMatrix random_doubly_stochastic(std::size_t n, std::size_t terms,
                                                std::mt19937_64& rng) {
    if (n < 1 || terms < 1)
        throw std::invalid_argument("random_doubly_stochastic: need n >= 1 and terms >= 1");
    std::vector<std::int64_t> weights(terms);
    std::int64_t total = 0;
    for (auto& w : weights) {
        w = 1 + rand_below(rng, 9);
        total += w;
    }
    std::vector<std::vector<Rational>> entries(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::size_t> perm(n);
    for (std::size_t t = 0; t < terms; ++t) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i)
            std::swap(perm[i - 1],
                      perm[static_cast<std::size_t>(rand_below(rng, static_cast<std::int64_t>(i)))]);
        for (std::size_t i = 0; i < n; ++i)
            entries[i][perm[i]] = entries[i][perm[i]] + Rational(weights[t], total);
    }
    return DoublyStochasticMatrix(std::move(entries));
}

} // namespace normext::corpus
