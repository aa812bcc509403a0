#include "normext/transversal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "normext/group.hpp"
#include "normext/matching.hpp"

namespace normext {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<std::vector<std::int64_t>> normalize_disjoint(
    std::vector<std::vector<std::int64_t>> sets, const char* what) {
    std::set<std::int64_t> seen;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            bad(std::string(what) + ": set contains a repeated label");
        for (std::int64_t x : s)
            if (!seen.insert(x).second)
                bad(std::string(what) + ": sets are not pairwise disjoint");
    }
    return sets;
}

std::vector<std::int64_t> union_of(const std::vector<std::vector<std::int64_t>>& sets) {
    std::vector<std::int64_t> u;
    for (const auto& s : sets) u.insert(u.end(), s.begin(), s.end());
    std::sort(u.begin(), u.end());
    return u;
}

} // namespace

UniformCollection::UniformCollection(std::int64_t k_,
                                     std::vector<std::vector<std::int64_t>> sets_)
    : k(k_), sets(normalize_disjoint(std::move(sets_), "uniform collection")) {
    if (k < 1) bad("uniform collection: k must be >= 1");
    for (const auto& s : sets)
        if (static_cast<std::int64_t>(s.size()) != k)
            bad("uniform collection: every set must have exactly k elements");
}

std::vector<std::int64_t> UniformCollection::support() const { return union_of(sets); }

Collection::Collection(std::vector<std::vector<std::int64_t>> sets_)
    : sets(normalize_disjoint(std::move(sets_), "collection")) {}

std::vector<std::int64_t> Collection::support() const { return union_of(sets); }

DoublyStochasticMatrix::DoublyStochasticMatrix(std::vector<std::vector<Rational>> entries_)
    : entries(std::move(entries_)) {
    const std::size_t m = entries.size();
    std::vector<Rational> col_sum(m, Rational(0));
    for (const auto& row : entries) {
        if (row.size() != m) bad("doubly stochastic matrix must be square");
        Rational row_sum(0);
        for (std::size_t j = 0; j < m; ++j) {
            if (row[j] < Rational(0)) bad("doubly stochastic matrix has a negative entry");
            row_sum = row_sum + row[j];
            col_sum[j] = col_sum[j] + row[j];
        }
        if (!(row_sum == Rational(1))) bad("matrix row does not sum to 1");
    }
    for (const Rational& s : col_sum)
        if (!(s == Rational(1))) bad("matrix column does not sum to 1");
}

std::pair<UniformCollection, UniformCollection> pad_collections(const UniformCollection& A,
                                                                const UniformCollection& B) {
    if (A.k != B.k) bad("pad_collections: collections have different k");
    const std::int64_t k = A.k;

    std::vector<std::int64_t> ground = union_of({A.support(), B.support()});
    ground.erase(std::unique(ground.begin(), ground.end()), ground.end());

    // |ground \ support| is congruent mod k to |ground| for both collections
    // (each support has size divisible by k), so one fresh top-up serves both.
    auto uncovered_count = [&](const UniformCollection& U) {
        return static_cast<std::int64_t>(ground.size()) -
               static_cast<std::int64_t>(U.support().size());
    };
    std::int64_t fa = (k - uncovered_count(A) % k) % k;
    std::int64_t fb = (k - uncovered_count(B) % k) % k;
    if (fa != fb) throw std::logic_error("pad_collections: fresh-label counts disagree");
    std::int64_t fresh_start = ground.empty() ? 0 : ground.back() + 1;
    for (std::int64_t i = 0; i < fa; ++i) ground.push_back(fresh_start + i);

    auto complete = [&](const UniformCollection& U) {
        std::set<std::int64_t> covered;
        for (const auto& s : U.sets) covered.insert(s.begin(), s.end());
        std::vector<std::int64_t> rest;
        for (std::int64_t x : ground)
            if (!covered.count(x)) rest.push_back(x);
        std::vector<std::vector<std::int64_t>> sets = U.sets;
        for (std::size_t i = 0; i < rest.size(); i += static_cast<std::size_t>(k))
            sets.emplace_back(rest.begin() + static_cast<std::ptrdiff_t>(i),
                              rest.begin() + static_cast<std::ptrdiff_t>(i + static_cast<std::size_t>(k)));
        return UniformCollection(k, std::move(sets));
    };
    UniformCollection C = complete(A);
    UniformCollection D = complete(B);
    if (C.sets.size() != D.sets.size() || C.support() != D.support())
        throw std::logic_error("pad_collections: postcondition failed");
    return {std::move(C), std::move(D)};
}

DoublyStochasticMatrix intersection_matrix(const UniformCollection& C,
                                           const UniformCollection& D) {
    if (C.k != D.k) bad("intersection_matrix: collections have different k");
    if (C.sets.size() != D.sets.size())
        bad("intersection_matrix: collections have different sizes");
    if (C.support() != D.support())
        bad("intersection_matrix: collections cover different label sets");
    const std::size_t m = C.sets.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<std::int64_t> common;
            std::set_intersection(C.sets[i].begin(), C.sets[i].end(), D.sets[j].begin(),
                                  D.sets[j].end(), std::back_inserter(common));
            a[i][j] = Rational(static_cast<std::int64_t>(common.size()), C.k);
        }
    }
    return DoublyStochasticMatrix(std::move(a));
}

std::vector<std::size_t> positive_permutation(const DoublyStochasticMatrix& M) {
    const std::size_t m = M.n();
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) adj[i][j] = Rational(0) < M.entries[i][j];
    auto match = perfect_bipartite_matching(adj);
    if (!match)
        throw std::logic_error(
            "positive_permutation: no positive-support permutation (matrix is not "
            "doubly stochastic)");
    return *match;
}

BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& M) {
    const std::size_t m = M.n();
    if (m == 0) bad("birkhoff_decompose: empty matrix");
    BirkhoffDecomposition out;
    std::vector<std::vector<Rational>> rem = M.entries;
    Rational mass(1);
    while (Rational(0) < mass) {
        // rem/mass is doubly stochastic, so a positive permutation exists.
        std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) adj[i][j] = Rational(0) < rem[i][j];
        auto sigma = perfect_bipartite_matching(adj);
        if (!sigma) throw std::logic_error("birkhoff_decompose: support lost a matching");
        Rational lambda = rem[0][(*sigma)[0]];
        for (std::size_t i = 1; i < m; ++i) lambda = std::min(lambda, rem[i][(*sigma)[i]]);
        for (std::size_t i = 0; i < m; ++i)
            rem[i][(*sigma)[i]] = rem[i][(*sigma)[i]] - lambda;
        out.terms.push_back({lambda, std::move(*sigma)});
        mass = mass - lambda;
    }
    for (const auto& row : rem)
        for (const Rational& e : row)
            if (!(e == Rational(0)))
                throw std::logic_error("birkhoff_decompose: nonzero residue");
    return out;
}

std::vector<std::vector<Rational>> recompose(const BirkhoffDecomposition& D, std::size_t n) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (const BirkhoffTerm& t : D.terms)
        for (std::size_t i = 0; i < n; ++i)
            m[i][t.perm[i]] = m[i][t.perm[i]] + t.weight;
    return m;
}

std::vector<std::int64_t> transversal(const UniformCollection& A, const UniformCollection& B) {
    auto [C, D] = pad_collections(A, B);
    DoublyStochasticMatrix M = intersection_matrix(C, D);
    std::vector<std::size_t> sigma = positive_permutation(M);

    std::set<std::int64_t> original;
    for (const auto& s : A.sets) original.insert(s.begin(), s.end());
    for (const auto& s : B.sets) original.insert(s.begin(), s.end());

    std::vector<std::int64_t> picks;
    for (std::size_t i = 0; i < C.sets.size(); ++i) {
        std::vector<std::int64_t> common;
        std::set_intersection(C.sets[i].begin(), C.sets[i].end(), D.sets[sigma[i]].begin(),
                              D.sets[sigma[i]].end(), std::back_inserter(common));
        if (common.empty())
            throw std::logic_error("transversal: chosen cell has empty intersection");
        // Keep only picks that meet the original collections; picks living
        // purely in padding sets are discarded.
        if (original.count(common.front())) picks.push_back(common.front());
    }
    std::sort(picks.begin(), picks.end());
    return picks;
}

std::vector<std::int64_t> p_fractional_transversal(const Collection& A, const Collection& B,
                                                   std::int64_t p) {
    if (!is_prime(p)) bad("p_fractional_transversal: p must be prime");
    auto split = [&](const Collection& U) {
        std::vector<std::vector<std::int64_t>> blocks;
        for (const auto& s : U.sets) {
            if (s.size() % static_cast<std::size_t>(p) != 0)
                bad("p_fractional_transversal: set size not divisible by p");
            for (std::size_t i = 0; i < s.size(); i += static_cast<std::size_t>(p))
                blocks.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(i),
                                    s.begin() + static_cast<std::ptrdiff_t>(i + static_cast<std::size_t>(p)));
        }
        return UniformCollection(p, std::move(blocks));
    };
    return transversal(split(A), split(B));
}

} // namespace normext
