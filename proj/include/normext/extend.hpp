#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "normext/group.hpp"
#include "normext/pseudonorm.hpp"
#include "normext/rational.hpp"

namespace normext {

/// One way of writing x = u + sum_alpha counts[alpha] * g^alpha with u in H.
/// counts has one slot per basis index plus a final slot for the sentinel mu
/// (whose representative is 0, so its count never changes the sum).
struct Representation {
    Element u;
    std::vector<std::int64_t> counts;
};

/// Extension instance: a carrier group C, a subgroup H of C with p*C <= H
/// for a prime p, and a valid base pseudonorm on H. The cap bounds the
/// capped reference evaluator's search (counts up to coordinates + cap*p per
/// basis index); the exact evaluator rho() does not depend on it.
///
/// Construction precomputes the pair-step shortest-path table that makes
/// rho() exact: D(delta) is the cheapest multiset of basis pairs (a, b) with
/// sum_(a,b) (g^a - g^b) = delta, each pair costing |p g^a - p g^b|_H. Then
///   rho(x, y) = min over w in H of |w|_H + D(x - y - w),
/// which equals the infimum over all representation pairs: any pair multiset
/// plus w recombines into representations of x and y (mu-side merges and
/// cost-free (a, a) pairs fix the coordinate congruences), and conversely.
class ExtensionProblem {
public:
    ExtensionProblem(Subgroup carrier, Subgroup sub, std::int64_t p, Pseudonorm base,
                     std::int64_t cap = 1);
    ExtensionProblem(const FiniteAbelianGroup& G, const Subgroup& sub, std::int64_t p,
                     const Pseudonorm& base, std::int64_t cap = 1);

    const QuotientStructure& quotient() const { return Q_; }
    const Subgroup& carrier() const { return Q_.carrier(); }
    const Subgroup& sub() const { return Q_.sub(); }
    const Pseudonorm& base() const { return base_; }
    std::int64_t p() const { return p_; }
    std::int64_t cap() const { return cap_; }
    std::size_t basis_size() const { return Q_.basis_size(); }
    std::size_t mu_index() const { return Q_.mu_index(); }

    /// D(delta) by carrier member index; nullopt when no pair multiset sums
    /// to that element.
    const std::optional<Rational>& step_distance(std::size_t member_index) const {
        return dist_[member_index];
    }
    /// Pair steps of the optimal path from 0 to the given member.
    std::vector<std::pair<std::size_t, std::size_t>> step_path(std::size_t member_index) const;

private:
    friend Rational pair_cost(std::size_t, std::size_t, const ExtensionProblem&);
    void build_distances();

    QuotientStructure Q_;
    Pseudonorm base_;
    std::int64_t p_;
    std::int64_t cap_;
    std::vector<Rational> pair_cost_;                 // (d+1) x (d+1), flattened
    std::vector<std::optional<Rational>> dist_;       // per carrier member
    std::vector<std::int32_t> pred_node_;             // Dijkstra predecessor
    std::vector<std::pair<std::int16_t, std::int16_t>> pred_step_;
};

/// All representations of x with counts[alpha] in {c, c+p, ..., c+cap*p}
/// where c = coordinates(x)[alpha]; the mu count stays 0 (mu enters through
/// matching-time padding). Deterministic enumeration order.
std::vector<Representation> enumerate_representations(const Element& x,
                                                      const ExtensionProblem& P);

/// |p g^alpha - p g^beta|_H for basis indices or mu.
Rational pair_cost(std::size_t alpha, std::size_t beta, const ExtensionProblem& P);

/// Minimum over perfect matchings of the summed pair costs between the two
/// count multisets, after padding the shorter side with mu.
Rational min_matching_cost(const std::vector<std::int64_t>& counts_x,
                           const std::vector<std::int64_t>& counts_y,
                           const ExtensionProblem& P);

/// Exact value of the infimum  inf { |u - v|_H + sum_i |p g^{a_i} - p g^{b_i}|_H }
/// over all representation pairs of x and y; evaluated through the
/// shortest-path table, so it is cap-independent.
Rational rho(const Element& x, const Element& y, const ExtensionProblem& P);

/// Reference evaluator: minimum over the capped representation enumeration
/// with the matching solved by the Hungarian algorithm. An upper bound for
/// rho(); equal to it whenever the cap is large enough.
Rational rho_capped(const Element& x, const Element& y, const ExtensionProblem& P);
/// Same search space with matchings enumerated by brute force (oracle).
/// Throws when some padded multiset would exceed max_size.
Rational rho_capped_brute(const Element& x, const Element& y, const ExtensionProblem& P,
                          std::size_t max_size = 9);
/// Largest padded multiset size the capped enumeration can reach for (x, y).
std::int64_t capped_matching_size_bound(const Element& x, const Element& y,
                                        const ExtensionProblem& P);

/// Minimizing representation pair witnessing rho(x, y), with the explicit
/// pair matching. check_certificate re-verifies every claim from scratch.
struct RhoCertificate {
    Representation rx;
    Representation ry;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Rational value;
};

RhoCertificate rho_certificate(const Element& x, const Element& y, const ExtensionProblem& P);
bool check_certificate(const RhoCertificate& cert, const Element& x, const Element& y,
                       const ExtensionProblem& P);

/// Extension of the base norm to the carrier: value(x) = rho(x, 0), with a
/// per-element certificate for the pair (x, 0). The restriction to H is
/// verified to equal the base exactly during construction.
struct ExtendedNorm {
    Pseudonorm norm;
    std::vector<RhoCertificate> certificates;  // indexed like carrier elements
};

ExtendedNorm prime_step_extend(const ExtensionProblem& P);

/// Tower H = H_0 < H_1 < ... < H_n = G with H_{i+1} = {x : p_{i+1} x in H_i},
/// primes processed in increasing order, each repeated to its fixpoint.
struct ChainStep {
    std::int64_t prime;
    Subgroup subgroup;
};

struct ChainPlan {
    Subgroup start;
    std::vector<ChainStep> steps;
};

ChainPlan build_chain(const FiniteAbelianGroup& G, const Subgroup& H);

/// Fold prime_step_extend along build_chain(G, H); returns every
/// intermediate pseudonorm, base first, final norm on G last.
std::vector<Pseudonorm> chain_extend_trace(const FiniteAbelianGroup& G, const Subgroup& H,
                                           const Pseudonorm& base);
Pseudonorm chain_extend(const FiniteAbelianGroup& G, const Subgroup& H, const Pseudonorm& base);

} // namespace normext
