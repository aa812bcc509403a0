#include "normext/extend.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "normext/error.hpp"
#include "normext/matching.hpp"

namespace normext {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

ExtensionProblem::ExtensionProblem(Subgroup carrier, Subgroup sub, std::int64_t p,
                                   Pseudonorm base, std::int64_t cap)
    : Q_(std::move(carrier), std::move(sub)), base_(std::move(base)), p_(p), cap_(cap) {
    if (cap_ < 0) bad("cap must be nonnegative");
    if (!is_prime(p_))
        throw ValidationError("p = " + std::to_string(p_) + " is not prime");
    if (Q_.exponent() != 1 && Q_.exponent() != p_)
        throw ValidationError("p*G is not contained in H: the quotient has exponent " +
                              std::to_string(Q_.exponent()) + ", expected 1 or " +
                              std::to_string(p_));
    if (!(base_.carrier() == Q_.sub()))
        bad("base norm carrier differs from the subgroup");
    ValidationReport report = validate(base_);
    if (!report.ok)
        throw ValidationError("base norm is not a valid pseudonorm: " +
                              report.violations.front().describe());

    const FiniteAbelianGroup& P = Q_.carrier().parent();
    const std::size_t d1 = Q_.basis_size() + 1;
    pair_cost_.reserve(d1 * d1);
    for (std::size_t a = 0; a < d1; ++a) {
        Element pa = P.scale(p_, Q_.basis_rep(a));
        for (std::size_t b = 0; b < d1; ++b) {
            Element pb = P.scale(p_, Q_.basis_rep(b));
            pair_cost_.push_back(base_.value(P.sub(pa, pb)));
        }
    }
    build_distances();
}

ExtensionProblem::ExtensionProblem(const FiniteAbelianGroup& G, const Subgroup& sub,
                                   std::int64_t p, const Pseudonorm& base, std::int64_t cap)
    : ExtensionProblem(Subgroup::whole(G), sub, p, base, cap) {}

void ExtensionProblem::build_distances() {
    const Subgroup& C = Q_.carrier();
    const FiniteAbelianGroup& P = C.parent();
    const std::size_t n = C.elements().size();
    const std::size_t d1 = Q_.basis_size() + 1;

    // One step per ordered basis-index pair (a, b), a != b, moving by
    // g^a - g^b at cost |p g^a - p g^b|_H.
    struct Step {
        std::int16_t a, b;
        Rational weight;
        std::vector<std::int32_t> to; // target member per source member
    };
    std::vector<Step> steps;
    for (std::size_t a = 0; a < d1; ++a) {
        for (std::size_t b = 0; b < d1; ++b) {
            if (a == b) continue;
            Element delta = P.sub(Q_.basis_rep(a), Q_.basis_rep(b));
            Step s{static_cast<std::int16_t>(a), static_cast<std::int16_t>(b),
                   pair_cost_[a * d1 + b], std::vector<std::int32_t>(n)};
            for (std::size_t i = 0; i < n; ++i)
                s.to[i] = static_cast<std::int32_t>(
                    C.member_index(P.add(C.elements()[i], delta)));
            steps.push_back(std::move(s));
        }
    }

    dist_.assign(n, std::nullopt);
    pred_node_.assign(n, -1);
    pred_step_.assign(n, {std::int16_t{-1}, std::int16_t{-1}});
    const std::size_t zero = static_cast<std::size_t>(C.member_index(P.zero()));
    dist_[zero] = Rational(0);

    // Dijkstra on the lexicographic (cost, step count) objective: among
    // minimum-cost paths the reconstructed one uses the fewest pair steps,
    // which keeps certificate multiplicities small.
    std::vector<std::int64_t> hops(n, 0);
    std::vector<char> settled(n, 0);
    using QEntry = std::tuple<Rational, std::int64_t, std::size_t>;
    auto cmp = [](const QEntry& a, const QEntry& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(b) < std::get<0>(a);
        return std::get<1>(b) < std::get<1>(a);
    };
    std::priority_queue<QEntry, std::vector<QEntry>, decltype(cmp)> pq(cmp);
    pq.push({Rational(0), 0, zero});
    while (!pq.empty()) {
        auto [d, h, i] = pq.top();
        pq.pop();
        if (settled[i]) continue;
        settled[i] = 1;
        for (const Step& s : steps) {
            std::size_t j = static_cast<std::size_t>(s.to[i]);
            if (settled[j]) continue;
            Rational nd = d + s.weight;
            const std::int64_t nh = h + 1;
            if (!dist_[j] || nd < *dist_[j] || (nd == *dist_[j] && nh < hops[j])) {
                dist_[j] = nd;
                hops[j] = nh;
                pred_node_[j] = static_cast<std::int32_t>(i);
                pred_step_[j] = {s.a, s.b};
                pq.push({nd, nh, j});
            }
        }
    }
}

std::vector<std::pair<std::size_t, std::size_t>> ExtensionProblem::step_path(
    std::size_t member_index) const {
    if (!dist_[member_index])
        throw std::logic_error("step_path: member is not reachable by pair steps");
    std::vector<std::pair<std::size_t, std::size_t>> path;
    std::size_t cur = member_index;
    while (pred_node_[cur] >= 0) {
        path.emplace_back(static_cast<std::size_t>(pred_step_[cur].first),
                          static_cast<std::size_t>(pred_step_[cur].second));
        cur = static_cast<std::size_t>(pred_node_[cur]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Representation> enumerate_representations(const Element& x,
                                                      const ExtensionProblem& P) {
    const QuotientStructure& Q = P.quotient();
    const FiniteAbelianGroup& G = Q.carrier().parent();
    if (!Q.carrier().contains(x)) bad("element is not in the carrier");
    const std::vector<std::int64_t> coords = Q.coordinates(x);
    const std::size_t d = Q.basis_size();

    std::vector<Representation> out;
    std::vector<std::int64_t> extra(d, 0); // odometer over {0..cap} per index
    for (;;) {
        Representation rep;
        rep.counts.assign(d + 1, 0);
        Element sum = G.zero();
        for (std::size_t a = 0; a < d; ++a) {
            rep.counts[a] = coords[a] + extra[a] * P.p();
            sum = G.add(sum, G.scale(rep.counts[a], Q.basis_rep(a)));
        }
        rep.u = G.sub(x, sum);
        if (!Q.sub().contains(rep.u))
            throw std::logic_error("representation residue left the subgroup");
        out.push_back(std::move(rep));

        // Advance the odometer (last index fastest).
        std::size_t a = d;
        while (a > 0) {
            --a;
            if (extra[a] < P.cap()) {
                ++extra[a];
                std::fill(extra.begin() + static_cast<std::ptrdiff_t>(a) + 1, extra.end(), 0);
                break;
            }
            if (a == 0) return out;
        }
        if (d == 0) return out;
    }
}

Rational pair_cost(std::size_t alpha, std::size_t beta, const ExtensionProblem& P) {
    const std::size_t d1 = P.basis_size() + 1;
    if (alpha >= d1 || beta >= d1) bad("pair_cost: basis index out of range");
    return P.pair_cost_[alpha * d1 + beta];
}

namespace {

std::vector<std::size_t> expand_counts(const std::vector<std::int64_t>& counts,
                                       const ExtensionProblem& P) {
    if (counts.size() != P.basis_size() + 1)
        bad("count multiset has the wrong number of slots");
    std::vector<std::size_t> indices;
    for (std::size_t a = 0; a < counts.size(); ++a) {
        if (counts[a] < 0) bad("count multiset has a negative entry");
        for (std::int64_t c = 0; c < counts[a]; ++c) indices.push_back(a);
    }
    return indices;
}

} // namespace

Rational min_matching_cost(const std::vector<std::int64_t>& counts_x,
                           const std::vector<std::int64_t>& counts_y,
                           const ExtensionProblem& P) {
    std::vector<std::size_t> ax = expand_counts(counts_x, P);
    std::vector<std::size_t> ay = expand_counts(counts_y, P);
    const std::size_t n = std::max(ax.size(), ay.size());
    ax.resize(n, P.mu_index());
    ay.resize(n, P.mu_index());
    if (n == 0) return Rational(0);
    std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i][j] = pair_cost(ax[i], ay[j], P);
    return hungarian_min_cost(cost);
}

Rational rho(const Element& x, const Element& y, const ExtensionProblem& P) {
    const Subgroup& C = P.carrier();
    const FiniteAbelianGroup& G = C.parent();
    if (!C.contains(x) || !C.contains(y)) bad("element is not in the carrier");
    Element diff = G.sub(x, y);
    const Subgroup& H = P.sub();
    std::optional<Rational> best;
    for (std::size_t iw = 0; iw < H.elements().size(); ++iw) {
        std::size_t target =
            static_cast<std::size_t>(C.member_index(G.sub(diff, H.elements()[iw])));
        const std::optional<Rational>& D = P.step_distance(target);
        if (!D) continue;
        Rational cand = P.base().value_at(iw) + *D;
        if (!best || cand < *best) best = cand;
    }
    if (!best) throw std::logic_error("rho: no feasible representation pair");
    return *best;
}

Rational rho_capped(const Element& x, const Element& y, const ExtensionProblem& P) {
    const FiniteAbelianGroup& G = P.carrier().parent();
    std::vector<Representation> rx = enumerate_representations(x, P);
    std::vector<Representation> ry = enumerate_representations(y, P);
    std::optional<Rational> best;
    for (const Representation& a : rx) {
        for (const Representation& b : ry) {
            Rational cand =
                P.base().value(G.sub(a.u, b.u)) + min_matching_cost(a.counts, b.counts, P);
            if (!best || cand < *best) best = cand;
        }
    }
    return *best;
}

Rational rho_capped_brute(const Element& x, const Element& y, const ExtensionProblem& P,
                          std::size_t max_size) {
    const FiniteAbelianGroup& G = P.carrier().parent();
    std::vector<Representation> rx = enumerate_representations(x, P);
    std::vector<Representation> ry = enumerate_representations(y, P);
    std::optional<Rational> best;
    for (const Representation& a : rx) {
        for (const Representation& b : ry) {
            std::vector<std::size_t> ax = expand_counts(a.counts, P);
            std::vector<std::size_t> ay = expand_counts(b.counts, P);
            const std::size_t n = std::max(ax.size(), ay.size());
            if (n > max_size)
                bad("rho_capped_brute: padded multiset size exceeds the oracle limit");
            ax.resize(n, P.mu_index());
            ay.resize(n, P.mu_index());
            Rational match(0);
            if (n > 0) {
                std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n, Rational(0)));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) cost[i][j] = pair_cost(ax[i], ay[j], P);
                match = brute_force_min_cost(cost);
            }
            Rational cand = P.base().value(G.sub(a.u, b.u)) + match;
            if (!best || cand < *best) best = cand;
        }
    }
    return *best;
}

std::int64_t capped_matching_size_bound(const Element& x, const Element& y,
                                        const ExtensionProblem& P) {
    const QuotientStructure& Q = P.quotient();
    auto side = [&](const Element& e) {
        std::int64_t total = 0;
        for (std::int64_t c : Q.coordinates(e)) total += c + P.cap() * P.p();
        return total;
    };
    return std::max(side(x), side(y));
}

RhoCertificate rho_certificate(const Element& x, const Element& y,
                               const ExtensionProblem& P) {
    const Subgroup& C = P.carrier();
    const Subgroup& H = P.sub();
    const FiniteAbelianGroup& G = C.parent();
    const QuotientStructure& Q = P.quotient();
    if (!C.contains(x) || !C.contains(y)) bad("element is not in the carrier");

    Element diff = G.sub(x, y);
    std::optional<Rational> best;
    std::size_t best_target = 0;
    for (std::size_t iw = 0; iw < H.elements().size(); ++iw) {
        std::size_t target =
            static_cast<std::size_t>(C.member_index(G.sub(diff, H.elements()[iw])));
        const std::optional<Rational>& D = P.step_distance(target);
        if (!D) continue;
        Rational cand = P.base().value_at(iw) + *D;
        if (!best || cand < *best) {
            best = cand;
            best_target = target;
        }
    }
    if (!best) throw std::logic_error("rho_certificate: no feasible pair");

    std::vector<std::pair<std::size_t, std::size_t>> pairs = P.step_path(best_target);
    const std::size_t mu = P.mu_index();

    // Merge one x-side mu with one y-side mu into a direct pair; optimality
    // of the path guarantees the merge is cost-neutral.
    for (;;) {
        std::size_t i_mu = pairs.size(), j_mu = pairs.size();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].first == mu && i_mu == pairs.size()) i_mu = i;
            if (pairs[i].second == mu && j_mu == pairs.size()) j_mu = i;
        }
        if (i_mu == pairs.size() || j_mu == pairs.size()) break;
        std::pair<std::size_t, std::size_t> merged{pairs[j_mu].first, pairs[i_mu].second};
        std::vector<std::pair<std::size_t, std::size_t>> next;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (i != i_mu && i != j_mu) next.push_back(pairs[i]);
        if (!(merged.first == mu && merged.second == mu)) next.push_back(merged);
        pairs = std::move(next);
    }

    // Append cost-free (a, a) pairs until both count multisets match the
    // coordinate congruences of x and y.
    const std::size_t d = P.basis_size();
    std::vector<std::int64_t> cx(d + 1, 0), cy(d + 1, 0);
    for (const auto& [a, b] : pairs) {
        ++cx[a];
        ++cy[b];
    }
    const std::vector<std::int64_t> coords_x = Q.coordinates(x);
    for (std::size_t a = 0; a < d; ++a) {
        std::int64_t t = ((coords_x[a] - cx[a]) % P.p() + P.p()) % P.p();
        for (std::int64_t i = 0; i < t; ++i) pairs.emplace_back(a, a);
        cx[a] += t;
        cy[a] += t;
    }

    RhoCertificate cert;
    Element sum_x = G.zero(), sum_y = G.zero();
    for (std::size_t a = 0; a < d; ++a) {
        sum_x = G.add(sum_x, G.scale(cx[a], Q.basis_rep(a)));
        sum_y = G.add(sum_y, G.scale(cy[a], Q.basis_rep(a)));
    }
    cert.rx = {G.sub(x, sum_x), cx};
    cert.ry = {G.sub(y, sum_y), cy};
    cert.pairs = std::move(pairs);
    Rational total = P.base().value(G.sub(cert.rx.u, cert.ry.u));
    for (const auto& [a, b] : cert.pairs) total = total + pair_cost(a, b, P);
    cert.value = total;
    if (!(cert.value == *best))
        throw std::logic_error("rho_certificate: witness cost differs from the optimum");
    if (!check_certificate(cert, x, y, P))
        throw std::logic_error("rho_certificate: constructed witness failed verification");
    return cert;
}

bool check_certificate(const RhoCertificate& cert, const Element& x, const Element& y,
                       const ExtensionProblem& P) {
    const Subgroup& H = P.sub();
    const FiniteAbelianGroup& G = P.carrier().parent();
    const QuotientStructure& Q = P.quotient();
    const std::size_t d = P.basis_size();
    if (cert.rx.counts.size() != d + 1 || cert.ry.counts.size() != d + 1) return false;

    // The pair list must tally exactly to the two count multisets.
    std::vector<std::int64_t> cx(d + 1, 0), cy(d + 1, 0);
    for (const auto& [a, b] : cert.pairs) {
        if (a > d || b > d) return false;
        ++cx[a];
        ++cy[b];
    }
    if (cx != cert.rx.counts || cy != cert.ry.counts) return false;

    // Representations must reconstruct x and y with residues in H and
    // counts matching the coordinate congruences.
    auto check_side = [&](const Representation& rep, const Element& e) {
        if (!H.contains(rep.u)) return false;
        Element sum = G.zero();
        for (std::size_t a = 0; a < d; ++a) {
            if (rep.counts[a] < 0) return false;
            sum = G.add(sum, G.scale(rep.counts[a], Q.basis_rep(a)));
        }
        if (G.add(rep.u, sum) != e) return false;
        const std::vector<std::int64_t> coords = Q.coordinates(e);
        for (std::size_t a = 0; a < d; ++a)
            if ((rep.counts[a] - coords[a]) % P.p() != 0) return false;
        return true;
    };
    if (!check_side(cert.rx, x) || !check_side(cert.ry, y)) return false;

    Rational total = P.base().value(G.sub(cert.rx.u, cert.ry.u));
    for (const auto& [a, b] : cert.pairs) total = total + pair_cost(a, b, P);
    return total == cert.value;
}

ExtendedNorm prime_step_extend(const ExtensionProblem& P) {
    const Subgroup& C = P.carrier();
    const Subgroup& H = P.sub();
    const FiniteAbelianGroup& G = C.parent();
    const Element zero = G.zero();

    std::vector<Rational> values;
    std::vector<RhoCertificate> certs;
    values.reserve(C.elements().size());
    certs.reserve(C.elements().size());
    for (const Element& x : C.elements()) {
        RhoCertificate cert = rho_certificate(x, zero, P);
        values.push_back(cert.value);
        certs.push_back(std::move(cert));
    }

    for (std::size_t j = 0; j < H.elements().size(); ++j) {
        std::size_t i = static_cast<std::size_t>(C.member_index(H.elements()[j]));
        if (!(values[i] == P.base().value_at(j)))
            throw ValidationError("restriction identity failed at " +
                                  element_str(H.elements()[j]) + ": extension value " +
                                  values[i].str() + " differs from base value " +
                                  P.base().value_at(j).str());
    }
    return {Pseudonorm(C, std::move(values)), std::move(certs)};
}

ChainPlan build_chain(const FiniteAbelianGroup& G, const Subgroup& H) {
    if (!(H.parent() == G)) bad("subgroup does not live in the given group");
    ChainPlan plan{H, {}};
    Subgroup cur = H;
    for (std::int64_t p = 2; p <= G.order(); ++p) {
        if (!is_prime(p) || G.order() % p != 0) continue;
        for (;;) {
            std::vector<Element> members;
            for (std::int64_t i = 0; i < G.order(); ++i) {
                Element x = G.element_at(i);
                if (cur.contains(G.scale(p, x))) members.push_back(std::move(x));
            }
            if (static_cast<std::int64_t>(members.size()) == cur.size()) break;
            Subgroup next = Subgroup::from_members(G, members);
            plan.steps.push_back({p, next});
            cur = std::move(next);
        }
    }
    if (cur.size() != G.order())
        throw std::logic_error("build_chain: chain did not reach the whole group");
    return plan;
}

std::vector<Pseudonorm> chain_extend_trace(const FiniteAbelianGroup& G, const Subgroup& H,
                                           const Pseudonorm& base) {
    if (!(base.carrier() == H)) bad("base norm carrier differs from the starting subgroup");
    ChainPlan plan = build_chain(G, H);
    std::vector<Pseudonorm> trace{base};
    Subgroup cur = H;
    for (const ChainStep& step : plan.steps) {
        ExtensionProblem P(step.subgroup, cur, step.prime, trace.back());
        trace.push_back(prime_step_extend(P).norm);
        cur = step.subgroup;
    }
    return trace;
}

Pseudonorm chain_extend(const FiniteAbelianGroup& G, const Subgroup& H,
                        const Pseudonorm& base) {
    return chain_extend_trace(G, H, base).back();
}

} // namespace normext
