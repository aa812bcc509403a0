#include "normext/lattice.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "normext/error.hpp"
#include "normext/group.hpp"

namespace normext {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

constexpr std::int64_t kMaxGridNodes = 200'000;

/// Dense index space for integer vectors with |v_i| <= bound.
struct Grid {
    std::int64_t dim;
    std::int64_t bound;
    std::int64_t side;
    std::int64_t count;

    Grid(std::int64_t d, std::int64_t b) : dim(d), bound(b), side(2 * b + 1) {
        count = 1;
        for (std::int64_t i = 0; i < dim; ++i) {
            if (count > kMaxGridNodes / side)
                bad("lattice window too large: more than " +
                    std::to_string(kMaxGridNodes) + " grid nodes");
            count *= side;
        }
    }

    std::optional<std::size_t> index(const std::vector<std::int64_t>& v) const {
        std::size_t idx = 0;
        for (std::int64_t i = 0; i < dim; ++i) {
            if (v[static_cast<std::size_t>(i)] < -bound || v[static_cast<std::size_t>(i)] > bound)
                return std::nullopt;
            idx = idx * static_cast<std::size_t>(side) +
                  static_cast<std::size_t>(v[static_cast<std::size_t>(i)] + bound);
        }
        return idx;
    }

    std::vector<std::int64_t> at(std::size_t idx) const {
        std::vector<std::int64_t> v(static_cast<std::size_t>(dim));
        for (std::int64_t i = dim; i-- > 0;) {
            v[static_cast<std::size_t>(i)] =
                static_cast<std::int64_t>(idx % static_cast<std::size_t>(side)) - bound;
            idx /= static_cast<std::size_t>(side);
        }
        return v;
    }
};

std::string point_str(const std::vector<std::int64_t>& numerators, std::int64_t denom) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        if (i) os << ',';
        os << Rational(numerators[i], denom).str();
    }
    os << ']';
    return os.str();
}

/// ceil(r) for a nonnegative rational.
std::int64_t ceil_of(const Rational& r) {
    std::int64_t q = r.num() / r.den();
    if (q * r.den() != r.num()) ++q;
    return q;
}

struct StepDelta {
    std::size_t a, b;                 // basis indices, dim = mu
    std::vector<std::int64_t> delta;  // e_a - e_b (numerators, unit entries)
};

std::vector<StepDelta> make_steps(std::int64_t dim) {
    std::vector<StepDelta> steps;
    const std::size_t mu = static_cast<std::size_t>(dim);
    for (std::size_t a = 0; a <= mu; ++a) {
        for (std::size_t b = 0; b <= mu; ++b) {
            if (a == b) continue;
            std::vector<std::int64_t> delta(static_cast<std::size_t>(dim), 0);
            if (a < mu) delta[a] += 1;
            if (b < mu) delta[b] -= 1;
            steps.push_back({a, b, std::move(delta)});
        }
    }
    return steps;
}

std::string step_name(std::size_t a, std::int64_t dim) {
    return a == static_cast<std::size_t>(dim) ? "mu" : "g" + std::to_string(a);
}

} // namespace

Rational LatticeBaseNorm::eval(const std::vector<std::int64_t>& integer_point) const {
    switch (form) {
    case LatticeBaseForm::abs_sum: {
        Rational total(0);
        for (std::int64_t c : integer_point) total = total + Rational(c < 0 ? -c : c);
        return total;
    }
    case LatticeBaseForm::abs_max: {
        std::int64_t best = 0;
        for (std::int64_t c : integer_point) best = std::max(best, c < 0 ? -c : c);
        return Rational(best);
    }
    case LatticeBaseForm::table: {
        auto it = table.find(integer_point);
        if (it == table.end())
            bad("base norm table has no value for integer point " +
                point_str(integer_point, 1));
        return it->second;
    }
    }
    bad("unknown base norm form");
}

const Rational& LatticeExtension::value_at(const std::vector<std::int64_t>& numerators) const {
    if (numerators.size() != static_cast<std::size_t>(group.dim))
        bad("point has the wrong dimension");
    Grid g(group.dim, window * group.denom);
    auto idx = g.index(numerators);
    if (!idx) bad("point lies outside the computed window");
    return values[*idx];
}

// Exactness is certified pointwise. With P the radius (in whole units) on
// which the previous stage's true values are known, lambda a global
// coercivity constant of the previous norm (|w| >= lambda * max_i |w_i| for
// every subgroup point w, not just windowed ones), and r = c_min * q * p the
// cheapest pair-step cost per whole unit of max-coordinate movement, a
// computed candidate value B(x) equals the true infimum whenever
//
//     B(x) <= P * min(lambda, r):
//
// any residue w outside the radius-P grid has |w| >= lambda * |w|_inf >
// lambda * P >= B(x), and any pair path leaving the radius-P grid costs
// more than r * P >= B(x), so neither can beat the incumbent. Each stage
// therefore keeps only its certified core (the largest radius whose values
// all meet the bound) and feeds that to the next stage. lambda propagates
// by the same two half-estimates: rho(x) >= min(lambda, r) * |x|_inf, so
// min(lambda, r) is a global coercivity constant for the extended norm.
//
// Named closed forms evaluate anywhere, so the internal radius is enlarged
// until the requested window is certified. Tables stop at the radius they
// cover; a shortfall reports the estimated radius that would suffice.

namespace {

struct StageState {
    std::int64_t radius = 0; // certified radius, whole units
    std::int64_t q = 1;      // denominator reached so far
    std::vector<Rational> values;
    std::vector<std::string> certs;
};

/// One prime step on the certified core. Returns the new state (certified
/// core radius may shrink); when the requested window falls out of the core,
/// sets `required` to the estimated starting radius that would certify it.
std::optional<StageState> lattice_stage(const StageState& in, std::int64_t dim,
                                        std::int64_t p, Rational& lambda,
                                        std::int64_t window, std::int64_t start_radius,
                                        const std::vector<StepDelta>& steps,
                                        std::int64_t& required) {
    const std::int64_t P = in.radius;
    const std::int64_t q = in.q;
    Grid prev_grid(dim, P * q);
    Grid grid(dim, P * q * p);

    // Pair-step costs |p g^a - p g^b| = previous value at e_a - e_b.
    const std::size_t d1 = static_cast<std::size_t>(dim) + 1;
    std::vector<Rational> cost(d1 * d1, Rational(0));
    std::optional<Rational> c_min;
    for (const StepDelta& s : steps) {
        auto idx = prev_grid.index(s.delta); // at denominator q
        if (!idx) throw std::logic_error("lattice stage lost the basis steps");
        cost[s.a * d1 + s.b] = in.values[*idx];
        if (!c_min || in.values[*idx] < *c_min) c_min = in.values[*idx];
    }
    if (!(Rational(0) < *c_min))
        throw ValidationError("windowed lattice extension needs positive pair-step costs");
    const Rational step_rate = *c_min * Rational(q * p); // cost per whole unit moved

    // Dijkstra from 0 over the carrier grid in pair steps.
    const std::size_t n = static_cast<std::size_t>(grid.count);
    std::vector<std::optional<Rational>> dist(n);
    std::vector<std::int32_t> pred_node(n, -1);
    std::vector<std::pair<std::int16_t, std::int16_t>> pred_step(
        n, {std::int16_t{-1}, std::int16_t{-1}});
    std::vector<char> settled(n, 0);
    const std::size_t zero =
        *grid.index(std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
    dist[zero] = Rational(0);
    using QEntry = std::pair<Rational, std::size_t>;
    auto cmp = [](const QEntry& a, const QEntry& b) { return b.first < a.first; };
    std::priority_queue<QEntry, std::vector<QEntry>, decltype(cmp)> pq(cmp);
    pq.push({Rational(0), zero});
    while (!pq.empty()) {
        auto [dv, i] = pq.top();
        pq.pop();
        if (settled[i]) continue;
        settled[i] = 1;
        std::vector<std::int64_t> v = grid.at(i);
        for (std::size_t s = 0; s < steps.size(); ++s) {
            std::vector<std::int64_t> to = v;
            for (std::size_t c = 0; c < to.size(); ++c) to[c] += steps[s].delta[c];
            auto j = grid.index(to);
            if (!j || settled[*j]) continue;
            Rational nd = dv + cost[steps[s].a * d1 + steps[s].b];
            if (!dist[*j] || nd < *dist[*j]) {
                dist[*j] = nd;
                pred_node[*j] = static_cast<std::int32_t>(i);
                pred_step[*j] = {static_cast<std::int16_t>(steps[s].a),
                                 static_cast<std::int16_t>(steps[s].b)};
                pq.push({nd, *j});
            }
        }
    }

    // B(x) = min over covered subgroup points w of |w| + D(x - p*w), with a
    // witness per point. Also the largest value within each whole-unit
    // radius, for the core computation below.
    std::vector<Rational> next_values(n);
    std::vector<std::string> next_certs(n);
    std::vector<Rational> radius_max(static_cast<std::size_t>(P) + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> vx = grid.at(i);
        std::optional<Rational> best;
        std::size_t best_w = 0, best_target = 0;
        for (std::size_t wi = 0; wi < static_cast<std::size_t>(prev_grid.count); ++wi) {
            std::vector<std::int64_t> wu = prev_grid.at(wi);
            std::vector<std::int64_t> target = vx;
            for (std::size_t c = 0; c < target.size(); ++c) target[c] -= p * wu[c];
            auto ti = grid.index(target);
            if (!ti || !dist[*ti]) continue;
            Rational cand = in.values[wi] + *dist[*ti];
            if (!best || cand < *best) {
                best = cand;
                best_w = wi;
                best_target = *ti;
            }
        }
        if (!best) throw std::logic_error("lattice rho: no feasible residue");
        next_values[i] = *best;
        std::int64_t linf = 0;
        for (std::int64_t c : vx) linf = std::max(linf, c < 0 ? -c : c);
        const std::size_t bucket =
            static_cast<std::size_t>((linf + q * p - 1) / (q * p)); // ceil to whole units
        if (radius_max[bucket] < *best) radius_max[bucket] = *best;

        // Witness: w plus the pair multiset of the optimal path, topped up
        // with zero-cost (g_i, g_i) pairs so that both per-coordinate pair
        // counts match the coordinates of x and 0 modulo p.
        std::ostringstream os;
        os << "w=" << point_str(prev_grid.at(best_w), q) << ";pairs=";
        std::map<std::pair<std::int16_t, std::int16_t>, int> tally;
        for (std::size_t cur = best_target; pred_node[cur] >= 0;
             cur = static_cast<std::size_t>(pred_node[cur]))
            ++tally[pred_step[cur]];
        std::vector<std::int64_t> cy(static_cast<std::size_t>(dim), 0);
        for (const auto& [stp, cnt] : tally)
            if (stp.second < dim) cy[static_cast<std::size_t>(stp.second)] += cnt;
        for (std::int16_t c = 0; c < dim; ++c) {
            std::int64_t t = ((-cy[static_cast<std::size_t>(c)]) % p + p) % p;
            if (t > 0) tally[{c, c}] += static_cast<int>(t);
        }
        bool first = true;
        for (const auto& [stp, cnt] : tally) {
            if (!first) os << '+';
            first = false;
            os << '(' << step_name(static_cast<std::size_t>(stp.first), dim) << ','
               << step_name(static_cast<std::size_t>(stp.second), dim) << ')';
            if (cnt > 1) os << 'x' << cnt;
        }
        if (first) os << "none";
        next_certs[i] = os.str();
    }

    // Certified core: the largest radius whose values all satisfy the
    // pointwise margin B(x) <= P * min(lambda, step_rate).
    const Rational unit_bound = lambda < step_rate ? lambda : step_rate;
    const Rational threshold = Rational(P) * unit_bound;
    std::int64_t core = -1;
    {
        Rational prefix(0);
        for (std::int64_t c = 0; c <= P; ++c) {
            if (prefix < radius_max[static_cast<std::size_t>(c)])
                prefix = radius_max[static_cast<std::size_t>(c)];
            if (prefix < threshold || prefix == threshold)
                core = c;
            else
                break;
        }
    }
    if (core < window) {
        // Estimate of the starting radius that would certify the window:
        // the values inside the window are fixed, so the threshold - and
        // with it the starting radius - must grow to their maximum.
        Rational needed(0);
        for (std::int64_t c = 0; c <= std::min(window, P); ++c)
            if (needed < radius_max[static_cast<std::size_t>(c)])
                needed = radius_max[static_cast<std::size_t>(c)];
        const std::int64_t at_this_stage = std::max(P + 1, ceil_of(needed / unit_bound));
        required = std::max(required, (at_this_stage * start_radius + P - 1) / P);
        return std::nullopt;
    }

    // Restriction identity: subgroup points keep their values. This holds
    // even outside the core (the candidate w = x/p gives B <= previous
    // value; B never drops below the true extension, which restricts
    // exactly).
    for (std::size_t wi = 0; wi < static_cast<std::size_t>(prev_grid.count); ++wi) {
        std::vector<std::int64_t> wu = prev_grid.at(wi);
        for (std::int64_t& c : wu) c *= p;
        if (!(next_values[*grid.index(wu)] == in.values[wi]))
            throw std::logic_error("lattice restriction identity failed");
    }

    // Keep the certified core only.
    StageState out;
    out.radius = core;
    out.q = q * p;
    Grid core_grid(dim, core * out.q);
    out.values.resize(static_cast<std::size_t>(core_grid.count));
    out.certs.resize(static_cast<std::size_t>(core_grid.count));
    for (std::size_t i = 0; i < static_cast<std::size_t>(core_grid.count); ++i) {
        const std::size_t src = *grid.index(core_grid.at(i));
        out.values[i] = next_values[src];
        out.certs[i] = std::move(next_certs[src]);
    }
    lambda = unit_bound;
    return out;
}

} // namespace

LatticeExtension lattice_extend(std::int64_t dim, std::int64_t m, const LatticeBaseNorm& base,
                                std::int64_t window) {
    if (dim < 1) bad("dimension must be >= 1");
    if (m < 1) bad("denominator must be >= 1");
    if (window < 1) bad("window must be >= 1");

    std::vector<std::int64_t> primes;
    {
        std::int64_t rest = m;
        for (std::int64_t p = 2; p * p <= rest; ++p)
            while (rest % p == 0) {
                primes.push_back(p);
                rest /= p;
            }
        if (rest > 1) primes.push_back(rest);
        std::sort(primes.begin(), primes.end());
    }

    // A table base caps the internal radius at the largest radius it fully
    // covers; named forms evaluate anywhere.
    std::int64_t table_radius = 0;
    if (base.form == LatticeBaseForm::table) {
        while (true) {
            Grid shell(dim, table_radius + 1);
            bool complete = true;
            for (std::size_t i = 0; complete && i < static_cast<std::size_t>(shell.count); ++i)
                complete = base.table.count(shell.at(i)) != 0;
            if (!complete) break;
            ++table_radius;
        }
        if (table_radius < window)
            bad("base norm table must cover the whole requested window");
    }

    const std::vector<StepDelta> steps = make_steps(dim);

    std::int64_t attempt = base.form == LatticeBaseForm::table ? table_radius : window;
    for (int rounds = 0; rounds < 24; ++rounds) {
        // Stage 0: base values on the integer grid of the attempt radius.
        StageState st;
        st.radius = attempt;
        st.q = 1;
        Grid g0(dim, attempt);
        st.values.resize(static_cast<std::size_t>(g0.count));
        st.certs.resize(static_cast<std::size_t>(g0.count));
        for (std::size_t i = 0; i < st.values.size(); ++i) {
            st.values[i] = base.eval(g0.at(i));
            st.certs[i] = "base";
        }

        // Global coercivity |w| >= lambda * max_i |w_i|: exactly 1 for the
        // named forms; for tables, the covered minimum is assumed to extend
        // beyond the covered radius.
        Rational lambda(1);
        if (base.form == LatticeBaseForm::table) {
            std::optional<Rational> best;
            for (std::size_t i = 0; i < st.values.size(); ++i) {
                std::vector<std::int64_t> u = g0.at(i);
                std::int64_t linf = 0;
                for (std::int64_t c : u) linf = std::max(linf, c < 0 ? -c : c);
                if (linf == 0) continue;
                Rational ratio = st.values[i] / Rational(linf);
                if (!best || ratio < *best) best = ratio;
            }
            if (!best || !(Rational(0) < *best))
                throw ValidationError(
                    "windowed lattice extension needs a norm that is positive away from 0");
            lambda = *best;
        }

        std::int64_t required = window;
        bool fell_short = false;
        for (std::int64_t p : primes) {
            auto next = lattice_stage(st, dim, p, lambda, window, attempt, steps, required);
            if (!next) {
                fell_short = true;
                break;
            }
            st = std::move(*next);
        }
        if (fell_short) {
            if (base.form == LatticeBaseForm::table)
                throw WindowError(
                    "window " + std::to_string(window) +
                        " too small to certify exact values; a base table covering "
                        "radius " +
                        std::to_string(required) + " should suffice",
                    required);
            attempt = std::max(required, attempt * 2);
            continue;
        }

        // Slice the certified values down to the requested window.
        LatticeExtension out;
        out.group = {dim, m};
        out.window = window;
        Grid g(dim, window * st.q);
        Grid have(dim, st.radius * st.q);
        out.points.reserve(static_cast<std::size_t>(g.count));
        out.values.resize(static_cast<std::size_t>(g.count));
        out.certificates.resize(static_cast<std::size_t>(g.count));
        for (std::size_t i = 0; i < static_cast<std::size_t>(g.count); ++i) {
            out.points.push_back(g.at(i));
            const std::size_t src = *have.index(out.points.back());
            out.values[i] = st.values[src];
            out.certificates[i] = std::move(st.certs[src]);
        }
        return out;
    }
    throw std::logic_error("lattice window certification did not converge");
}

} // namespace normext
