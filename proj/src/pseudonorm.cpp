#include "normext/pseudonorm.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace normext {

Pseudonorm::Pseudonorm(Subgroup carrier, std::vector<Rational> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
    if (values_.size() != carrier_.elements().size())
        throw std::invalid_argument("pseudonorm table size does not match carrier size");
}

Pseudonorm::Pseudonorm(Subgroup carrier, const std::map<Element, Rational>& table)
    : carrier_(std::move(carrier)) {
    for (const auto& [e, v] : table)
        if (!carrier_.contains(e))
            throw std::invalid_argument("pseudonorm table key " + element_str(e) +
                                        " lies outside the carrier");
    values_.reserve(carrier_.elements().size());
    for (const Element& e : carrier_.elements()) {
        auto it = table.find(e);
        if (it == table.end())
            throw std::invalid_argument("pseudonorm table is missing a value for " +
                                        element_str(e));
        values_.push_back(it->second);
    }
}

const Rational& Pseudonorm::value(const Element& x) const {
    std::int64_t i = carrier_.member_index(x);
    if (i < 0)
        throw std::invalid_argument("element " + element_str(x) +
                                    " is not in the pseudonorm carrier");
    return values_[static_cast<std::size_t>(i)];
}

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::nonzero_at_identity:
        os << "|0| = " << lhs << " != 0";
        break;
    case Kind::negative_value:
        os << "|" << element_str(x) << "| = " << lhs << " < 0";
        break;
    case Kind::triangle:
        os << "triangle violated at (" << element_str(x) << "," << element_str(y)
           << "): |x-y| = " << lhs << " > |x|+|y| = " << rhs;
        break;
    }
    return os.str();
}

ValidationReport validate(const Pseudonorm& N) {
    ValidationReport report;
    const Subgroup& C = N.carrier();
    const FiniteAbelianGroup& P = C.parent();
    const auto& elems = C.elements();
    const std::size_t n = elems.size();

    const Rational& at_zero = N.value_at(static_cast<std::size_t>(C.member_index(P.zero())));
    if (!(at_zero == Rational(0)))
        report.violations.push_back(
            {Violation::Kind::nonzero_at_identity, P.zero(), {}, at_zero, Rational(0)});
    for (std::size_t i = 0; i < n; ++i)
        if (N.value_at(i) < Rational(0))
            report.violations.push_back(
                {Violation::Kind::negative_value, elems[i], {}, N.value_at(i), Rational(0)});

    // Index table for x - y so the pair scan stays in integer land.
    std::vector<std::int32_t> diff(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            diff[i * n + j] = static_cast<std::int32_t>(C.member_index(P.sub(elems[i], elems[j])));

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& lhs = N.value_at(static_cast<std::size_t>(diff[i * n + j]));
            Rational rhs = N.value_at(i) + N.value_at(j);
            if (lhs > rhs)
                report.violations.push_back(
                    {Violation::Kind::triangle, elems[i], elems[j], lhs, rhs});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

Rational induced_metric(const Pseudonorm& N, const Element& x, const Element& y) {
    return N.value(N.carrier().parent().sub(x, y));
}

Pseudonorm pullback_norm(const Homomorphism& h, const Pseudonorm& N) {
    Subgroup source = Subgroup::whole(h.source());
    std::vector<Rational> values;
    values.reserve(source.elements().size());
    for (const Element& x : source.elements()) {
        Element hx = h.apply(x);
        if (!N.carrier().contains(hx))
            throw std::invalid_argument("homomorphism image " + element_str(hx) +
                                        " lies outside the pseudonorm carrier");
        values.push_back(N.value(hx));
    }
    return Pseudonorm(std::move(source), std::move(values));
}

Pseudonorm closure_pseudonorm(const Subgroup& carrier, const std::vector<Rational>& seed) {
    const auto& elems = carrier.elements();
    const std::size_t n = elems.size();
    if (seed.size() != n)
        throw std::invalid_argument("seed table size does not match carrier size");
    for (const Rational& s : seed)
        if (s < Rational(0)) throw std::invalid_argument("seed weights must be nonnegative");

    const FiniteAbelianGroup& P = carrier.parent();
    // Symmetrized step weights w(s) = min(seed(s), seed(-s)).
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ni = static_cast<std::size_t>(carrier.member_index(P.neg(elems[i])));
        w[i] = std::min(seed[i], seed[ni]);
    }
    // Step targets as member indices: x + s for each nonzero step s.
    std::vector<std::vector<std::int32_t>> step_to(n, std::vector<std::int32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < n; ++s)
            step_to[i][s] = static_cast<std::int32_t>(carrier.member_index(P.add(elems[i], elems[s])));

    const std::size_t zero = static_cast<std::size_t>(carrier.member_index(P.zero()));
    std::vector<Rational> dist(n);
    std::vector<char> settled(n, 0), reached(n, 0);
    reached[zero] = 1;
    using QEntry = std::pair<Rational, std::size_t>;
    auto cmp = [](const QEntry& a, const QEntry& b) { return b.first < a.first; };
    std::priority_queue<QEntry, std::vector<QEntry>, decltype(cmp)> pq(cmp);
    pq.push({Rational(0), zero});
    while (!pq.empty()) {
        auto [d, i] = pq.top();
        pq.pop();
        if (settled[i]) continue;
        settled[i] = 1;
        dist[i] = d;
        for (std::size_t s = 0; s < n; ++s) {
            if (s == zero) continue;
            std::size_t j = static_cast<std::size_t>(step_to[i][s]);
            Rational nd = d + w[s];
            if (settled[j] || (reached[j] && !(nd < dist[j]))) continue;
            reached[j] = 1;
            dist[j] = nd;
            pq.push({nd, j});
        }
    }
    // Every element is a sum of steps (the carrier is a finite group), so
    // the whole carrier is reached.
    for (std::size_t i = 0; i < n; ++i)
        if (!settled[i]) throw std::logic_error("closure did not reach the whole carrier");
    return Pseudonorm(carrier, std::move(dist));
}

} // namespace normext
