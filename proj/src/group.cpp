#include "normext/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace normext {

namespace {

constexpr std::int64_t kMaxGroupOrder = 1'000'000;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> orders)
    : orders_(std::move(orders)) {
    if (orders_.empty()) bad("group needs at least one cyclic factor");
    order_ = 1;
    for (std::int64_t n : orders_) {
        if (n < 1) bad("cyclic factor order must be >= 1");
        if (order_ > kMaxGroupOrder / n) bad("group order too large");
        order_ *= n;
    }
    strides_.assign(orders_.size(), 1);
    for (std::size_t i = orders_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * orders_[i];
}

bool FiniteAbelianGroup::is_valid(const Element& e) const {
    if (e.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] >= orders_[i]) return false;
    return true;
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
    if (!is_valid(a) || !is_valid(b)) bad("element does not belong to the group");
    Element r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(a[i] + b[i], orders_[i]);
    return r;
}

Element FiniteAbelianGroup::neg(const Element& a) const {
    if (!is_valid(a)) bad("element does not belong to the group");
    Element r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(-a[i], orders_[i]);
    return r;
}

Element FiniteAbelianGroup::sub(const Element& a, const Element& b) const {
    if (!is_valid(a) || !is_valid(b)) bad("element does not belong to the group");
    Element r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(a[i] - b[i], orders_[i]);
    return r;
}

Element FiniteAbelianGroup::scale(std::int64_t n, const Element& a) const {
    if (!is_valid(a)) bad("element does not belong to the group");
    Element r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(n % orders_[i] * a[i], orders_[i]);
    return r;
}

std::int64_t FiniteAbelianGroup::index_of(const Element& e) const {
    if (!is_valid(e)) bad("element does not belong to the group");
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) idx += e[i] * strides_[i];
    return idx;
}

Element FiniteAbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) bad("element index out of range");
    Element e(orders_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = index / strides_[i];
        index %= strides_[i];
    }
    return e;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::string element_str(const Element& e) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ']';
    return os.str();
}

Subgroup::Subgroup(FiniteAbelianGroup G, std::vector<Element> generators)
    : parent_(std::move(G)), generators_(std::move(generators)) {
    for (const Element& g : generators_)
        if (!parent_.is_valid(g)) bad("subgroup generator does not belong to the group");

    // Breadth-first closure under addition of the generators.
    std::vector<char> seen(static_cast<std::size_t>(parent_.order()), 0);
    std::vector<Element> frontier{parent_.zero()};
    seen[static_cast<std::size_t>(parent_.index_of(frontier[0]))] = 1;
    std::vector<std::int64_t> member_indices{parent_.index_of(frontier[0])};
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const Element& x : frontier) {
            for (const Element& g : generators_) {
                Element y = parent_.add(x, g);
                std::int64_t yi = parent_.index_of(y);
                if (!seen[static_cast<std::size_t>(yi)]) {
                    seen[static_cast<std::size_t>(yi)] = 1;
                    member_indices.push_back(yi);
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(member_indices.begin(), member_indices.end());

    parent_index_to_member_.assign(static_cast<std::size_t>(parent_.order()), -1);
    elements_.reserve(member_indices.size());
    for (std::size_t i = 0; i < member_indices.size(); ++i) {
        parent_index_to_member_[static_cast<std::size_t>(member_indices[i])] =
            static_cast<std::int32_t>(i);
        elements_.push_back(parent_.element_at(member_indices[i]));
    }
}

Subgroup Subgroup::whole(const FiniteAbelianGroup& G) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < G.rank(); ++i) {
        Element e = G.zero();
        if (G.orders()[i] > 1) {
            e[i] = 1;
            gens.push_back(std::move(e));
        }
    }
    return Subgroup(G, gens);
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& G) { return Subgroup(G, {}); }

Subgroup Subgroup::from_members(const FiniteAbelianGroup& G,
                                const std::vector<Element>& members) {
    std::vector<char> in_set(static_cast<std::size_t>(G.order()), 0);
    for (const Element& e : members) {
        if (!G.is_valid(e)) bad("subgroup member does not belong to the group");
        in_set[static_cast<std::size_t>(G.index_of(e))] = 1;
    }
    if (!in_set[static_cast<std::size_t>(G.index_of(G.zero()))])
        bad("subgroup member list does not contain the identity");
    for (const Element& a : members)
        for (const Element& b : members)
            if (!in_set[static_cast<std::size_t>(G.index_of(G.sub(a, b)))])
                bad("subgroup member list is not closed under subtraction");

    std::int64_t unique_count = 0;
    for (char c : in_set) unique_count += c;

    // Greedy generating set: repeatedly adjoin the first member outside the
    // closure of the generators found so far.
    std::vector<Element> gens;
    Subgroup cur(G, gens);
    while (cur.size() < unique_count) {
        bool grew = false;
        for (const Element& e : members) {
            if (!cur.contains(e)) {
                gens.push_back(e);
                cur = Subgroup(G, gens);
                grew = true;
                break;
            }
        }
        if (!grew) throw std::logic_error("from_members: closure cannot reach member list");
    }
    return cur;
}

bool Subgroup::contains(const Element& e) const { return member_index(e) >= 0; }

std::int64_t Subgroup::member_index(const Element& e) const {
    if (!parent_.is_valid(e)) bad("element does not belong to the group");
    return parent_index_to_member_[static_cast<std::size_t>(parent_.index_of(e))];
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
    if (!(parent_ == other.parent_)) return false;
    for (const Element& e : other.elements_)
        if (!contains(e)) return false;
    return true;
}

FiniteAbelianGroup make_group(const std::vector<std::int64_t>& orders) {
    return FiniteAbelianGroup(orders);
}

Subgroup subgroup_closure(const FiniteAbelianGroup& G, const std::vector<Element>& gens) {
    return Subgroup(G, gens);
}

Subgroup scale_subgroup(const FiniteAbelianGroup& G, std::int64_t n) {
    if (n < 1) bad("scale factor must be >= 1");
    std::vector<Element> gens;
    for (std::size_t i = 0; i < G.rank(); ++i) {
        Element e = G.zero();
        e[i] = 1;
        gens.push_back(G.scale(n, e));
    }
    return Subgroup(G, gens);
}

Subgroup scale_subgroup(const Subgroup& G, std::int64_t n) {
    if (n < 1) bad("scale factor must be >= 1");
    std::vector<Element> gens;
    gens.reserve(G.elements().size());
    for (const Element& e : G.elements()) gens.push_back(G.parent().scale(n, e));
    return Subgroup(G.parent(), gens);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

QuotientStructure::QuotientStructure(Subgroup carrier, Subgroup sub)
    : carrier_(std::move(carrier)), sub_(std::move(sub)) {
    if (!(carrier_.parent() == sub_.parent()))
        bad("quotient: carrier and subgroup live in different groups");
    if (!carrier_.contains_subgroup(sub_))
        bad("quotient: subgroup is not contained in the carrier");

    const FiniteAbelianGroup& P = carrier_.parent();
    // Scan carrier elements in lexicographic order; the first unvisited
    // element of each coset is its canonical (lex-least) representative.
    parent_index_to_coset_.assign(static_cast<std::size_t>(P.order()), -1);
    for (const Element& x : carrier_.elements()) {
        std::size_t xi = static_cast<std::size_t>(P.index_of(x));
        if (parent_index_to_coset_[xi] >= 0) continue;
        auto c = static_cast<std::int32_t>(coset_reps_.size());
        coset_reps_.push_back(x);
        for (const Element& h : sub_.elements()) {
            Element y = P.add(x, h);
            parent_index_to_coset_[static_cast<std::size_t>(P.index_of(y))] = c;
        }
    }

    exponent_ = 1;
    for (const Element& r : coset_reps_) {
        // Order of the coset r + sub in the quotient group.
        std::int64_t k = 1;
        Element acc = r;
        while (!sub_.contains(acc)) {
            ++k;
            acc = P.add(acc, r);
        }
        exponent_ = std::lcm(exponent_, k);
    }

    mu_rep_ = P.zero();
    if (exponent_ == 1) {
        coset_coords_.assign(1, {});
    } else if (is_prime(exponent_)) {
        prime_ = exponent_;
        build_basis();
    }
}

std::int64_t QuotientStructure::coset_of(const Element& x) const {
    const FiniteAbelianGroup& P = carrier_.parent();
    if (!P.is_valid(x)) bad("element does not belong to the group");
    std::int32_t c = parent_index_to_coset_[static_cast<std::size_t>(P.index_of(x))];
    if (c < 0) bad("element does not belong to the quotient carrier");
    return c;
}

void QuotientStructure::build_basis() {
    const FiniteAbelianGroup& P = carrier_.parent();
    const std::int64_t p = prime_;
    const std::int64_t n_cosets = coset_count();

    // Greedy scan of canonical representatives: keep each coset that is not
    // yet in the F_p span of the cosets kept so far.
    std::vector<char> in_span(static_cast<std::size_t>(n_cosets), 0);
    std::vector<Element> span_elems{P.zero()};
    in_span[static_cast<std::size_t>(coset_of(P.zero()))] = 1;
    for (const Element& r : coset_reps_) {
        if (in_span[static_cast<std::size_t>(coset_of(r))]) continue;
        basis_.push_back(r);
        std::vector<Element> grown;
        grown.reserve(span_elems.size() * static_cast<std::size_t>(p));
        for (const Element& s : span_elems) {
            Element acc = s;
            grown.push_back(acc);
            for (std::int64_t j = 1; j < p; ++j) {
                acc = P.add(acc, r);
                in_span[static_cast<std::size_t>(coset_of(acc))] = 1;
                grown.push_back(acc);
            }
        }
        span_elems = std::move(grown);
    }

    // Tabulate coordinates for every coset by enumerating all p^d
    // combinations; this doubles as a check that the basis spans freely.
    const std::size_t d = basis_.size();
    std::int64_t combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos *= p;
    if (combos != n_cosets)
        throw std::logic_error("quotient basis does not span the quotient");
    coset_coords_.assign(static_cast<std::size_t>(n_cosets), {});
    std::vector<char> filled(static_cast<std::size_t>(n_cosets), 0);
    std::vector<std::int64_t> coords(d, 0);
    for (std::int64_t n = 0; n < combos; ++n) {
        std::int64_t t = n;
        Element acc = P.zero();
        for (std::size_t i = 0; i < d; ++i) {
            coords[i] = t % p;
            t /= p;
            acc = P.add(acc, P.scale(coords[i], basis_[i]));
        }
        std::size_t c = static_cast<std::size_t>(coset_of(acc));
        if (filled[c]) throw std::logic_error("quotient basis is not independent");
        filled[c] = 1;
        coset_coords_[c] = coords;
    }
}

const std::vector<Element>& QuotientStructure::basis() const {
    if (!has_basis())
        bad("quotient exponent " + std::to_string(exponent_) +
            " is not prime: no F_p basis");
    return basis_;
}

const Element& QuotientStructure::basis_rep(std::size_t alpha) const {
    const std::vector<Element>& b = basis();
    if (alpha < b.size()) return b[alpha];
    if (alpha == b.size()) return mu_rep_;
    bad("basis index out of range");
}

std::vector<std::int64_t> QuotientStructure::coordinates(const Element& x) const {
    basis(); // throws when the exponent is not prime
    return coset_coords_[static_cast<std::size_t>(coset_of(x))];
}

QuotientStructure quotient(const FiniteAbelianGroup& G, const Subgroup& H) {
    return QuotientStructure(Subgroup::whole(G), H);
}

QuotientStructure quotient(const Subgroup& G, const Subgroup& H) {
    return QuotientStructure(G, H);
}

std::vector<std::int64_t> coordinates(const Element& x, const QuotientStructure& Q) {
    return Q.coordinates(x);
}

Homomorphism::Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                           std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.rank())
        bad("homomorphism needs one image per source generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!target_.is_valid(images_[i]))
            bad("homomorphism image does not belong to the target group");
        Element scaled = target_.scale(source_.orders()[i], images_[i]);
        if (scaled != target_.zero())
            bad("homomorphism violates the relation " +
                std::to_string(source_.orders()[i]) + " * h(e_" + std::to_string(i) +
                ") = 0");
    }
}

Element Homomorphism::apply(const Element& x) const {
    if (!source_.is_valid(x)) bad("element does not belong to the source group");
    Element acc = target_.zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = target_.add(acc, target_.scale(x[i], images_[i]));
    return acc;
}

Element apply_hom(const Homomorphism& h, const Element& x) { return h.apply(x); }

} // namespace normext
