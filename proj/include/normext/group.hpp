#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace normext {

/// Group element as a residue vector, coordinate i in [0, orders[i]).
using Element = std::vector<std::int64_t>;

/// Direct sum of cyclic groups Z_{n_1} + ... + Z_{n_r}.
///
/// Elements are residue vectors; all arithmetic is coordinatewise mod n_i.
/// Every element of the group has a dense index in [0, order()) given by
/// mixed-radix encoding, which the element tables elsewhere rely on.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> orders);

    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::int64_t order() const { return order_; }

    Element zero() const { return Element(orders_.size(), 0); }
    bool is_valid(const Element& e) const;

    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;
    Element scale(std::int64_t n, const Element& a) const;

    std::int64_t index_of(const Element& e) const;
    Element element_at(std::int64_t index) const;

    /// All elements in index (= lexicographic) order.
    std::vector<Element> elements() const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.orders_ == b.orders_;
    }

private:
    std::vector<std::int64_t> orders_;
    std::vector<std::int64_t> strides_;
    std::int64_t order_;
};

std::string element_str(const Element& e);

/// Subgroup stored as the explicit sorted list of its elements.
class Subgroup {
public:
    /// Smallest subgroup of `G` containing `generators`.
    Subgroup(FiniteAbelianGroup G, std::vector<Element> generators);

    static Subgroup whole(const FiniteAbelianGroup& G);
    static Subgroup trivial(const FiniteAbelianGroup& G);
    /// Build from an explicit member list; verifies closure under
    /// subtraction and derives a small generating set.
    static Subgroup from_members(const FiniteAbelianGroup& G,
                                 const std::vector<Element>& members);

    const FiniteAbelianGroup& parent() const { return parent_; }
    const std::vector<Element>& elements() const { return elements_; }
    const std::vector<Element>& generators() const { return generators_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }

    bool contains(const Element& e) const;
    /// Index into elements() for a member, -1 otherwise.
    std::int64_t member_index(const Element& e) const;

    bool contains_subgroup(const Subgroup& other) const;
    bool is_whole_group() const { return size() == parent_.order(); }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.elements_ == b.elements_;
    }

private:
    FiniteAbelianGroup parent_;
    std::vector<Element> generators_;
    std::vector<Element> elements_;
    std::vector<std::int32_t> parent_index_to_member_;
};

FiniteAbelianGroup make_group(const std::vector<std::int64_t>& orders);
Subgroup subgroup_closure(const FiniteAbelianGroup& G, const std::vector<Element>& gens);

/// {n*x : x in G} as a subgroup of G. Requires n >= 1.
Subgroup scale_subgroup(const FiniteAbelianGroup& G, std::int64_t n);
Subgroup scale_subgroup(const Subgroup& G, std::int64_t n);

bool is_prime(std::int64_t n);

/// Coset decomposition of carrier/sub together with the F_p structure the
/// extension step needs when the quotient exponent is prime: a basis of
/// coset representatives g^0..g^{d-1} chosen greedily over the canonical
/// representatives in lexicographic order, completed by the sentinel index
/// mu (basis_size()) whose representative is the group identity.
class QuotientStructure {
public:
    QuotientStructure(Subgroup carrier, Subgroup sub);

    const Subgroup& carrier() const { return carrier_; }
    const Subgroup& sub() const { return sub_; }

    std::int64_t coset_count() const { return static_cast<std::int64_t>(coset_reps_.size()); }
    const std::vector<Element>& coset_reps() const { return coset_reps_; }
    std::int64_t coset_of(const Element& x) const;

    std::int64_t exponent() const { return exponent_; }
    bool has_prime_exponent() const { return prime_ != 0; }
    std::int64_t prime() const { return prime_; }
    /// True when the exponent is prime or 1 (trivial quotient, empty basis).
    bool has_basis() const { return prime_ != 0 || exponent_ == 1; }

    /// Basis coset representatives; only when the exponent is prime (or 1,
    /// giving the empty basis).
    const std::vector<Element>& basis() const;
    std::size_t basis_size() const { return basis().size(); }
    /// Sentinel index with representative 0; equals basis_size().
    std::size_t mu_index() const { return basis().size(); }
    /// g^alpha for alpha in [0, basis_size()], where g^mu = 0.
    const Element& basis_rep(std::size_t alpha) const;

    /// F_p coordinates of x + sub over the basis, each in [0, prime).
    std::vector<std::int64_t> coordinates(const Element& x) const;

private:
    void build_basis();

    Subgroup carrier_;
    Subgroup sub_;
    std::vector<Element> coset_reps_;
    std::vector<std::int32_t> parent_index_to_coset_;
    std::int64_t exponent_ = 1;
    std::int64_t prime_ = 0;
    std::vector<Element> basis_;
    Element mu_rep_;
    std::vector<std::vector<std::int64_t>> coset_coords_;
};

QuotientStructure quotient(const FiniteAbelianGroup& G, const Subgroup& H);
QuotientStructure quotient(const Subgroup& G, const Subgroup& H);

std::vector<std::int64_t> coordinates(const Element& x, const QuotientStructure& Q);

/// Homomorphism between direct-sum groups, defined by the images of the
/// standard generators e_1..e_r of the source. Construction validates the
/// cyclic relations order(e_i) * h(e_i) = 0.
class Homomorphism {
public:
    Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                 std::vector<Element> images);

    const FiniteAbelianGroup& source() const { return source_; }
    const FiniteAbelianGroup& target() const { return target_; }
    const std::vector<Element>& images() const { return images_; }

    Element apply(const Element& x) const;

private:
    FiniteAbelianGroup source_;
    FiniteAbelianGroup target_;
    std::vector<Element> images_;
};

Element apply_hom(const Homomorphism& h, const Element& x);

} // namespace normext
