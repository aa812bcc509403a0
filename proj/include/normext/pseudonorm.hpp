#pragma once

#include <map>
#include <string>
#include <vector>

#include "normext/group.hpp"
#include "normext/rational.hpp"

namespace normext {

/// Exact nonnegative-rational value table |.| on the elements of a carrier
/// subgroup. Construction checks totality and domain membership only; the
/// pseudonorm axioms (|0| = 0 and |x-y| <= |x| + |y|) are checked by
/// validate(), which reports every violating element or pair.
class Pseudonorm {
public:
    /// values[i] is the value at carrier.elements()[i].
    Pseudonorm(Subgroup carrier, std::vector<Rational> values);
    /// From an element-keyed table; throws if a carrier element is missing
    /// or a key lies outside the carrier.
    Pseudonorm(Subgroup carrier, const std::map<Element, Rational>& table);

    const Subgroup& carrier() const { return carrier_; }
    const Rational& value(const Element& x) const;
    const Rational& value_at(std::size_t member_index) const { return values_[member_index]; }
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const Pseudonorm& a, const Pseudonorm& b) {
        return a.carrier_ == b.carrier_ && a.values_ == b.values_;
    }

private:
    Subgroup carrier_;
    std::vector<Rational> values_;
};

struct Violation {
    enum class Kind { nonzero_at_identity, negative_value, triangle };
    Kind kind;
    Element x;
    Element y;        // meaningful for triangle violations
    Rational lhs;     // |x-y| for triangle; the offending value otherwise
    Rational rhs;     // |x|+|y| for triangle; 0 otherwise
    std::string describe() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Full axiom scan: |0| = 0, all values >= 0, and |x-y| <= |x| + |y| for
/// every ordered pair of carrier elements.
ValidationReport validate(const Pseudonorm& N);

/// d(x, y) = |x - y|; the invariant pseudometric induced by N.
Rational induced_metric(const Pseudonorm& N, const Element& x, const Element& y);

/// |x| := N(h(x)) on the whole source group of h. Every image h(x) must lie
/// in N's carrier. A valid N always pulls back to a valid pseudonorm.
Pseudonorm pullback_norm(const Homomorphism& h, const Pseudonorm& N);

/// Largest pseudonorm bounded above by the seed table: the value at x is the
/// cheapest way to write x = s_1 + ... + s_r with steps weighted by
/// min(seed(s), seed(-s)). Seeds must be nonnegative; seed(0) is ignored.
/// Used to materialize valid pseudonorms from arbitrary nonnegative data.
Pseudonorm closure_pseudonorm(const Subgroup& carrier, const std::vector<Rational>& seed);

} // namespace normext
