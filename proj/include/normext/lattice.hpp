#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "normext/rational.hpp"

namespace normext {

/// The group (1/denom) Z^dim. Points are stored as integer numerator
/// vectors v meaning v / denom; the io layer renders them as reduced
/// fractions.
struct LatticeGroup {
    std::int64_t dim = 1;
    std::int64_t denom = 1;
};

enum class LatticeBaseForm { abs_sum, abs_max, table };

/// Base norm on Z^dim: a named closed form, or an explicit value table on
/// the integer points of the window.
struct LatticeBaseNorm {
    LatticeBaseForm form = LatticeBaseForm::abs_sum;
    std::map<std::vector<std::int64_t>, Rational> table;

    /// Value at an integer point (whole units, not numerators).
    Rational eval(const std::vector<std::int64_t>& integer_point) const;
};

struct LatticeExtension {
    LatticeGroup group;
    std::int64_t window = 1;                       // |x_i| <= window, whole units
    std::vector<std::vector<std::int64_t>> points; // numerators at group.denom
    std::vector<Rational> values;
    std::vector<std::string> certificates;         // witness (w, pair multiset) per point

    const Rational& value_at(const std::vector<std::int64_t>& numerators) const;
};

/// Extend the base norm from Z^dim to (1/m) Z^dim on |x_i| <= window, one
/// prime factor of m at a time, evaluating the extension infimum through
/// the pair-step shortest-path formulation on a grid. Every reported value
/// is certified exact by a pointwise margin argument (candidate residues
/// and optimal paths provably stay inside the computed grid); each prime
/// step keeps only the certified core of its grid. Named closed forms
/// evaluate anywhere, so the internal grid is enlarged automatically until
/// the requested window is certified. A table caps the grid at the radius
/// it covers; when that cannot certify the window, WindowError carries the
/// estimated covering radius that would. For form=table the base's
/// coercivity on the covered radius is assumed to extend beyond it (named
/// forms need no such assumption).
LatticeExtension lattice_extend(std::int64_t dim, std::int64_t m, const LatticeBaseNorm& base,
                                std::int64_t window);

} // namespace normext
