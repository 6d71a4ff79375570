#ifndef GROUPOIDH_ZFUN_HPP
#define GROUPOIDH_ZFUN_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <set>
#include <tuple>

#include "groupoidh/cantor.hpp"

namespace groupoidh {

using Int = boost::multiprecision::cpp_int;

// Locally constant compactly supported integer function on a Space, in
// canonical trie form: prefix-free cells, equal-valued siblings merged,
// no zero values stored.
class LocIntFun {
public:
    explicit LocIntFun(SpaceRef space);

    // f = sum over cells of value * indicator; overlapping cells add up.
    static LocIntFun make(SpaceRef space,
                          const std::vector<std::pair<Cylinder, Int>>& cells);
    static LocIntFun make_discrete(
        SpaceRef space,
        const std::vector<std::tuple<ComponentId, std::uint64_t, Int>>& cells);

    const SpaceRef& space() const { return space_; }
    const std::map<ComponentId, std::map<BinaryWord, Int>>& cantor_cells() const {
        return cantor_cells_;
    }
    const std::map<ComponentId, std::map<std::uint64_t, Int>>& discrete_cells()
        const {
        return discrete_cells_;
    }

    Int evaluate(const SpacePoint& y) const;
    bool is_zero() const {
        return cantor_cells_.empty() && discrete_cells_.empty();
    }

    LocIntFun add(const LocIntFun& g) const;
    LocIntFun scale(const Int& k) const;
    LocIntFun negate() const { return scale(-1); }
    bool equals(const LocIntFun& g) const;

    ClopenSet support() const;
    std::set<Int> image_values() const;

    std::size_t max_cell_depth() const;

private:
    friend class EnumerationCursor;
    SpaceRef space_;
    std::map<ComponentId, std::map<BinaryWord, Int>> cantor_cells_;
    std::map<ComponentId, std::map<std::uint64_t, Int>> discrete_cells_;
};

// Walks a fixed total order on C(X,Z) for a single full Cantor component:
// stage s lists every canonical function with cell depth <= s and
// |values| <= s not produced by an earlier stage.
class EnumerationCursor {
public:
    explicit EnumerationCursor(SpaceRef space);

    std::uint64_t position() const { return position_; }
    LocIntFun next();

private:
    bool advance_tuple();
    SpaceRef space_;
    std::uint64_t position_ = 0;
    std::size_t stage_ = 1;
    std::vector<std::size_t> tuple_;  // per depth-s cell, balanced value index
    bool exhausted_stage_start_ = true;
};

LocIntFun enumerate_function(SpaceRef space, std::uint64_t k);

struct DeltaWitness {
    CantorPoint separating;
    Int value_at_x;
    Int value_at_y;
};

// Certifies that the Kronecker delta at x is non-constant on the depth-d
// cylinder of x, hence not locally constant at scale d.
DeltaWitness delta_witness(const CantorPoint& x, std::size_t d);

}  // namespace groupoidh

#endif
