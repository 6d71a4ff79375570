#ifndef GROUPOIDH_COMPLEX_HPP
#define GROUPOIDH_COMPLEX_HPP

#include <optional>
#include <random>

#include "groupoidh/maps.hpp"

namespace groupoidh {

// Dense exact integer matrix.  Sizes here stay small (a few hundred rows)
// so dense storage keeps the unimodular bookkeeping simple.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    static IntMatrix identity(std::size_t n);
    IntMatrix multiply(const IntMatrix& o) const;
    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const IntMatrix& o) const = default;

    // Triplet text "row col value", 0-indexed, one entry per line; lines
    // starting with '#' may carry "# rows cols".
    std::string to_triplets() const;
    static IntMatrix from_triplets(const std::string& text);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct SNFResult {
    std::vector<Int> divisors;  // d1 | d2 | ..., nonnegative
    IntMatrix U, V;             // U * M * V = diag(divisors)
    std::size_t rank() const;
    IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

// Smith normal form with deterministic pivoting (smallest nonzero
// absolute value, ties by row then column).
SNFResult smith_normal_form(const IntMatrix& m);

// Finite truncation of a simplicial space: levels 0..maxLevel and, for
// each n >= 1, face maps d_0..d_n from level n to level n-1.
struct SimplicialPresentation {
    std::vector<SpaceRef> levels;                 // size maxLevel + 1
    std::vector<std::vector<LocalHomeo>> faces;   // faces[n-1] = d_0..d_n

    std::size_t max_level() const { return levels.empty() ? 0 : levels.size() - 1; }
    ValidationReport validate() const;
};

// Formal signed combination of face pushforwards.  Term pointers refer
// into the presentation that produced the map.
struct ChainMap {
    SpaceRef domain;
    SpaceRef codomain;
    std::vector<std::pair<int, const LocalHomeo*>> terms;
    LocIntFun apply(const LocIntFun& f) const;
};

// Seeded generator for test chains: up to `max_cells` random cells of
// depth <= max_depth with values in [-5,5] \ {0}.
LocIntFun random_locintfun(const SpaceRef& space, std::size_t max_depth,
                           std::mt19937_64& rng, std::size_t max_cells = 4);

// Unit groupoid on the Cantor set: every level is X, every face the
// identity chart.
SimplicialPresentation nerve_unit_cantor(std::size_t max_level);
// Pair groupoid on {0..size-1}: level n is the discrete set of
// (n+1)-tuples, d_i deletes coordinate i.
SimplicialPresentation nerve_pair_groupoid(std::uint64_t size,
                                           std::size_t max_level);
// One-object groupoid truncation with all levels discrete singletons.
SimplicialPresentation nerve_unit_discrete(std::uint64_t size,
                                           std::size_t max_level);

// The alternating face sum at level n (n = 0 gives the zero map).
ChainMap boundary(const SimplicialPresentation& p, std::size_t n);

struct DDZeroReport {
    bool all_zero = true;
    std::size_t samples = 0;
    std::optional<LocIntFun> counterexample;
};

// Applies d_{n-1} d_n to seeded pseudo-random chains of cell depth <= d.
DDZeroReport verify_dd_zero(const SimplicialPresentation& p, std::size_t n,
                            std::size_t samples, std::size_t depth,
                            std::uint64_t seed = 0x5eed);

// Basis of depth-d cells of one level (pairs of component and either a
// word or a point index).
struct CellBasis {
    std::vector<std::pair<ComponentId, std::variant<BinaryWord, std::uint64_t>>>
        cells;
    std::size_t size() const { return cells.size(); }
    SpacePoint representative(std::size_t i) const;
    LocIntFun indicator(const SpaceRef& space, std::size_t i) const;
};

CellBasis level_basis(const Space& space, std::size_t depth);

// Matrix of the boundary at level n in the depth-d cell bases.  Requires
// all faces depth-preserving at the levels involved.
IntMatrix truncation_matrix(const SimplicialPresentation& p, std::size_t n,
                            std::size_t depth);

struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;  // divisors > 1, divisibility chain
    bool operator==(const HomologyGroup& o) const = default;
};

HomologyGroup homology_at_depth(const SimplicialPresentation& p, std::size_t n,
                                std::size_t depth);

struct HomologyReportRow {
    std::size_t level = 0;
    std::size_t depth = 0;
    HomologyGroup group;
};

struct HomologyReport {
    std::vector<HomologyReportRow> rows;
    bool stable = true;  // ranks scale consistently, torsion depth-independent
};

HomologyReport homology_report(const SimplicialPresentation& p,
                               std::size_t max_n,
                               const std::vector<std::size_t>& depths);

}  // namespace groupoidh

#endif
