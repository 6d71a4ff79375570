#ifndef GROUPOIDH_REALIZATION_HPP
#define GROUPOIDH_REALIZATION_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "groupoidh/complex.hpp"

namespace groupoidh {

using Rational = boost::multiprecision::cpp_rational;

// Monotone map [m] -> [n], stored as values theta(0) <= ... <= theta(m).
struct SimplicialOperator {
    std::size_t target = 0;  // n
    std::vector<std::size_t> values;

    std::size_t source() const { return values.size() - 1; }  // m
    void validate() const;
    static SimplicialOperator identity(std::size_t n);
};

SimplicialOperator operator_compose(const SimplicialOperator& second,
                                    const SimplicialOperator& first);

// Exact barycentric point of a standard simplex.
struct BarycentricPoint {
    std::vector<Rational> coords;  // size dim + 1, nonnegative, sums to 1

    std::size_t dim() const { return coords.size() - 1; }
    void validate() const;
    bool operator==(const BarycentricPoint& o) const = default;
};

// (theta_*(t))_j = sum over theta^{-1}(j) of t_i.
BarycentricPoint affine_push(const SimplicialOperator& theta,
                             const BarycentricPoint& t);

// Finitely supported point of the infinite simplex: nonnegative rationals
// summing to 1, zeros not stored.
struct FinSeqPoint {
    std::map<std::size_t, Rational> entries;

    void validate() const;
    Rational at(std::size_t k) const;
    static FinSeqPoint e0();
    bool operator==(const FinSeqPoint& o) const = default;
};

FinSeqPoint embed_j(const BarycentricPoint& t);
BarycentricPoint kappa(const FinSeqPoint& a);
// (1-s) * a + s * e0, for rational s in [0,1].
FinSeqPoint contraction(const FinSeqPoint& a, const Rational& s);

// True iff every level equals level 0 and every face map is semantically
// the identity.
bool is_constant_presentation(const SimplicialPresentation& p);

enum class CardinalityClass { Finite, Aleph0, Continuum };

struct Pi0Descriptor {
    // Finite points contributed by discrete components plus, when any
    // Cantor component is present, a continuum of singleton components.
    std::uint64_t finite_points = 0;
    bool continuum = false;

    CardinalityClass cardinality() const {
        return continuum ? CardinalityClass::Continuum : CardinalityClass::Finite;
    }
};

Pi0Descriptor pi0(const Space& s);

struct H0SingDescription {
    // Free abelian group on pi0; rank is finite or of continuum cardinality.
    std::uint64_t finite_rank = 0;
    bool continuum_generators = false;

    CardinalityClass group_cardinality() const {
        return continuum_generators ? CardinalityClass::Continuum
                                    : CardinalityClass::Finite;
    }
    std::string to_string() const;
};

H0SingDescription h0_sing(const Pi0Descriptor& d);

// Finitely supported integer function on points of X (an element of the
// direct sum over X of Z).
struct FinSupFun {
    std::map<CantorPoint, Int> values;  // nonzero only
    bool operator==(const FinSupFun& o) const = default;
};

std::vector<FinSupFun> delta_basis(const std::vector<CantorPoint>& points);

struct ComparisonWitness {
    std::string name;
    bool passed = false;
    std::string detail;
};

enum class Verdict { NotIsomorphic, Inconclusive };

struct ComparisonReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
    std::vector<ComparisonWitness> witnesses;
    std::string moore_group;     // description of H0 on the Moore side
    std::string singular_group;  // description of singular H0
};

// The degree-0 comparison for the Cantor unit groupoid: Moore side
// verified via boundary matrices and the countable enumeration, singular
// side via the pi0 formula and delta-function witnesses.  Any failed
// sub-check downgrades the verdict to Inconclusive.
ComparisonReport compare_h0(std::size_t max_level, std::size_t depth,
                            std::size_t samples);
ComparisonReport compare_h0(const SimplicialPresentation& p, std::size_t depth,
                            std::size_t samples);

// Deterministic list of pairwise distinct eventually periodic points.
std::vector<CantorPoint> distinct_points(std::size_t count);

}  // namespace groupoidh

#endif
