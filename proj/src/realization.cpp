#include "groupoidh/realization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace groupoidh {

void SimplicialOperator::validate() const {
    if (values.empty())
        throw std::invalid_argument("simplicial operator with empty source");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > target)
            throw std::invalid_argument("operator value exceeds target");
        if (i > 0 && values[i] < values[i - 1])
            throw std::invalid_argument("operator not monotone");
    }
}

SimplicialOperator SimplicialOperator::identity(std::size_t n) {
    SimplicialOperator op;
    op.target = n;
    for (std::size_t i = 0; i <= n; ++i) op.values.push_back(i);
    return op;
}

SimplicialOperator operator_compose(const SimplicialOperator& second,
                                    const SimplicialOperator& first) {
    first.validate();
    second.validate();
    if (first.target != second.source())
        throw std::invalid_argument("operator composition mismatch");
    SimplicialOperator out;
    out.target = second.target;
    for (std::size_t v : first.values) out.values.push_back(second.values[v]);
    return out;
}

void BarycentricPoint::validate() const {
    if (coords.empty())
        throw std::invalid_argument("barycentric point needs >= 1 coordinate");
    Rational sum = 0;
    for (const auto& c : coords) {
        if (c < 0) throw std::invalid_argument("negative barycentric coordinate");
        sum += c;
    }
    if (sum != 1)
        throw std::invalid_argument("barycentric coordinates must sum to 1");
}

BarycentricPoint affine_push(const SimplicialOperator& theta,
                             const BarycentricPoint& t) {
    theta.validate();
    t.validate();
    if (t.dim() != theta.source())
        throw std::invalid_argument("affine_push dimension mismatch");
    BarycentricPoint out;
    out.coords.assign(theta.target + 1, Rational(0));
    for (std::size_t i = 0; i < theta.values.size(); ++i)
        out.coords[theta.values[i]] += t.coords[i];
    return out;
}

void FinSeqPoint::validate() const {
    Rational sum = 0;
    for (const auto& [k, v] : entries) {
        if (v == 0) throw std::invalid_argument("stored zero in FinSeqPoint");
        if (v < 0) throw std::invalid_argument("negative FinSeqPoint entry");
        sum += v;
    }
    if (sum != 1) throw std::invalid_argument("FinSeqPoint must sum to 1");
}

Rational FinSeqPoint::at(std::size_t k) const {
    auto it = entries.find(k);
    return it == entries.end() ? Rational(0) : it->second;
}

FinSeqPoint FinSeqPoint::e0() {
    FinSeqPoint a;
    a.entries[0] = 1;
    return a;
}

FinSeqPoint embed_j(const BarycentricPoint& t) {
    t.validate();
    FinSeqPoint a;
    for (std::size_t k = 0; k < t.coords.size(); ++k)
        if (t.coords[k] != 0) a.entries[k] = t.coords[k];
    return a;
}

BarycentricPoint kappa(const FinSeqPoint& a) {
    a.validate();
    const std::size_t n = a.entries.empty() ? 0 : a.entries.rbegin()->first;
    BarycentricPoint t;
    t.coords.assign(n + 1, Rational(0));
    for (const auto& [k, v] : a.entries) t.coords[k] = v;
    return t;
}

FinSeqPoint contraction(const FinSeqPoint& a, const Rational& s) {
    if (s < 0 || s > 1)
        throw std::invalid_argument("contraction parameter outside [0,1]");
    a.validate();
    FinSeqPoint out;
    for (const auto& [k, v] : a.entries) {
        Rational w = (1 - s) * v;
        if (w != 0) out.entries[k] = w;
    }
    Rational& head = out.entries[0];
    head += s;
    if (head == 0) out.entries.erase(0);
    return out;
}

bool is_constant_presentation(const SimplicialPresentation& p) {
    if (p.levels.empty() || !p.validate().ok) return false;
    for (const auto& lvl : p.levels)
        if (!(*lvl == *p.levels[0])) return false;
    for (const auto& level_faces : p.faces)
        for (const auto& d : level_faces) {
            if (!d.is_identity()) return false;
            for (const auto& pt : sample_points(*d.domain()))
                if (!(d.apply(pt) == pt)) return false;
        }
    return true;
}

Pi0Descriptor pi0(const Space& s) {
    Pi0Descriptor d;
    for (const auto& comp : s.components) {
        if (const auto* dc = std::get_if<DiscreteComponent>(&comp))
            d.finite_points += dc->size;
        else
            d.continuum = true;  // singleton path components, continuum many
    }
    return d;
}

std::string H0SingDescription::to_string() const {
    std::ostringstream os;
    if (continuum_generators) {
        os << "direct sum of Z over continuum-many generators (cardinality "
              "2^aleph_0)";
        if (finite_rank > 0) os << " plus Z^" << finite_rank;
    } else {
        os << "Z^" << finite_rank;
    }
    return os.str();
}

H0SingDescription h0_sing(const Pi0Descriptor& d) {
    H0SingDescription g;
    g.finite_rank = d.finite_points;
    g.continuum_generators = d.continuum;
    return g;
}

std::vector<FinSupFun> delta_basis(const std::vector<CantorPoint>& points) {
    std::set<CantorPoint> unique(points.begin(), points.end());
    if (unique.size() != points.size())
        throw std::invalid_argument("delta_basis requires distinct points");
    std::vector<FinSupFun> out;
    out.reserve(points.size());
    for (const auto& x : points) {
        FinSupFun f;
        f.values.emplace(x, 1);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<CantorPoint> distinct_points(std::size_t count) {
    std::vector<CantorPoint> pts;
    pts.reserve(count);
    for (std::size_t i = 0; pts.size() < count; ++i) {
        // Preperiod = binary digits of i followed by '1'; the position of
        // the final 1 separates any two of these points.
        BinaryWord pre;
        for (std::size_t v = i; v > 0; v >>= 1)
            pre.insert(pre.begin(), (v & 1) ? '1' : '0');
        pre.push_back('1');
        pts.emplace_back(pre, "0");
    }
    return pts;
}

namespace {

std::string serialize_cells(const LocIntFun& f) {
    std::ostringstream os;
    for (const auto& [id, m] : f.cantor_cells())
        for (const auto& [w, v] : m) os << id << "[" << w << "]=" << v << ";";
    return os.str();
}

}  // namespace

ComparisonReport compare_h0(std::size_t max_level, std::size_t depth,
                            std::size_t samples) {
    return compare_h0(nerve_unit_cantor(max_level), depth, samples);
}

ComparisonReport compare_h0(const SimplicialPresentation& p, std::size_t depth,
                            std::size_t samples) {
    if (p.max_level() < 2)
        throw std::invalid_argument("compare_h0 needs max level >= 2");
    if (samples < 1) throw std::invalid_argument("compare_h0 needs samples >= 1");
    ComparisonReport rep;
    auto witness = [&rep](std::string name, bool ok, std::string detail) {
        rep.witnesses.push_back({std::move(name), ok, std::move(detail)});
    };

    // Moore side: the boundary matrices must alternate 0 / id, which pins
    // H0 at depth d to the full chain group.
    const bool constant = is_constant_presentation(p);
    witness("constant-presentation", constant,
            constant ? "all levels equal, all faces identity"
                     : "presentation is not the constant simplicial space");

    bool pattern = true;
    std::string pattern_detail = "boundaries alternate 0 and id at depth " +
                                 std::to_string(depth);
    try {
        for (std::size_t n = 0; n <= p.max_level(); ++n) {
            auto m = truncation_matrix(p, n, depth);
            const bool want_zero = (n == 0) || (n % 2 == 1);
            const bool ok = want_zero ? m.is_zero() : m.is_identity();
            if (!ok) {
                pattern = false;
                pattern_detail =
                    "boundary at level " + std::to_string(n) + " is not " +
                    (want_zero ? "zero" : "the identity");
                break;
            }
        }
    } catch (const std::exception& e) {
        pattern = false;
        pattern_detail = e.what();
    }
    witness("boundary-pattern", pattern, pattern_detail);

    // Countability: a pairwise distinct initial segment of the enumeration
    // and full coverage of every completely emitted stage.
    auto x = full_cantor_space();
    EnumerationCursor cursor(x);
    std::vector<LocIntFun> firsts;
    std::set<std::string> seen;
    bool distinct = true;
    for (std::size_t k = 0; k < samples; ++k) {
        firsts.push_back(cursor.next());
        if (!seen.insert(serialize_cells(firsts.back())).second) distinct = false;
    }
    witness("enumeration-distinct", distinct,
            "first " + std::to_string(samples) + " outputs pairwise distinct");

    bool stage_complete = true;
    std::string stage_detail = "no full stage inside the sample prefix";
    if (samples >= 9) {
        // Stage 1 holds every function with cell depth <= 1 and |values|
        // <= 1; brute-force that set and compare with the first 9 outputs.
        std::set<std::string> expected;
        for (int v0 = -1; v0 <= 1; ++v0)
            for (int v1 = -1; v1 <= 1; ++v1) {
                std::vector<std::pair<Cylinder, Int>> cells;
                if (v0 != 0) cells.emplace_back(Cylinder{0, "0"}, v0);
                if (v1 != 0) cells.emplace_back(Cylinder{0, "1"}, v1);
                expected.insert(serialize_cells(LocIntFun::make(x, cells)));
            }
        std::set<std::string> got;
        for (std::size_t k = 0; k < 9; ++k)
            got.insert(serialize_cells(firsts[k]));
        stage_complete = got == expected;
        stage_detail = "first 9 outputs cover every function of depth <= 1 "
                       "with values in {-1,0,1}";
    }
    witness("enumeration-stage-complete", stage_complete, stage_detail);

    // Singular side: pi0 formula plus delta-function witnesses.
    auto desc = pi0(*p.levels[0]);
    const bool cont = desc.continuum && desc.finite_points == 0;
    witness("pi0-continuum", cont,
            cont ? "every path component a singleton; continuum many"
                 : "level-0 space is not a pure Cantor component");

    auto points = distinct_points(samples);
    auto deltas = delta_basis(points);
    bool deltas_distinct = true;
    for (std::size_t i = 0; i < deltas.size() && deltas_distinct; ++i)
        for (std::size_t j = i + 1; j < deltas.size(); ++j)
            if (deltas[i] == deltas[j]) {
                deltas_distinct = false;
                break;
            }
    witness("delta-distinct", deltas_distinct,
            std::to_string(samples) + " pairwise distinct delta functions");

    bool nonconstant = true;
    for (const auto& xpt : points) {
        auto w = delta_witness(xpt, depth);
        const Cylinder shared{0, xpt.prefix(depth)};
        if (!(w.separating != xpt) || !point_in_cylinder(w.separating, shared) ||
            w.value_at_x != 1 || w.value_at_y != 0) {
            nonconstant = false;
            break;
        }
    }
    witness("delta-not-locally-constant", nonconstant,
            "each delta takes values 1 and 0 inside one depth-" +
                std::to_string(depth) + " cylinder");

    rep.moore_group = "C(X,Z), countable by enumeration";
    rep.singular_group = h0_sing(desc).to_string();
    const bool all = std::all_of(rep.witnesses.begin(), rep.witnesses.end(),
                                 [](const auto& w) { return w.passed; });
    if (all) {
        rep.verdict = Verdict::NotIsomorphic;
        rep.reason = "countable vs. cardinality >= 2^aleph_0";
    } else {
        rep.verdict = Verdict::Inconclusive;
        for (const auto& w : rep.witnesses)
            if (!w.passed) {
                rep.reason = "failed check: " + w.name;
                break;
            }
    }
    return rep;
}

}  // namespace groupoidh
