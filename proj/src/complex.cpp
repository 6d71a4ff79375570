#include "groupoidh/complex.hpp"

#include <algorithm>
#include <sstream>

namespace groupoidh {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix dimension mismatch in multiply");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Int& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Int& v) { return v == 0; });
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string IntMatrix::to_triplets() const {
    std::ostringstream os;
    os << "# " << rows_ << " " << cols_ << "\n";
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) os << i << " " << j << " " << at(i, j) << "\n";
    return os.str();
}

IntMatrix IntMatrix::from_triplets(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::tuple<std::size_t, std::size_t, Int>> entries;
    std::size_t rows = 0, cols = 0;
    bool have_dims = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == '#') {
            char hash;
            std::size_t r, c;
            ls >> hash >> r >> c;
            if (ls) {
                rows = r;
                cols = c;
                have_dims = true;
            }
            continue;
        }
        std::size_t r, c;
        Int v;
        if (!(ls >> r >> c >> v))
            throw std::invalid_argument("malformed triplet line: " + line);
        entries.emplace_back(r, c, v);
        if (!have_dims) {
            rows = std::max(rows, r + 1);
            cols = std::max(cols, c + 1);
        }
    }
    IntMatrix m(rows, cols);
    for (const auto& [r, c, v] : entries) {
        if (r >= rows || c >= cols)
            throw std::invalid_argument("triplet entry outside declared size");
        m.at(r, c) = v;
    }
    return m;
}

std::size_t SNFResult::rank() const {
    return static_cast<std::size_t>(
        std::count_if(divisors.begin(), divisors.end(),
                      [](const Int& d) { return d != 0; }));
}

IntMatrix SNFResult::diagonal(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < divisors.size(); ++i) d.at(i, i) = divisors[i];
    return d;
}

SNFResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t c = 0; c < cols; ++c) a.at(dst, c) += k * a.at(src, c);
        for (std::size_t c = 0; c < rows; ++c) u.at(dst, c) += k * u.at(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t r = 0; r < rows; ++r) a.at(r, dst) += k * a.at(r, src);
        for (std::size_t r = 0; r < cols; ++r) v.at(r, dst) += k * v.at(r, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // Smallest nonzero |entry| in the trailing submatrix, ties by
        // row then column.
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& e = a.at(i, j);
                if (e == 0) continue;
                if (!found || abs(e) < abs(a.at(pr, pc))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                if (q != 0) add_row(i, t, -q);
                if (a.at(i, t) != 0) {
                    swap_rows(t, i);  // strictly smaller remainder as pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (q != 0) add_col(j, t, -q);
                if (a.at(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the trailing block by the pivot.
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a.at(t, t) < 0) negate_row(t);
    }

    SNFResult res;
    res.divisors.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) res.divisors[t] = a.at(t, t);
    res.U = std::move(u);
    res.V = std::move(v);
    return res;
}

ValidationReport SimplicialPresentation::validate() const {
    ValidationReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.diagnostics.push_back(std::move(msg));
    };
    if (levels.empty()) {
        fail("no levels");
        return rep;
    }
    if (faces.size() + 1 != levels.size())
        fail("face list count does not match level count");
    for (std::size_t n = 1; n < levels.size() && n - 1 < faces.size(); ++n) {
        if (faces[n - 1].size() != n + 1)
            fail("level " + std::to_string(n) + ": expected " +
                 std::to_string(n + 1) + " face maps");
        for (std::size_t i = 0; i < faces[n - 1].size(); ++i) {
            const auto& d = faces[n - 1][i];
            if (!(*d.domain() == *levels[n]) ||
                !(*d.codomain() == *levels[n - 1])) {
                fail("face d" + std::to_string(i) + " at level " +
                     std::to_string(n) + ": space mismatch");
                continue;
            }
            auto r = d.validate();
            if (!r.ok)
                for (auto& msg : r.diagnostics)
                    fail("face d" + std::to_string(i) + " at level " +
                         std::to_string(n) + ": " + msg);
        }
    }
    if (!rep.ok) return rep;
    // Simplicial identity d_i d_j = d_{j-1} d_i (i < j), checked on
    // sample points of each level.
    for (std::size_t n = 2; n < levels.size(); ++n) {
        const auto& upper = faces[n - 1];
        const auto& lower = faces[n - 2];
        auto samples = sample_points(*levels[n]);
        for (std::size_t j = 1; j < upper.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) {
                auto lhs = compose(lower[i], upper[j]);
                auto rhs = compose(lower[j - 1], upper[i]);
                for (const auto& pt : samples)
                    if (!(lhs.apply(pt) == rhs.apply(pt))) {
                        fail("simplicial identity d" + std::to_string(i) +
                             " d" + std::to_string(j) + " fails at level " +
                             std::to_string(n) + " on " + pt.to_string());
                        break;
                    }
            }
    }
    return rep;
}

LocIntFun ChainMap::apply(const LocIntFun& f) const {
    LocIntFun acc(codomain);
    for (const auto& [sign, face] : terms) {
        auto pf = pushforward(*face, f);
        acc = acc.add(sign == 1 ? pf : pf.negate());
    }
    return acc;
}

SimplicialPresentation nerve_unit_cantor(std::size_t max_level) {
    if (max_level < 1) throw std::invalid_argument("max level must be >= 1");
    SimplicialPresentation p;
    auto x = full_cantor_space();
    for (std::size_t n = 0; n <= max_level; ++n) p.levels.push_back(x);
    for (std::size_t n = 1; n <= max_level; ++n)
        p.faces.emplace_back(n + 1, LocalHomeo::identity(x));
    return p;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Tuple index with coordinate i removed; tuples are big-endian base-k.
std::uint64_t delete_coordinate(std::uint64_t index, std::uint64_t k,
                                std::size_t arity, std::size_t i) {
    std::vector<std::uint64_t> digits(arity);
    for (std::size_t d = arity; d-- > 0;) {
        digits[d] = index % k;
        index /= k;
    }
    std::uint64_t out = 0;
    for (std::size_t d = 0; d < arity; ++d) {
        if (d == i) continue;
        out = out * k + digits[d];
    }
    return out;
}

}  // namespace

SimplicialPresentation nerve_pair_groupoid(std::uint64_t size,
                                           std::size_t max_level) {
    if (size < 1 || max_level < 1)
        throw std::invalid_argument("pair groupoid needs size, level >= 1");
    SimplicialPresentation p;
    for (std::size_t n = 0; n <= max_level; ++n)
        p.levels.push_back(discrete_space(ipow(size, n + 1)));
    for (std::size_t n = 1; n <= max_level; ++n) {
        std::vector<LocalHomeo> faces;
        for (std::size_t i = 0; i <= n; ++i) {
            std::vector<PrefixChart> charts;
            const std::uint64_t points = ipow(size, n + 1);
            for (std::uint64_t t = 0; t < points; ++t)
                charts.push_back(discrete_chart(
                    0, t, 0, delete_coordinate(t, size, n + 1, i)));
            faces.emplace_back(p.levels[n], p.levels[n - 1], std::move(charts));
        }
        p.faces.push_back(std::move(faces));
    }
    return p;
}

SimplicialPresentation nerve_unit_discrete(std::uint64_t size,
                                           std::size_t max_level) {
    if (size < 1 || max_level < 1)
        throw std::invalid_argument("unit groupoid needs size, level >= 1");
    SimplicialPresentation p;
    auto s = discrete_space(size);
    for (std::size_t n = 0; n <= max_level; ++n) p.levels.push_back(s);
    for (std::size_t n = 1; n <= max_level; ++n)
        p.faces.emplace_back(n + 1, LocalHomeo::identity(s));
    return p;
}

ChainMap boundary(const SimplicialPresentation& p, std::size_t n) {
    if (n > p.max_level())
        throw std::out_of_range("boundary level out of range");
    ChainMap bd;
    bd.domain = p.levels[n];
    bd.codomain = n == 0 ? p.levels[0] : p.levels[n - 1];
    if (n == 0) return bd;  // the zero map
    const auto& faces = p.faces[n - 1];
    for (std::size_t i = 0; i < faces.size(); ++i)
        bd.terms.emplace_back(i % 2 == 0 ? 1 : -1, &faces[i]);
    return bd;
}

LocIntFun random_locintfun(const SpaceRef& space, std::size_t max_depth,
                           std::mt19937_64& rng, std::size_t max_cells) {
    std::vector<std::pair<Cylinder, Int>> cyls;
    std::vector<std::tuple<ComponentId, std::uint64_t, Int>> pts;
    std::uniform_int_distribution<int> value_dist(-5, 5);
    auto nonzero_value = [&]() {
        int v = 0;
        while (v == 0) v = value_dist(rng);
        return Int(v);
    };
    for (ComponentId id = 0; id < space->components.size(); ++id) {
        std::uniform_int_distribution<std::size_t> cell_count(1, max_cells);
        const std::size_t cells = cell_count(rng);
        if (const auto* cc = std::get_if<CantorComponent>(&space->components[id])) {
            for (std::size_t c = 0; c < cells; ++c) {
                std::uniform_int_distribution<std::size_t> rdist(
                    0, cc->restriction.size() - 1);
                BinaryWord w = cc->restriction[rdist(rng)];
                std::uniform_int_distribution<std::size_t> ddist(
                    w.size(), std::max(w.size(), max_depth));
                const std::size_t depth = ddist(rng);
                while (w.size() < depth)
                    w.push_back(rng() & 1 ? '1' : '0');
                cyls.emplace_back(Cylinder{id, w}, nonzero_value());
            }
        } else {
            const auto& dc = std::get<DiscreteComponent>(space->components[id]);
            std::uniform_int_distribution<std::uint64_t> idist(0, dc.size - 1);
            for (std::size_t c = 0; c < cells; ++c)
                pts.emplace_back(id, idist(rng), nonzero_value());
        }
    }
    auto f = LocIntFun::make(space, cyls);
    if (!pts.empty()) f = f.add(LocIntFun::make_discrete(space, pts));
    return f;
}

DDZeroReport verify_dd_zero(const SimplicialPresentation& p, std::size_t n,
                            std::size_t samples, std::size_t depth,
                            std::uint64_t seed) {
    if (n < 2 || n > p.max_level())
        throw std::out_of_range("verify_dd_zero needs 2 <= n <= max level");
    DDZeroReport rep;
    auto bd_n = boundary(p, n);
    auto bd_prev = boundary(p, n - 1);
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        auto chain = random_locintfun(p.levels[n], depth, rng);
        auto out = bd_prev.apply(bd_n.apply(chain));
        ++rep.samples;
        if (!out.is_zero()) {
            rep.all_zero = false;
            if (!rep.counterexample) rep.counterexample = chain;
        }
    }
    return rep;
}

SpacePoint CellBasis::representative(std::size_t i) const {
    const auto& [id, cell] = cells.at(i);
    if (const auto* w = std::get_if<BinaryWord>(&cell))
        return SpacePoint{id, CantorPoint(*w, "0")};
    return SpacePoint{id, std::get<std::uint64_t>(cell)};
}

LocIntFun CellBasis::indicator(const SpaceRef& space, std::size_t i) const {
    const auto& [id, cell] = cells.at(i);
    if (const auto* w = std::get_if<BinaryWord>(&cell))
        return LocIntFun::make(space, {{Cylinder{id, *w}, 1}});
    return LocIntFun::make_discrete(space,
                                    {{id, std::get<std::uint64_t>(cell), 1}});
}

CellBasis level_basis(const Space& space, std::size_t depth) {
    CellBasis b;
    for (ComponentId id = 0; id < space.components.size(); ++id) {
        if (const auto* cc = std::get_if<CantorComponent>(&space.components[id])) {
            for (auto& w : refine_to_depth(cc->restriction, depth))
                b.cells.emplace_back(id, std::move(w));
        } else {
            const auto& dc = std::get<DiscreteComponent>(space.components[id]);
            for (std::uint64_t i = 0; i < dc.size; ++i)
                b.cells.emplace_back(id, i);
        }
    }
    return b;
}

IntMatrix truncation_matrix(const SimplicialPresentation& p, std::size_t n,
                            std::size_t depth) {
    if (n > p.max_level())
        throw std::out_of_range("truncation level out of range");
    const auto& src_space = p.levels[n];
    auto src = level_basis(*src_space, depth);
    if (n == 0) return IntMatrix(0, src.size());
    for (const auto& face : p.faces[n - 1])
        for (const auto& c : face.charts())
            if (!c.discrete && c.depth_shift() != 0)
                throw std::invalid_argument(
                    "non-depth-preserving face: chart [" + c.src_word +
                    "] -> [" + c.dst_word + "] has shift " +
                    std::to_string(c.depth_shift()));
    auto tgt = level_basis(*p.levels[n - 1], depth);
    auto bd = boundary(p, n);
    IntMatrix m(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto col = bd.apply(src.indicator(src_space, j));
        for (std::size_t i = 0; i < tgt.size(); ++i)
            m.at(i, j) = col.evaluate(tgt.representative(i));
    }
    return m;
}

namespace {

// Columns of V past the rank form an integer basis of ker(M).
IntMatrix kernel_basis(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    const std::size_t r = snf.rank();
    IntMatrix k(m.cols(), m.cols() - r);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = r; j < m.cols(); ++j)
            k.at(i, j - r) = snf.V.at(i, j);
    return k;
}

// Solves K * C = B for C (K with full column rank, solution known to
// exist because the image of the next boundary lies in the kernel).
IntMatrix solve_in_kernel_coordinates(const IntMatrix& k, const IntMatrix& b) {
    auto snf = smith_normal_form(k);
    const std::size_t r = snf.rank();
    if (r != k.cols())
        throw std::logic_error("kernel basis is not full column rank");
    auto ub = snf.U.multiply(b);
    IntMatrix y(k.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < ub.rows(); ++i) {
            const Int& e = ub.at(i, j);
            if (i < r) {
                if (e % snf.divisors[i] != 0)
                    throw std::logic_error(
                        "boundary image not divisible in kernel basis");
                y.at(i, j) = e / snf.divisors[i];
            } else if (e != 0) {
                throw std::logic_error("boundary image outside the kernel");
            }
        }
    }
    return snf.V.multiply(y);
}

}  // namespace

HomologyGroup homology_at_depth(const SimplicialPresentation& p, std::size_t n,
                                std::size_t depth) {
    if (n + 1 > p.max_level())
        throw std::out_of_range("homology needs the boundary at level n+1");
    IntMatrix b = truncation_matrix(p, n + 1, depth);
    IntMatrix kernel;
    if (n == 0) {
        kernel = IntMatrix::identity(b.rows());
    } else {
        kernel = kernel_basis(truncation_matrix(p, n, depth));
    }
    HomologyGroup h;
    if (kernel.cols() == 0) return h;
    auto c = solve_in_kernel_coordinates(kernel, b);
    auto snf = smith_normal_form(c);
    h.rank = kernel.cols() - snf.rank();
    for (const auto& d : snf.divisors)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

HomologyReport homology_report(const SimplicialPresentation& p,
                               std::size_t max_n,
                               const std::vector<std::size_t>& depths) {
    if (depths.empty() || !std::is_sorted(depths.begin(), depths.end()))
        throw std::invalid_argument("depths must be ascending and nonempty");
    HomologyReport rep;
    const std::size_t top =
        std::min(max_n, p.max_level() == 0 ? 0 : p.max_level() - 1);
    for (std::size_t n = 0; n <= top; ++n) {
        std::vector<HomologyGroup> per_depth;
        for (std::size_t d : depths) {
            auto h = homology_at_depth(p, n, d);
            rep.rows.push_back({n, d, h});
            per_depth.push_back(std::move(h));
        }
        bool constant = true, doubling = true;
        for (std::size_t i = 1; i < per_depth.size(); ++i) {
            if (per_depth[i].rank != per_depth[i - 1].rank) constant = false;
            if (per_depth[i].rank != 2 * per_depth[i - 1].rank ||
                depths[i] != depths[i - 1] + 1)
                doubling = false;
            if (per_depth[i].torsion != per_depth[i - 1].torsion)
                rep.stable = false;
        }
        if (!constant && !doubling) rep.stable = false;
    }
    return rep;
}

}  // namespace groupoidh
