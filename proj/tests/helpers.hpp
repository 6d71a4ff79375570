// Shared test-only helpers: independent oracles and random generators.
// Everything here stays deliberately naive and separate from the library
// code paths it is used to check.

#ifndef GROUPOIDH_TESTS_HELPERS_HPP
#define GROUPOIDH_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "groupoidh/complex.hpp"

namespace gh_test {

using namespace groupoidh;

// Brute-force cylinder membership: w (depth d) lies in the union of
// `words` iff some word is a prefix of w.
inline bool brute_member(const std::vector<BinaryWord>& words,
                         const BinaryWord& w) {
    return std::any_of(words.begin(), words.end(), [&](const BinaryWord& u) {
        return w.size() >= u.size() && w.compare(0, u.size(), u) == 0;
    });
}

inline std::vector<BinaryWord> all_words(std::size_t depth) {
    std::vector<BinaryWord> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << depth); ++m) {
        BinaryWord w;
        for (std::size_t k = 0; k < depth; ++k)
            w.push_back((m >> (depth - 1 - k)) & 1 ? '1' : '0');
        out.push_back(std::move(w));
    }
    return out;
}

// Textbook Smith normal form without pivot strategy or transform
// tracking: Euclidean elimination on the first nonzero entry.
inline std::vector<Int> oracle_snf_divisors(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<Int> divisors;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a.at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(t, c), a.at(pr, c));
        for (std::size_t r = 0; r < rows; ++r) std::swap(a.at(r, t), a.at(r, pc));
        for (;;) {
            bool again = false;
            for (std::size_t i = t + 1; i < rows; ++i)
                while (a.at(i, t) != 0) {
                    Int q = a.at(i, t) / a.at(t, t);
                    for (std::size_t c = 0; c < cols; ++c)
                        a.at(i, c) -= q * a.at(t, c);
                    if (a.at(i, t) != 0) {
                        for (std::size_t c = 0; c < cols; ++c)
                            std::swap(a.at(t, c), a.at(i, c));
                        again = true;
                    }
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                while (a.at(t, j) != 0) {
                    Int q = a.at(t, j) / a.at(t, t);
                    for (std::size_t r = 0; r < rows; ++r)
                        a.at(r, j) -= q * a.at(r, t);
                    if (a.at(t, j) != 0) {
                        for (std::size_t r = 0; r < rows; ++r)
                            std::swap(a.at(r, t), a.at(r, j));
                        again = true;
                    }
                }
            if (again) continue;
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        for (std::size_t c = 0; c < cols; ++c)
                            a.at(t, c) += a.at(i, c);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        divisors.push_back(abs(a.at(t, t)));
        ++t;
    }
    while (divisors.size() < std::min(rows, cols)) divisors.push_back(0);
    return divisors;
}

inline std::size_t oracle_rank(const IntMatrix& m) {
    auto d = oracle_snf_divisors(m);
    return static_cast<std::size_t>(
        std::count_if(d.begin(), d.end(), [](const Int& x) { return x != 0; }));
}

// Oracle homology via the classical formula: rank = dim ker A - rank B,
// torsion = nontrivial divisors of B.
inline HomologyGroup oracle_homology(const IntMatrix& boundary_n,
                                     const IntMatrix& boundary_next) {
    HomologyGroup h;
    const std::size_t dim = boundary_next.rows();
    const std::size_t rank_a = oracle_rank(boundary_n);
    const std::size_t rank_b = oracle_rank(boundary_next);
    h.rank = dim - rank_a - rank_b;
    for (const auto& d : oracle_snf_divisors(boundary_next))
        if (d > 1) h.torsion.push_back(d);
    return h;
}

// Random cylinder partition of the full Cantor component: repeated
// splits of a random word below the depth cap.
inline std::vector<BinaryWord> random_partition(std::mt19937_64& rng,
                                                std::size_t cells,
                                                std::size_t max_depth) {
    std::vector<BinaryWord> part{""};
    while (part.size() < cells) {
        std::vector<std::size_t> splittable;
        for (std::size_t i = 0; i < part.size(); ++i)
            if (part[i].size() < max_depth) splittable.push_back(i);
        if (splittable.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, splittable.size() - 1);
        const std::size_t i = splittable[pick(rng)];
        BinaryWord w = part[i];
        part.erase(part.begin() + static_cast<std::ptrdiff_t>(i));
        part.push_back(w + "0");
        part.push_back(w + "1");
    }
    std::sort(part.begin(), part.end());
    return part;
}

inline BinaryWord random_word(std::mt19937_64& rng, std::size_t max_depth) {
    std::uniform_int_distribution<std::size_t> len(0, max_depth);
    BinaryWord w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w.push_back(rng() & 1 ? '1' : '0');
    return w;
}

// Random local homeomorphism of the full Cantor space: a random source
// partition with arbitrary target cylinders.
inline LocalHomeo random_homeo(const SpaceRef& x, std::mt19937_64& rng,
                               std::size_t max_charts = 6,
                               std::size_t max_depth = 4) {
    std::uniform_int_distribution<std::size_t> count(1, max_charts);
    auto sources = random_partition(rng, count(rng), max_depth);
    std::vector<PrefixChart> charts;
    for (const auto& s : sources)
        charts.push_back(cantor_chart(0, s, 0, random_word(rng, max_depth)));
    return LocalHomeo(x, x, std::move(charts));
}

// Random bijective map: two partitions with equally many cells, paired
// by a random permutation.
inline LocalHomeo random_bijective_homeo(const SpaceRef& x,
                                         std::mt19937_64& rng,
                                         std::size_t max_charts = 6,
                                         std::size_t max_depth = 4) {
    std::uniform_int_distribution<std::size_t> count(1, max_charts);
    const std::size_t cells = count(rng);
    auto src = random_partition(rng, cells, max_depth);
    std::vector<BinaryWord> dst;
    do {
        dst = random_partition(rng, cells, max_depth);
    } while (dst.size() != src.size());
    std::shuffle(dst.begin(), dst.end(), rng);
    std::vector<PrefixChart> charts;
    for (std::size_t i = 0; i < src.size(); ++i)
        charts.push_back(cantor_chart(0, src[i], 0, dst[i]));
    return LocalHomeo(x, x, std::move(charts));
}

// One representative point per depth-d cell of the full Cantor component.
inline std::vector<SpacePoint> depth_representatives(std::size_t depth) {
    std::vector<SpacePoint> out;
    for (auto& w : all_words(depth))
        out.push_back(SpacePoint{0, CantorPoint(w, "0")});
    return out;
}

// True when every point of `inner` (tested at the given depth) lies in
// `outer`, both over a single Cantor component.
inline bool clopen_subset_at_depth(const ClopenSet& inner,
                                   const ClopenSet& outer, std::size_t depth) {
    auto words_of = [](const ClopenSet& s) {
        auto it = s.words.find(0);
        return it == s.words.end() ? std::vector<BinaryWord>{} : it->second;
    };
    for (const auto& w : all_words(depth))
        if (brute_member(words_of(inner), w) &&
            !brute_member(words_of(outer), w))
            return false;
    return true;
}

}  // namespace gh_test

#endif
