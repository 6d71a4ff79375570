// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "groupoidh/realization.hpp"
#include "helpers.hpp"

using namespace groupoidh;
using namespace gh_test;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title, double budget_seconds)
        : number_(number),
          title_(std::move(title)),
          budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ok_ = false;
            if (detail_.empty()) detail_ = what;
        }
    }

    void finish() {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start_)
                .count();
        if (budget_ > 0 && elapsed > budget_) {
            ok_ = false;
            std::ostringstream os;
            os << "exceeded time budget (" << elapsed << "s > " << budget_
               << "s)";
            if (detail_.empty()) detail_ = os.str();
        }
        std::ostringstream os;
        os << (ok_ ? "[PASS]" : "[FAIL]") << " criterion " << number_ << ": "
           << title_;
        os << " (" << static_cast<int>(elapsed * 1000) << " ms)";
        if (!ok_) {
            os << " -- " << detail_;
            ++g_failures;
        }
        std::cout << os.str() << "\n";
    }

private:
    int number_;
    std::string title_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::string detail_;
};

std::string fun_key(const LocIntFun& f) {
    std::string key;
    for (const auto& [id, m] : f.cantor_cells())
        for (const auto& [w, v] : m) key += w + ":" + v.str() + ";";
    return key;
}

void criterion1() {
    Criterion c(1, "boundary matrices of the unit Cantor groupoid alternate "
                   "between zero and identity",
                5.0);
    auto p = nerve_unit_cantor(5);
    for (std::size_t d = 0; d <= 4; ++d) {
        for (std::size_t n : {0, 1, 3, 5}) {
            auto m = truncation_matrix(p, n, d);
            c.require(m.is_zero(), "expected zero matrix at n=" +
                                       std::to_string(n) +
                                       ", d=" + std::to_string(d));
        }
        for (std::size_t n : {2, 4}) {
            auto m = truncation_matrix(p, n, d);
            c.require(m.is_identity() && m.rows() == (std::size_t{1} << d),
                      "expected identity at n=" + std::to_string(n) +
                          ", d=" + std::to_string(d));
        }
    }
    c.finish();
}

void criterion2() {
    Criterion c(2, "unit Cantor homology: rank 2^d in degree 0, trivial in "
                   "degrees 1..4",
                10.0);
    auto p = nerve_unit_cantor(5);
    auto rep = homology_report(p, 4, {0, 1, 2, 3, 4});
    c.require(rep.stable, "report not flagged stable");
    for (const auto& row : rep.rows) {
        if (row.level == 0)
            c.require(row.group.rank == (std::size_t{1} << row.depth),
                      "wrong rank at n=0, d=" + std::to_string(row.depth));
        else
            c.require(row.group.rank == 0 && row.group.torsion.empty(),
                      "nontrivial group at n=" + std::to_string(row.level) +
                          ", d=" + std::to_string(row.depth));
    }
    c.finish();
}

void criterion3() {
    Criterion c(3, "pushforward functoriality, pullback inversion and "
                   "support containment on random maps",
                30.0);
    auto x = full_cantor_space();
    std::mt19937_64 rng(0xacce5501);
    for (int iter = 0; iter < 1000; ++iter) {
        auto p = random_homeo(x, rng);
        auto q = random_homeo(x, rng);
        auto f = random_locintfun(x, 4, rng);
        c.require(pushforward(compose(q, p), f)
                      .equals(pushforward(q, pushforward(p, f))),
                  "functoriality failed at iteration " + std::to_string(iter));
        c.require(clopen_subset_at_depth(pushforward(p, f).support(),
                                         chart_image(p, f.support()), 8),
                  "support containment failed at iteration " +
                      std::to_string(iter));
    }
    for (int iter = 0; iter < 500; ++iter) {
        auto p = random_bijective_homeo(x, rng);
        auto f = random_locintfun(x, 4, rng);
        c.require(pushforward(p, f).equals(pullback(invert(p), f)),
                  "bijective pushforward/pullback mismatch at iteration " +
                      std::to_string(iter));
    }
    c.finish();
}

void criterion4() {
    Criterion c(4, "d o d = 0 on random chains and at matrix level", 0.0);
    auto unit = nerve_unit_cantor(5);
    for (std::size_t n = 2; n <= 5; ++n) {
        auto rep = verify_dd_zero(unit, n, 200, 4);
        c.require(rep.all_zero && rep.samples == 200,
                  "unit Cantor counterexample at n=" + std::to_string(n));
    }
    auto pair3 = nerve_pair_groupoid(3, 4);
    for (std::size_t n = 2; n <= 4; ++n) {
        auto rep = verify_dd_zero(pair3, n, 200, 0);
        c.require(rep.all_zero && rep.samples == 200,
                  "pair groupoid counterexample at n=" + std::to_string(n));
    }
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t d = 0; d <= 4; ++d)
            c.require(truncation_matrix(unit, n - 1, d)
                          .multiply(truncation_matrix(unit, n, d))
                          .is_zero(),
                      "nonzero matrix product at unit n=" + std::to_string(n) +
                          ", d=" + std::to_string(d));
    for (std::size_t n = 2; n <= 4; ++n)
        c.require(truncation_matrix(pair3, n - 1, 0)
                      .multiply(truncation_matrix(pair3, n, 0))
                      .is_zero(),
                  "nonzero matrix product at pair n=" + std::to_string(n));
    c.finish();
}

void criterion5() {
    Criterion c(5, "clopen normalization agrees with brute-force membership "
                   "and is idempotent",
                0.0);
    std::mt19937_64 rng(0xacce5505);
    std::uniform_int_distribution<std::size_t> count(0, 8);
    const auto probes = all_words(6);
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<BinaryWord> input;
        for (std::size_t i = 0, n = count(rng); i < n; ++i)
            input.push_back(random_word(rng, 5));
        auto norm = normalize_words(input);
        c.require(normalize_words(norm) == norm,
                  "not idempotent at iteration " + std::to_string(iter));
        for (const auto& w : probes)
            c.require(brute_member(norm, w) == brute_member(input, w),
                      "membership mismatch at iteration " +
                          std::to_string(iter) + ", word " + w);
    }
    c.finish();
}

void criterion6() {
    Criterion c(6, "enumeration of C(X,Z): 10000 distinct outputs covering "
                   "all depth-2 functions with values in {-1,0,1}",
                10.0);
    auto x = full_cantor_space();
    EnumerationCursor cur(x);
    std::set<std::string> seen;
    std::set<std::string> small;
    for (int k = 0; k < 10000; ++k) {
        auto f = cur.next();
        c.require(seen.insert(fun_key(f)).second,
                  "duplicate at position " + std::to_string(k));
        bool qualifies = f.max_cell_depth() <= 2;
        for (const auto& v : f.image_values())
            qualifies = qualifies && v >= -1 && v <= 1;
        if (qualifies) small.insert(fun_key(f));
    }
    c.require(small.size() >= 81,
              "only " + std::to_string(small.size()) +
                  " of 81 depth-2 {-1,0,1} functions found");
    c.finish();
}

void criterion7() {
    Criterion c(7, "realization identities hold exactly over the rationals",
                0.0);
    std::mt19937_64 rng(0xacce5507);
    std::uniform_int_distribution<std::size_t> dims(0, 5);
    std::uniform_int_distribution<long> weight(0, 9);
    auto random_bary = [&](std::size_t dim) {
        std::vector<Rational> w(dim + 1);
        Rational total = 0;
        for (auto& v : w) {
            v = weight(rng);
            total += v;
        }
        if (total == 0) {
            w[0] = 1;
            total = 1;
        }
        for (auto& v : w) v /= total;
        return BarycentricPoint{w};
    };
    auto random_op = [&](std::size_t source, std::size_t target) {
        SimplicialOperator theta;
        theta.target = target;
        std::uniform_int_distribution<std::size_t> val(0, target);
        for (std::size_t i = 0; i <= source; ++i)
            theta.values.push_back(val(rng));
        std::sort(theta.values.begin(), theta.values.end());
        return theta;
    };
    for (int iter = 0; iter < 500; ++iter) {
        const auto m = dims(rng), n = dims(rng);
        auto theta = random_op(m, n);
        auto t = random_bary(m);
        FinSeqPoint direct;
        for (std::size_t i = 0; i <= m; ++i)
            if (t.coords[i] != 0)
                direct.entries[theta.values[i]] += t.coords[i];
        c.require(embed_j(affine_push(theta, t)) == direct,
                  "j-compatibility failed at iteration " +
                      std::to_string(iter));
    }
    for (int iter = 0; iter < 500; ++iter) {
        std::uniform_int_distribution<std::size_t> support(1, 5);
        std::uniform_int_distribution<std::size_t> index(0, 9);
        std::uniform_int_distribution<long> w(1, 9);
        std::map<std::size_t, Rational> raw;
        for (std::size_t i = 0, k = support(rng); i < k; ++i)
            raw[index(rng)] += w(rng);
        Rational total = 0;
        for (const auto& [k, v] : raw) total += v;
        FinSeqPoint a;
        for (const auto& [k, v] : raw) a.entries[k] = v / total;
        c.require(embed_j(kappa(a)) == a,
                  "kappa round trip failed at iteration " +
                      std::to_string(iter));
        Rational s(weight(rng), 9);
        auto mid = contraction(a, s);
        Rational sum = 0;
        for (const auto& [k, v] : mid.entries) sum += v;
        c.require(sum == 1 && contraction(a, 0) == a &&
                      contraction(a, 1) == FinSeqPoint::e0(),
                  "contraction identity failed at iteration " +
                      std::to_string(iter));
    }
    c.finish();
}

void criterion8() {
    Criterion c(8, "degree-0 comparison: Moore H0 countable, singular H0 of "
                   "continuum cardinality, hence not isomorphic",
                20.0);
    auto rep = compare_h0(3, 3, 100);
    c.require(rep.verdict == Verdict::NotIsomorphic,
              "verdict is not NotIsomorphic");
    c.require(!rep.witnesses.empty(), "no witnesses recorded");
    for (const auto& w : rep.witnesses)
        c.require(w.passed, "witness failed: " + w.name);
    c.finish();
}

void criterion9() {
    Criterion c(9, "pair groupoid homology is Z in degree 0 and trivial in "
                   "degrees 1..3, matching the reduction oracle",
                0.0);
    for (std::uint64_t size : {2, 3}) {
        auto p = nerve_pair_groupoid(size, 4);
        for (std::size_t n = 0; n <= 3; ++n) {
            auto h = homology_at_depth(p, n, 0);
            auto expect = oracle_homology(truncation_matrix(p, n, 0),
                                          truncation_matrix(p, n + 1, 0));
            c.require(h == expect, "oracle mismatch at size=" +
                                       std::to_string(size) +
                                       ", n=" + std::to_string(n));
            c.require(h.rank == (n == 0 ? 1u : 0u) && h.torsion.empty(),
                      "wrong group at size=" + std::to_string(size) +
                          ", n=" + std::to_string(n));
        }
    }
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 9 criteria passed\n";
    return 0;
}
