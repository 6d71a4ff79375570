// Command line front end: homology tables, pushforwards, the C(X,Z)
// enumeration, realization identity checks, the degree-0 comparison, and
// Smith normal forms.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "groupoidh/json_io.hpp"

namespace gh = groupoidh;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnsupported = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << text;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

gh::SimplicialPresentation load_presentation(const std::string& groupoid,
                                             const std::string& file,
                                             std::size_t levels) {
    if (!file.empty())
        return gh::presentation_from_json(gh::Json::parse(slurp(file)));
    if (groupoid == "unit-cantor") return gh::nerve_unit_cantor(levels);
    auto colon = groupoid.find(':');
    if (colon != std::string::npos) {
        const auto name = groupoid.substr(0, colon);
        const auto size = std::stoull(groupoid.substr(colon + 1));
        if (name == "pair") return gh::nerve_pair_groupoid(size, levels);
        if (name == "unit-discrete")
            return gh::nerve_unit_discrete(size, levels);
    }
    throw std::invalid_argument(
        "unknown groupoid \"" + groupoid +
        "\" (expected unit-cantor, unit-discrete:k, or pair:k)");
}

bool has_cantor_level(const gh::SimplicialPresentation& p) {
    for (const auto& l : p.levels)
        for (gh::ComponentId id = 0; id < l->components.size(); ++id)
            if (l->is_cantor(id)) return true;
    return false;
}

int run_homology(const std::string& groupoid, const std::string& file,
                 std::size_t levels, std::size_t depth,
                 const std::string& format, const std::string& out) {
    gh::SimplicialPresentation p;
    try {
        p = load_presentation(groupoid, file, levels);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    auto rep = p.validate();
    if (!rep.ok) {
        for (const auto& d : rep.diagnostics) std::cerr << "error: " << d << "\n";
        return kExitBadInput;
    }
    for (const auto& per_level : p.faces)
        for (const auto& d : per_level)
            for (const auto& c : d.charts())
                if (!c.discrete && c.depth_shift() != 0) {
                    std::cerr << "error: non-depth-preserving face chart ["
                              << c.src_word << "] -> [" << c.dst_word
                              << "] (shift " << c.depth_shift() << ")\n";
                    return kExitUnsupported;
                }
    std::vector<std::size_t> depths;
    if (has_cantor_level(p))
        for (std::size_t d = 0; d <= depth; ++d) depths.push_back(d);
    else
        depths.push_back(0);
    auto report = gh::homology_report(p, p.max_level(), depths);
    if (format == "json") {
        emit(gh::homology_report_to_json(report).dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << "  n  depth  rank  torsion\n";
        for (const auto& row : report.rows) {
            os << "  " << row.level << "  " << row.depth << "      "
               << row.group.rank << "     [";
            for (std::size_t i = 0; i < row.group.torsion.size(); ++i)
                os << (i ? "," : "") << row.group.torsion[i];
            os << "]\n";
        }
        os << "stable: " << (report.stable ? "yes" : "no") << "\n";
        emit(os.str(), out);
    }
    return kExitOk;
}

int run_pushforward(const std::string& map_file, const std::string& fn_file,
                    const std::string& out) {
    try {
        auto p = gh::local_homeo_from_json(gh::Json::parse(slurp(map_file)));
        auto rep = p.validate();
        if (!rep.ok) {
            for (const auto& d : rep.diagnostics)
                std::cerr << "error: " << d << "\n";
            return kExitBadInput;
        }
        auto f = gh::locintfun_from_json(gh::Json::parse(slurp(fn_file)),
                                         p.domain());
        emit(gh::locintfun_to_json(gh::pushforward(p, f)).dump(2) + "\n", out);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

int run_enumerate(std::size_t count, const std::string& out) {
    auto x = gh::full_cantor_space();
    gh::EnumerationCursor cursor(x);
    std::ostringstream os;
    for (std::size_t k = 0; k < count; ++k)
        os << gh::locintfun_to_json(cursor.next()).dump() << "\n";
    emit(os.str(), out);
    return kExitOk;
}

gh::Rational random_rational_01(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(0, 12);
    std::uniform_int_distribution<int> den(1, 12);
    int d = den(rng);
    return gh::Rational(num(rng) % (d + 1), d);
}

gh::BarycentricPoint random_simplex_point(std::size_t dim,
                                          std::mt19937_64& rng) {
    std::uniform_int_distribution<int> w(0, 9);
    std::vector<gh::Int> weights(dim + 1);
    gh::Int total = 0;
    for (auto& x : weights) {
        x = w(rng);
        total += x;
    }
    if (total == 0) {
        weights[0] = 1;
        total = 1;
    }
    gh::BarycentricPoint t;
    for (const auto& x : weights) t.coords.emplace_back(x, total);
    return t;
}

gh::SimplicialOperator random_operator(std::size_t source, std::size_t target,
                                       std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> v(0, target);
    gh::SimplicialOperator theta;
    theta.target = target;
    for (std::size_t i = 0; i <= source; ++i) theta.values.push_back(v(rng));
    std::sort(theta.values.begin(), theta.values.end());
    return theta;
}

gh::FinSeqPoint random_finseq_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> support(1, 5);
    std::uniform_int_distribution<std::size_t> index(0, 9);
    std::uniform_int_distribution<int> w(1, 9);
    std::map<std::size_t, gh::Int> weights;
    const std::size_t n = support(rng);
    for (std::size_t i = 0; i < n; ++i) weights[index(rng)] = w(rng);
    gh::Int total = 0;
    for (const auto& [k, x] : weights) total += x;
    gh::FinSeqPoint a;
    for (const auto& [k, x] : weights) a.entries[k] = gh::Rational(x, total);
    return a;
}

int run_realization_check(std::size_t samples, std::uint64_t seed,
                          bool inject_fault, const std::string& out) {
    std::mt19937_64 rng(seed);
    std::size_t passed = 0, failed = 0;
    std::ostringstream os;
    auto check = [&](bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            os << "FAIL " << what << "\n";
        }
    };
    std::uniform_int_distribution<std::size_t> dims(0, 5);
    auto pushed_embed = [](const gh::SimplicialOperator& theta,
                           const gh::BarycentricPoint& t) {
        // push of the embedded point: each mass t_i lands on theta(i)
        gh::FinSeqPoint a;
        for (std::size_t i = 0; i < t.coords.size(); ++i)
            if (t.coords[i] != 0) a.entries[theta.values[i]] += t.coords[i];
        return a;
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const auto m = dims(rng), n = dims(rng);
        auto theta = random_operator(m, n, rng);
        auto t = random_simplex_point(m, rng);
        check(gh::embed_j(gh::affine_push(theta, t)) == pushed_embed(theta, t),
              "j-compatibility case " + std::to_string(i));
    }
    if (inject_fault) {
        // Deliberately broken push: overwrites instead of summing over
        // the preimage; theta = (0,0) merging both vertices exposes it.
        gh::SimplicialOperator theta{0, {0, 0}};
        gh::BarycentricPoint t;
        t.coords = {gh::Rational(1, 3), gh::Rational(2, 3)};
        gh::FinSeqPoint bad;
        bad.entries[0] = t.coords[1];
        const bool ok = bad == pushed_embed(theta, t);
        if (!ok)
            os << "witness: theta=(0,0), t=(1/3,2/3): overwrite push yields "
                  "(2/3), the fiber sum yields (1)\n";
        check(ok, "j-compatibility (injected overwrite push)");
    }
    for (std::size_t i = 0; i < samples; ++i) {
        auto a = random_finseq_point(rng);
        check(gh::embed_j(gh::kappa(a)) == a,
              "j(kappa(a)) round trip case " + std::to_string(i));
    }
    for (std::size_t i = 0; i < samples; ++i) {
        const auto m = dims(rng), n = dims(rng), l = dims(rng);
        auto t1 = random_operator(m, n, rng);
        auto t2 = random_operator(n, l, rng);
        auto t = random_simplex_point(m, rng);
        check(gh::affine_push(gh::operator_compose(t2, t1), t) ==
                  gh::affine_push(t2, gh::affine_push(t1, t)),
              "operator functoriality case " + std::to_string(i));
    }
    for (std::size_t i = 0; i < samples; ++i) {
        auto a = random_finseq_point(rng);
        auto s = random_rational_01(rng);
        auto mid = gh::contraction(a, s);
        gh::Rational sum = 0;
        bool nonneg = true;
        for (const auto& [k, v] : mid.entries) {
            sum += v;
            nonneg = nonneg && v > 0;
        }
        check(sum == 1 && nonneg && gh::contraction(a, 0) == a &&
                  gh::contraction(a, 1) == gh::FinSeqPoint::e0(),
              "contraction case " + std::to_string(i));
    }
    os << "passed " << passed << " / " << (passed + failed) << "\n";
    emit(os.str(), out);
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_compare_h0(std::size_t levels, std::size_t depth, std::size_t samples,
                   bool inject_fault, const std::string& out) {
    auto p = gh::nerve_unit_cantor(levels);
    if (inject_fault) {
        // Replace d0 at level 1 by the bit swap so the presentation is no
        // longer constant.
        auto x = p.levels[0];
        p.faces[0][0] = gh::LocalHomeo(
            x, x,
            {gh::cantor_chart(0, "0", 0, "1"), gh::cantor_chart(0, "1", 0, "0")});
    }
    auto rep = gh::compare_h0(p, depth, samples);
    emit(gh::comparison_report_to_json(rep).dump(2) + "\n", out);
    return rep.verdict == gh::Verdict::NotIsomorphic ? kExitOk
                                                     : kExitCheckFailed;
}

int run_snf(const std::string& matrix_file, bool transforms,
            const std::string& out) {
    try {
        auto m = gh::IntMatrix::from_triplets(slurp(matrix_file));
        emit(gh::snf_to_json(gh::smith_normal_form(m), transforms).dump(2) +
                 "\n",
             out);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groupoid homology of Cantor-like spaces, exactly"};
    app.require_subcommand(1);

    std::string groupoid = "unit-cantor", file, format = "table", out;
    std::string map_file, fn_file, matrix_file;
    std::size_t levels = 4, depth = 3, samples = 100, count = 10;
    std::uint64_t seed = kDefaultSeed;
    bool transforms = false, inject_fault = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--out", out);
        cmd->add_option("--seed", seed);
    };

    auto* homology = app.add_subcommand("homology", "homology ranks and torsion");
    homology->add_option("--groupoid", groupoid);
    homology->add_option("--file", file);
    homology->add_option("--levels", levels);
    homology->add_option("--depth", depth);
    add_common(homology);

    auto* push = app.add_subcommand("pushforward", "fiber-sum pushforward");
    push->add_option("--map", map_file)->required();
    push->add_option("--fn", fn_file)->required();
    add_common(push);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate C(X,Z)");
    enumerate->add_option("--count", count);
    add_common(enumerate);

    auto* realization =
        app.add_subcommand("realization-check", "realization identity suite");
    realization->add_option("--samples", samples);
    realization->add_flag("--inject-fault", inject_fault)->group("");
    add_common(realization);

    auto* compare = app.add_subcommand("compare-h0", "degree-0 comparison");
    compare->add_option("--levels", levels);
    compare->add_option("--depth", depth);
    compare->add_option("--samples", samples);
    compare->add_flag("--inject-fault", inject_fault)->group("");
    add_common(compare);

    auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix");
    snf->add_option("matrix", matrix_file)->required();
    snf->add_flag("--transforms", transforms);
    add_common(snf);

    CLI11_PARSE(app, argc, argv);

    try {
        if (homology->parsed())
            return run_homology(groupoid, file, levels, depth, format, out);
        if (push->parsed()) return run_pushforward(map_file, fn_file, out);
        if (enumerate->parsed()) return run_enumerate(count, out);
        if (realization->parsed())
            return run_realization_check(samples, seed, inject_fault, out);
        if (compare->parsed())
            return run_compare_h0(levels, depth, samples, inject_fault, out);
        if (snf->parsed()) return run_snf(matrix_file, transforms, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
