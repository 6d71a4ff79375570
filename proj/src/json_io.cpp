#include "groupoidh/json_io.hpp"

namespace groupoidh {

Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or integer string");
}

Json space_to_json(const Space& s) {
    Json comps = Json::array();
    for (const auto& c : s.components) {
        if (const auto* cc = std::get_if<CantorComponent>(&c))
            comps.push_back({{"type", "cantor"}, {"restriction", cc->restriction}});
        else
            comps.push_back({{"type", "discrete"},
                             {"size", std::get<DiscreteComponent>(c).size}});
    }
    return Json{{"components", comps}};
}

SpaceRef space_from_json(const Json& j) {
    auto s = std::make_shared<Space>();
    for (const auto& c : j.at("components")) {
        const auto type = c.at("type").get<std::string>();
        if (type == "cantor") {
            CantorComponent cc;
            if (c.contains("restriction"))
                cc.restriction = normalize_words(
                    c.at("restriction").get<std::vector<BinaryWord>>());
            if (cc.restriction.empty())
                throw std::invalid_argument("empty Cantor restriction");
            s->components.push_back(std::move(cc));
        } else if (type == "discrete") {
            s->components.push_back(
                DiscreteComponent{c.at("size").get<std::uint64_t>()});
        } else {
            throw std::invalid_argument("unknown component type: " + type);
        }
    }
    return s;
}

Json clopen_to_json(const ClopenSet& s) {
    Json out = Json::array();
    for (const auto& [id, ws] : s.words)
        for (const auto& w : ws)
            out.push_back({{"component", id}, {"word", w}});
    for (const auto& [id, idxs] : s.indices)
        for (auto i : idxs) out.push_back({{"component", id}, {"index", i}});
    return out;
}

Json locintfun_to_json(const LocIntFun& f) {
    std::vector<Json> parts;
    for (ComponentId id = 0; id < f.space()->components.size(); ++id) {
        Json cells = Json::array();
        if (auto it = f.cantor_cells().find(id); it != f.cantor_cells().end())
            for (const auto& [w, v] : it->second)
                cells.push_back({{"word", w}, {"value", int_to_json(v)}});
        if (auto it = f.discrete_cells().find(id); it != f.discrete_cells().end())
            for (const auto& [idx, v] : it->second)
                cells.push_back({{"index", idx}, {"value", int_to_json(v)}});
        parts.push_back({{"component", id}, {"cells", cells}});
    }
    if (parts.size() == 1) return parts[0];
    return Json(parts);
}

LocIntFun locintfun_from_json(const Json& j, SpaceRef space) {
    std::vector<Json> parts;
    if (j.is_array())
        parts.assign(j.begin(), j.end());
    else
        parts.push_back(j);
    std::vector<std::pair<Cylinder, Int>> cyls;
    std::vector<std::tuple<ComponentId, std::uint64_t, Int>> pts;
    for (const auto& part : parts) {
        const auto id = part.at("component").get<ComponentId>();
        for (const auto& cell : part.at("cells")) {
            Int v = int_from_json(cell.at("value"));
            if (cell.contains("word"))
                cyls.emplace_back(
                    Cylinder{id, cell.at("word").get<BinaryWord>()}, v);
            else
                pts.emplace_back(id, cell.at("index").get<std::uint64_t>(), v);
        }
    }
    auto f = LocIntFun::make(space, cyls);
    if (!pts.empty()) f = f.add(LocIntFun::make_discrete(space, pts));
    return f;
}

namespace {

Json chart_to_json(const PrefixChart& c) {
    Json src{{"component", c.src_component}};
    Json dst{{"component", c.dst_component}};
    if (c.discrete) {
        src["index"] = c.src_index;
        dst["index"] = c.dst_index;
    } else {
        src["word"] = c.src_word;
        dst["word"] = c.dst_word;
    }
    return Json{{"src", src}, {"dst", dst}};
}

PrefixChart chart_from_json(const Json& j) {
    const auto& src = j.at("src");
    const auto& dst = j.at("dst");
    const auto sc = src.at("component").get<ComponentId>();
    const auto dc = dst.at("component").get<ComponentId>();
    if (src.contains("word") != dst.contains("word"))
        throw std::invalid_argument("chart mixes word and index endpoints");
    if (src.contains("word"))
        return cantor_chart(sc, src.at("word").get<BinaryWord>(), dc,
                            dst.at("word").get<BinaryWord>());
    return discrete_chart(sc, src.at("index").get<std::uint64_t>(), dc,
                          dst.at("index").get<std::uint64_t>());
}

std::vector<PrefixChart> charts_from_json(const Json& j) {
    std::vector<PrefixChart> charts;
    for (const auto& c : j) charts.push_back(chart_from_json(c));
    return charts;
}

}  // namespace

Json local_homeo_to_json(const LocalHomeo& p) {
    Json charts = Json::array();
    for (const auto& c : p.charts()) charts.push_back(chart_to_json(c));
    return Json{{"domain", space_to_json(*p.domain())},
                {"codomain", space_to_json(*p.codomain())},
                {"charts", charts}};
}

LocalHomeo local_homeo_from_json(const Json& j) {
    return LocalHomeo(space_from_json(j.at("domain")),
                      space_from_json(j.at("codomain")),
                      charts_from_json(j.at("charts")));
}

Json presentation_to_json(const SimplicialPresentation& p) {
    Json levels = Json::array();
    for (const auto& l : p.levels) levels.push_back(space_to_json(*l));
    Json faces = Json::array();
    for (const auto& per_level : p.faces) {
        Json row = Json::array();
        for (const auto& d : per_level) {
            Json charts = Json::array();
            for (const auto& c : d.charts()) charts.push_back(chart_to_json(c));
            row.push_back(Json{{"charts", charts}});
        }
        faces.push_back(row);
    }
    return Json{{"maxLevel", p.max_level()}, {"levels", levels},
                {"faces", faces}};
}

SimplicialPresentation presentation_from_json(const Json& j) {
    SimplicialPresentation p;
    for (const auto& l : j.at("levels")) p.levels.push_back(space_from_json(l));
    const auto max_level = j.at("maxLevel").get<std::size_t>();
    if (p.levels.size() != max_level + 1)
        throw std::invalid_argument("maxLevel does not match level count");
    const auto& faces = j.at("faces");
    for (std::size_t n = 1; n <= max_level; ++n) {
        if (n - 1 >= faces.size())
            throw std::invalid_argument("missing face maps for level " +
                                        std::to_string(n));
        std::vector<LocalHomeo> row;
        for (const auto& d : faces.at(n - 1))
            row.emplace_back(p.levels[n], p.levels[n - 1],
                             charts_from_json(d.at("charts")));
        p.faces.push_back(std::move(row));
    }
    return p;
}

Json homology_report_to_json(const HomologyReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json torsion = Json::array();
        for (const auto& t : row.group.torsion) torsion.push_back(int_to_json(t));
        rows.push_back({{"level", row.level},
                        {"depth", row.depth},
                        {"rank", row.group.rank},
                        {"torsion", torsion}});
    }
    return Json{{"groups", rows}, {"stable", r.stable}};
}

Json snf_to_json(const SNFResult& r, bool include_transforms) {
    Json divisors = Json::array();
    for (const auto& d : r.divisors) divisors.push_back(int_to_json(d));
    Json out{{"divisors", divisors}, {"rank", r.rank()}};
    if (include_transforms) {
        auto mat = [](const IntMatrix& m) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < m.cols(); ++j)
                    row.push_back(int_to_json(m.at(i, j)));
                rows.push_back(row);
            }
            return rows;
        };
        out["U"] = mat(r.U);
        out["V"] = mat(r.V);
    }
    return out;
}

Json comparison_report_to_json(const ComparisonReport& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(
            {{"name", w.name}, {"passed", w.passed}, {"detail", w.detail}});
    return Json{
        {"moore", Json{{"group", r.moore_group}}},
        {"singular", Json{{"group", r.singular_group}}},
        {"verdict",
         r.verdict == Verdict::NotIsomorphic ? "NotIsomorphic" : "Inconclusive"},
        {"reason", r.reason},
        {"witnesses", witnesses}};
}

}  // namespace groupoidh
