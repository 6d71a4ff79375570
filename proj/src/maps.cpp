#include "groupoidh/maps.hpp"

#include <algorithm>
#include <sstream>

namespace groupoidh {

PrefixChart cantor_chart(ComponentId src_comp, BinaryWord src_word,
                         ComponentId dst_comp, BinaryWord dst_word) {
    require_binary_word(src_word);
    require_binary_word(dst_word);
    PrefixChart c;
    c.src_component = src_comp;
    c.dst_component = dst_comp;
    c.src_word = std::move(src_word);
    c.dst_word = std::move(dst_word);
    return c;
}

PrefixChart discrete_chart(ComponentId src_comp, std::uint64_t src_index,
                           ComponentId dst_comp, std::uint64_t dst_index) {
    PrefixChart c;
    c.discrete = true;
    c.src_component = src_comp;
    c.dst_component = dst_comp;
    c.src_index = src_index;
    c.dst_index = dst_index;
    return c;
}

LocalHomeo::LocalHomeo(SpaceRef domain, SpaceRef codomain,
                       std::vector<PrefixChart> charts)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      charts_(std::move(charts)) {
    if (!domain_ || !codomain_) throw std::invalid_argument("null space");
}

namespace {

std::string chart_name(std::size_t i) {
    return "chart #" + std::to_string(i);
}

}  // namespace

ValidationReport LocalHomeo::validate() const {
    ValidationReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.diagnostics.push_back(std::move(msg));
    };
    for (std::size_t i = 0; i < charts_.size(); ++i) {
        const auto& c = charts_[i];
        if (c.src_component >= domain_->components.size() ||
            c.dst_component >= codomain_->components.size()) {
            fail(chart_name(i) + ": component mismatch (no such component)");
            continue;
        }
        const bool src_cantor = domain_->is_cantor(c.src_component);
        const bool dst_cantor = codomain_->is_cantor(c.dst_component);
        if (c.discrete ? (src_cantor || dst_cantor)
                       : (!src_cantor || !dst_cantor)) {
            fail(chart_name(i) + ": component mismatch (kind)");
            continue;
        }
        if (c.discrete) {
            const auto& sd =
                std::get<DiscreteComponent>(domain_->component(c.src_component));
            const auto& dd = std::get<DiscreteComponent>(
                codomain_->component(c.dst_component));
            if (c.src_index >= sd.size || c.dst_index >= dd.size)
                fail(chart_name(i) + ": component mismatch (index range)");
        } else {
            const auto& sr = std::get<CantorComponent>(
                                 domain_->component(c.src_component))
                                 .restriction;
            const auto& dr = std::get<CantorComponent>(
                                 codomain_->component(c.dst_component))
                                 .restriction;
            auto inside = [](const std::vector<BinaryWord>& restr,
                             const BinaryWord& w) {
                return std::any_of(restr.begin(), restr.end(),
                                   [&](const BinaryWord& r) {
                                       auto rel = word_relation(r, w);
                                       return rel == WordRelation::Equal ||
                                              rel == WordRelation::UPrefixOfV;
                                   });
            };
            if (!inside(sr, c.src_word))
                fail(chart_name(i) + ": component mismatch (source [" +
                     c.src_word + "] outside restriction)");
            if (!inside(dr, c.dst_word))
                fail(chart_name(i) + ": component mismatch (target [" +
                     c.dst_word + "] outside restriction)");
        }
    }
    if (!rep.ok) return rep;
    // Pairwise disjoint sources.
    for (std::size_t i = 0; i < charts_.size(); ++i)
        for (std::size_t j = i + 1; j < charts_.size(); ++j) {
            const auto& a = charts_[i];
            const auto& b = charts_[j];
            if (a.src_component != b.src_component) continue;
            bool overlap;
            if (a.discrete)
                overlap = a.src_index == b.src_index;
            else
                overlap = word_relation(a.src_word, b.src_word) !=
                          WordRelation::Disjoint;
            if (overlap)
                fail("overlap: sources of " + chart_name(i) + " and " +
                     chart_name(j));
        }
    // Exact cover of the domain.
    std::vector<Cylinder> cyls;
    std::vector<std::tuple<ComponentId, std::uint64_t, Int>> pts;
    ClopenSet covered;
    for (const auto& c : charts_) {
        if (c.discrete)
            covered.indices[c.src_component].push_back(c.src_index);
        else
            cyls.push_back({c.src_component, c.src_word});
    }
    {
        ClopenSet cw = normalize_clopen(cyls);
        covered.words = std::move(cw.words);
        for (auto& [id, v] : covered.indices) std::sort(v.begin(), v.end());
    }
    if (!(covered == domain_->full()))
        fail("gap: chart sources do not cover the domain");
    return rep;
}

void LocalHomeo::require_valid() const {
    auto rep = validate();
    if (!rep.ok) {
        std::ostringstream os;
        os << "invalid local homeomorphism:";
        for (const auto& d : rep.diagnostics) os << " " << d << ";";
        throw std::invalid_argument(os.str());
    }
}

SpacePoint LocalHomeo::apply(const SpacePoint& y) const {
    for (const auto& c : charts_) {
        if (c.src_component != y.component) continue;
        if (c.discrete) {
            if (std::get<std::uint64_t>(y.value) == c.src_index)
                return SpacePoint{c.dst_component, c.dst_index};
        } else {
            const auto& x = std::get<CantorPoint>(y.value);
            if (point_in_cylinder(x, {y.component, c.src_word}))
                return SpacePoint{
                    c.dst_component,
                    x.drop_prefix(c.src_word.size()).prepend(c.dst_word)};
        }
    }
    throw std::invalid_argument("point " + y.to_string() + " in no chart");
}

std::vector<SpacePoint> LocalHomeo::fiber(const SpacePoint& z) const {
    std::vector<SpacePoint> out;
    for (const auto& c : charts_) {
        if (c.dst_component != z.component) continue;
        if (c.discrete) {
            if (std::get<std::uint64_t>(z.value) == c.dst_index)
                out.push_back(SpacePoint{c.src_component, c.src_index});
        } else {
            const auto& x = std::get<CantorPoint>(z.value);
            if (point_in_cylinder(x, {z.component, c.dst_word}))
                out.push_back(SpacePoint{
                    c.src_component,
                    x.drop_prefix(c.dst_word.size()).prepend(c.src_word)});
        }
    }
    return out;
}

bool LocalHomeo::is_depth_preserving() const {
    return std::all_of(charts_.begin(), charts_.end(), [](const PrefixChart& c) {
        return c.discrete || c.depth_shift() == 0;
    });
}

bool LocalHomeo::is_identity() const {
    if (!(*domain_ == *codomain_)) return false;
    return std::all_of(charts_.begin(), charts_.end(), [](const PrefixChart& c) {
        if (c.src_component != c.dst_component) return false;
        return c.discrete ? c.src_index == c.dst_index
                          : c.src_word == c.dst_word;
    });
}

LocalHomeo LocalHomeo::identity(SpaceRef space) {
    std::vector<PrefixChart> charts;
    for (ComponentId id = 0; id < space->components.size(); ++id) {
        if (const auto* cc = std::get_if<CantorComponent>(&space->components[id])) {
            for (const auto& w : cc->restriction)
                charts.push_back(cantor_chart(id, w, id, w));
        } else {
            const auto& dc = std::get<DiscreteComponent>(space->components[id]);
            for (std::uint64_t i = 0; i < dc.size; ++i)
                charts.push_back(discrete_chart(id, i, id, i));
        }
    }
    return LocalHomeo(space, space, std::move(charts));
}

namespace {

void require_space(const LocIntFun& f, const SpaceRef& s, const char* what) {
    if (!(*f.space() == *s))
        throw std::invalid_argument(std::string("space mismatch: ") + what);
}

LocIntFun assemble(SpaceRef space,
                   const std::vector<std::pair<Cylinder, Int>>& cyl_cells,
                   const std::vector<std::tuple<ComponentId, std::uint64_t, Int>>&
                       disc_cells) {
    auto f = LocIntFun::make(space, cyl_cells);
    if (!disc_cells.empty())
        f = f.add(LocIntFun::make_discrete(space, disc_cells));
    return f;
}

}  // namespace

LocIntFun pushforward(const LocalHomeo& p, const LocIntFun& f) {
    require_space(f, p.domain(), "function not on the map's domain");
    std::vector<std::pair<Cylinder, Int>> cyls;
    std::vector<std::tuple<ComponentId, std::uint64_t, Int>> pts;
    for (const auto& c : p.charts()) {
        if (c.discrete) {
            auto it = f.discrete_cells().find(c.src_component);
            if (it == f.discrete_cells().end()) continue;
            auto jt = it->second.find(c.src_index);
            if (jt != it->second.end())
                pts.emplace_back(c.dst_component, c.dst_index, jt->second);
        } else {
            auto it = f.cantor_cells().find(c.src_component);
            if (it == f.cantor_cells().end()) continue;
            for (const auto& [w, v] : it->second) {
                switch (word_relation(c.src_word, w)) {
                    case WordRelation::Equal:
                    case WordRelation::UPrefixOfV:
                        // cell [w] = [u.t] maps onto [v.t]
                        cyls.emplace_back(
                            Cylinder{c.dst_component,
                                     c.dst_word + w.substr(c.src_word.size())},
                            v);
                        break;
                    case WordRelation::VPrefixOfU:
                        // cell covers the whole chart source
                        cyls.emplace_back(Cylinder{c.dst_component, c.dst_word},
                                          v);
                        break;
                    case WordRelation::Disjoint: break;
                }
            }
        }
    }
    return assemble(p.codomain(), cyls, pts);
}

LocIntFun pullback(const LocalHomeo& p, const LocIntFun& g) {
    require_space(g, p.codomain(), "function not on the map's codomain");
    std::vector<std::pair<Cylinder, Int>> cyls;
    std::vector<std::tuple<ComponentId, std::uint64_t, Int>> pts;
    for (const auto& c : p.charts()) {
        if (c.discrete) {
            auto it = g.discrete_cells().find(c.dst_component);
            if (it == g.discrete_cells().end()) continue;
            auto jt = it->second.find(c.dst_index);
            if (jt != it->second.end())
                pts.emplace_back(c.src_component, c.src_index, jt->second);
        } else {
            auto it = g.cantor_cells().find(c.dst_component);
            if (it == g.cantor_cells().end()) continue;
            for (const auto& [w, v] : it->second) {
                switch (word_relation(c.dst_word, w)) {
                    case WordRelation::Equal:
                    case WordRelation::UPrefixOfV:
                        cyls.emplace_back(
                            Cylinder{c.src_component,
                                     c.src_word + w.substr(c.dst_word.size())},
                            v);
                        break;
                    case WordRelation::VPrefixOfU:
                        cyls.emplace_back(Cylinder{c.src_component, c.src_word},
                                          v);
                        break;
                    case WordRelation::Disjoint: break;
                }
            }
        }
    }
    return assemble(p.domain(), cyls, pts);
}

LocalHomeo compose(const LocalHomeo& q, const LocalHomeo& p) {
    if (!(*p.codomain() == *q.domain()))
        throw std::invalid_argument("space mismatch: codomain(p) != domain(q)");
    std::vector<PrefixChart> charts;
    for (const auto& cp : p.charts()) {
        for (const auto& cq : q.charts()) {
            if (cp.dst_component != cq.src_component) continue;
            if (cp.discrete != cq.discrete) continue;
            if (cp.discrete) {
                if (cp.dst_index == cq.src_index)
                    charts.push_back(discrete_chart(cp.src_component,
                                                    cp.src_index,
                                                    cq.dst_component,
                                                    cq.dst_index));
                continue;
            }
            switch (word_relation(cq.src_word, cp.dst_word)) {
                case WordRelation::Equal:
                case WordRelation::UPrefixOfV: {
                    // image [v] = [a.t] lies inside q's chart: u -> b.t
                    BinaryWord tail = cp.dst_word.substr(cq.src_word.size());
                    charts.push_back(cantor_chart(cp.src_component, cp.src_word,
                                                  cq.dst_component,
                                                  cq.dst_word + tail));
                    break;
                }
                case WordRelation::VPrefixOfU: {
                    // refine p's chart: u.t -> v.t = a, then a -> b
                    BinaryWord tail = cq.src_word.substr(cp.dst_word.size());
                    charts.push_back(cantor_chart(cp.src_component,
                                                  cp.src_word + tail,
                                                  cq.dst_component,
                                                  cq.dst_word));
                    break;
                }
                case WordRelation::Disjoint: break;
            }
        }
    }
    return LocalHomeo(p.domain(), q.codomain(), std::move(charts));
}

LocalHomeo invert(const LocalHomeo& p) {
    // Bijectivity: targets pairwise disjoint and covering the codomain.
    for (std::size_t i = 0; i < p.charts().size(); ++i)
        for (std::size_t j = i + 1; j < p.charts().size(); ++j) {
            const auto& a = p.charts()[i];
            const auto& b = p.charts()[j];
            if (a.dst_component != b.dst_component) continue;
            const bool overlap =
                a.discrete ? (a.dst_index == b.dst_index)
                           : word_relation(a.dst_word, b.dst_word) !=
                                 WordRelation::Disjoint;
            if (overlap)
                throw std::invalid_argument(
                    "non-injective: targets overlap (" + chart_name(i) +
                    ", " + chart_name(j) + ")");
        }
    ClopenSet covered;
    std::vector<Cylinder> cyls;
    for (const auto& c : p.charts()) {
        if (c.discrete)
            covered.indices[c.dst_component].push_back(c.dst_index);
        else
            cyls.push_back({c.dst_component, c.dst_word});
    }
    covered.words = normalize_clopen(cyls).words;
    for (auto& [id, v] : covered.indices) std::sort(v.begin(), v.end());
    if (!(covered == p.codomain()->full()))
        throw std::invalid_argument(
            "non-surjective: targets do not cover the codomain");
    std::vector<PrefixChart> inv;
    for (const auto& c : p.charts()) {
        PrefixChart r = c;
        std::swap(r.src_component, r.dst_component);
        std::swap(r.src_word, r.dst_word);
        std::swap(r.src_index, r.dst_index);
        inv.push_back(std::move(r));
    }
    return LocalHomeo(p.codomain(), p.domain(), std::move(inv));
}

ClopenSet chart_image(const LocalHomeo& p, const ClopenSet& s) {
    std::vector<Cylinder> cyls;
    ClopenSet out;
    for (const auto& c : p.charts()) {
        if (c.discrete) {
            auto it = s.indices.find(c.src_component);
            if (it != s.indices.end() &&
                std::binary_search(it->second.begin(), it->second.end(),
                                   c.src_index))
                out.indices[c.dst_component].push_back(c.dst_index);
            continue;
        }
        auto it = s.words.find(c.src_component);
        if (it == s.words.end()) continue;
        for (const auto& w : it->second) {
            switch (word_relation(c.src_word, w)) {
                case WordRelation::Equal:
                case WordRelation::UPrefixOfV:
                    cyls.push_back({c.dst_component,
                                    c.dst_word + w.substr(c.src_word.size())});
                    break;
                case WordRelation::VPrefixOfU:
                    cyls.push_back({c.dst_component, c.dst_word});
                    break;
                case WordRelation::Disjoint: break;
            }
        }
    }
    out.words = normalize_clopen(cyls).words;
    for (auto& [id, v] : out.indices) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return out;
}

}  // namespace groupoidh
