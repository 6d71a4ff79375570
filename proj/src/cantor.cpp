#include "groupoidh/cantor.hpp"

#include <algorithm>
#include <sstream>

namespace groupoidh {

bool is_binary_word(const BinaryWord& w) {
    return std::all_of(w.begin(), w.end(),
                       [](char c) { return c == '0' || c == '1'; });
}

void require_binary_word(const BinaryWord& w) {
    if (!is_binary_word(w))
        throw std::invalid_argument("not a binary word: \"" + w + "\"");
}

WordRelation word_relation(const BinaryWord& u, const BinaryWord& v) {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (u[i] != v[i]) return WordRelation::Disjoint;
    if (u.size() == v.size()) return WordRelation::Equal;
    return u.size() < v.size() ? WordRelation::UPrefixOfV
                               : WordRelation::VPrefixOfU;
}

namespace {

// Smallest p with w = (w[0..p))^{|w|/p}.
std::size_t primitive_root_length(const BinaryWord& w) {
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < w.size() && ok; ++i)
            ok = (w[i] == w[i - p]);
        if (ok) return p;
    }
    return w.size();
}

}  // namespace

CantorPoint::CantorPoint(BinaryWord preperiod, BinaryWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    require_binary_word(preperiod_);
    require_binary_word(period_);
    if (period_.empty())
        throw std::invalid_argument("CantorPoint needs a nonempty period");
    period_.resize(primitive_root_length(period_));
    // Absorb preperiod letters that already match the tail of the period.
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        period_.insert(period_.begin(), period_.back());
        period_.pop_back();
        preperiod_.pop_back();
    }
}

char CantorPoint::bit(std::size_t k) const {
    if (k < preperiod_.size()) return preperiod_[k];
    return period_[(k - preperiod_.size()) % period_.size()];
}

BinaryWord CantorPoint::prefix(std::size_t n) const {
    BinaryWord w;
    w.reserve(n);
    for (std::size_t k = 0; k < n; ++k) w.push_back(bit(k));
    return w;
}

CantorPoint CantorPoint::drop_prefix(std::size_t n) const {
    if (n <= preperiod_.size())
        return CantorPoint(preperiod_.substr(n), period_);
    const std::size_t shift = (n - preperiod_.size()) % period_.size();
    BinaryWord rotated = period_.substr(shift) + period_.substr(0, shift);
    return CantorPoint("", rotated);
}

CantorPoint CantorPoint::prepend(const BinaryWord& w) const {
    return CantorPoint(w + preperiod_, period_);
}

std::string CantorPoint::to_string() const {
    return preperiod_ + "(" + period_ + ")";
}

CantorPoint CantorPoint::parse(const std::string& text) {
    const auto open = text.find('(');
    const auto close = text.find(')');
    if (open == std::string::npos || close != text.size() - 1 || close < open)
        throw std::invalid_argument("malformed point \"" + text +
                                    "\", expected u(v)");
    return CantorPoint(text.substr(0, open),
                       text.substr(open + 1, close - open - 1));
}

bool point_in_cylinder(const CantorPoint& x, const Cylinder& c) {
    for (std::size_t k = 0; k < c.word.size(); ++k)
        if (x.bit(k) != c.word[k]) return false;
    return true;
}

const Component& Space::component(ComponentId id) const {
    if (id >= components.size())
        throw std::out_of_range("no component " + std::to_string(id));
    return components[id];
}

bool Space::is_cantor(ComponentId id) const {
    return std::holds_alternative<CantorComponent>(component(id));
}

ClopenSet Space::full() const {
    ClopenSet s;
    for (ComponentId id = 0; id < components.size(); ++id) {
        if (const auto* c = std::get_if<CantorComponent>(&components[id])) {
            s.words[id] = c->restriction;
        } else {
            const auto& d = std::get<DiscreteComponent>(components[id]);
            auto& v = s.indices[id];
            for (std::uint64_t i = 0; i < d.size; ++i) v.push_back(i);
        }
    }
    return s;
}

bool Space::operator==(const Space& o) const {
    if (components.size() != o.components.size()) return false;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto* a = std::get_if<CantorComponent>(&components[i]);
        const auto* b = std::get_if<CantorComponent>(&o.components[i]);
        if ((a == nullptr) != (b == nullptr)) return false;
        if (a) {
            if (a->restriction != b->restriction) return false;
        } else if (std::get<DiscreteComponent>(components[i]).size !=
                   std::get<DiscreteComponent>(o.components[i]).size) {
            return false;
        }
    }
    return true;
}

SpaceRef full_cantor_space() {
    auto s = std::make_shared<Space>();
    s->components.push_back(CantorComponent{});
    return s;
}

SpaceRef discrete_space(std::uint64_t size) {
    if (size == 0) throw std::invalid_argument("discrete component of size 0");
    auto s = std::make_shared<Space>();
    s->components.push_back(DiscreteComponent{size});
    return s;
}

std::string SpacePoint::to_string() const {
    std::ostringstream os;
    os << "c" << component << ":";
    if (const auto* p = std::get_if<CantorPoint>(&value))
        os << p->to_string();
    else
        os << std::get<std::uint64_t>(value);
    return os.str();
}

namespace {

// Recursive trie normalization; `suffixes` are relative to the current
// node, sorted input not required.
std::vector<BinaryWord> normalize_rec(const std::vector<BinaryWord>& suffixes) {
    if (suffixes.empty()) return {};
    for (const auto& w : suffixes)
        if (w.empty()) return {""};
    std::vector<BinaryWord> zeros, ones;
    for (const auto& w : suffixes)
        (w[0] == '0' ? zeros : ones).push_back(w.substr(1));
    auto n0 = normalize_rec(zeros);
    auto n1 = normalize_rec(ones);
    if (n0.size() == 1 && n0[0].empty() && n1.size() == 1 && n1[0].empty())
        return {""};
    std::vector<BinaryWord> out;
    out.reserve(n0.size() + n1.size());
    for (auto& w : n0) out.push_back("0" + w);
    for (auto& w : n1) out.push_back("1" + w);
    return out;
}

std::vector<BinaryWord> complement_rec(const std::vector<BinaryWord>& norm) {
    if (norm.empty()) return {""};
    if (norm.size() == 1 && norm[0].empty()) return {};
    std::vector<BinaryWord> zeros, ones;
    for (const auto& w : norm)
        (w[0] == '0' ? zeros : ones).push_back(w.substr(1));
    std::vector<BinaryWord> out;
    for (auto& w : complement_rec(zeros)) out.push_back("0" + w);
    for (auto& w : complement_rec(ones)) out.push_back("1" + w);
    return normalize_rec(out);
}

std::vector<BinaryWord> intersect_words(const std::vector<BinaryWord>& a,
                                        const std::vector<BinaryWord>& b) {
    std::vector<BinaryWord> out;
    for (const auto& u : a)
        for (const auto& v : b) {
            switch (word_relation(u, v)) {
                case WordRelation::Equal:
                case WordRelation::VPrefixOfU: out.push_back(u); break;
                case WordRelation::UPrefixOfV: out.push_back(v); break;
                case WordRelation::Disjoint: break;
            }
        }
    return normalize_rec(out);
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void drop_empty_entries(ClopenSet& s) {
    std::erase_if(s.words, [](const auto& kv) { return kv.second.empty(); });
    std::erase_if(s.indices, [](const auto& kv) { return kv.second.empty(); });
}

}  // namespace

std::vector<BinaryWord> normalize_words(std::vector<BinaryWord> words) {
    for (const auto& w : words) require_binary_word(w);
    return normalize_rec(words);
}

ClopenSet normalize_clopen(const std::vector<Cylinder>& cylinders) {
    std::map<ComponentId, std::vector<BinaryWord>> grouped;
    for (const auto& c : cylinders) grouped[c.component].push_back(c.word);
    ClopenSet out;
    for (auto& [id, ws] : grouped) {
        auto n = normalize_words(std::move(ws));
        if (!n.empty()) out.words[id] = std::move(n);
    }
    return out;
}

ClopenSet clopen_algebra(const Space& space, const ClopenSet& a,
                         const ClopenSet& b, ClopenOp op) {
    ClopenSet out;
    for (ComponentId id = 0; id < space.components.size(); ++id) {
        if (const auto* cc = std::get_if<CantorComponent>(&space.components[id])) {
            auto ita = a.words.find(id);
            auto itb = b.words.find(id);
            std::vector<BinaryWord> wa =
                ita == a.words.end() ? std::vector<BinaryWord>{} : ita->second;
            std::vector<BinaryWord> wb =
                itb == b.words.end() ? std::vector<BinaryWord>{} : itb->second;
            std::vector<BinaryWord> res;
            switch (op) {
                case ClopenOp::Union: {
                    wa.insert(wa.end(), wb.begin(), wb.end());
                    res = normalize_rec(wa);
                    break;
                }
                case ClopenOp::Intersection:
                    res = intersect_words(wa, wb);
                    break;
                case ClopenOp::Difference:
                    res = intersect_words(wa, complement_rec(normalize_rec(wb)));
                    break;
                case ClopenOp::ComplementInSpace:
                    res = intersect_words(complement_rec(normalize_rec(wa)),
                                          cc->restriction);
                    break;
            }
            if (!res.empty()) out.words[id] = std::move(res);
        } else {
            const auto& dc = std::get<DiscreteComponent>(space.components[id]);
            auto ita = a.indices.find(id);
            auto itb = b.indices.find(id);
            std::vector<std::uint64_t> ia =
                ita == a.indices.end() ? std::vector<std::uint64_t>{} : ita->second;
            std::vector<std::uint64_t> ib =
                itb == b.indices.end() ? std::vector<std::uint64_t>{} : itb->second;
            ia = sorted_unique(std::move(ia));
            ib = sorted_unique(std::move(ib));
            std::vector<std::uint64_t> res;
            switch (op) {
                case ClopenOp::Union:
                    std::set_union(ia.begin(), ia.end(), ib.begin(), ib.end(),
                                   std::back_inserter(res));
                    break;
                case ClopenOp::Intersection:
                    std::set_intersection(ia.begin(), ia.end(), ib.begin(),
                                          ib.end(), std::back_inserter(res));
                    break;
                case ClopenOp::Difference:
                    std::set_difference(ia.begin(), ia.end(), ib.begin(),
                                        ib.end(), std::back_inserter(res));
                    break;
                case ClopenOp::ComplementInSpace:
                    for (std::uint64_t i = 0; i < dc.size; ++i)
                        if (!std::binary_search(ia.begin(), ia.end(), i))
                            res.push_back(i);
                    break;
            }
            if (!res.empty()) out.indices[id] = std::move(res);
        }
    }
    drop_empty_entries(out);
    return out;
}

bool clopen_contains(const ClopenSet& s, const SpacePoint& p) {
    if (const auto* cp = std::get_if<CantorPoint>(&p.value)) {
        auto it = s.words.find(p.component);
        if (it == s.words.end()) return false;
        for (const auto& w : it->second)
            if (point_in_cylinder(*cp, {p.component, w})) return true;
        return false;
    }
    auto it = s.indices.find(p.component);
    if (it == s.indices.end()) return false;
    const auto idx = std::get<std::uint64_t>(p.value);
    return std::binary_search(it->second.begin(), it->second.end(), idx);
}

std::vector<BinaryWord> refine_to_depth(const std::vector<BinaryWord>& words,
                                        std::size_t d) {
    std::vector<BinaryWord> out;
    for (const auto& w : words) {
        if (w.size() > d)
            throw std::invalid_argument("refine_to_depth: word \"" + w +
                                        "\" deeper than " + std::to_string(d));
        const std::size_t extra = d - w.size();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << extra); ++m) {
            BinaryWord e = w;
            for (std::size_t k = 0; k < extra; ++k)
                e.push_back((m >> (extra - 1 - k)) & 1 ? '1' : '0');
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CantorPoint separating_point(const CantorPoint& x, std::size_t d) {
    const std::size_t cut = std::max(d + 1, x.preperiod().size());
    BinaryWord pre = x.prefix(cut);
    pre[d] = pre[d] == '0' ? '1' : '0';
    // Continuation after position `cut` is x's own period, suitably rotated.
    const std::size_t plen = x.period().size();
    const std::size_t shift = (cut - x.preperiod().size()) % plen;
    BinaryWord period = x.period().substr(shift) + x.period().substr(0, shift);
    return CantorPoint(pre, period);
}

std::vector<SpacePoint> sample_points(const Space& s) {
    std::vector<SpacePoint> out;
    for (ComponentId id = 0; id < s.components.size(); ++id) {
        if (const auto* cc = std::get_if<CantorComponent>(&s.components[id])) {
            for (const auto& w : cc->restriction) {
                for (const char* tail : {"(0)", "(1)", "(01)", "0(10)", "1(0)"})
                    out.push_back(
                        SpacePoint{id, CantorPoint::parse(w + std::string(tail))});
            }
        } else {
            const auto& dc = std::get<DiscreteComponent>(s.components[id]);
            for (std::uint64_t i = 0; i < dc.size; ++i)
                out.push_back(SpacePoint{id, i});
        }
    }
    return out;
}

}  // namespace groupoidh
