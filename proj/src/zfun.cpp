#include "groupoidh/zfun.hpp"

#include <algorithm>

namespace groupoidh {

namespace {

void require_same_space(const LocIntFun& f, const LocIntFun& g) {
    if (!(*f.space() == *g.space()))
        throw std::invalid_argument("functions live on different spaces");
}

// Cylinder must be entirely inside the (normalized prefix-free)
// restriction family.
void require_inside(const std::vector<BinaryWord>& restriction,
                    const BinaryWord& word) {
    for (const auto& r : restriction) {
        auto rel = word_relation(r, word);
        if (rel == WordRelation::Equal || rel == WordRelation::UPrefixOfV)
            return;
    }
    throw std::invalid_argument("cylinder [" + word +
                                "] outside component restriction");
}

// Builds the canonical cell map of sum_i value_i * 1_[word_i] relative to
// the current trie node; `inherited` is the value contributed by cells
// above this node.
std::map<BinaryWord, Int> build_cells(
    const std::vector<std::pair<BinaryWord, Int>>& cells, Int inherited) {
    std::vector<std::pair<BinaryWord, Int>> zeros, ones;
    for (const auto& [w, v] : cells) {
        if (w.empty())
            inherited += v;
        else if (w[0] == '0')
            zeros.emplace_back(w.substr(1), v);
        else
            ones.emplace_back(w.substr(1), v);
    }
    if (zeros.empty() && ones.empty()) {
        std::map<BinaryWord, Int> out;
        if (inherited != 0) out.emplace("", std::move(inherited));
        return out;
    }
    auto c0 = build_cells(zeros, inherited);
    auto c1 = build_cells(ones, inherited);
    if (c0.size() == 1 && c1.size() == 1 && c0.begin()->first.empty() &&
        c1.begin()->first.empty() && c0.begin()->second == c1.begin()->second)
        return c0;
    std::map<BinaryWord, Int> out;
    for (auto& [w, v] : c0) out.emplace("0" + w, std::move(v));
    for (auto& [w, v] : c1) out.emplace("1" + w, std::move(v));
    return out;
}

}  // namespace

LocIntFun::LocIntFun(SpaceRef space) : space_(std::move(space)) {
    if (!space_) throw std::invalid_argument("null space");
}

LocIntFun LocIntFun::make(SpaceRef space,
                          const std::vector<std::pair<Cylinder, Int>>& cells) {
    LocIntFun f(std::move(space));
    std::map<ComponentId, std::vector<std::pair<BinaryWord, Int>>> grouped;
    for (const auto& [cyl, v] : cells) {
        const auto& comp = f.space_->component(cyl.component);
        const auto* cc = std::get_if<CantorComponent>(&comp);
        if (!cc)
            throw std::invalid_argument("cylinder cell on discrete component");
        require_binary_word(cyl.word);
        require_inside(cc->restriction, cyl.word);
        grouped[cyl.component].emplace_back(cyl.word, v);
    }
    for (auto& [id, ws] : grouped) {
        auto canon = build_cells(ws, 0);
        if (!canon.empty()) f.cantor_cells_[id] = std::move(canon);
    }
    return f;
}

LocIntFun LocIntFun::make_discrete(
    SpaceRef space,
    const std::vector<std::tuple<ComponentId, std::uint64_t, Int>>& cells) {
    LocIntFun f(std::move(space));
    for (const auto& [id, idx, v] : cells) {
        const auto& comp = f.space_->component(id);
        const auto* dc = std::get_if<DiscreteComponent>(&comp);
        if (!dc) throw std::invalid_argument("index cell on Cantor component");
        if (idx >= dc->size)
            throw std::invalid_argument("index out of component range");
        f.discrete_cells_[id][idx] += v;
    }
    for (auto& [id, m] : f.discrete_cells_)
        std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(f.discrete_cells_,
                  [](const auto& kv) { return kv.second.empty(); });
    return f;
}

Int LocIntFun::evaluate(const SpacePoint& y) const {
    if (y.component >= space_->components.size())
        throw std::invalid_argument("point outside space");
    if (const auto* cp = std::get_if<CantorPoint>(&y.value)) {
        auto it = cantor_cells_.find(y.component);
        if (it == cantor_cells_.end()) return 0;
        for (const auto& [w, v] : it->second)
            if (point_in_cylinder(*cp, {y.component, w})) return v;
        return 0;
    }
    auto it = discrete_cells_.find(y.component);
    if (it == discrete_cells_.end()) return 0;
    auto jt = it->second.find(std::get<std::uint64_t>(y.value));
    return jt == it->second.end() ? Int(0) : jt->second;
}

LocIntFun LocIntFun::add(const LocIntFun& g) const {
    require_same_space(*this, g);
    LocIntFun out(space_);
    std::map<ComponentId, std::vector<std::pair<BinaryWord, Int>>> grouped;
    for (const auto* f : {this, &g})
        for (const auto& [id, m] : f->cantor_cells_)
            for (const auto& [w, v] : m) grouped[id].emplace_back(w, v);
    for (auto& [id, ws] : grouped) {
        auto canon = build_cells(ws, 0);
        if (!canon.empty()) out.cantor_cells_[id] = std::move(canon);
    }
    for (const auto* f : {this, &g})
        for (const auto& [id, m] : f->discrete_cells_)
            for (const auto& [idx, v] : m) out.discrete_cells_[id][idx] += v;
    for (auto& [id, m] : out.discrete_cells_)
        std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(out.discrete_cells_,
                  [](const auto& kv) { return kv.second.empty(); });
    return out;
}

LocIntFun LocIntFun::scale(const Int& k) const {
    LocIntFun out(space_);
    if (k == 0) return out;
    out.cantor_cells_ = cantor_cells_;
    out.discrete_cells_ = discrete_cells_;
    for (auto& [id, m] : out.cantor_cells_)
        for (auto& [w, v] : m) v *= k;
    for (auto& [id, m] : out.discrete_cells_)
        for (auto& [idx, v] : m) v *= k;
    return out;
}

bool LocIntFun::equals(const LocIntFun& g) const {
    return *space_ == *g.space_ && cantor_cells_ == g.cantor_cells_ &&
           discrete_cells_ == g.discrete_cells_;
}

ClopenSet LocIntFun::support() const {
    ClopenSet s;
    for (const auto& [id, m] : cantor_cells_) {
        std::vector<BinaryWord> ws;
        ws.reserve(m.size());
        for (const auto& [w, v] : m) ws.push_back(w);
        s.words[id] = normalize_words(std::move(ws));
    }
    for (const auto& [id, m] : discrete_cells_) {
        auto& idxs = s.indices[id];
        for (const auto& [idx, v] : m) idxs.push_back(idx);
    }
    return s;
}

std::set<Int> LocIntFun::image_values() const {
    std::set<Int> vals;
    for (const auto& [id, m] : cantor_cells_)
        for (const auto& [w, v] : m) vals.insert(v);
    for (const auto& [id, m] : discrete_cells_)
        for (const auto& [idx, v] : m) vals.insert(v);
    if (!(support() == space_->full())) vals.insert(0);
    return vals;
}

std::size_t LocIntFun::max_cell_depth() const {
    std::size_t d = 0;
    for (const auto& [id, m] : cantor_cells_)
        for (const auto& [w, v] : m) d = std::max(d, w.size());
    return d;
}

namespace {

// Balanced value order 0, 1, -1, 2, -2, ...
Int balanced_value(std::size_t j) {
    if (j == 0) return 0;
    return j % 2 == 1 ? Int((j + 1) / 2) : -Int(j / 2);
}

void require_single_full_cantor(const Space& s) {
    if (s.components.size() != 1 || !s.is_cantor(0) ||
        std::get<CantorComponent>(s.components[0]).restriction !=
            std::vector<BinaryWord>{""})
        throw std::invalid_argument(
            "enumeration supports only a single full Cantor component");
}

}  // namespace

EnumerationCursor::EnumerationCursor(SpaceRef space)
    : space_(std::move(space)) {
    require_single_full_cantor(*space_);
}

bool EnumerationCursor::advance_tuple() {
    const std::size_t radix = 2 * stage_ + 1;
    for (std::size_t i = tuple_.size(); i-- > 0;) {
        if (++tuple_[i] < radix) return true;
        tuple_[i] = 0;
    }
    return false;  // odometer wrapped; stage exhausted
}

LocIntFun EnumerationCursor::next() {
    for (;;) {
        if (exhausted_stage_start_) {
            tuple_.assign(std::size_t{1} << stage_, 0);
            exhausted_stage_start_ = false;
        } else if (!advance_tuple()) {
            ++stage_;
            exhausted_stage_start_ = true;
            continue;
        }
        // Skip tuples already listed by an earlier stage: value bound
        // <= stage-1 and constant on each depth-(stage-1) cell.
        if (stage_ > 1) {
            bool small = true;
            for (std::size_t j : tuple_)
                if (j >= 2 * stage_ - 1) { small = false; break; }
            if (small) {
                bool coarse = true;
                for (std::size_t i = 0; i + 1 < tuple_.size(); i += 2)
                    if (tuple_[i] != tuple_[i + 1]) { coarse = false; break; }
                if (coarse) continue;
            }
        }
        ++position_;
        const auto words = refine_to_depth({""}, stage_);
        std::vector<std::pair<Cylinder, Int>> cells;
        for (std::size_t i = 0; i < words.size(); ++i) {
            Int v = balanced_value(tuple_[i]);
            if (v != 0) cells.emplace_back(Cylinder{0, words[i]}, v);
        }
        return LocIntFun::make(space_, cells);
    }
}

LocIntFun enumerate_function(SpaceRef space, std::uint64_t k) {
    EnumerationCursor cur(std::move(space));
    LocIntFun f = cur.next();
    for (std::uint64_t i = 0; i < k; ++i) f = cur.next();
    return f;
}

DeltaWitness delta_witness(const CantorPoint& x, std::size_t d) {
    return DeltaWitness{separating_point(x, d), 1, 0};
}

}  // namespace groupoidh
