#ifndef GROUPOIDH_CANTOR_HPP
#define GROUPOIDH_CANTOR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace groupoidh {

// A finite binary word over {0,1}, stored as a string of '0'/'1'.
// The empty word denotes a whole component.
using BinaryWord = std::string;

bool is_binary_word(const BinaryWord& w);
void require_binary_word(const BinaryWord& w);

enum class WordRelation { Equal, UPrefixOfV, VPrefixOfU, Disjoint };

WordRelation word_relation(const BinaryWord& u, const BinaryWord& v);

// Eventually periodic point of {0,1}^N in canonical form: the period is
// primitive and the preperiod is minimal (it never ends with the last
// letter of the period).
class CantorPoint {
public:
    CantorPoint(BinaryWord preperiod, BinaryWord period);

    const BinaryWord& preperiod() const { return preperiod_; }
    const BinaryWord& period() const { return period_; }

    // k-th bit of the induced infinite sequence, 0-indexed.
    char bit(std::size_t k) const;
    BinaryWord prefix(std::size_t n) const;

    // Point with the first n bits removed.
    CantorPoint drop_prefix(std::size_t n) const;
    // Point w . x.
    CantorPoint prepend(const BinaryWord& w) const;

    bool operator==(const CantorPoint& o) const {
        return preperiod_ == o.preperiod_ && period_ == o.period_;
    }
    bool operator!=(const CantorPoint& o) const { return !(*this == o); }
    bool operator<(const CantorPoint& o) const {
        return std::tie(preperiod_, period_) < std::tie(o.preperiod_, o.period_);
    }

    // "u(v)" with preperiod u and period v.
    std::string to_string() const;
    static CantorPoint parse(const std::string& text);

private:
    BinaryWord preperiod_;
    BinaryWord period_;
};

using ComponentId = std::size_t;

struct Cylinder {
    ComponentId component = 0;
    BinaryWord word;

    bool operator==(const Cylinder& o) const = default;
};

bool point_in_cylinder(const CantorPoint& x, const Cylinder& c);

// Normalized clopen subset of a Space: per Cantor component a sorted
// prefix-free word family with no unmerged sibling pair, per discrete
// component a sorted index set.  Empty maps mean the empty set.
struct ClopenSet {
    std::map<ComponentId, std::vector<BinaryWord>> words;
    std::map<ComponentId, std::vector<std::uint64_t>> indices;

    bool empty() const { return words.empty() && indices.empty(); }
    bool operator==(const ClopenSet& o) const = default;
};

struct CantorComponent {
    // Restriction inside the standard Cantor copy; {""} is the full copy.
    std::vector<BinaryWord> restriction{""};
};

struct DiscreteComponent {
    std::uint64_t size = 1;
};

using Component = std::variant<CantorComponent, DiscreteComponent>;

struct Space {
    std::vector<Component> components;

    const Component& component(ComponentId id) const;
    bool is_cantor(ComponentId id) const;
    // Whole space as a normalized clopen set.
    ClopenSet full() const;

    bool operator==(const Space& o) const;
};

using SpaceRef = std::shared_ptr<const Space>;

SpaceRef full_cantor_space();
SpaceRef discrete_space(std::uint64_t size);

struct SpacePoint {
    ComponentId component = 0;
    std::variant<CantorPoint, std::uint64_t> value;

    bool operator==(const SpacePoint& o) const = default;
    bool operator<(const SpacePoint& o) const {
        return std::tie(component, value) < std::tie(o.component, o.value);
    }
    std::string to_string() const;
};

// Canonical form of a word family with the same union of cylinders:
// subsumed words removed, sibling pairs merged exhaustively, sorted.
std::vector<BinaryWord> normalize_words(std::vector<BinaryWord> words);

ClopenSet normalize_clopen(const std::vector<Cylinder>& cylinders);

enum class ClopenOp { Union, Intersection, Difference, ComplementInSpace };

// Boolean algebra on normalized clopen sets of one Space.  For
// ComplementInSpace only `a` is read.
ClopenSet clopen_algebra(const Space& space, const ClopenSet& a,
                         const ClopenSet& b, ClopenOp op);

bool clopen_contains(const ClopenSet& s, const SpacePoint& p);

// All depth-d words whose cylinders lie inside the union of `words`.
// Requires d >= depth of every word.
std::vector<BinaryWord> refine_to_depth(const std::vector<BinaryWord>& words,
                                        std::size_t d);

// A point y != x agreeing with x on the first d bits (bit d is flipped,
// everything after stays equal to x).
CantorPoint separating_point(const CantorPoint& x, std::size_t d);

// A small deterministic family of points hitting every component (all
// points of discrete components, a handful per Cantor restriction word).
std::vector<SpacePoint> sample_points(const Space& s);

}  // namespace groupoidh

#endif
