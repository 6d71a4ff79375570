#ifndef GROUPOIDH_MAPS_HPP
#define GROUPOIDH_MAPS_HPP

#include "groupoidh/zfun.hpp"

namespace groupoidh {

// One chart of a piecewise-prefix local homeomorphism: either a cylinder
// substitution u.t -> v.t or a single discrete point mapping.
struct PrefixChart {
    ComponentId src_component = 0;
    ComponentId dst_component = 0;
    bool discrete = false;
    // Cantor variant
    BinaryWord src_word;
    BinaryWord dst_word;
    // Discrete variant
    std::uint64_t src_index = 0;
    std::uint64_t dst_index = 0;

    int depth_shift() const {
        return static_cast<int>(dst_word.size()) -
               static_cast<int>(src_word.size());
    }
    bool operator==(const PrefixChart& o) const = default;
};

PrefixChart cantor_chart(ComponentId src_comp, BinaryWord src_word,
                         ComponentId dst_comp, BinaryWord dst_word);
PrefixChart discrete_chart(ComponentId src_comp, std::uint64_t src_index,
                           ComponentId dst_comp, std::uint64_t dst_index);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

// Local homeomorphism between Spaces presented by finitely many prefix
// charts whose sources partition the domain.  Targets may overlap.
class LocalHomeo {
public:
    LocalHomeo(SpaceRef domain, SpaceRef codomain,
               std::vector<PrefixChart> charts);

    const SpaceRef& domain() const { return domain_; }
    const SpaceRef& codomain() const { return codomain_; }
    const std::vector<PrefixChart>& charts() const { return charts_; }

    ValidationReport validate() const;
    void require_valid() const;

    SpacePoint apply(const SpacePoint& y) const;
    std::vector<SpacePoint> fiber(const SpacePoint& z) const;

    bool is_depth_preserving() const;
    // True when apply is the identity map (domain == codomain and every
    // chart fixes its cylinder / point).
    bool is_identity() const;

    static LocalHomeo identity(SpaceRef space);

private:
    SpaceRef domain_;
    SpaceRef codomain_;
    std::vector<PrefixChart> charts_;
};

// Fiber-sum pushforward: (p_* f)(z) = sum over p^{-1}(z) of f.
LocIntFun pushforward(const LocalHomeo& p, const LocIntFun& f);

// (p^* g)(y) = g(p(y)).
LocIntFun pullback(const LocalHomeo& p, const LocIntFun& g);

// Presentation of q o p, refining p's charts until each image lies in a
// single chart of q.
LocalHomeo compose(const LocalHomeo& q, const LocalHomeo& p);

// Requires p bijective: targets pairwise disjoint and covering the
// codomain.  Throws std::invalid_argument otherwise.
LocalHomeo invert(const LocalHomeo& p);

// Normalized image of a clopen set under the chart family.
ClopenSet chart_image(const LocalHomeo& p, const ClopenSet& s);

}  // namespace groupoidh

#endif
