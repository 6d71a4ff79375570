#ifndef GROUPOIDH_JSON_IO_HPP
#define GROUPOIDH_JSON_IO_HPP

#include <json.hpp>

#include "groupoidh/realization.hpp"

namespace groupoidh {

using Json = nlohmann::json;

// Integers that fit into int64 are emitted as JSON numbers, anything
// larger as a decimal string; parsing accepts both.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json space_to_json(const Space& s);
SpaceRef space_from_json(const Json& j);

Json clopen_to_json(const ClopenSet& s);

// Function JSON: one {"component": id, "cells": [...]} object per
// component, wrapped in an array when the space has several components.
Json locintfun_to_json(const LocIntFun& f);
LocIntFun locintfun_from_json(const Json& j, SpaceRef space);

Json local_homeo_to_json(const LocalHomeo& p);
LocalHomeo local_homeo_from_json(const Json& j);

Json presentation_to_json(const SimplicialPresentation& p);
SimplicialPresentation presentation_from_json(const Json& j);

Json homology_report_to_json(const HomologyReport& r);
Json snf_to_json(const SNFResult& r, bool include_transforms);
Json comparison_report_to_json(const ComparisonReport& r);

}  // namespace groupoidh

#endif
