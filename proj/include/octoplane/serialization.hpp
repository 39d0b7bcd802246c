#pragma once

// JSON forms used by the command line:
//   hypernumber  [c1, ..., c8]
//   point        [[8 reals], [8 reals], [8 reals]]   (a homogeneous triple)
//   step         {"kind": "euclidean" | "indefinite" | "rotation",
//                 "chart": n, "r": x, "lambda": [8 reals], "t": x}

#include "json.hpp"
#include "octoplane/isometry.hpp"

namespace octoplane {

using Json = nlohmann::ordered_json;

Json to_json(const HyperNumber& h);
HyperNumber hyper_from_json(AlgebraKind kind, const Json& j);

Json triple_to_json(const HomogeneousTriple& t);
/// Parses a triple and normalizes it; throws NotRepresentableError.
ChartPoint point_from_json(PlaneKind kind, const Json& j);
Json to_json(const ChartPoint& p);

Json to_json(const IsometryStep& s);
/// Parses and validates a step; throws InvalidStepError.
IsometryStep step_from_json(PlaneKind kind, const Json& j);

/// A single step object or an array of steps.
IsometryComposition composition_from_json(PlaneKind kind, const Json& j);
Json to_json(const IsometryComposition& c);

}  // namespace octoplane
