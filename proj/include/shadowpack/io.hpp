#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "shadowpack/bounds.hpp"
#include "shadowpack/packing.hpp"
#include "shadowpack/shadow.hpp"
#include "shadowpack/verify.hpp"

namespace shadowpack {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);             // "p/q"
Json interval_json(const Interval& iv);  // {"lo": ..., "hi": ...}
Json scalar_json(const Scalar& s);
Json vec_json(const Vec3& v);
Json polytope_json(const ConvexPolytope& p);  // both representations

Rat rat_from_json(const Json& j);
Vec3 vec_from_json(const Json& j);

/// {"basis": [[...],[...],[...]]}
Lattice lattice_from_json(const Json& j);
/// {"body": tag-or-polytope, "anchors": [...]} or {"body": ..., "lattice": ...};
/// lattice configurations expand to the window of translates meeting 3W.
Configuration config_from_json(const Json& j);
ConvexPolytope polytope_from_json(const Json& j);

/// FNV-1a 64-bit digest, hex encoded, for run manifests.
std::string digest_bytes(const std::string& bytes);
std::string digest_file(const std::string& path);

struct RunManifest {
  std::string command;
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::uint64_t seed = 0;
  bool has_seed = false;
  double wall_ms = 0;  // reported on stderr only, to keep stdout reproducible
};

Json manifest_json(const RunManifest& m);

Json verdict_json(const Verdict& v);
Json bound_report_json(const BoundReport& r);

}  // namespace shadowpack
