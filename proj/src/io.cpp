#include "shadowpack/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "shadowpack/bodies.hpp"
#include "shadowpack/fixtures.hpp"

namespace shadowpack {

Json rat_json(const Rat& r) { return r.str(); }

Json interval_json(const Interval& iv) {
  Json j;
  j["lo"] = iv.lo_string();
  j["hi"] = iv.hi_string();
  return j;
}

Json scalar_json(const Scalar& s) {
  if (s.is_exact()) return rat_json(s.rat());
  return interval_json(s.as_interval());
}

Json vec_json(const Vec3& v) { return Json::array({v.x.str(), v.y.str(), v.z.str()}); }

Json polytope_json(const ConvexPolytope& p) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(vec_json(v));
  j["dim"] = p.dim();
  j["vertices"] = verts;
  if (p.dim() == 3) {
    Json hs = Json::array();
    for (const auto& f : p.facets()) {
      Json h;
      Json n = Json::array();
      for (int c = 0; c < 3; ++c) {
        mpz_class v = f.plane.n[c].num();
        if (v.fits_slong_p())
          n.push_back((long)v.get_si());
        else
          n.push_back(v.get_str());
      }
      h["n"] = n;
      h["d"] = f.plane.d.str();
      hs.push_back(h);
    }
    j["halfspaces"] = hs;
  }
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat((long)j.get<long long>());
  throw std::invalid_argument("expected a rational as string or integer");
}

Vec3 vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("expected a coordinate triple");
  return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])};
}

Lattice lattice_from_json(const Json& j) {
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != 3)
    throw std::invalid_argument("lattice needs a 3-vector basis");
  return Lattice{{vec_from_json(j["basis"][0]), vec_from_json(j["basis"][1]),
                  vec_from_json(j["basis"][2])}};
}

ConvexPolytope polytope_from_json(const Json& j) {
  if (j.contains("vertices")) {
    std::vector<Vec3> pts;
    for (const auto& v : j["vertices"]) pts.push_back(vec_from_json(v));
    return ConvexPolytope::hull(pts);
  }
  if (j.contains("halfspaces")) {
    std::vector<Halfspace> hs;
    for (const auto& h : j["halfspaces"]) {
      Vec3 n = vec_from_json(h["n"]);
      hs.push_back(Halfspace::make(n, rat_from_json(h["d"])));
    }
    return ConvexPolytope::from_halfspaces(hs);
  }
  throw std::invalid_argument("polytope needs vertices or halfspaces");
}

Configuration config_from_json(const Json& j) {
  Configuration cfg;
  if (!j.contains("body")) throw std::invalid_argument("configuration needs a body");
  if (j["body"].is_string())
    cfg.body = make_body(j["body"].get<std::string>());
  else
    cfg.body = polytope_from_json(j["body"]);
  if (j.contains("anchors")) {
    for (const auto& a : j["anchors"]) cfg.anchors.push_back(vec_from_json(a));
    if (cfg.anchors.empty()) throw std::invalid_argument("anchor list is empty");
    return cfg;
  }
  if (j.contains("lattice")) {
    Lattice lat = lattice_from_json(j["lattice"]);
    return lattice_neighborhood(cfg.body, lat, make_cube(Rat(3)));
  }
  throw std::invalid_argument("configuration needs anchors or a lattice");
}

std::string digest_bytes(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  snprintf(buf, sizeof buf, "fnv64:%016llx", (unsigned long long)h);
  return buf;
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return digest_bytes(ss.str());
}

Json manifest_json(const RunManifest& m) {
  Json j;
  j["tool"] = "shadowpack 1.0.0";
  j["command"] = m.command;
  j["args"] = m.args;
  Json inputs = Json::object();
  for (const auto& [path, digest] : m.inputs) inputs[path] = digest;
  j["inputs"] = inputs;
  if (m.has_seed) j["seed"] = m.seed;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["case"] = v.case_id;
  j["pass"] = v.pass;
  j["grid"] = v.grid_step.str();
  Json steps = Json::array();
  for (const auto& s : v.effective_steps) steps.push_back(s.str());
  j["effective_steps"] = steps;
  j["points"] = v.points_admissible;
  j["skipped_undecided"] = v.points_skipped_undecided;
  j["violations"] = v.violations;
  if (v.minimum) j["minimum"] = interval_json(*v.minimum);
  if (v.margin) j["margin"] = interval_json(*v.margin);
  if (!v.argmin.empty()) {
    Json am = Json::array();
    for (const auto& r : v.argmin) am.push_back(r.str());
    j["argmin"] = am;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json bound_report_json(const BoundReport& r) {
  Json j;
  j["body"] = r.body;
  j["measure_kind"] = r.measure_kind;
  j["measure"] = scalar_json(r.measure);
  j["directions"] = r.directions;
  j["bound"] = scalar_json(r.bound);
  j["chain"] = r.chain;
  return j;
}

}  // namespace shadowpack
