#pragma once

#include "torloc/mixed_volume.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace torloc {

using Json = nlohmann::ordered_json;

Rat parse_rational(const Json& j);          // integer or "p/q" string; floats rejected
std::string rational_to_string(const Rat& r);

Vec parse_vec(const Json& j);
Json vec_to_json(const Vec& v);

FanPtr fan_from_json(const Json& j);
Json fan_to_json(const Fan& fan);

PiecewisePolynomial pp_from_json(const Json& j, FanPtr fan);
Json pp_to_json(const PiecewisePolynomial& f);

std::vector<LatticePolytope> polytopes_from_json(const Json& j);
Json polytopes_to_json(const std::vector<LatticePolytope>& ps);

ToricVectorBundle bundle_from_json(const Json& j, FanPtr fan);
Json bundle_to_json(const ToricVectorBundle& b);

// canonical file form: 2-space indent plus trailing newline
std::string dump_canonical(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

FanPtr load_fan_file(const std::string& path);
PiecewisePolynomial load_pp_file(const std::string& path, FanPtr fan);
std::vector<LatticePolytope> load_polytopes_file(const std::string& path);
ToricVectorBundle load_bundle_file(const std::string& path, FanPtr fan);

// Named objects loaded for one CLI invocation, with the equality-test seed
// (TORLOC_SEED / --seed override the documented default).
struct Workspace {
    std::uint64_t seed = kDefaultSeed;
    std::map<std::string, FanPtr> fans;
    std::map<std::string, PiecewisePolynomial> piecewise;
    std::map<std::string, std::vector<LatticePolytope>> polytope_sets;
    std::map<std::string, ToricVectorBundle> bundles;

    FanPtr fan(const std::string& path);  // loads and caches by path
};

}  // namespace torloc
