#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bezout/species.hpp"

namespace bezout {

using IntVec = std::vector<std::int64_t>;

struct Cone {
  std::vector<IntVec> generators;
  friend bool operator==(const Cone&, const Cone&) = default;
};

enum class FanKind { second_species, third_subdivided };

struct Fan {
  FanKind kind = FanKind::second_species;
  int n = 0;
  std::vector<Cone> cones;
  std::vector<std::string> families;  // family label per cone
};

Fan build_fan(FanKind kind, int n);

// Index of the cone with the same generator set, if any.
std::optional<std::size_t> find_cone(const Fan& fan, const Cone& cone);

// u(sigma) for a maximal cone: the second-species fan for Second specs, the subdivided fan
// for TruncatedN3 (and ThirdN3 through its default truncation).
MultiIndex vertex_correspondence(const SpeciesSpec& spec, const Cone& cone);
std::vector<IntVec> all_cone_vertices(const SpeciesSpec& spec);

// The thirteen inward normals of the truncated third-species polytope and their constants h,
// read as <v, x> >= -h(v).
std::vector<IntVec> truncated_normals();
std::vector<std::int64_t> truncated_constants(const SpeciesSpec& spec);

std::int64_t pairing(const IntVec& u, const IntVec& v);

// Every cone of `fine` lies inside some cone of `coarse`; owner[i] receives that cone.
bool fan_refines(const Fan& fine, const Fan& coarse, std::vector<std::size_t>* owner = nullptr);

struct SectionsReport {
  bool pass = false;
  std::size_t support_points = 0;
  std::size_t cones = 0;
  std::size_t violations = 0;
  std::size_t exterior_sampled = 0;
  std::size_t exterior_certified = 0;
  bool vertices_in_support = false;
  // u(sigma) is the unique minimizer over the support of the sum of the cone's generators.
  std::size_t vertices_certified = 0;
  std::vector<std::string> details;  // first few failures
};

// Unique minimizer certificate: <x - u, w> > 0 for every support point x != u, w the generator sum.
bool certify_vertex(const std::vector<MultiIndex>& support, const Cone& cone, const MultiIndex& u);

// Checks <u - u(sigma), v> >= 0 for every support point, cone and generator, and that sampled
// exterior lattice points are excluded by some cone.
SectionsReport sections_check(const SpeciesSpec& spec, std::uint64_t seed = 1, std::size_t samples = 100);

}  // namespace bezout
