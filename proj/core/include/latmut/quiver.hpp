#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latmut/coxeter.hpp"
#include "latmut/lattice.hpp"

namespace latmut {

// Vertices are 0-based here; vertex k is Coxeter vertex k+1.
struct WeightedQuiver {
    std::vector<int> weights;
    std::map<std::pair<int, int>, int> edges;

    int size() const { return static_cast<int>(weights.size()); }
    int multiplicity(int from, int to) const;
    friend bool operator==(const WeightedQuiver&, const WeightedQuiver&) = default;
};

// Validates: no loops, no 2-cycles, positive multiplicities, weights in {1,2}.
WeightedQuiver make_quiver(std::vector<int> weights,
                           const std::vector<std::tuple<int, int, int>>& edges);

WeightedQuiver mutate_quiver(const WeightedQuiver& q, int vertex);

struct SinksSources {
    std::vector<int> sinks;
    std::vector<int> sources;
};

SinksSources sinks_sources(const WeightedQuiver& q);

// Path quiver orientation; right[i-1] means i -> i+1 (1-based vertices).
struct CoxeterOrientation {
    CoxeterType type = CoxeterType::A;
    int n = 1;
    std::vector<bool> right;
    friend bool operator==(const CoxeterOrientation&, const CoxeterOrientation&) = default;
};

// dirs: n-1 letters from {R, L}.
CoxeterOrientation make_orientation(CoxeterType type, int n, const std::string& dirs);
std::string dirs_string(const CoxeterOrientation& o);
std::vector<CoxeterOrientation> all_orientations(CoxeterType type, int n);

// 1-based vertex.
bool is_sink_or_source(const CoxeterOrientation& o, int vertex);
CoxeterOrientation reflect(const CoxeterOrientation& o, int vertex);
CoxeterOrientation reverse_all(const CoxeterOrientation& o);

// Type B: weight 1 at the first vertex, 2 elsewhere.
WeightedQuiver orientation_to_quiver(const CoxeterOrientation& o);

// Sink/source reflections (1-based vertices) carrying o1 to o2.
std::vector<int> sink_source_reflection_path(const CoxeterOrientation& o1,
                                             const CoxeterOrientation& o2);

struct LatticeQuiver {
    WeightedQuiver quiver;
    // atoms[k] is the atom for vertex k.
    std::vector<Elem> atoms;
};

// Throws NotPolygonal, or PreconditionFailed when type-B weights cannot be pinned.
LatticeQuiver quiver_from_lattice(const Lattice& l, CoxeterType type,
                                  std::optional<std::vector<Elem>> atom_order = std::nullopt);

// Key equal iff the quivers are isomorphic as weighted quivers.
std::string quiver_iso_key(const WeightedQuiver& q);

std::string quiver_to_json(const WeightedQuiver& q);
WeightedQuiver quiver_from_json(const std::string& text);
std::string quiver_to_dot(const WeightedQuiver& q, const std::string& name = "quiver");

}  // namespace latmut
