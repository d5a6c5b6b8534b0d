#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarlam {

enum class MapDefect { None, MalformedPermutation, Disconnected, NonPlanar };

struct ValidationReport {
    MapDefect defect = MapDefect::None;
    std::string detail;
    bool ok() const { return defect == MapDefect::None; }
};

class MapError : public std::runtime_error {
public:
    MapError(MapDefect defect, const std::string& detail)
        : std::runtime_error(detail), defect_(defect) {}
    MapDefect defect() const { return defect_; }

private:
    MapDefect defect_;
};

// Raw rotation-system data as read from a map file: counterclockwise dart
// cycles per vertex, darts +-1..+-E, and a root dart (absent only for the
// edgeless vertex map).
struct MapData {
    int edges = 0;
    std::vector<std::vector<int>> cycles;
    std::optional<int> root;
};

// A rooted planar map: vertex rotation permutation sigma over darts
// {+-1..+-E} with the edge involution alpha(d) = -d, plus the root dart.
// Faces are the orbits of phi = sigma o alpha, phi(d) = sigma(-d); the face
// of a dart is the face to its left. Always structurally valid (permutation
// well-formed, connected, Euler characteristic 2).
class RootedMap {
public:
    RootedMap() = default;  // the vertex map

    // Throws MapError unless the data describes a rooted planar map.
    static RootedMap build(const MapData& data);

    int edge_count() const { return edges_; }
    bool is_vertex_map() const { return edges_ == 0; }
    int root() const;  // throws on the vertex map

    int alpha(int dart) const { return -dart; }
    int sigma(int dart) const;
    int sigma_inv(int dart) const;
    int phi(int dart) const { return sigma(-dart); }
    int phi_inv(int dart) const { return -sigma_inv(dart); }

    // sigma orbits, each cycle led by its smallest positive-first dart;
    // deterministic order.
    std::vector<std::vector<int>> vertex_cycles() const;

    int vertex_count() const;
    int face_count() const;

    bool operator==(const RootedMap& other) const;

private:
    friend struct MapOps;

    int dart_slot(int dart) const;
    void set_sigma(int dart, int value);

    int edges_ = 0;
    int root_ = 0;                // 0 = none (vertex map)
    std::vector<int> sigma_;      // slot-indexed successor table
    std::vector<int> sigma_inv_;  // inverse table
};

ValidationReport validate(const MapData& data);
ValidationReport validate(const RootedMap& m);

std::vector<std::vector<int>> faces(const RootedMap& m);
int outer_face_degree(const RootedMap& m);  // 0 for the vertex map

bool is_isthmus(const RootedMap& m, int edge);

enum class MapClass { VertexMap, IsthmicRoot, NonIsthmicRoot };
MapClass classify_map(const RootedMap& m);

// Joins two rooted maps with a new isthmic root edge from the root vertex of
// m1 to the root vertex of m2. The new outer face reads: root dart, outer
// cycle of m2 from its root, opposite dart, outer cycle of m1 from its root.
RootedMap compose_isthmic(const RootedMap& m1, const RootedMap& m2);

// Deletes the isthmic root edge; the components are re-rooted at the darts
// following the opposite dart and the root dart along the old outer face.
std::pair<RootedMap, RootedMap> decompose_isthmic(const RootedMap& m);

// Adds a non-isthmic root edge closing a k-step backward walk along the
// outer face (0 <= k <= outer degree). The new outer face has degree k+1.
RootedMap compose_nonisthmic(const RootedMap& m1, int k);

// Deletes the non-isthmic root edge and re-roots deterministically; returns
// k = outer degree - 1 so that compose_nonisthmic inverts exactly.
std::pair<RootedMap, int> decompose_nonisthmic(const RootedMap& m);

// Deterministic relabeling by a breadth-first walk from the root dart
// (sigma successor explored before the opposite dart). Two rooted maps are
// equal up to root-preserving homeomorphism iff their canonical forms are
// identical.
class CanonicalMap {
public:
    explicit CanonicalMap(RootedMap m) : map_(std::move(m)) {}
    const RootedMap& map() const { return map_; }

    // flat (edges, root, sigma...) encoding; usable as an ordering/set key
    std::vector<int> encoding() const;

    bool operator==(const CanonicalMap& other) const { return map_ == other.map_; }
    bool operator<(const CanonicalMap& other) const { return encoding() < other.encoding(); }

private:
    RootedMap map_;
};

CanonicalMap canonicalize(const RootedMap& m);
RootedMap canonical_relabel(const RootedMap& m);

// All rooted planar maps with up to max_edges edges, generated by closing
// the vertex map under the two compose operators and deduplicating by
// canonical form. Result is indexed by edge count, deterministically
// ordered.
std::vector<std::vector<RootedMap>> generate_rooted_maps(int max_edges);

}  // namespace planarlam
