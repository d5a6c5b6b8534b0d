#include "planarlam/rooted_map.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace planarlam {

namespace {

int slot_of(int dart, int edges) {
    int a = dart < 0 ? -dart : dart;
    if (a < 1 || a > edges) throw std::out_of_range("dart out of range");
    return (a - 1) * 2 + (dart < 0 ? 1 : 0);
}

int dart_of_slot(int slot) {
    int e = slot / 2 + 1;
    return (slot % 2) ? -e : e;
}

}  // namespace

int RootedMap::dart_slot(int dart) const { return slot_of(dart, edges_); }

int RootedMap::root() const {
    if (edges_ == 0) throw std::logic_error("vertex map has no root dart");
    return root_;
}

int RootedMap::sigma(int dart) const { return sigma_[dart_slot(dart)]; }

int RootedMap::sigma_inv(int dart) const { return sigma_inv_[dart_slot(dart)]; }

void RootedMap::set_sigma(int dart, int value) {
    sigma_[dart_slot(dart)] = value;
    sigma_inv_[dart_slot(value)] = dart;
}

std::vector<std::vector<int>> RootedMap::vertex_cycles() const {
    std::vector<bool> seen(sigma_.size(), false);
    std::vector<std::vector<int>> out;
    for (size_t s = 0; s < sigma_.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> cycle;
        int d = dart_of_slot(static_cast<int>(s));
        int cur = d;
        do {
            seen[dart_slot(cur)] = true;
            cycle.push_back(cur);
            cur = sigma(cur);
        } while (cur != d);
        out.push_back(std::move(cycle));
    }
    return out;
}

int RootedMap::vertex_count() const {
    if (edges_ == 0) return 1;
    return static_cast<int>(vertex_cycles().size());
}

int RootedMap::face_count() const {
    if (edges_ == 0) return 1;
    return static_cast<int>(faces(*this).size());
}

bool RootedMap::operator==(const RootedMap& other) const {
    return edges_ == other.edges_ && root_ == other.root_ && sigma_ == other.sigma_;
}

// Internal construction and rewiring; the only code that touches the raw
// tables.
struct MapOps {
    static RootedMap raw(int edges) {
        RootedMap m;
        m.edges_ = edges;
        m.sigma_.assign(static_cast<size_t>(edges) * 2, 0);
        m.sigma_inv_.assign(static_cast<size_t>(edges) * 2, 0);
        return m;
    }

    static void set_root(RootedMap& m, int root) { m.root_ = root; }

    static void set(RootedMap& m, int dart, int value) { m.set_sigma(dart, value); }

    // copies src with darts shifted by `offset` edges
    static void copy_shifted(const RootedMap& src, int offset, RootedMap& dst) {
        for (int e = 1; e <= src.edge_count(); ++e) {
            for (int dart : {e, -e}) {
                int s = src.sigma(dart);
                int d2 = dart < 0 ? dart - offset : dart + offset;
                int s2 = s < 0 ? s - offset : s + offset;
                dst.set_sigma(d2, s2);
            }
        }
    }

    struct Deletion {
        RootedMap map;               // rotation structure only, root unset
        std::vector<int> new_label;  // by old edge, 0 for the removed one
    };

    // Splices one edge out of the rotations and compacts dart labels,
    // preserving relative order.
    static Deletion delete_edge(const RootedMap& m, int edge) {
        int edges = m.edge_count();
        Deletion out;
        out.new_label.assign(static_cast<size_t>(edges) + 1, 0);
        int next = 0;
        for (int e = 1; e <= edges; ++e)
            if (e != edge) out.new_label[e] = ++next;
        out.map = raw(edges - 1);
        if (out.map.edge_count() == 0) return out;
        auto relabel = [&out](int dart) {
            int e = dart < 0 ? -dart : dart;
            int n = out.new_label[e];
            return dart < 0 ? -n : n;
        };
        for (int e = 1; e <= edges; ++e) {
            if (e == edge) continue;
            for (int dart : {e, -e}) {
                int nxt = m.sigma(dart);
                while (nxt == edge || nxt == -edge) nxt = m.sigma(nxt);
                out.map.set_sigma(relabel(dart), relabel(nxt));
            }
        }
        return out;
    }

    // Restricts m to the sigma/alpha component of root_dart, relabeling
    // darts in ascending old order.
    static RootedMap restrict_component(const RootedMap& m, int root_dart) {
        std::set<int> darts;
        std::vector<int> work{root_dart};
        darts.insert(root_dart);
        while (!work.empty()) {
            int d = work.back();
            work.pop_back();
            for (int n : {m.sigma(d), -d})
                if (darts.insert(n).second) work.push_back(n);
        }
        std::vector<int> new_label(static_cast<size_t>(m.edge_count()) + 1, 0);
        int next = 0;
        for (int e = 1; e <= m.edge_count(); ++e)
            if (darts.count(e)) new_label[e] = ++next;
        RootedMap out = raw(next);
        auto relabel = [&new_label](int dart) {
            int e = dart < 0 ? -dart : dart;
            int n = new_label[e];
            return dart < 0 ? -n : n;
        };
        for (int d : darts) out.set_sigma(relabel(d), relabel(m.sigma(d)));
        out.root_ = relabel(root_dart);
        return out;
    }
};

RootedMap RootedMap::build(const MapData& data) {
    ValidationReport report = validate(data);
    if (!report.ok()) throw MapError(report.defect, report.detail);
    RootedMap m = MapOps::raw(data.edges);
    for (const auto& cycle : data.cycles) {
        for (size_t i = 0; i < cycle.size(); ++i)
            m.set_sigma(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    m.root_ = data.root.value_or(0);
    return m;
}

ValidationReport validate(const MapData& data) {
    if (data.edges < 0)
        return {MapDefect::MalformedPermutation, "negative edge count"};
    if (data.edges == 0) {
        if (!data.cycles.empty())
            return {MapDefect::MalformedPermutation, "vertex map must have no darts"};
        if (data.root)
            return {MapDefect::MalformedPermutation, "vertex map must have no root"};
        return {};
    }
    if (!data.root)
        return {MapDefect::MalformedPermutation, "missing root dart"};
    int edges = data.edges;
    std::vector<int> seen(static_cast<size_t>(edges) * 2, 0);
    for (const auto& cycle : data.cycles) {
        if (cycle.empty())
            return {MapDefect::MalformedPermutation, "empty vertex line"};
        for (int d : cycle) {
            int a = d < 0 ? -d : d;
            if (a < 1 || a > edges)
                return {MapDefect::MalformedPermutation,
                        "dart " + std::to_string(d) + " out of range"};
            if (seen[slot_of(d, edges)]++)
                return {MapDefect::MalformedPermutation,
                        "dart " + std::to_string(d) + " listed twice"};
        }
    }
    for (size_t s = 0; s < seen.size(); ++s)
        if (!seen[s])
            return {MapDefect::MalformedPermutation,
                    "dart " + std::to_string(dart_of_slot(static_cast<int>(s))) + " missing"};
    {
        int r = *data.root;
        int a = r < 0 ? -r : r;
        if (a < 1 || a > edges)
            return {MapDefect::MalformedPermutation, "root dart out of range"};
    }
    // connectivity: union vertex cycles along edges
    int v_count = static_cast<int>(data.cycles.size());
    std::vector<int> vertex_of(static_cast<size_t>(edges) * 2, -1);
    for (int v = 0; v < v_count; ++v)
        for (int d : data.cycles[v]) vertex_of[slot_of(d, edges)] = v;
    std::vector<int> parent(v_count);
    for (int v = 0; v < v_count; ++v) parent[v] = v;
    auto find = [&parent](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 1; e <= edges; ++e) {
        int a = find(vertex_of[slot_of(e, edges)]);
        int b = find(vertex_of[slot_of(-e, edges)]);
        if (a != b) parent[a] = b;
    }
    int components = 0;
    for (int v = 0; v < v_count; ++v)
        if (find(v) == v) ++components;
    if (components != 1)
        return {MapDefect::Disconnected,
                std::to_string(components) + " connected components"};
    // planarity as Euler characteristic 2, faces = orbits of phi(d) = sigma(-d)
    std::vector<int> sigma(static_cast<size_t>(edges) * 2, 0);
    for (const auto& cycle : data.cycles)
        for (size_t i = 0; i < cycle.size(); ++i)
            sigma[slot_of(cycle[i], edges)] = cycle[(i + 1) % cycle.size()];
    std::vector<bool> visited(static_cast<size_t>(edges) * 2, false);
    int f_count = 0;
    for (size_t s = 0; s < visited.size(); ++s) {
        if (visited[s]) continue;
        ++f_count;
        int d = dart_of_slot(static_cast<int>(s));
        int cur = d;
        do {
            visited[slot_of(cur, edges)] = true;
            cur = sigma[slot_of(-cur, edges)];
        } while (cur != d);
    }
    int euler = v_count - edges + f_count;
    if (euler != 2)
        return {MapDefect::NonPlanar,
                "Euler characteristic " + std::to_string(euler) + ", expected 2"};
    return {};
}

ValidationReport validate(const RootedMap& m) {
    MapData data;
    data.edges = m.edge_count();
    if (!m.is_vertex_map()) {
        data.cycles = m.vertex_cycles();
        data.root = m.root();
    }
    return validate(data);
}

std::vector<std::vector<int>> faces(const RootedMap& m) {
    std::vector<std::vector<int>> out;
    if (m.is_vertex_map()) return out;
    int edges = m.edge_count();
    std::vector<bool> visited(static_cast<size_t>(edges) * 2, false);
    for (int s = 0; s < 2 * edges; ++s) {
        if (visited[s]) continue;
        int d = dart_of_slot(s);
        std::vector<int> cycle;
        int cur = d;
        do {
            visited[slot_of(cur, edges)] = true;
            cycle.push_back(cur);
            cur = m.phi(cur);
        } while (cur != d);
        out.push_back(std::move(cycle));
    }
    return out;
}

int outer_face_degree(const RootedMap& m) {
    if (m.is_vertex_map()) return 0;
    int root = m.root();
    int len = 0;
    int cur = root;
    do {
        ++len;
        cur = m.phi(cur);
    } while (cur != root);
    return len;
}

bool is_isthmus(const RootedMap& m, int edge) {
    if (edge < 1 || edge > m.edge_count())
        throw std::out_of_range("is_isthmus: no such edge");
    // an isthmus has both orientations on the same face
    int cur = m.phi(edge);
    while (cur != edge) {
        if (cur == -edge) return true;
        cur = m.phi(cur);
    }
    return false;
}

MapClass classify_map(const RootedMap& m) {
    if (m.is_vertex_map()) return MapClass::VertexMap;
    int root_edge = m.root() < 0 ? -m.root() : m.root();
    return is_isthmus(m, root_edge) ? MapClass::IsthmicRoot : MapClass::NonIsthmicRoot;
}

RootedMap compose_isthmic(const RootedMap& m1, const RootedMap& m2) {
    int e1 = m1.edge_count(), e2 = m2.edge_count();
    int A = e1 + e2 + 1;
    RootedMap m = MapOps::raw(A);
    MapOps::copy_shifted(m1, 0, m);
    MapOps::copy_shifted(m2, e1, m);
    if (m1.is_vertex_map()) {
        MapOps::set(m, A, A);
    } else {
        int r1 = m1.root();
        int before = m.sigma_inv(r1);
        MapOps::set(m, before, A);
        MapOps::set(m, A, r1);
    }
    if (m2.is_vertex_map()) {
        MapOps::set(m, -A, -A);
    } else {
        int r2 = m2.root() < 0 ? m2.root() - e1 : m2.root() + e1;
        int before = m.sigma_inv(r2);
        MapOps::set(m, before, -A);
        MapOps::set(m, -A, r2);
    }
    MapOps::set_root(m, A);
    return m;
}

std::pair<RootedMap, RootedMap> decompose_isthmic(const RootedMap& m) {
    if (classify_map(m) != MapClass::IsthmicRoot)
        throw std::invalid_argument("decompose_isthmic: root is not isthmic");
    int A = m.root();
    int r1 = m.sigma(A);   // dart after -A along the outer face
    int r2 = m.sigma(-A);  // dart after A along the outer face
    int root_edge = A < 0 ? -A : A;
    MapOps::Deletion del = MapOps::delete_edge(m, root_edge);
    auto relabel = [&del](int dart) {
        int e = dart < 0 ? -dart : dart;
        int n = del.new_label[e];
        return dart < 0 ? -n : n;
    };
    RootedMap m1, m2;
    if (r1 != A) m1 = MapOps::restrict_component(del.map, relabel(r1));
    if (r2 != -A) m2 = MapOps::restrict_component(del.map, relabel(r2));
    return {std::move(m1), std::move(m2)};
}

RootedMap compose_nonisthmic(const RootedMap& m1, int k) {
    int o1 = outer_face_degree(m1);
    if (k < 0 || k > o1)
        throw std::invalid_argument("compose_nonisthmic: k out of range");
    int e1 = m1.edge_count();
    int A = e1 + 1;
    RootedMap m = MapOps::raw(A);
    MapOps::copy_shifted(m1, 0, m);
    MapOps::set_root(m, A);
    if (m1.is_vertex_map()) {
        // the single loop
        MapOps::set(m, A, -A);
        MapOps::set(m, -A, A);
        return m;
    }
    int r = m1.root();
    if (k == 0) {
        int before = m.sigma_inv(r);
        MapOps::set(m, before, -A);
        MapOps::set(m, -A, A);
        MapOps::set(m, A, r);
        return m;
    }
    // landing dart of the backward walk, computed before any edit
    int w = r;
    for (int step = 0; step < k; ++step) w = m1.phi_inv(w);
    if (w == r) {
        // the walk wraps the whole outer face
        int before = m.sigma_inv(r);
        MapOps::set(m, before, A);
        MapOps::set(m, A, -A);
        MapOps::set(m, -A, r);
        return m;
    }
    int before_r = m.sigma_inv(r);
    int before_w = m.sigma_inv(w);
    MapOps::set(m, before_r, A);
    MapOps::set(m, A, r);
    MapOps::set(m, before_w, -A);
    MapOps::set(m, -A, w);
    return m;
}

std::pair<RootedMap, int> decompose_nonisthmic(const RootedMap& m) {
    if (classify_map(m) != MapClass::NonIsthmicRoot)
        throw std::invalid_argument("decompose_nonisthmic: root is not non-isthmic");
    int A = m.root();
    int k = outer_face_degree(m) - 1;
    // dart after -A along its face, unless that dart is -A itself, in which
    // case the dart after A along the outer face
    int b = m.sigma(A);
    if (b == -A) b = m.sigma(-A);
    int root_edge = A < 0 ? -A : A;
    MapOps::Deletion del = MapOps::delete_edge(m, root_edge);
    if (b == A || del.map.edge_count() == 0)
        return {RootedMap(), k};
    int e = b < 0 ? -b : b;
    int nb = del.new_label[e];
    MapOps::set_root(del.map, b < 0 ? -nb : nb);
    return {std::move(del.map), k};
}

RootedMap canonical_relabel(const RootedMap& m) {
    if (m.is_vertex_map()) return RootedMap();
    std::vector<int> new_label(static_cast<size_t>(m.edge_count()) + 1, 0);
    std::vector<int> sign_flip(static_cast<size_t>(m.edge_count()) + 1, 0);
    int next_edge = 0;
    auto discover = [&](int dart) {
        int e = dart < 0 ? -dart : dart;
        if (new_label[e]) return;
        new_label[e] = ++next_edge;
        sign_flip[e] = dart < 0;
    };
    auto relabel = [&](int dart) {
        int e = dart < 0 ? -dart : dart;
        int n = new_label[e];
        int d = dart < 0 ? -n : n;
        return sign_flip[e] ? -d : d;
    };
    std::vector<int> order;
    std::vector<int> queue{m.root()};
    std::set<int> seen{m.root()};
    discover(m.root());
    size_t head = 0;
    while (head < queue.size()) {
        int d = queue[head++];
        order.push_back(d);
        for (int n : {m.sigma(d), -d}) {
            if (seen.insert(n).second) {
                discover(n);
                queue.push_back(n);
            }
        }
    }
    RootedMap out = MapOps::raw(m.edge_count());
    for (int d : order) MapOps::set(out, relabel(d), relabel(m.sigma(d)));
    MapOps::set_root(out, relabel(m.root()));  // always +1
    return out;
}

CanonicalMap canonicalize(const RootedMap& m) {
    return CanonicalMap(canonical_relabel(m));
}

std::vector<int> CanonicalMap::encoding() const {
    std::vector<int> out;
    out.push_back(map_.edge_count());
    out.push_back(map_.is_vertex_map() ? 0 : map_.root());
    for (int e = 1; e <= map_.edge_count(); ++e) {
        out.push_back(map_.sigma(e));
        out.push_back(map_.sigma(-e));
    }
    return out;
}

std::vector<std::vector<RootedMap>> generate_rooted_maps(int max_edges) {
    std::vector<std::vector<RootedMap>> layers;
    layers.push_back({RootedMap()});
    for (int n = 1; n <= max_edges; ++n) {
        std::map<std::vector<int>, RootedMap> layer;
        auto add = [&layer](const RootedMap& m) {
            CanonicalMap c = canonicalize(m);
            layer.emplace(c.encoding(), c.map());
        };
        for (int a = 0; a <= n - 1; ++a) {
            for (const auto& m1 : layers[a])
                for (const auto& m2 : layers[n - 1 - a])
                    add(compose_isthmic(m1, m2));
        }
        for (const auto& m1 : layers[n - 1]) {
            int o1 = outer_face_degree(m1);
            for (int k = 0; k <= o1; ++k) add(compose_nonisthmic(m1, k));
        }
        std::vector<RootedMap> flat;
        flat.reserve(layer.size());
        for (auto& kv : layer) flat.push_back(std::move(kv.second));
        layers.push_back(std::move(flat));
    }
    return layers;
}

}  // namespace planarlam
