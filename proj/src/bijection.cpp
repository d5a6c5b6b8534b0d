#include "planarlam/bijection.hpp"

#include <set>
#include <stdexcept>

#include "planarlam/enumerate.hpp"
#include "planarlam/term_io.hpp"

namespace planarlam {

DecompTrace decompose_map(const RootedMap& m) {
    DecompTrace trace;
    struct Item {
        RootedMap map;
        int slot;
    };
    trace.nodes.emplace_back();
    trace.root = 0;
    std::vector<Item> work;
    work.push_back({m, 0});
    while (!work.empty()) {
        Item item = std::move(work.back());
        work.pop_back();
        // index access throughout: emplace_back invalidates references
        switch (classify_map(item.map)) {
        case MapClass::VertexMap:
            trace.nodes[item.slot].tag = DecompTrace::Case::Vertex;
            break;
        case MapClass::IsthmicRoot: {
            auto [m1, m2] = decompose_isthmic(item.map);
            int left = static_cast<int>(trace.nodes.size());
            trace.nodes.emplace_back();
            int right = static_cast<int>(trace.nodes.size());
            trace.nodes.emplace_back();
            trace.nodes[item.slot].tag = DecompTrace::Case::Isthmic;
            trace.nodes[item.slot].left = left;
            trace.nodes[item.slot].right = right;
            work.push_back({std::move(m1), left});
            work.push_back({std::move(m2), right});
            break;
        }
        case MapClass::NonIsthmicRoot: {
            auto [m1, k] = decompose_nonisthmic(item.map);
            int left = static_cast<int>(trace.nodes.size());
            trace.nodes.emplace_back();
            trace.nodes[item.slot].tag = DecompTrace::Case::NonIsthmic;
            trace.nodes[item.slot].k = k;
            trace.nodes[item.slot].left = left;
            work.push_back({std::move(m1), left});
            break;
        }
        }
    }
    return trace;
}

DecompTrace decompose_term(const LinearTerm& t) {
    require_npt(t);
    DecompTrace trace;
    struct Item {
        LinearTerm term;
        int slot;
    };
    trace.nodes.emplace_back();
    trace.root = 0;
    std::vector<Item> work;
    work.push_back({t, 0});
    while (!work.empty()) {
        Item item = std::move(work.back());
        work.pop_back();
        Coloring::Ptr c = *color(item.term, ColorKind::Normal);
        Trichotomy cls = classify(item.term, c);
        switch (cls.tag) {
        case TrichotomyTag::IdentityTerm:
            trace.nodes[item.slot].tag = DecompTrace::Case::Vertex;
            break;
        case TrichotomyTag::FunctionOpen: {
            auto [t1, t2] = decompose_fun_open(item.term);
            int left = static_cast<int>(trace.nodes.size());
            trace.nodes.emplace_back();
            int right = static_cast<int>(trace.nodes.size());
            trace.nodes.emplace_back();
            trace.nodes[item.slot].tag = DecompTrace::Case::Isthmic;
            trace.nodes[item.slot].left = left;
            trace.nodes[item.slot].right = right;
            work.push_back({std::move(t1), left});
            work.push_back({std::move(t2), right});
            break;
        }
        case TrichotomyTag::ValueOpen: {
            auto [t1, term_k] = decompose_val_open(item.term);
            int left = static_cast<int>(trace.nodes.size());
            trace.nodes.emplace_back();
            trace.nodes[item.slot].tag = DecompTrace::Case::NonIsthmic;
            // term handle index k+1 <-> map walk length k; the offset lives here
            trace.nodes[item.slot].k = term_k - 1;
            trace.nodes[item.slot].left = left;
            work.push_back({std::move(t1), left});
            break;
        }
        }
    }
    return trace;
}

LinearTerm DecompTrace::replay_term() const {
    if (root < 0) throw std::logic_error("replay_term: empty trace");
    // children follow their parent in the node vector, so one reverse sweep
    // evaluates bottom-up
    std::vector<LinearTerm> value(nodes.size());
    for (int i = static_cast<int>(nodes.size()) - 1; i >= 0; --i) {
        const Node& node = nodes[static_cast<size_t>(i)];
        switch (node.tag) {
        case Case::Vertex:
            value[i] = LinearTerm{Term::var(0), {"x"}};
            break;
        case Case::Isthmic:
            value[i] = compose_fun_open(value[node.left], value[node.right]);
            break;
        case Case::NonIsthmic:
            value[i] = compose_val_open(value[node.left], node.k + 1);
            break;
        }
    }
    return value[root];
}

RootedMap DecompTrace::replay_map() const {
    if (root < 0) throw std::logic_error("replay_map: empty trace");
    std::vector<RootedMap> value(nodes.size());
    for (int i = static_cast<int>(nodes.size()) - 1; i >= 0; --i) {
        const Node& node = nodes[static_cast<size_t>(i)];
        switch (node.tag) {
        case Case::Vertex:
            value[i] = RootedMap();
            break;
        case Case::Isthmic:
            value[i] = compose_isthmic(value[node.left], value[node.right]);
            break;
        case Case::NonIsthmic:
            value[i] = compose_nonisthmic(value[node.left], node.k);
            break;
        }
    }
    return value[root];
}

namespace {

void trace_string(const DecompTrace& trace, int at, std::string& out) {
    const DecompTrace::Node& node = trace.nodes[static_cast<size_t>(at)];
    switch (node.tag) {
    case DecompTrace::Case::Vertex:
        out += "V";
        return;
    case DecompTrace::Case::Isthmic:
        out += "I(";
        trace_string(trace, node.left, out);
        out += ",";
        trace_string(trace, node.right, out);
        out += ")";
        return;
    case DecompTrace::Case::NonIsthmic:
        out += "N" + std::to_string(node.k) + "(";
        trace_string(trace, node.left, out);
        out += ")";
        return;
    }
}

}  // namespace

std::string DecompTrace::to_string() const {
    std::string out;
    if (root >= 0) trace_string(*this, root, out);
    return out;
}

std::pair<LinearTerm, Coloring::Ptr> map_to_term(const RootedMap& m) {
    ValidationReport report = validate(m);
    if (!report.ok()) throw MapError(report.defect, report.detail);
    LinearTerm t = decompose_map(m).replay_term();
    return {t, *color(t, ColorKind::Normal)};
}

RootedMap term_to_map(const LinearTerm& t, const Coloring::Ptr& c) {
    if (!c || c->kind() != ColorKind::Normal)
        throw std::invalid_argument("term_to_map: needs a normal coloring");
    return decompose_term(t).replay_map();
}

BijectionReport verify_bijection(int max_size) {
    BijectionReport report;
    auto fail = [&report](const std::string& msg) {
        report.ok = false;
        if (report.failures.size() < 32) report.failures.push_back(msg);
    };
    std::vector<std::vector<RootedMap>> maps = generate_rooted_maps(max_size - 1);
    for (int n = 1; n <= max_size; ++n) {
        auto terms = enumerate_npt(n, 1);
        const auto& layer = maps[static_cast<size_t>(n - 1)];
        if (terms.size() != layer.size())
            fail("count mismatch at size " + std::to_string(n) + ": " +
                 std::to_string(terms.size()) + " terms vs " +
                 std::to_string(layer.size()) + " maps");
        std::set<std::vector<int>> images;
        for (const auto& [t, c] : terms) {
            ++report.terms_checked;
            DecompTrace trace = decompose_term(t);
            RootedMap m = trace.replay_map();
            if (m.edge_count() != n - 1)
                fail("size law broken for " + print_term(t) + " (trace " +
                     trace.to_string() + ")");
            int onh = static_cast<int>(outer_neutral_handles(t, c).size());
            if (outer_face_degree(m) != onh - 1)
                fail("degree law broken for " + print_term(t) + " (trace " +
                     trace.to_string() + ")");
            images.insert(canonicalize(m).encoding());
            LinearTerm back = map_to_term(m).first;
            if (!alpha_equal(back, t))
                fail("term roundtrip broken for " + print_term(t) + " (trace " +
                     trace.to_string() + ")");
        }
        if (images.size() != terms.size())
            fail("term_to_map not injective at size " + std::to_string(n));
        for (const auto& m : layer) {
            ++report.maps_checked;
            DecompTrace trace = decompose_map(m);
            LinearTerm t = trace.replay_term();
            Coloring::Ptr c = *color(t, ColorKind::Normal);
            if (c->size() != m.edge_count() + 1)
                fail("size law broken for a map with " +
                     std::to_string(m.edge_count()) + " edges (trace " +
                     trace.to_string() + ")");
            if (static_cast<int>(outer_neutral_handles(t, c).size()) !=
                outer_face_degree(m) + 1)
                fail("degree law broken for a map with " +
                     std::to_string(m.edge_count()) + " edges (trace " +
                     trace.to_string() + ")");
            RootedMap back = term_to_map(t, c);
            if (!(canonicalize(back) == canonicalize(m)))
                fail("map roundtrip broken (trace " + trace.to_string() + ")");
            if (images.find(canonicalize(m).encoding()) == images.end())
                fail("map not reached by any term at " +
                     std::to_string(m.edge_count()) + " edges");
        }
    }
    return report;
}

}  // namespace planarlam
