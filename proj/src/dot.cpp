#include "planarlam/dot.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace planarlam {

namespace {

struct DiagramEmitter {
    std::ostringstream nodes;
    std::ostringstream edges;
    int next_node = 0;
    std::vector<std::string> binder_sources;  // innermost last
    std::vector<std::string> inputs;          // context slot -> node id

    std::string new_node(const char* kind) {
        std::string id = "n" + std::to_string(next_node++);
        nodes << "  " << id << " [kind=" << kind << ", shape=circle, label=\""
              << kind << "\"];\n";
        return id;
    }

    void wire(const std::string& from, const std::string& to, ColorKind kind) {
        edges << "  " << from << " -> " << to << " [color="
              << (kind == ColorKind::Neutral ? "blue" : "red") << "];\n";
    }

    // Returns the node id producing the subdiagram's outgoing wire.
    std::string walk(const Term::Ptr& t, const Coloring* c) {
        switch (c->rule()) {
        case Coloring::Rule::Var: {
            if (t->kind() != Term::Kind::Var)
                throw std::invalid_argument("emit_dot_diagram: coloring does not match term");
            int idx = t->index();
            int depth = static_cast<int>(binder_sources.size());
            if (idx < depth) return binder_sources[depth - 1 - idx];
            return inputs.at(static_cast<size_t>(idx - depth));
        }
        case Coloring::Rule::App: {
            if (t->kind() != Term::Kind::App)
                throw std::invalid_argument("emit_dot_diagram: coloring does not match term");
            std::string fun_out = walk(t->fun(), c->left().get());
            std::string arg_out = walk(t->arg(), c->right().get());
            std::string a = new_node("a");
            wire(fun_out, a, ColorKind::Neutral);
            wire(arg_out, a, ColorKind::Normal);
            return a;
        }
        case Coloring::Rule::Coerce: {
            std::string in = walk(t, c->left().get());
            std::string s = new_node("s");
            wire(in, s, ColorKind::Neutral);
            return s;
        }
        case Coloring::Rule::Lam: {
            if (t->kind() != Term::Kind::Lam)
                throw std::invalid_argument("emit_dot_diagram: coloring does not match term");
            std::string l = new_node("l");
            binder_sources.push_back(l);
            std::string body_out = walk(t->body(), c->left().get());
            binder_sources.pop_back();
            wire(body_out, l, ColorKind::Normal);
            return l;
        }
        }
        throw std::logic_error("emit_dot_diagram: bad rule");
    }
};

}  // namespace

std::string emit_dot_diagram(const LinearTerm& t, const Coloring::Ptr& c) {
    if (!c) throw std::invalid_argument("emit_dot_diagram: null coloring");
    DiagramEmitter em;
    std::ostringstream out;
    out << "digraph diagram {\n";
    out << "  rankdir=BT;\n";
    for (size_t j = 0; j < t.context.size(); ++j) {
        std::string id = "in" + std::to_string(j);
        out << "  " << id << " [shape=none, label=\"" << t.context[j] << "\"];\n";
        em.inputs.push_back(id);
    }
    out << "  out [shape=none, label=\"\"];\n";
    std::string result = em.walk(t.term, c.get());
    em.wire(result, "out", c->kind());
    out << em.nodes.str();
    out << em.edges.str();
    out << "}\n";
    return out.str();
}

std::string emit_dot_map(const RootedMap& m) {
    RootedMap c = canonical_relabel(m);
    std::ostringstream out;
    out << "digraph map {\n";
    if (c.is_vertex_map()) {
        out << "  v0 [shape=point];\n";
        out << "}\n";
        return out.str();
    }
    // vertex order as in the canonical text format
    std::vector<std::vector<int>> cycles = c.vertex_cycles();
    auto slot_rank = [](int dart) {
        int e = dart < 0 ? -dart : dart;
        return (e - 1) * 2 + (dart < 0 ? 1 : 0);
    };
    std::vector<std::pair<int, size_t>> order;
    for (size_t v = 0; v < cycles.size(); ++v) {
        int best = slot_rank(cycles[v][0]);
        for (int d : cycles[v]) best = std::min(best, slot_rank(d));
        order.emplace_back(best, v);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> vertex_of_slot(static_cast<size_t>(c.edge_count()) * 2, -1);
    for (size_t rank = 0; rank < order.size(); ++rank) {
        size_t v = order[rank].second;
        out << "  v" << rank << " [shape=point];\n";
        for (int d : cycles[v]) vertex_of_slot[static_cast<size_t>(slot_rank(d))] = static_cast<int>(rank);
    }
    int root = c.root();  // +1 after relabeling
    for (int e = 1; e <= c.edge_count(); ++e) {
        int from = vertex_of_slot[static_cast<size_t>(slot_rank(e))];
        int to = vertex_of_slot[static_cast<size_t>(slot_rank(-e))];
        if (e == root) {
            out << "  v" << from << " -> v" << to << " [label=\"root\"];\n";
        } else {
            out << "  v" << from << " -> v" << to << " [dir=none];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace planarlam
