#include "planarlam/map_io.hpp"

#include <algorithm>
#include <sstream>

namespace planarlam {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    long v = 0;
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return false;
        v = v * 10 + (tok[i] - '0');
        if (v > 1000000000L) return false;
    }
    out = static_cast<int>(tok[0] == '-' ? -v : v);
    return true;
}

}  // namespace

RootedMap parse_map(std::string_view text) {
    MapData data;
    bool have_edges = false;
    bool have_root = false;
    int line_no = 0;
    for (const std::string& raw : split_lines(text)) {
        ++line_no;
        std::istringstream in(raw);
        std::string head;
        if (!(in >> head)) continue;  // blank line
        if (head == "edges") {
            std::string tok;
            if (!(in >> tok) || !parse_int(tok, data.edges))
                throw MapFormatError("expected an edge count", line_no);
            have_edges = true;
        } else if (head == "vertex:") {
            std::vector<int> cycle;
            std::string tok;
            while (in >> tok) {
                int d;
                if (!parse_int(tok, d))
                    throw MapFormatError("bad dart '" + tok + "'", line_no);
                cycle.push_back(d);
            }
            data.cycles.push_back(std::move(cycle));
        } else if (head == "root") {
            std::string tok;
            if (!(in >> tok)) throw MapFormatError("expected a root dart or 'none'", line_no);
            if (tok == "none") {
                data.root.reset();
            } else {
                int d;
                if (!parse_int(tok, d))
                    throw MapFormatError("bad root dart '" + tok + "'", line_no);
                data.root = d;
            }
            have_root = true;
        } else {
            throw MapFormatError("unknown directive '" + head + "'", line_no);
        }
        std::string extra;
        if (in >> extra) throw MapFormatError("trailing tokens", line_no);
    }
    if (!have_edges) throw MapFormatError("missing 'edges' line", 1);
    if (!have_root) throw MapFormatError("missing 'root' line", line_no);
    return RootedMap::build(data);  // throws MapError on invalid maps
}

std::string print_map(const RootedMap& m) {
    RootedMap c = canonical_relabel(m);
    std::ostringstream out;
    out << "edges " << c.edge_count() << "\n";
    if (!c.is_vertex_map()) {
        // each cycle led by its lowest-ranked dart (+1 < -1 < +2 < ...),
        // vertices ordered by their leading dart
        std::vector<std::vector<int>> cycles = c.vertex_cycles();
        auto slot_rank = [](int dart) {
            int e = dart < 0 ? -dart : dart;
            return (e - 1) * 2 + (dart < 0 ? 1 : 0);
        };
        std::vector<std::pair<int, std::vector<int>>> ordered;
        for (auto& cyc : cycles) {
            size_t best = 0;
            for (size_t i = 1; i < cyc.size(); ++i)
                if (slot_rank(cyc[i]) < slot_rank(cyc[best])) best = i;
            std::vector<int> rotated;
            rotated.reserve(cyc.size());
            for (size_t i = 0; i < cyc.size(); ++i)
                rotated.push_back(cyc[(best + i) % cyc.size()]);
            ordered.emplace_back(slot_rank(rotated[0]), std::move(rotated));
        }
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [rank, cyc] : ordered) {
            (void)rank;
            out << "vertex:";
            for (int d : cyc) out << ' ' << d;
            out << "\n";
        }
        out << "root " << c.root() << "\n";
    } else {
        out << "root none\n";
    }
    return out.str();
}

}  // namespace planarlam
