#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "planarlam/rooted_map.hpp"

namespace planarlam {

class MapFormatError : public std::runtime_error {
public:
    MapFormatError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Line-oriented map format:
//   edges <E>
//   vertex: d1 d2 ...      one line per vertex, darts counterclockwise
//   root <dart> | root none
// Throws MapFormatError on malformed text and MapError on invalid maps.
RootedMap parse_map(std::string_view text);

// Canonical output: darts relabeled by the root-anchored traversal, vertices
// in discovery order, LF line endings, single spaces.
std::string print_map(const RootedMap& m);

}  // namespace planarlam
