#pragma once

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Runs a command, captures stdout, reports the exit status.
struct CommandResult {
    int status = -1;
    std::string output;
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// Shallow DOT syntax check: a digraph header, balanced braces, and each
// statement either a node line `id [attrs];` or an edge line
// `id -> id [attrs];`.
inline bool looks_like_valid_dot(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.size() < 2) return false;
    const std::string& head = lines.front();
    if (head.rfind("digraph ", 0) != 0 || head.back() != '{') return false;
    if (lines.back() != "}") return false;
    auto is_id = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        return true;
    };
    for (size_t i = 1; i + 1 < lines.size(); ++i) {
        std::string line = lines[i];
        if (line.rfind("  ", 0) != 0) return false;
        line = line.substr(2);
        if (line.empty() || line.back() != ';') return false;
        line.pop_back();
        // strip one bracketed attribute list if present
        size_t lb = line.find(" [");
        if (lb != std::string::npos) {
            if (line.back() != ']') return false;
            line = line.substr(0, lb);
        }
        size_t arrow = line.find(" -> ");
        if (arrow == std::string::npos) {
            if (!is_id(line) && line.rfind("rankdir=", 0) != 0) return false;
        } else {
            if (!is_id(line.substr(0, arrow)) || !is_id(line.substr(arrow + 4)))
                return false;
        }
    }
    return true;
}
