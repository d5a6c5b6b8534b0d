#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "planarlam/bijection.hpp"
#include "planarlam/counting.hpp"
#include "planarlam/dot.hpp"
#include "planarlam/enumerate.hpp"
#include "planarlam/map_io.hpp"
#include "planarlam/term_io.hpp"

namespace {

using namespace planarlam;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_count(const std::string& kind, int max_size, int max_vars) {
    CountTable table = count_tables(max_size, max_vars);
    bool neutral = kind == "neutral";
    // normal: columns n = 1..max_size, rows i = 0..max_vars
    // neutral: columns n = 0..max_size-1, rows i = 1..max_vars
    int n_lo = neutral ? 0 : 1;
    int n_hi = neutral ? max_size - 1 : max_size;
    int i_lo = neutral ? 1 : 0;
    std::cout << "i/n";
    for (int n = n_lo; n <= n_hi; ++n) std::cout << '\t' << n;
    std::cout << '\n';
    for (int i = i_lo; i <= max_vars; ++i) {
        std::cout << i;
        for (int n = n_lo; n <= n_hi; ++n)
            std::cout << '\t' << (neutral ? table.neutral(n, i) : table.normal(n, i));
        std::cout << '\n';
    }
    return 0;
}

int run_series(int terms) {
    CountTable table = count_tables(terms, 1);
    std::vector<mpz_class> closed = closed_form_r0(terms);
    std::cout << "n\trecurrence\tclosed_form\ttutte\tstatus\n";
    bool all_match = true;
    for (int n = 1; n <= terms; ++n) {
        const mpz_class& rec = table.normal(n, 0);
        const mpz_class& cf = closed[static_cast<size_t>(n - 1)];
        mpz_class tut = tutte_count(n - 1);
        bool match = rec == cf && cf == tut;
        all_match = all_match && match;
        std::cout << n << '\t' << rec << '\t' << cf << '\t' << tut << '\t'
                  << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    return all_match ? 0 : 1;
}

int run_enumerate(int size, int vars, const std::string& format) {
    auto terms = enumerate_npt(size, vars);
    int ordinal = 0;
    for (const auto& [t, c] : terms) {
        ++ordinal;
        if (format == "lines") std::cout << ordinal << '\t';
        std::cout << print_term(t) << '\n';
    }
    return 0;
}

int run_to_map(const std::string& term_text) {
    LinearTerm t = parse_term(term_text);
    Coloring::Ptr c = require_npt(t);
    RootedMap m = term_to_map(t, c);
    std::cout << print_map(m);
    return 0;
}

int run_to_term(const std::string& map_path) {
    RootedMap m = parse_map(read_file(map_path));
    auto [t, c] = map_to_term(m);
    std::cout << print_term(t) << '\n';
    return 0;
}

int run_verify(int max_size) {
    BijectionReport bij = verify_bijection(max_size);
    IdentityReport ids = check_identities(std::max(max_size, 20));
    std::cout << "bijection: " << bij.terms_checked << " terms, "
              << bij.maps_checked << " maps, "
              << (bij.ok ? "ok" : "FAILED") << '\n';
    for (const auto& f : bij.failures) std::cerr << "  " << f << '\n';
    std::cout << "identities: " << (ids.ok ? "ok" : "FAILED") << '\n';
    for (const auto& v : ids.violations) std::cerr << "  " << v << '\n';
    return bij.ok && ids.ok ? 0 : 1;
}

int run_render(const std::string& term_text, const std::string& map_path,
               const std::string& out_path) {
    std::string dot;
    if (!term_text.empty()) {
        LinearTerm t = parse_term(term_text);
        auto c = color(t, ColorKind::Normal);
        if (!c) throw std::runtime_error("term is not normal, nothing to render");
        dot = emit_dot_diagram(t, *c);
    } else {
        RootedMap m = parse_map(read_file(map_path));
        dot = emit_dot_map(m);
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << dot;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rooted planar maps and normal planar lambda terms"};
    app.require_subcommand(1);

    std::string kind = "normal";
    int max_size = 10;
    int max_vars = 6;
    auto* count = app.add_subcommand("count", "print count tables by size and free variables");
    count->add_option("--kind", kind)->check(CLI::IsMember({"normal", "neutral"}));
    count->add_option("--max-size", max_size)->required();
    count->add_option("--max-vars", max_vars);

    int series_terms = 10;
    auto* series = app.add_subcommand("series", "cross-check the counting sequence three ways");
    series->add_option("--terms", series_terms)->required();

    int enum_size = 1, enum_vars = 1;
    std::string format = "text";
    auto* enumerate = app.add_subcommand("enumerate", "list all normal planar terms of a size");
    enumerate->add_option("--size", enum_size)->required();
    enumerate->add_option("--vars", enum_vars)->required();
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "lines"}));

    std::string term_text;
    auto* to_map = app.add_subcommand("to-map", "convert a term to its rooted planar map");
    to_map->add_option("term", term_text)->required();

    std::string map_path;
    auto* to_term = app.add_subcommand("to-term", "convert a map file to its term");
    to_term->add_option("mapfile", map_path)->required();

    int verify_size = 6;
    auto* verify = app.add_subcommand("verify", "verify the correspondence exhaustively");
    verify->add_option("--max-size", verify_size);

    std::string render_term, render_map, render_out;
    auto* render = app.add_subcommand("render", "emit a DOT rendering");
    auto* rt = render->add_option("--term", render_term);
    auto* rm = render->add_option("--map", render_map);
    render->add_option("--out", render_out)->required();
    rt->excludes(rm);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return run_count(kind, max_size, max_vars);
        if (series->parsed()) return run_series(series_terms);
        if (enumerate->parsed()) return run_enumerate(enum_size, enum_vars, format);
        if (to_map->parsed()) return run_to_map(term_text);
        if (to_term->parsed()) return run_to_term(map_path);
        if (verify->parsed()) return run_verify(verify_size);
        if (render->parsed()) {
            if (render_term.empty() && render_map.empty()) {
                std::cerr << "render: give --term or --map\n";
                return 2;
            }
            return run_render(render_term, render_map, render_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
