// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. --slow adds the size-7 tier to the roundtrip criterion.
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "planarlam/bijection.hpp"
#include "planarlam/counting.hpp"
#include "planarlam/enumerate.hpp"
#include "planarlam/map_io.hpp"
#include "planarlam/surgery.hpp"
#include "planarlam/term_io.hpp"
#include "size4_terms.hpp"
#include "test_helpers.hpp"

using namespace planarlam;

namespace {

struct Criterion {
    int number;
    std::string description;
    double budget_seconds;
    bool ok = true;
    std::vector<std::string> problems;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (problems.size() < 16) problems.push_back(what);
        }
    }
};

int failures = 0;

void run(Criterion& c, const std::function<void(Criterion&)>& body) {
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= c.budget_seconds)
        c.expect(false, "runtime " + std::to_string(elapsed) + "s exceeds budget");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
         << c.description << " (" << elapsed << "s)";
    std::cout << line.str() << "\n";
    for (const auto& p : c.problems) std::cout << "       " << p << "\n";
    if (!c.ok) ++failures;
}

const long kNeutralTable[6][10] = {
    {1, 1, 3, 14, 83, 570, 4318, 35068, 299907, 2668994},
    {0, 1, 4, 20, 120, 820, 6152, 49448, 418800, 3694740},
    {0, 0, 2, 15, 105, 770, 5985, 49014, 419370, 3720420},
    {0, 0, 0, 5, 56, 504, 4368, 38136, 339696, 3094896},
    {0, 0, 0, 0, 14, 210, 2310, 23100, 224070, 2161236},
    {0, 0, 0, 0, 0, 42, 792, 10296, 116688, 1245816},
};

const long kNormalTable[7][10] = {
    {1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772},
    {1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772},
    {0, 1, 6, 40, 295, 2346, 19739, 173426, 1576539, 14730778},
    {0, 0, 2, 20, 175, 1526, 13587, 123978, 1157739, 11036038},
    {0, 0, 0, 5, 70, 756, 7602, 74964, 738369, 7315618},
    {0, 0, 0, 0, 14, 252, 3234, 36828, 398673, 4220722},
    {0, 0, 0, 0, 0, 42, 924, 13728, 174603, 2059486},
};

void criterion_count_tables(Criterion& c) {
    const std::string cli = PLANARLAM_CLI_PATH;
    auto normal = run_command(cli + " count --kind normal --max-size 10 --max-vars 6");
    c.expect(normal.status == 0, "count --kind normal failed to run");
    auto lines = split_lines(normal.output);
    c.expect(lines.size() == 8, "normal table: expected header + 7 rows");
    for (int i = 0; i <= 6 && lines.size() == 8; ++i) {
        auto cells = split_tabs(lines[static_cast<size_t>(i) + 1]);
        c.expect(cells.size() == 11, "normal table row width");
        if (cells.size() != 11) continue;
        c.expect(cells[0] == std::to_string(i), "normal table row label");
        for (int n = 1; n <= 10; ++n)
            c.expect(cells[static_cast<size_t>(n)] ==
                         std::to_string(kNormalTable[i][n - 1]),
                     "normal cell (" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
    auto neutral = run_command(cli + " count --kind neutral --max-size 10 --max-vars 6");
    c.expect(neutral.status == 0, "count --kind neutral failed to run");
    auto nlines = split_lines(neutral.output);
    c.expect(nlines.size() == 7, "neutral table: expected header + 6 rows");
    for (int i = 1; i <= 6 && nlines.size() == 7; ++i) {
        auto cells = split_tabs(nlines[static_cast<size_t>(i)]);
        c.expect(cells.size() == 11, "neutral table row width");
        if (cells.size() != 11) continue;
        for (int n = 0; n <= 9; ++n)
            c.expect(cells[static_cast<size_t>(n) + 1] ==
                         std::to_string(kNeutralTable[i - 1][n]),
                     "neutral cell (" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
}

void criterion_sequence(Criterion& c) {
    const long expected[10] = {1,      2,      9,       54,      378,
                                    2916,   24057,  208494,  1876446, 17399772};
    auto coeffs = closed_form_r0(30);
    CountTable table = count_tables(30, 1);
    c.expect(coeffs.size() == 30, "closed form truncated early");
    for (int n = 1; n <= 10; ++n)
        c.expect(coeffs[static_cast<size_t>(n - 1)] == expected[n - 1],
                 "closed-form coefficient z^" + std::to_string(n));
    for (int n = 1; n <= 30; ++n) {
        c.expect(coeffs[static_cast<size_t>(n - 1)] == table.normal(n, 0),
                 "recurrence disagrees at n=" + std::to_string(n));
        c.expect(coeffs[static_cast<size_t>(n - 1)] == tutte_count(n - 1),
                 "closed formula disagrees at n=" + std::to_string(n));
    }
}

void criterion_enumeration(Criterion& c) {
    auto terms = enumerate_npt(4, 1);
    c.expect(terms.size() == 54, "expected 54 terms at size 4");
    std::set<std::string> got;
    for (const auto& [t, col] : terms) got.insert(print_term(t));
    c.expect(got.size() == 54, "duplicate alpha classes in the enumeration");
    std::set<std::string> expected;
    for (const char* s : kSizeFourTerms) expected.insert(print_term(parse_term(s)));
    c.expect(expected.size() == 54, "reference catalogue collapsed");
    c.expect(got == expected, "enumeration does not match the catalogue");
}

void criterion_map_closure(Criterion& c) {
    auto layers = generate_rooted_maps(5);
    for (int n = 0; n <= 5; ++n)
        c.expect(static_cast<long>(layers[static_cast<size_t>(n)].size()) ==
                     tutte_count(n).get_si(),
                 "closure count at " + std::to_string(n) + " edges");
}

void criterion_bijection(Criterion& c, bool slow) {
    BijectionReport report = verify_bijection(6);
    c.expect(report.ok, "verification reported failures");
    for (const auto& f : report.failures) c.expect(false, f);
    c.expect(report.terms_checked == 1 + 2 + 9 + 54 + 378 + 2916,
             "unexpected term census");
    if (slow) {
        auto terms = enumerate_npt(7, 1);
        c.expect(terms.size() == 24057, "expected 24057 terms at size 7");
        std::set<std::vector<int>> images;
        for (const auto& [t, col] : terms) {
            RootedMap m = term_to_map(t, col);
            images.insert(canonicalize(m).encoding());
            if (images.size() <= 64) {  // spot-check the inverse on a prefix
                c.expect(alpha_equal(map_to_term(m).first, t),
                         "size-7 roundtrip failed");
            }
        }
        c.expect(images.size() == 24057, "size-7 images not distinct");
    }
}

void criterion_properties(Criterion& c) {
    // Euler characteristic on every generated map
    auto layers = generate_rooted_maps(4);
    for (const auto& layer : layers) {
        for (const auto& m : layer) {
            c.expect(validate(m).ok(), "generated map failed validation");
            c.expect(m.vertex_count() - m.edge_count() + m.face_count() == 2,
                     "Euler characteristic broken");
        }
    }
    // inverse laws, map side
    for (const auto& layer : layers) {
        for (const auto& m : layer) {
            if (classify_map(m) == MapClass::IsthmicRoot) {
                auto [m1, m2] = decompose_isthmic(m);
                c.expect(canonicalize(compose_isthmic(m1, m2)) == canonicalize(m),
                         "isthmic compose/decompose broken");
            } else if (classify_map(m) == MapClass::NonIsthmicRoot) {
                auto [m1, k] = decompose_nonisthmic(m);
                c.expect(canonicalize(compose_nonisthmic(m1, k)) == canonicalize(m),
                         "non-isthmic compose/decompose broken");
            }
        }
    }
    // inverse laws, term side, pairs of combined size <= 5
    std::vector<LinearTerm> small;
    for (int n = 1; n <= 4; ++n)
        for (const auto& [t, col] : enumerate_npt(n, 1)) small.push_back(t);
    for (const auto& t1 : small) {
        int n1 = t1.term->leaf_count();
        for (const auto& t2 : small) {
            if (n1 + t2.term->leaf_count() > 5) continue;
            LinearTerm fo = compose_fun_open(t1, t2);
            auto [b1, b2] = decompose_fun_open(fo);
            c.expect(alpha_equal(b1, t1) && alpha_equal(b2, t2),
                     "function-open roundtrip broken");
        }
        auto c1 = *color(t1, ColorKind::Normal);
        int handles = static_cast<int>(outer_neutral_handles(t1, c1).size());
        for (int k = 1; k <= handles; ++k) {
            auto [back, kk] = decompose_val_open(compose_val_open(t1, k));
            c.expect(alpha_equal(back, t1) && kk == k, "value-open roundtrip broken");
        }
    }
    // size equals leaf count
    for (int n = 1; n <= 6; ++n)
        for (const auto& [t, col] : enumerate_npt(n, 1))
            c.expect(col->size() == t.term->leaf_count(), "size is not the leaf count");
    // handle ordering on the two worked examples
    {
        auto t = parse_term("[y] (y (\\z. z)) (\\w. \\u. \\v. v (u w))");
        auto hs = outer_neutral_handles(t, *color(t, ColorKind::Normal));
        c.expect(hs.size() == 7, "seven-handle example count");
        const int leaves[7] = {5, 3, 2, 1, 2, 1, 1};
        const size_t depths[7] = {0, 4, 5, 6, 1, 3, 2};
        for (size_t i = 0; i < 7 && hs.size() == 7; ++i) {
            c.expect(hs[i].focus->leaf_count() == leaves[i] &&
                         hs[i].path.size() == depths[i],
                     "seven-handle example order at " + std::to_string(i + 1));
        }
        auto t2 = parse_term("[y] \\z. \\w. (w z) (\\u. u (\\v. v y))");
        auto hs2 = outer_neutral_handles(t2, *color(t2, ColorKind::Normal));
        c.expect(hs2.size() == 4, "four-handle example count");
        const int leaves2[4] = {5, 3, 2, 1};
        const size_t depths2[4] = {2, 4, 6, 7};
        for (size_t i = 0; i < 4 && hs2.size() == 4; ++i) {
            c.expect(hs2[i].focus->leaf_count() == leaves2[i] &&
                         hs2[i].path.size() == depths2[i],
                     "four-handle example order at " + std::to_string(i + 1));
        }
    }
    // generating function identities
    IdentityReport ids = check_identities(20);
    c.expect(ids.ok, "generating-function identities broken");
    // neutral one-variable row prefix
    CountTable table = count_tables(7, 1);
    const long row[7] = {1, 1, 3, 14, 83, 570, 4318};
    for (int n = 0; n <= 6; ++n)
        c.expect(table.neutral(n, 1) == row[n],
                 "neutral row prefix at n=" + std::to_string(n));
}

void criterion_negative_fixtures(Criterion& c) {
    c.expect(!is_planar(parse_term("[x] \\y. x y")), "non-planar term accepted");

    auto t = parse_term("[y] (y (\\z. z)) (\\w. \\u. \\v. v (u w))");
    using S = TermStep;
    TermPath u_focus{S::AppArg, S::LamBody, S::LamBody, S::LamBody, S::AppArg, S::AppFun};
    LinearTerm grafted = graft_free_var(t, u_focus);
    c.expect(is_linear(grafted), "grafted fixture should stay linear");
    c.expect(!is_planar(grafted), "graft at a non-outer focus must not be planar");

    bool rejected = false;
    try {
        parse_map("edges 2\nvertex: 1 2 -1 -2\nroot 1\n");
    } catch (const MapError& e) {
        rejected = e.defect() == MapDefect::NonPlanar;
    }
    c.expect(rejected, "toroidal fixture not rejected as non-planar");
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    Criterion c1{1, "count tables reproduce the reference values via the CLI", 5.0};
    run(c1, criterion_count_tables);
    Criterion c2{2, "closed form, recurrence, and closed formula agree to n=30", 2.0};
    run(c2, criterion_sequence);
    Criterion c3{3, "enumeration at size 4 matches the 54-term catalogue", 1.0};
    run(c3, criterion_enumeration);
    Criterion c4{4, "map closure counts match the closed formula at 0..5 edges", 60.0};
    run(c4, criterion_map_closure);
    Criterion c5{5, std::string("bijection roundtrips and laws up to size 6") +
                        (slow ? " plus the size-7 tier" : ""), 120.0};
    run(c5, [slow](Criterion& c) { criterion_bijection(c, slow); });
    Criterion c6{6, "property suites (Euler, inverse laws, sizes, handles, identities)", 60.0};
    run(c6, criterion_properties);
    Criterion c7{7, "negative fixtures are rejected", 5.0};
    run(c7, criterion_negative_fixtures);

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
