#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "planarlam/bijection.hpp"
#include "planarlam/enumerate.hpp"
#include "planarlam/term_io.hpp"

using namespace planarlam;

namespace {

bool canon_eq(const RootedMap& a, const RootedMap& b) {
    return canonicalize(a) == canonicalize(b);
}

RootedMap single_loop() { return compose_nonisthmic(RootedMap(), 0); }
RootedMap single_edge() { return compose_isthmic(RootedMap(), RootedMap()); }

}  // namespace

TEST_CASE("smallest correspondences") {
    auto [t0, c0] = map_to_term(RootedMap());
    CHECK(alpha_equal(t0, parse_term("[x] x")));
    CHECK(c0->size() == 1);

    auto [te, ce] = map_to_term(single_edge());
    CHECK(alpha_equal(te, parse_term("[x] x (\\y. y)")));

    auto [tl, cl] = map_to_term(single_loop());
    CHECK(alpha_equal(tl, parse_term("[x] \\y. y x")));

    LinearTerm id = parse_term("[x] x");
    CHECK(term_to_map(id, *color(id, ColorKind::Normal)).is_vertex_map());
    CHECK(canon_eq(term_to_map(tl, cl), single_loop()));
    CHECK(canon_eq(term_to_map(te, ce), single_edge()));
}

TEST_CASE("the nine size-three terms hit the nine two-edge maps") {
    auto layers = generate_rooted_maps(2);
    REQUIRE(layers[2].size() == 9);
    std::set<std::vector<int>> images;
    for (const auto& [t, c] : enumerate_npt(3, 1)) {
        RootedMap m = term_to_map(t, c);
        CHECK(m.edge_count() == 2);
        images.insert(canonicalize(m).encoding());
        // and back
        CHECK(alpha_equal(map_to_term(m).first, t));
    }
    CHECK(images.size() == 9);
    for (const auto& m : layers[2])
        CHECK(images.count(canonicalize(m).encoding()) == 1);
}

TEST_CASE("six-edge example built in parallel on both sides") {
    LinearTerm id = parse_term("[x] x");
    RootedMap g1 = compose_nonisthmic(RootedMap(), 0);
    LinearTerm u1 = compose_val_open(id, 1);
    RootedMap g2 = compose_nonisthmic(g1, 1);
    LinearTerm u2 = compose_val_open(u1, 2);
    RootedMap g3 = compose_isthmic(RootedMap(), g2);
    LinearTerm u3 = compose_fun_open(id, u2);
    RootedMap g5 = compose_isthmic(g3, compose_nonisthmic(RootedMap(), 0));
    LinearTerm u5 = compose_fun_open(u3, compose_val_open(id, 1));
    RootedMap g6 = compose_nonisthmic(g5, 1);
    LinearTerm u6 = compose_val_open(u5, 2);

    CHECK(g6.edge_count() == 6);
    CHECK(outer_face_degree(g6) == 2);
    Coloring::Ptr c6 = *color(u6, ColorKind::Normal);
    CHECK(c6->size() == 7);
    CHECK(outer_neutral_handles(u6, c6).size() == 3);

    CHECK(alpha_equal(map_to_term(g6).first, u6));
    CHECK(canon_eq(term_to_map(u6, c6), g6));
    CHECK(decompose_map(g6).to_string() == decompose_term(u6).to_string());
}

TEST_CASE("traces replay on both sides") {
    for (const auto& [t, c] : enumerate_npt(4, 1)) {
        DecompTrace trace = decompose_term(t);
        CHECK(alpha_equal(trace.replay_term(), t));
        RootedMap m = trace.replay_map();
        DecompTrace back = decompose_map(m);
        CHECK(back.to_string() == trace.to_string());
    }
}

TEST_CASE("size and degree laws") {
    auto layers = generate_rooted_maps(3);
    for (const auto& layer : layers) {
        for (const auto& m : layer) {
            auto [t, c] = map_to_term(m);
            CHECK(c->size() == m.edge_count() + 1);
            CHECK(static_cast<int>(outer_neutral_handles(t, c).size()) ==
                  outer_face_degree(m) + 1);
        }
    }
}

TEST_CASE("input validation") {
    LinearTerm two_free = parse_term("[a,b] a b");
    auto c = color(two_free, ColorKind::Normal);
    REQUIRE(c.has_value());
    CHECK_THROWS_AS(term_to_map(two_free, *c), std::invalid_argument);

    LinearTerm nonplanar = parse_term("[x] \\y. x y");
    auto c2 = color(nonplanar, ColorKind::Normal);
    REQUIRE(c2.has_value());
    CHECK_THROWS_AS(term_to_map(nonplanar, *c2), std::invalid_argument);
}

TEST_CASE("exhaustive verification at small sizes") {
    BijectionReport report = verify_bijection(4);
    CHECK(report.ok);
    CHECK(report.terms_checked == 1 + 2 + 9 + 54);
    CHECK(report.maps_checked == 1 + 2 + 9 + 54);
    for (const auto& f : report.failures) {
        CAPTURE(f);
        CHECK(false);
    }
}
