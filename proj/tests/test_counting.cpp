#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "planarlam/counting.hpp"
#include "planarlam/enumerate.hpp"
#include "planarlam/term_io.hpp"
#include "size4_terms.hpp"

using namespace planarlam;

namespace {

// reference tables: rows by number of free variables
const long kNeutralTable[6][10] = {
    {1, 1, 3, 14, 83, 570, 4318, 35068, 299907, 2668994},   // i=1, n=0..9
    {0, 1, 4, 20, 120, 820, 6152, 49448, 418800, 3694740},  // i=2
    {0, 0, 2, 15, 105, 770, 5985, 49014, 419370, 3720420},  // i=3
    {0, 0, 0, 5, 56, 504, 4368, 38136, 339696, 3094896},    // i=4
    {0, 0, 0, 0, 14, 210, 2310, 23100, 224070, 2161236},    // i=5
    {0, 0, 0, 0, 0, 42, 792, 10296, 116688, 1245816},       // i=6
};

const long kNormalTable[7][10] = {
    {1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772},  // i=0, n=1..10
    {1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772},  // i=1
    {0, 1, 6, 40, 295, 2346, 19739, 173426, 1576539, 14730778},  // i=2
    {0, 0, 2, 20, 175, 1526, 13587, 123978, 1157739, 11036038},  // i=3
    {0, 0, 0, 5, 70, 756, 7602, 74964, 738369, 7315618},         // i=4
    {0, 0, 0, 0, 14, 252, 3234, 36828, 398673, 4220722},         // i=5
    {0, 0, 0, 0, 0, 42, 924, 13728, 174603, 2059486},            // i=6
};

const long kSequence[10] = {1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772};

}  // namespace

TEST_CASE("count tables match the reference values") {
    CountTable t = count_tables(10, 6);
    for (int i = 1; i <= 6; ++i)
        for (int n = 0; n <= 9; ++n)
            CHECK(t.neutral(n, i) == kNeutralTable[i - 1][n]);
    for (int i = 0; i <= 6; ++i)
        for (int n = 1; n <= 10; ++n)
            CHECK(t.normal(n, i) == kNormalTable[i][n - 1]);
}

TEST_CASE("count table edge cases") {
    CountTable t = count_tables(6, 6);
    CHECK(t.normal(3, 1) == 9);
    CHECK(t.neutral(2, 1) == 3);
    for (int i = 0; i <= 6; ++i) CHECK(t.normal(0, i) == 0);
    // vanishing above the triangle
    CHECK(t.neutral(2, 4) == 0);
    CHECK(t.normal(2, 3) == 0);
}

TEST_CASE("closed form coefficients") {
    auto coeffs = closed_form_r0(10);
    REQUIRE(coeffs.size() == 10);
    for (int n = 1; n <= 10; ++n) CHECK(coeffs[n - 1] == kSequence[n - 1]);
}

TEST_CASE("closed formula for map counts") {
    CHECK(tutte_count(0) == 1);
    CHECK(tutte_count(3) == 54);
    CHECK(tutte_count(6) == 24057);
}

TEST_CASE("three routes agree out to n = 30") {
    const int kMax = 30;
    auto coeffs = closed_form_r0(kMax);
    CountTable t = count_tables(kMax, 1);
    for (int n = 1; n <= kMax; ++n) {
        CHECK(coeffs[n - 1] == t.normal(n, 0));
        CHECK(coeffs[n - 1] == tutte_count(n - 1));
    }
    // well past 64-bit territory
    CHECK(coeffs[29] > mpz_class("18446744073709551615"));
}

TEST_CASE("column-sum and first-row identities") {
    IdentityReport report = check_identities(20);
    CHECK(report.ok);
    CHECK(report.violations.empty());

    CountTable t = count_tables(4, 4);
    mpz_class sum = 0;
    for (int i = 1; i <= 4; ++i) sum += t.neutral(3, i);
    CHECK(sum == 54);
    CHECK(t.normal(4, 0) == 54);
    CHECK(t.normal(1, 1) == 1);
    CHECK(t.normal(1, 0) == 1);
    CHECK(t.normal(0, 0) == 0);
}

TEST_CASE("neutral one-variable row prefix") {
    CountTable t = count_tables(7, 1);
    const long expected[7] = {1, 1, 3, 14, 83, 570, 4318};
    for (int n = 0; n <= 6; ++n) CHECK(t.neutral(n, 1) == expected[n]);
}

TEST_CASE("enumeration of the smallest sizes") {
    auto one = enumerate_npt(1, 1);
    REQUIRE(one.size() == 1);
    CHECK(alpha_equal(one[0].first, parse_term("[x] x")));

    auto two = enumerate_npt(2, 1);
    REQUIRE(two.size() == 2);
    bool seen_fo = false, seen_vo = false;
    for (const auto& [t, c] : two) {
        seen_fo = seen_fo || alpha_equal(t, parse_term("[x] x (\\y. y)"));
        seen_vo = seen_vo || alpha_equal(t, parse_term("[x] \\y. y x"));
    }
    CHECK(seen_fo);
    CHECK(seen_vo);
}

TEST_CASE("enumeration at size four matches the catalogue") {
    auto terms = enumerate_npt(4, 1);
    REQUIRE(terms.size() == 54);
    std::set<std::string> got;
    for (const auto& [t, c] : terms) got.insert(print_term(t));
    std::set<std::string> expected;
    for (const char* s : kSizeFourTerms) expected.insert(print_term(parse_term(s)));
    CHECK(got == expected);
}

TEST_CASE("enumeration counts match the tables") {
    CountTable t = count_tables(6, 6);
    for (int n = 1; n <= 6; ++n)
        for (int i = 0; i <= 6; ++i)
            CHECK(static_cast<long>(enumerate_npt(n, i).size()) ==
                  t.normal(n, i).get_si());
}

TEST_CASE("enumerated terms are planar, normal, deterministic, duplicate free") {
    for (int n = 1; n <= 5; ++n) {
        auto terms = enumerate_npt(n, 1);
        for (size_t j = 0; j < terms.size(); ++j) {
            const auto& [t, c] = terms[j];
            CHECK(is_planar(t));
            CHECK(c->size() == n);
            CHECK(c->degree() == 1);
            if (j > 0) CHECK(term_compare(terms[j - 1].first.term, t.term) < 0);
        }
        auto again = enumerate_npt(n, 1);
        REQUIRE(again.size() == terms.size());
        for (size_t j = 0; j < terms.size(); ++j)
            CHECK(alpha_equal(again[j].first, terms[j].first));
    }
}
