#include <catch2/catch_amalgamated.hpp>

#include "splitlevi/cuspidal.hpp"

using namespace splitlevi;

namespace {

const CuspidalData& data() {
    static CuspidalData d(std::string(SPLITLEVI_SOURCE_DIR) + "/data/cuspidal_exceptional.txt");
    return d;
}

}  // namespace

TEST_CASE("integer classes") {
    for (long n : {0L, 4L, 16L, 36L, 64L}) CHECK(in_square(n, 0));
    for (long n : {1L, 2L, 8L, 9L, 25L}) CHECK(!in_square(n, 0));
    for (long n : {9L, 25L, 49L}) CHECK(in_square(n, 1));
    for (long n : {0L, 1L, 3L, 4L, 16L}) CHECK(!in_square(n, 1));
    for (long n : {4L, 16L, 36L}) CHECK(in_square(n, 2));
    for (long n : {0L, 1L, 2L, 9L}) CHECK(!in_square(n, 2));
    for (long n : {0L, 1L, 3L, 6L, 10L, 15L}) CHECK(in_triangle(n));
    for (long n : {2L, 4L, 5L, 7L, 11L}) CHECK(!in_triangle(n));
    for (long n : {0L, 2L, 6L, 12L, 20L, 30L}) CHECK(in_twice_triangle(n));
    for (long n : {1L, 3L, 4L, 8L, 10L}) CHECK(!in_twice_triangle(n));
}

TEST_CASE("cuspidal unipotent counts") {
    auto c = [](Series s, int rank, int twist = 1, int e = 1) {
        return data().count({s, rank, twist, e});
    };
    // classical predicates
    CHECK(c(Series::B, 2) == 1);
    CHECK(c(Series::B, 3) == 0);
    CHECK(c(Series::B, 6) == 1);
    CHECK(c(Series::C, 2) == 1);
    CHECK(c(Series::C, 5) == 0);
    CHECK(c(Series::D, 4) == 1);
    CHECK(c(Series::D, 5) == 0);
    CHECK(c(Series::D, 9, 2) == 1);
    CHECK(c(Series::D, 4, 2) == 0);
    CHECK(c(Series::A, 1) == 0);
    CHECK(c(Series::A, 5) == 0);
    CHECK(c(Series::A, 2, 2) == 1);
    CHECK(c(Series::A, 5, 2) == 1);
    CHECK(c(Series::A, 3, 2) == 0);
    // the field power is irrelevant
    CHECK(c(Series::B, 2, 1, 2) == 1);
    CHECK(c(Series::A, 1, 1, 3) == 0);
    // stored exceptional counts
    CHECK(c(Series::G, 2) == 4);
    CHECK(c(Series::F, 4) == 7);
    CHECK(c(Series::E, 6) == 2);
    CHECK(c(Series::E, 6, 2) == 3);
    CHECK(c(Series::E, 7) == 2);
    CHECK(c(Series::E, 8) == 13);
    CHECK(c(Series::D, 4, 3) == 2);
    // Suzuki-Ree types are declined
    CHECK_THROWS_AS(c(Series::B, 2, 2), UnsupportedError);
    CHECK_THROWS_AS(c(Series::G, 2, 2), UnsupportedError);
    CHECK_THROWS_AS(c(Series::F, 4, 2), UnsupportedError);
}

TEST_CASE("cuspidal standard Levis") {
    // A2 with the diagram flip: J = empty set or all of Delta
    {
        RootDatum a2(Series::A, 2);
        RootSet all;
        for (int r = 0; r < a2.num_roots(); ++r) all.insert(r);
        TwistedElement flip = a2.twisted(a2.identity_element(), {1, 0});
        auto sups = cuspidal_standard_levis(make_handle(a2, all), flip, data());
        REQUIRE(sups.size() == 2);
        CHECK(sups[0].j.empty());
        CHECK(sups[0].count == 1);
        CHECK(sups[1].j.size() == 2);
        CHECK(sups[1].count == 1);
        REQUIRE(sups[1].type.components.size() == 1);
        CHECK(sups[1].type.components[0].label == CartanLabel{Series::A, 2, 2, 1});
    }
    // B3 untwisted: the torus and the standard B2
    {
        RootDatum b3(Series::B, 3);
        RootSet all;
        for (int r = 0; r < b3.num_roots(); ++r) all.insert(r);
        TwistedElement id = b3.untwisted(b3.identity_element());
        SubsystemHandle h = make_handle(b3, all);
        auto sups = cuspidal_standard_levis(h, id, data());
        REQUIRE(sups.size() == 2);
        CHECK(sups[0].j.empty());
        std::vector<int> expect = {b3.root_index(b3.simple_root(1)), b3.root_index(b3.simple_root(2))};
        std::sort(expect.begin(), expect.end());
        std::vector<int> got = sups[1].j;
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
        REQUIRE(sups[1].type.components.size() == 1);
        CHECK(sups[1].type.components[0].label == CartanLabel{Series::B, 2, 1, 1});
        CHECK(sups[1].type.torus.factors == std::map<unsigned long, unsigned>{{1, 1}});
    }
    // empty Delta(s)
    {
        RootDatum a1(Series::A, 1);
        auto sups = cuspidal_standard_levis(make_handle(a1, {}),
                                            a1.untwisted(a1.identity_element()), data());
        REQUIRE(sups.size() == 1);
        CHECK(sups[0].j.empty());
        CHECK(sups[0].count == 1);
    }
    // monotone in Delta(s): a standard sub-Levi's supports are the
    // ambient supports contained in it
    {
        RootDatum b4(Series::B, 4);
        TwistedElement id = b4.untwisted(b4.identity_element());
        RootSet all;
        for (int r = 0; r < b4.num_roots(); ++r) all.insert(r);
        RootSet seed;
        for (int i : {1, 2, 3}) seed.insert(b4.root_index(b4.simple_root(i)));
        SubsystemHandle sub = levi_closure(b4, seed);
        auto big = cuspidal_standard_levis(make_handle(b4, all), id, data());
        auto small = cuspidal_standard_levis(sub, id, data());
        std::set<std::vector<int>> big_j, small_j;
        std::set<int> sub_simples(sub.simples.begin(), sub.simples.end());
        for (const auto& s : big) {
            bool inside = true;
            for (int r : s.j)
                if (!sub_simples.count(r)) inside = false;
            if (inside) big_j.insert(s.j);
        }
        for (const auto& s : small) small_j.insert(s.j);
        CHECK(small_j == big_j);
    }
    // stability precondition
    {
        RootDatum a2(Series::A, 2);
        RootSet one = symmetrize(a2, {a2.root_index(a2.simple_root(0))});
        TwistedElement flip = a2.twisted(a2.identity_element(), {1, 0});
        CHECK_THROWS_AS(cuspidal_standard_levis(make_handle(a2, one), flip, data()),
                        std::invalid_argument);
    }
}
