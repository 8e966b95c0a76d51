#include <doctest.h>

#include <random>
#include <sstream>

#include "mttp/instance.hpp"

using namespace mttp;

TEST_CASE("parse_instance reads the CIRC4 matrix") {
    std::istringstream in("4\n0 1 2 1\n1 0 1 2\n2 1 0 1\n1 2 1 0");
    Instance inst = parse_instance(in, "CIRC04");
    CHECK(inst.n() == 4);
    CHECK(inst.k() == 3);
    CHECK(inst.dist(1, 3) == 2);
    CHECK(inst.dist(1, 4) == 1);
    Instance circ = make_circular_instance(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(inst.dist(i, j) == circ.dist(i, j));
}

TEST_CASE("parse_instance accepts an all-zero matrix and any whitespace mix") {
    std::istringstream in("4 0 0 0 0\t0 0 0 0\n0 0 0 0 0 0 0 0   \n");
    Instance inst = parse_instance(in, "zero");
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(inst.dist(i, j) == 0);
}

TEST_CASE("parse_instance rejects bad input") {
    SUBCASE("odd n") {
        std::istringstream in("3\n0 1 1\n1 0 1\n1 1 0");
        CHECK_THROWS_AS(parse_instance(in, "odd"), DomainError);
    }
    SUBCASE("n too small") {
        std::istringstream in("2\n0 1\n1 0");
        CHECK_THROWS_AS(parse_instance(in, "tiny"), DomainError);
    }
    SUBCASE("malformed token reports its position") {
        std::istringstream in("4\n0 1 2 x\n1 0 1 2\n2 1 0 1\n1 2 1 0");
        CHECK_THROWS_WITH_AS(parse_instance(in, "bad"),
                             doctest::Contains("position 4"), ParseError);
    }
    SUBCASE("too few tokens") {
        std::istringstream in("4\n0 1 2");
        CHECK_THROWS_AS(parse_instance(in, "short"), ParseError);
    }
    SUBCASE("trailing token") {
        std::istringstream in("4 0 1 2 1 1 0 1 2 2 1 0 1 1 2 1 0 99");
        CHECK_THROWS_AS(parse_instance(in, "long"), ParseError);
    }
    SUBCASE("asymmetric matrix names the cell") {
        std::istringstream in("4\n0 1 2 1\n5 0 1 2\n2 1 0 1\n1 2 1 0");
        CHECK_THROWS_WITH_AS(parse_instance(in, "asym"), doctest::Contains("asymmetric"),
                             ValidationError);
    }
    SUBCASE("nonzero diagonal") {
        std::istringstream in("4\n7 1 2 1\n1 0 1 2\n2 1 0 1\n1 2 1 0");
        CHECK_THROWS_AS(parse_instance(in, "diag"), ValidationError);
    }
    SUBCASE("negative entry") {
        std::istringstream in("4\n0 -1 2 1\n-1 0 1 2\n2 1 0 1\n1 2 1 0");
        CHECK_THROWS_AS(parse_instance(in, "neg"), ValidationError);
    }
}

TEST_CASE("make_circular_instance matches the cycle formula") {
    Instance c4 = make_circular_instance(4);
    CHECK(c4.dist(1, 1) == 0);
    CHECK(c4.dist(1, 2) == 1);
    CHECK(c4.dist(1, 3) == 2);
    CHECK(c4.dist(1, 4) == 1);
    Instance c8 = make_circular_instance(8);
    CHECK(c8.dist(1, 5) == 4);
    CHECK(c8.dist(1, 8) == 1);
    for (int i = 1; i <= 8; ++i) CHECK(c8.dist(i, i) == 0);
    CHECK_THROWS_AS(make_circular_instance(5), DomainError);
    CHECK_THROWS_AS(make_circular_instance(2), DomainError);
}

TEST_CASE("circular instances satisfy the triangle inequality") {
    for (int n : {4, 6, 8, 10, 12}) {
        Instance inst = make_circular_instance(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int l = 1; l <= n; ++l)
                    CHECK(inst.dist(i, j) <= inst.dist(i, l) + inst.dist(l, j));
    }
}

TEST_CASE("parse(render(instance)) round-trips") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 4 + 2 * static_cast<int>(rng() % 4);
        std::vector<long long> dist(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                dist[i * n + j] = dist[j * n + i] = static_cast<long long>(rng() % 1000);
        Instance inst(n, dist, 3, "rand");
        std::istringstream in(render_instance(inst));
        Instance back = parse_instance(in, "rand");
        REQUIRE(back.n() == n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(back.dist(i, j) == inst.dist(i, j));
    }
}
