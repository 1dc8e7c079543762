#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneplanar/formulas.hpp"
#include "oneplanar/error.hpp"

using namespace onep;

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("decompose_n") {
    CHECK(decompose_n(8).k == 2);
    CHECK(decompose_n(8).s == 2);
    CHECK(decompose_n(9).k == 3);
    CHECK(decompose_n(9).s == 0);
    CHECK(decompose_n(7).k == 2);
    CHECK(decompose_n(7).s == 1);
    CHECK_THROWS_AS(decompose_n(-1), Error);
}

TEST_CASE("edge and triangle extremal values") {
    CHECK(f2(7) == 19);
    CHECK(f2(9) == 27);
    CHECK(f2(6) == 15);
    CHECK(f2(8) == 24);
    CHECK(f2(10) == 32);

    CHECK(f3(8) == 32);
    CHECK(f3(20) == 106);
    CHECK(f3(6) == 20);
    CHECK(f3(7) == 25);
    CHECK(f3(9) == 39);
}

TEST_CASE("larger clique extremal values") {
    CHECK(ft(12, 5) == 18);
    CHECK(ft(7, 4) == 16);
    CHECK(ft(6, 6) == 1);
    CHECK(ft(7, 6) == 1);
    CHECK(ft(12, 6) == 3);
    CHECK_THROWS_AS(ft(10, 3), Error);
    CHECK_THROWS_AS(ft(10, 7), Error);

    CHECK(f_total(11) == 144);
    CHECK(f_total(7) == 72);
    CHECK(f_total(3) == 8);
    CHECK(f_total(10) == 128);
}

TEST_CASE("per-residue closed forms match the (k,s) formulas") {
    for (int n = 3; n <= 21; ++n) {
        auto [k, s] = decompose_n(n);
        if (n <= 6) {
            CHECK(f3(n) == binom(n, 3));
            for (int t = 4; t <= 6; ++t) CHECK(ft(n, t) == binom(n, t));
            CHECK(f_total(n) == (std::uint64_t{1} << n));
            continue;
        }
        switch (s) {
            case 1:
                if (n > 7) CHECK(f3(n) == static_cast<std::uint64_t>((19 * n - 58) / 3));
                CHECK(ft(n, 4) == static_cast<std::uint64_t>(5 * n - 19));
                CHECK(ft(n, 5) == static_cast<std::uint64_t>(2 * n - 8));
                CHECK(ft(n, 6) == static_cast<std::uint64_t>((n - 4) / 3));
                CHECK(f_total(n) == static_cast<std::uint64_t>((56 * n - 176) / 3));
                break;
            case 2:
                if (n > 8) CHECK(f3(n) == static_cast<std::uint64_t>((19 * n - 62) / 3));
                CHECK(ft(n, 4) == static_cast<std::uint64_t>(5 * n - 20));
                CHECK(ft(n, 5) == static_cast<std::uint64_t>(2 * n - 9));
                CHECK(ft(n, 6) == static_cast<std::uint64_t>((n - 5) / 3));
                CHECK(f_total(n) == static_cast<std::uint64_t>((56 * n - 184) / 3));
                break;
            case 0:
                CHECK(f3(n) == static_cast<std::uint64_t>((19 * n - 54) / 3));
                CHECK(ft(n, 4) == static_cast<std::uint64_t>(5 * n - 15));
                CHECK(ft(n, 5) == static_cast<std::uint64_t>(2 * n - 6));
                CHECK(ft(n, 6) == static_cast<std::uint64_t>((n - 3) / 3));
                CHECK(f_total(n) == static_cast<std::uint64_t>((56 * n - 144) / 3));
                break;
        }
        CHECK(f3(n) == (n == 8 ? 32 : static_cast<std::uint64_t>(19 * k + 5 * s - 18)));
        CHECK(f3(n) < 3 * f2(n));
    }
}

TEST_CASE("planar bounds") {
    CHECK(planar_max_triangles(5) == 7);
    CHECK(planar_max_triangles(3) == 1);
    CHECK(planar_max_k4(4) == 1);
    CHECK_THROWS_AS(planar_max_triangles(2), Error);
    CHECK_THROWS_AS(planar_max_k4(3), Error);
}

TEST_CASE("K6-free bounds") {
    CHECK(k6free_bound(8, 6, 3) == 34);
    CHECK(k6free_bound(8, 6, 4) == 23);
    CHECK(k6free_bound(8, 6, 5) == 6);
    CHECK_THROWS_AS(k6free_bound(8, 6, 6), Error);

    CHECK(k6free_maximal_bound(9, K6FreeKind::k3) == 40);
    CHECK(k6free_maximal_bound(9, K6FreeKind::total) == 112);
    CHECK(k6free_maximal_bound(9, K6FreeKind::k4) == 27);
    CHECK(k6free_maximal_bound(9, K6FreeKind::k5) == 7);
    CHECK_THROWS_AS(k6free_maximal_bound(4, K6FreeKind::k3), Error);
}
