#include "oneplanar/formulas.hpp"

#include "oneplanar/error.hpp"

namespace onep {

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

void check_nonnegative(int n) {
    if (n < 0) fail(ErrorCode::invalid_argument, "n must be non-negative");
}

} // namespace

NDecomposition decompose_n(int n) {
    check_nonnegative(n);
    return {n / 3, n % 3};
}

std::uint64_t f2(int n) {
    check_nonnegative(n);
    if (n <= 6) return binom(n, 2);
    if (n == 7 || n == 9) return static_cast<std::uint64_t>(4 * n - 9);
    return static_cast<std::uint64_t>(4 * n - 8);
}

std::uint64_t f3(int n) {
    check_nonnegative(n);
    if (n <= 6) return binom(n, 3);
    if (n == 8) return 32;
    auto [k, s] = decompose_n(n);
    return static_cast<std::uint64_t>(19 * k + 5 * s - 18);
}

std::uint64_t ft(int n, int t) {
    check_nonnegative(n);
    if (t < 4 || t > 6) fail(ErrorCode::invalid_argument, "t must be in {4,5,6}");
    if (n <= 6) return binom(n, t);
    auto [k, s] = decompose_n(n);
    return static_cast<std::uint64_t>(k - 1) * binom(6, t) + binom(s + 3, t);
}

std::uint64_t f_total(int n) {
    check_nonnegative(n);
    if (n <= 6) return std::uint64_t{1} << n;
    auto [k, s] = decompose_n(n);
    return 56ull * static_cast<std::uint64_t>(k - 1) + (std::uint64_t{1} << (s + 3));
}

std::uint64_t planar_max_triangles(int n) {
    if (n < 3) fail(ErrorCode::invalid_argument, "planar triangle bound needs n >= 3");
    return static_cast<std::uint64_t>(3 * n - 8);
}

std::uint64_t planar_max_k4(int n) {
    if (n < 4) fail(ErrorCode::invalid_argument, "planar K4 bound needs n >= 4");
    return static_cast<std::uint64_t>(n - 3);
}

std::uint64_t k6free_bound(int n, int c, int t) {
    if (n < 3 || c < 0) fail(ErrorCode::invalid_argument, "k6free bound needs n >= 3, c >= 0");
    switch (t) {
        case 3: return static_cast<std::uint64_t>(3 * c + 3 * n - 8);
        case 4: return static_cast<std::uint64_t>(3 * c + n - 3);
        case 5: return static_cast<std::uint64_t>(c);
        default: fail(ErrorCode::invalid_argument, "t must be in {3,4,5}");
    }
}

std::uint64_t k6free_maximal_bound(int n, K6FreeKind kind) {
    if (n < 5) fail(ErrorCode::invalid_argument, "k6free maximal bound needs n >= 5");
    switch (kind) {
        case K6FreeKind::k3: return static_cast<std::uint64_t>(6 * n - 14);
        case K6FreeKind::k4: return static_cast<std::uint64_t>(4 * n - 9);
        case K6FreeKind::k5: return static_cast<std::uint64_t>(n - 2);
        case K6FreeKind::total: return static_cast<std::uint64_t>(16 * n - 32);
    }
    fail(ErrorCode::invalid_argument, "bad kind");
}

} // namespace onep
