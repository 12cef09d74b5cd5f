#include <doctest.h>

#include <random>

#include "ordcert/mat.hpp"
#include "ordcert/truncpoly.hpp"

using namespace ordcert;

TEST_CASE("Fp arithmetic and moduli") {
    Fp a(3, 7), b(5, 7);
    CHECK(a + b == Fp(1, 7));
    CHECK(a - b == Fp(5, 7));
    CHECK(a * b == Fp(1, 7));
    CHECK((-a) == Fp(4, 7));
    CHECK(a.inverse() * a == Fp::one(7));
    CHECK(Fp(2, 5).pow(4) == Fp::one(5));
    CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), ModulusMismatch);
    CHECK(is_prime(10007));
    CHECK(!is_prime(10006));
    CHECK(smallest_prime_with_unity_root(3, 101) == 103);
    CHECK(smallest_prime_with_unity_root(4, 101) == 101);
    CHECK(smallest_prime_with_unity_root(1, 101) == 101);
}

TEST_CASE("rank examples") {
    CHECK(Mat::identity(2, 5).rank() == 2);
    CHECK(Mat::zero(3, 4, 5).rank() == 0);
    // [[1,2],[2,4]] over F_7 has rank 1
    Mat m = Mat::from_rows({{1, 2}, {2, 4}}, 7);
    CHECK(m.rank() == 1);
}

TEST_CASE("kernel examples") {
    CHECK(Mat::identity(2, 5).kernel_basis().cols() == 0);
    CHECK(Mat::zero(2, 2, 5).kernel_basis().cols() == 2);
    Mat m = Mat::from_rows({{1, 1}}, 3);
    Mat k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    // the basis column solves x + y = 0, e.g. (1, 2)
    CHECK(k.at(0, 0) != 0);
    CHECK((k.at(0, 0) + k.at(1, 0)) % 3 == 0);
}

TEST_CASE("solve_right examples") {
    Mat b = Mat::from_rows({{3, 1}, {4, 1}}, 5);
    auto x = Mat::solve_right(Mat::identity(2, 5), b);
    REQUIRE(x);
    CHECK(*x == b);
    CHECK(!Mat::solve_right(Mat::zero(2, 2, 5), b).has_value());
    auto y = Mat::solve_right(Mat::from_rows({{2}}, 5), Mat::from_rows({{3}}, 5));
    REQUIRE(y);
    CHECK(y->at(0, 0) == 4);  // 2 * 4 = 8 = 3 mod 5
}

TEST_CASE("rank-nullity and solve exactness on random matrices") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Mat a(rows, cols, 10007);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rng() % 10007;
        CHECK(a.rank() + a.kernel_basis().cols() == cols);
        CHECK((a * a.kernel_basis()).is_zero());
        CHECK((a.left_kernel() * a).is_zero());
        // consistent system: b = a * x0
        Mat x0(cols, 2, 10007);
        for (std::size_t i = 0; i < cols; ++i)
            for (std::size_t j = 0; j < 2; ++j) x0.at(i, j) = rng() % 10007;
        Mat b = a * x0;
        auto x = Mat::solve_right(a, b);
        REQUIRE(x);
        CHECK(a * *x == b);
    }
}

TEST_CASE("inverse and rref") {
    Mat m = Mat::from_rows({{1, 2}, {3, 4}}, 10007);
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK(m * *inv == Mat::identity(2, 10007));
    CHECK(!Mat::from_rows({{1, 2}, {2, 4}}, 10007).inverse().has_value());
}

TEST_CASE("truncated polynomial arithmetic") {
    TruncPoly t = TruncPoly::t_power(1, 2, 7);
    CHECK((t * t).is_zero());  // t^2 = 0 at N = 2
    TruncPoly u = TruncPoly::scalar(3, 2, 7) + t;
    CHECK(u.constant_term() == Fp(3, 7));
    CHECK((u * u).coeff(0) == Fp(2, 7));   // 9 mod 7
    CHECK((u * u).coeff(1) == Fp(6, 7));   // 2*3*1
    CHECK_THROWS_AS(u * TruncPoly::scalar(1, 3, 7), ModulusMismatch);
}

TEST_CASE("truncated multiplication agrees with convolution oracle") {
    std::mt19937 rng(23);
    const std::uint64_t p = 101;
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng() % 5;
        TruncPoly a(n, p), b(n, p);
        for (std::size_t k = 0; k < n; ++k) {
            a.set_coeff(k, Fp(static_cast<std::int64_t>(rng() % p), p));
            b.set_coeff(k, Fp(static_cast<std::int64_t>(rng() % p), p));
        }
        TruncPoly prod = a * b;
        // oracle: full convolution, then truncate
        for (std::size_t k = 0; k < n; ++k) {
            Fp want = Fp::zero(p);
            for (std::size_t i = 0; i <= k; ++i) want += a.coeff(i) * b.coeff(k - i);
            CHECK(prod.coeff(k) == want);
        }
    }
}

TEST_CASE("polynomial matrices multiply") {
    PolyMat a(2, 2, 3, 7), b(2, 2, 3, 7);
    a.at(0, 1) = TruncPoly::t_power(1, 3, 7);
    b.at(1, 0) = TruncPoly::t_power(1, 3, 7);
    PolyMat c = a * b;
    CHECK(c.at(0, 0) == TruncPoly::t_power(2, 3, 7));
    CHECK(c.at(1, 1).is_zero());
}
