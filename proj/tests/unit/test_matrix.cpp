#include <doctest.h>

#include <random>

#include "kerind/matrix.hpp"

using namespace kerind;

TEST_CASE("determinants") {
    Ring z5 = Ring::parse("Z/5");
    CHECK(Matrix::identity(z5, 3).det() == z5.one());
    Matrix m = Matrix::from_ints(z5, 2, {1, 2, 3, 4});
    CHECK(m.det() == z5.of_int(3));  // 4 - 6 = -2 = 3 mod 5

    // s_{1,1} = [[0,-1],[1,0]] with det 1
    Matrix s11 = s_matrix(z5, 1, 1);
    CHECK(s11.at(0, 0) == z5.zero());
    CHECK(s11.at(0, 1) == z5.of_int(-1));
    CHECK(s11.at(1, 0) == z5.one());
    CHECK(s11.at(1, 1) == z5.zero());
    CHECK(s11.det() == z5.one());
}

TEST_CASE("every s-matrix has determinant one") {
    for (const char* desc : {"Z/4", "(Z/3)[x]/(x^2)", "F4"}) {
        Ring s = Ring::parse(desc);
        for (std::uint32_t m = 0; m <= 3; ++m)
            for (std::uint32_t n = 0; n <= 3; ++n)
                CHECK(s_matrix(s, m, n).det() == s.one());
    }
}

TEST_CASE("s-matrix conjugation swaps the diagonal blocks") {
    Ring s = Ring::parse("(Z/3)[x]/(x^2)");
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(0, s.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t n = 1 + trial % 2, m = 1 + (trial / 2) % 2;
        Matrix a(s, n), b(s, m);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) a.at(i, j) = Elem(pick(rng));
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) b.at(i, j) = Elem(pick(rng));
        Matrix smn = s_matrix(s, m, n);
        Matrix lhs = smn.inverse() * Matrix::diag_blocks(a, b) * smn;
        CHECK(lhs == Matrix::diag_blocks(b, a));
    }
}

TEST_CASE("shift realizes conjugation by the s-matrix") {
    Ring s = Ring::parse("Z/4");
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::uint64_t> pick(0, s.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t n = 2, m = 1 + trial % 2;
        Matrix x(s, n);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) x.at(i, j) = Elem(pick(rng));
        Matrix smn = s_matrix(s, m, n);
        CHECK(x.shift(m) == smn.inverse() * x.pad(m + n) * smn);
        CHECK(x.shift(0) == x);
    }
}

TEST_CASE("inverses") {
    Ring z4 = Ring::parse("Z/4");
    Matrix u = Matrix::from_ints(z4, 2, {1, 2, 0, 1});
    CHECK(u.inverse() == u);  // -2 == 2 mod 4
    CHECK(Matrix::identity(z4, 3).inverse() == Matrix::identity(z4, 3));
    Matrix bad = Matrix::from_ints(z4, 2, {2, 0, 0, 1});
    CHECK_FALSE(bad.invertible());
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}

TEST_CASE("general linear enumeration counts") {
    CHECK(enumerate_gl(Ring::parse("F4"), 1).size() == 3);
    CHECK(enumerate_gl(Ring::parse("Z/2"), 2).size() == 6);
    CHECK(enumerate_gl(Ring::parse("Z/3"), 2).size() == 48);
    // |GL_2(F3[x]/(x^2))| = |GL_2(F3)| * |M_2(F3)|
    CHECK(enumerate_gl(Ring::parse("(Z/3)[x]/(x^2)"), 2).size() == 48 * 81);
    CHECK_THROWS_AS(enumerate_gl(Ring::parse("Z/3"), 2, 10), std::length_error);
    CHECK(enumerate_sl(Ring::parse("Z/3"), 2).size() == 24);  // |SL_2(F3)|
}

TEST_CASE("determinant is multiplicative and inversion is involutive") {
    std::mt19937_64 rng(17);
    for (const char* desc : {"Z/12", "(Z/3)[x]/(x^2)", "F4"}) {
        Ring s = Ring::parse(desc);
        std::uniform_int_distribution<std::uint64_t> pick(0, s.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            Matrix a(s, 2), b(s, 2);
            for (std::uint32_t i = 0; i < 2; ++i)
                for (std::uint32_t j = 0; j < 2; ++j) {
                    a.at(i, j) = Elem(pick(rng));
                    b.at(i, j) = Elem(pick(rng));
                }
            CHECK((a * b).det() == s.mul(a.det(), b.det()));
            if (a.invertible()) {
                CHECK(a.inverse().inverse() == a);
                CHECK(a * a.inverse() == Matrix::identity(s, 2));
            }
        }
    }
}

TEST_CASE("determinant on larger blocks stays consistent") {
    Ring s = Ring::parse("Z/6");
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint64_t> pick(0, s.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a(s, 2), b(s, 3);
        for (std::uint32_t i = 0; i < 2; ++i)
            for (std::uint32_t j = 0; j < 2; ++j) a.at(i, j) = Elem(pick(rng));
        for (std::uint32_t i = 0; i < 3; ++i)
            for (std::uint32_t j = 0; j < 3; ++j) b.at(i, j) = Elem(pick(rng));
        // det of a block diagonal is the product
        CHECK(Matrix::diag_blocks(a, b).det() == s.mul(a.det(), b.det()));
    }
}
