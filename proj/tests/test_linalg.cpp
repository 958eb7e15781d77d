#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace cornerstone;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Scalar>(rng() % f.p());
    return m;
}

}  // namespace

TEST(Field, RejectsComposite) {
    EXPECT_THROW(Field(100), Error);
    EXPECT_THROW(Field(1), Error);
    try {
        Field f(9);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
    }
    EXPECT_NO_THROW(Field(2));
    EXPECT_NO_THROW(Field(2147483647));
}

TEST(Field, Arithmetic) {
    Field f(101);
    EXPECT_EQ(f.add(100, 5), 4u);
    EXPECT_EQ(f.sub(3, 5), 99u);
    EXPECT_EQ(f.neg(0), 0u);
    EXPECT_EQ(f.from_int(-1), 100u);
    for (Scalar a = 1; a < 101; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_THROW(f.inv(0), Error);
}

TEST(Linalg, KernelMatchesEnumeration) {
    std::mt19937_64 rng(1);
    for (std::uint64_t p : {2u, 3u}) {
        Field f(p);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
            Matrix m = random_matrix(rng, f, r, c);
            KernelBasis k = kernel(f, m);
            EXPECT_EQ(k.basis.cols(), oracle::kernel_dim(f, m));
            EXPECT_EQ(rank(f, m) + k.basis.cols(), c);
            EXPECT_TRUE(multiply(f, m, k.basis).is_zero());
        }
    }
}

TEST(Linalg, RankIsTransposeInvariant) {
    std::mt19937_64 rng(2);
    Field f(7);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_matrix(rng, f, 1 + rng() % 6, 1 + rng() % 6);
        EXPECT_EQ(rank(f, m), rank(f, transpose(m)));
    }
}

TEST(Linalg, InverseRoundTrip) {
    std::mt19937_64 rng(3);
    Field f(101);
    int inverted = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 6;
        Matrix m = random_matrix(rng, f, n, n);
        if (rank(f, m) < n) {
            EXPECT_THROW(inverse(f, m), Error);
            continue;
        }
        ++inverted;
        EXPECT_EQ(multiply(f, m, inverse(f, m)), Matrix::identity(n));
    }
    EXPECT_GT(inverted, 20);
}

TEST(Linalg, RowSpaceMembership) {
    std::mt19937_64 rng(4);
    Field f(3);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(rng, f, 1 + rng() % 4, 5);
        RowSpace s(f, 5);
        for (std::size_t r = 0; r < m.rows(); ++r) s.insert(Vector(m.row(r).begin(), m.row(r).end()));
        EXPECT_EQ(s.dim(), rank(f, m));
        EXPECT_EQ(s.non_pivots().size(), 5 - s.dim());
        std::size_t members = 0;
        oracle::for_each_vector(3, 5, [&](const std::vector<Scalar>& v) { members += s.contains(v); });
        std::size_t expected = 1;
        for (std::size_t i = 0; i < s.dim(); ++i) expected *= 3;
        EXPECT_EQ(members, expected);
    }
}

TEST(Linalg, RowReduceIsDeterministic) {
    std::mt19937_64 rng(5);
    Field f(101);
    Matrix m = random_matrix(rng, f, 5, 8);
    Echelon a = row_reduce(f, m), b = row_reduce(f, m);
    EXPECT_EQ(a.rref, b.rref);
    EXPECT_EQ(a.pivots, b.pivots);
}
