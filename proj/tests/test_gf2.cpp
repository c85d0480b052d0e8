#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>

#include "cvpk/gf2.hpp"

using namespace cvpk;

namespace {

gf2::BitMatrix q4() {
    return gf2::BitMatrix::from_rows({"1000", "1010", "0110", "1111"});
}

gf2::BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    gf2::BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

gf2::BitVector random_vector(std::mt19937& rng, std::size_t len) {
    gf2::BitVector v(len);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < len; ++i)
        if (bit(rng)) v.set(i, true);
    return v;
}

}  // namespace

TEST_SUITE("gf2") {

TEST_CASE("rank of simple matrices") {
    gf2::BitMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i, true);
    CHECK(gf2::rank(id) == 4);

    CHECK(gf2::rank(gf2::BitMatrix(3, 5)) == 0);
    CHECK(gf2::rank(q4()) == 4);
}

TEST_CASE("column space membership on Q(4) columns {1,2}") {
    const gf2::BitMatrix m = q4();
    const std::size_t all_rows[] = {0, 1, 2, 3};
    const std::size_t cols12[] = {1, 2};
    const gf2::BitMatrix sub = m.submatrix(all_rows, cols12);
    // span is {0000, 0011, 0111, 0100}
    CHECK(gf2::column_space_contains(sub, gf2::BitVector::from_string("0100")));
    CHECK(gf2::column_space_contains(sub, gf2::BitVector::from_string("0011")));
    CHECK_FALSE(gf2::column_space_contains(sub, gf2::BitVector::from_string("1000")));
    CHECK(gf2::column_space_contains(sub, gf2::BitVector::from_string("0000")));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(gf2::column_space_contains(q4(), gf2::BitVector(3)),
                    std::invalid_argument);
}

TEST_CASE("empty column set spans only zero") {
    const gf2::BitMatrix m = q4();
    const std::size_t all_rows[] = {0, 1, 2, 3};
    const gf2::BitMatrix empty = m.submatrix(all_rows, {});
    CHECK(empty.cols() == 0);
    CHECK(gf2::column_space_contains(empty, gf2::BitVector(4)));
    CHECK_FALSE(gf2::column_space_contains(empty, gf2::BitVector::from_string("0100")));
}

TEST_CASE("membership iff augmenting keeps the rank") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 10, cols = rng() % 10;
        const gf2::BitMatrix m = random_matrix(rng, rows, cols);
        const gf2::BitVector v = random_vector(rng, rows);

        gf2::BitMatrix aug(rows, cols + 1);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) aug.set(r, c, m.get(r, c));
            aug.set(r, cols, v.get(r));
        }
        const std::size_t rk = gf2::rank(m), rk_aug = gf2::rank(aug);
        CHECK(rk_aug >= rk);
        CHECK(gf2::column_space_contains(m, v) == (rk_aug == rk));
    }
}

TEST_CASE("membership is invariant under column permutation") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 2 + rng() % 8, cols = 1 + rng() % 8;
        const gf2::BitMatrix m = random_matrix(rng, rows, cols);
        const gf2::BitVector v = random_vector(rng, rows);

        std::vector<std::size_t> perm(cols), all(rows);
        std::iota(perm.begin(), perm.end(), 0);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const gf2::BitMatrix shuffled = m.submatrix(all, perm);
        CHECK(gf2::column_space_contains(m, v) == gf2::column_space_contains(shuffled, v));
    }
}

TEST_CASE("full-rank square matrix contains every vector") {
    std::mt19937 rng(13);
    int found = 0;
    while (found < 20) {
        const std::size_t n = 2 + rng() % 8;
        const gf2::BitMatrix m = random_matrix(rng, n, n);
        if (gf2::rank(m) != n) continue;
        ++found;
        for (int k = 0; k < 8; ++k)
            CHECK(gf2::column_space_contains(m, random_vector(rng, n)));
    }
}

TEST_CASE("submatrix keeps the order of retained indices") {
    const gf2::BitMatrix m = q4();
    const std::size_t rows[] = {3, 0};
    const std::size_t cols[] = {2, 0, 1};
    const gf2::BitMatrix sub = m.submatrix(rows, cols);
    CHECK(sub.row_string(0) == "111");  // row 3 = 1111 at cols 2,0,1
    CHECK(sub.row_string(1) == "010");  // row 0 = 1000 at cols 2,0,1
}

TEST_CASE("echelon cache answers many queries against one matrix") {
    std::mt19937 rng(17);
    const gf2::BitMatrix m = random_matrix(rng, 24, 10);
    const gf2::ColumnEchelon cache(m);
    for (int k = 0; k < 50; ++k) {
        const gf2::BitVector v = random_vector(rng, 24);
        CHECK(cache.contains(v) == gf2::column_space_contains(m, v));
    }
}

}  // TEST_SUITE
