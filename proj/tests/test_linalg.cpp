#include "doctest.h"

#include <numeric>

#include "posetcoh/rng.hpp"
#include "posetcoh/smith.hpp"

using namespace posetcoh;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.range(-bound, bound);
    return m;
}

bool is_diagonal_chain(const IntMatrix& d, std::size_t rank) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i != j && d(i, j) != 0) return false;
            if (i == j && (i < rank ? d(i, i) <= 0 : d(i, i) != 0)) return false;
        }
    for (std::size_t i = 1; i < rank; ++i)
        if (d(i, i) % d(i - 1, i - 1) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("small Smith forms") {
    auto s = snf(IntMatrix::identity(2));
    CHECK(s.D == IntMatrix::identity(2));
    CHECK(snf(IntMatrix(2, 3)).D == IntMatrix(2, 3));
    CHECK(snf(IntMatrix(2, 3)).rank == 0);

    IntMatrix m{{2, 4}, {6, 8}};
    auto t = snf(m, {true, true, true});
    CHECK(t.D == IntMatrix{{2, 0}, {0, 4}});
    CHECK(t.U * m * t.V == t.D);
    CHECK(t.U * t.U_inv == IntMatrix::identity(2));
    CHECK(t.V * t.V_inv == IntMatrix::identity(2));
    CHECK(invariant_factors(m) == std::vector<Integer>{2, 4});
}

TEST_CASE("Smith form contract on random matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        IntMatrix m = random_matrix(rng, r, c, 9);
        auto s = snf(m, {true, true, true});
        CHECK(s.U * m * s.V == s.D);
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        CHECK(s.U * s.U_inv == IntMatrix::identity(r));
        CHECK(s.V_inv * s.V == IntMatrix::identity(c));
        CHECK(is_diagonal_chain(s.D, s.rank));
        CHECK(rank(m) == s.rank);
        CHECK(invariant_factors(m) == s.invariant_factors());
    }
}

TEST_CASE("entries grow without overflow") {
    IntMatrix m{{1, 0}, {0, 1}};
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    m(0, 0) = big;
    m(1, 1) = big * 6;
    auto f = invariant_factors(m);
    CHECK(f.size() == 2);
    CHECK(f[0] == big);
    CHECK(f[1] == big * 6);
}

TEST_CASE("solve") {
    auto x = solve(IntMatrix{{2, 0}, {0, 3}}, {4, 9});
    REQUIRE(x);
    CHECK(*x == IntVector{2, 3});
    CHECK_FALSE(solve(IntMatrix{{2}}, {3}));

    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        IntMatrix m = random_matrix(rng, r, c, 5);
        IntVector x0(c);
        for (auto& v : x0) v = rng.range(-4, 4);
        IntVector b = m.apply(x0);
        auto found = solve(m, b);
        REQUIRE(found);
        CHECK(m.apply(*found) == b);

        // Perturbed right-hand sides: any answer returned must be a genuine solution.
        b[rng.below(r)] += 1;
        if (auto y = solve(m, b)) CHECK(m.apply(*y) == b);
    }
    CHECK_THROWS(solve(IntMatrix{{1, 2}}, {1, 2}));
}

TEST_CASE("kernel and image bases") {
    auto k = kernel_basis(IntMatrix{{1, 1}});
    CHECK(k.cols() == 1);
    CHECK(IntMatrix{{1, 1}} * k == IntMatrix(1, 1));
    CHECK(abs(k(0, 0)) == 1);
    CHECK(kernel_basis(IntMatrix{{2, 1}, {1, 1}}).cols() == 0);
    CHECK(kernel_basis(IntMatrix(1, 2)).cols() == 2);

    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(6);
        IntMatrix m = random_matrix(rng, r, c, 4);
        IntMatrix kb = kernel_basis(m);
        CHECK(kb.cols() == c - rank(m));
        CHECK((m * kb).is_zero());
        // Primitive: the basis spans a saturated sublattice.
        for (const auto& d : invariant_factors(kb)) CHECK(d == 1);

        IntMatrix ib = image_basis(m);
        CHECK(ib.cols() == rank(m));
        LatticeSolver in_image(ib), in_span(m);
        for (std::size_t j = 0; j < c; ++j) CHECK(in_image.contains(m.column(j)));
        for (std::size_t j = 0; j < ib.cols(); ++j) CHECK(in_span.contains(ib.column(j)));
    }
}
