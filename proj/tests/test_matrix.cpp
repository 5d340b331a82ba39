#include <doctest.h>

#include "quot/matrix.hpp"
#include "quot/rng.hpp"

using namespace quot;

namespace {

const Field kQ = Field::rationals();

Matrix from_ints(const Field& f, std::vector<std::vector<long long>> rows) {
    std::vector<Vec> out;
    for (const auto& row : rows) {
        Vec v;
        for (long long e : row) v.push_back(Scalar::of_int(f, e));
        out.push_back(std::move(v));
    }
    return Matrix::from_rows(f, out);
}

Matrix random_test_matrix(CounterRng& rng, std::size_t rows, std::size_t cols, const Field& f) {
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const long long v = f.is_rationals() ? rng.int_in(-3, 3)
                                                 : static_cast<long long>(rng.below(f.characteristic()));
            m.set(i, j, Scalar::of_int(f, v));
        }
    }
    return m;
}

} // namespace

TEST_CASE("rref of the identity and of the zero matrix") {
    const EchelonForm id3 = rref(Matrix::identity(3, kQ));
    CHECK(id3.rank == 3);
    CHECK(id3.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(id3.reduced == Matrix::identity(3, kQ));

    const EchelonForm zero = rref(Matrix(2, 4, kQ));
    CHECK(zero.rank == 0);
    CHECK(zero.pivots.empty());
}

TEST_CASE("rref of a rank-one matrix") {
    const Matrix m = from_ints(kQ, {{1, 2}, {2, 4}});
    const EchelonForm e = rref(m);
    CHECK(e.rank == 1);
    CHECK(e.pivots == std::vector<std::size_t>{0});
    CHECK(e.reduced == from_ints(kQ, {{1, 2}, {0, 0}}));
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Matrix::identity(4, kQ)).empty());
    CHECK(kernel_basis(Matrix(2, 3, kQ)).size() == 3);

    const auto basis = kernel_basis(from_ints(kQ, {{1, 2}, {2, 4}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Vec{Scalar::of_int(kQ, -2), Scalar::of_int(kQ, 1)});
}

TEST_CASE("solve") {
    const Vec b{Scalar::of_int(kQ, 3), Scalar::of_int(kQ, -1)};
    CHECK(solve(Matrix::identity(2, kQ), b) == b);

    CHECK(!solve(Matrix(2, 2, kQ), b).has_value());
    CHECK(solve(Matrix(2, 2, kQ), zero_vec(2, kQ)) == zero_vec(2, kQ));

    const Field f5 = Field::prime(5);
    const auto x = solve(from_ints(f5, {{2}}), Vec{Scalar::of_int(f5, 3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar::of_int(f5, 4)); // 2*4 = 8 = 3 mod 5

    // Overdetermined and inconsistent: x = 0 and x = 1 cannot both hold.
    CHECK(!solve(from_ints(kQ, {{1}, {1}}), Vec{Scalar::of_int(kQ, 0), Scalar::of_int(kQ, 1)}).has_value());
}

TEST_CASE("degenerate shapes") {
    const Matrix empty_rows(0, 3, kQ);
    CHECK(rref(empty_rows).rank == 0);
    CHECK(kernel_basis(empty_rows).size() == 3);
    CHECK(rank(Matrix(0, 0, kQ)) == 0);
    CHECK(inverse(Matrix(0, 0, kQ)).has_value());
}

TEST_CASE("rank-nullity, transpose rank and exact kernel on random matrices") {
    for (const Field& f : {kQ, Field::prime(7), Field::prime(2)}) {
        CounterRng rng(20240517, f.characteristic());
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng.below(5);
            const std::size_t cols = 1 + rng.below(5);
            const Matrix m = random_test_matrix(rng, rows, cols, f);

            const std::size_t rk = rank(m);
            const auto basis = kernel_basis(m);
            CHECK(rk + basis.size() == cols);
            CHECK(rank(m.transpose()) == rk);
            for (const Vec& x : basis) CHECK(is_zero(mat_vec(m, x)));

            // A consistent system must be solved exactly.
            Vec x0;
            for (std::size_t k = 0; k < cols; ++k) x0.push_back(Scalar::of_int(f, rng.int_in(-3, 3)));
            const Vec b = mat_vec(m, x0);
            const auto sol = solve(m, b);
            REQUIRE(sol.has_value());
            CHECK(mat_vec(m, *sol) == b);
        }
    }
}

TEST_CASE("inverse on random invertible matrices") {
    CounterRng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const Matrix m = random_test_matrix(rng, n, n, kQ);
        const auto inv = inverse(m);
        if (!inv) {
            CHECK(rank(m) < n);
            continue;
        }
        CHECK(m * *inv == Matrix::identity(n, kQ));
        CHECK(*inv * m == Matrix::identity(n, kQ));
    }
    CHECK(!inverse(from_ints(kQ, {{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("stacking") {
    const Matrix a = from_ints(kQ, {{1, 2}});
    const Matrix b = from_ints(kQ, {{3, 4}});
    CHECK(hstack(a, b) == from_ints(kQ, {{1, 2, 3, 4}}));
    CHECK(vstack(a, b) == from_ints(kQ, {{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(hstack(a, Matrix(2, 2, kQ)), Error);
    CHECK_THROWS_AS(vstack(a, Matrix(2, 3, kQ)), Error);
    CHECK_THROWS_AS(a + from_ints(Field::prime(3), {{1, 2}}), FieldMismatch);
}

TEST_CASE("trace and commutator") {
    const Matrix e12 = from_ints(kQ, {{0, 1}, {0, 0}});
    const Matrix e21 = from_ints(kQ, {{0, 0}, {1, 0}});
    CHECK(Matrix::commutator(e12, e21) == from_ints(kQ, {{1, 0}, {0, -1}}));
    CHECK(Matrix::commutator(e12, e12).is_zero());
    CHECK(from_ints(kQ, {{3, 1}, {0, 4}}).trace() == Scalar::of_int(kQ, 7));
    CHECK_THROWS_AS(Matrix(1, 2, kQ).trace(), Error);
}
