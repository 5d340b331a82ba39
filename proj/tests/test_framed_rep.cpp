#include <doctest.h>

#include "quot/framed_rep.hpp"
#include "quot/sampling.hpp"

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

// Nilpotent single Jordan block sending e_1 -> e_2 -> ... -> e_n -> 0.
Matrix nilpotent_jordan(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t k = 0; k + 1 < n; ++k) m.set(k + 1, k, Scalar::one(f));
    return m;
}

} // namespace

TEST_CASE("commutators in lexicographic pair order") {
    SUBCASE("zero loops") {
        const FramedRep rep(3, 2, 1, kQ, {Matrix(2, 2, kQ), Matrix(2, 2, kQ), Matrix(2, 2, kQ)},
                            {unit_vec(2, 0, kQ)});
        const auto comms = commutators(rep);
        CHECK(comms.size() == 3);
        for (const Matrix& c : comms) CHECK(c.is_zero());
    }
    SUBCASE("scalars always commute") {
        const FramedRep rep(3, 1, 1, kQ,
                            {from_ints(kQ, {{2}}), from_ints(kQ, {{-5}}), from_ints(kQ, {{7}})},
                            {unit_vec(1, 0, kQ)});
        for (const Matrix& c : commutators(rep)) CHECK(c.is_zero());
        CHECK(is_commuting(rep));
    }
    SUBCASE("elementary matrices do not commute") {
        const FramedRep rep(2, 2, 1, kQ,
                            {from_ints(kQ, {{0, 1}, {0, 0}}), from_ints(kQ, {{0, 0}, {1, 0}})},
                            {unit_vec(2, 0, kQ)});
        const auto comms = commutators(rep);
        REQUIRE(comms.size() == 1);
        CHECK(comms[0] == from_ints(kQ, {{1, 0}, {0, -1}}));
        CHECK(!is_commuting(rep));
    }
    SUBCASE("n = 0 commutes vacuously") {
        const FramedRep rep(2, 0, 1, kQ, {Matrix(0, 0, kQ), Matrix(0, 0, kQ)}, {zero_vec(0, kQ)});
        CHECK(is_commuting(rep));
        CHECK(is_stable(rep));
    }
}

TEST_CASE("stability by span closure") {
    SUBCASE("punctual frame is stable") {
        CHECK(is_stable(punctual_point(2, 2, kQ)));
        CHECK(is_stable(punctual_point(3, 1, kQ)));
    }
    SUBCASE("zero vector generates nothing") {
        const FramedRep rep(1, 1, 1, kQ, {from_ints(kQ, {{3}})}, {zero_vec(1, kQ)});
        CHECK(!is_stable(rep));
    }
    SUBCASE("jordan block with cyclic vector") {
        const FramedRep rep(1, 2, 1, kQ, {nilpotent_jordan(2, kQ)}, {unit_vec(2, 0, kQ)});
        CHECK(is_stable(rep));
    }
    SUBCASE("invariant line misses stability") {
        // span{e_1} is invariant for a diagonal loop, so v = e_1 fails for n = 2.
        const FramedRep rep(1, 2, 1, kQ, {from_ints(kQ, {{1, 0}, {0, 2}})}, {unit_vec(2, 0, kQ)});
        CHECK(!is_stable(rep));
    }
}

TEST_CASE("gauge action") {
    const FramedRep rep = punctual_point(2, 2, kQ);
    SUBCASE("identity gauge is the identity") {
        CHECK(gauge_act(GaugeElement(Matrix::identity(2, kQ)), rep) == rep);
    }
    SUBCASE("central gauge scales the frame only") {
        const Scalar lambda = Scalar::of_int(kQ, 5);
        const FramedRep out = gauge_act(GaugeElement(Matrix::identity(2, kQ).scaled(lambda)), rep);
        CHECK(out.A() == rep.A());
        for (std::size_t j = 0; j < rep.r(); ++j) CHECK(out.v(j) == vec_scale(lambda, rep.v(j)));
    }
    SUBCASE("singular gauge is rejected") {
        CHECK_THROWS_AS(GaugeElement(Matrix(2, 2, kQ)), SingularGauge);
    }
}

TEST_CASE("stability and commutativity are gauge invariant") {
    for (const Field& f : {kQ, Field::prime(7)}) {
        CounterRng rng(4242, f.characteristic());
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 1 + rng.below(3);
            const std::size_t m = 1 + rng.below(3);
            const std::size_t r = 1 + rng.below(2);
            const FramedRep rep = random_rep(rng, m, n, r, f);
            const GaugeElement g = random_gauge(rng, n, f);
            const FramedRep moved = gauge_act(g, rep);

            CHECK(is_stable(moved) == is_stable(rep));
            CHECK(is_commuting(moved) == is_commuting(rep));

            // Commutators move by conjugation.
            const auto before = commutators(rep);
            const auto after = commutators(moved);
            for (std::size_t k = 0; k < before.size(); ++k) {
                CHECK(after[k] == g.g() * before[k] * g.g_inverse());
            }
        }
    }
}

TEST_CASE("punctual points") {
    const FramedRep p22 = punctual_point(2, 2, kQ);
    CHECK(p22.n() == 2);
    CHECK(p22.A(0).is_zero());
    CHECK(p22.A(1).is_zero());
    CHECK(p22.v(0) == unit_vec(2, 0, kQ));
    CHECK(p22.v(1) == unit_vec(2, 1, kQ));

    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t r = 1; r <= 3; ++r) {
            const FramedRep p = punctual_point(m, r, kQ);
            CHECK(is_stable(p));
            CHECK(is_commuting(p));
        }
    }
}

TEST_CASE("etale points") {
    SUBCASE("single point") {
        const FramedRep rep = etale_point(2, 1, 1, kQ,
                                          {{Scalar::of_int(kQ, 4), Scalar::of_int(kQ, -1)}}, {0});
        CHECK(rep.A(0) == from_ints(kQ, {{4}}));
        CHECK(rep.A(1) == from_ints(kQ, {{-1}}));
        CHECK(is_stable(rep));
    }
    SUBCASE("two points on the diagonal") {
        const FramedRep rep = etale_point(
            2, 1, 2, kQ,
            {{Scalar::of_int(kQ, 0), Scalar::of_int(kQ, 0)}, {Scalar::of_int(kQ, 1), Scalar::of_int(kQ, 1)}},
            {0, 0});
        CHECK(rep.A(0) == from_ints(kQ, {{0, 0}, {0, 1}}));
        CHECK(rep.A(1) == from_ints(kQ, {{0, 0}, {0, 1}}));
        CHECK(rep.v(0) == Vec{Scalar::one(kQ), Scalar::one(kQ)});
        CHECK(is_stable(rep));
        CHECK(is_commuting(rep));
    }
    SUBCASE("duplicate supports are rejected") {
        const std::vector<Scalar> p{Scalar::of_int(kQ, 1), Scalar::of_int(kQ, 2)};
        CHECK_THROWS_AS(etale_point(2, 1, 2, kQ, {p, p}, {0, 0}), DuplicateSupport);
    }
    SUBCASE("sampled etale reps are stable and commuting") {
        CounterRng rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            const FramedRep rep = random_etale_rep(rng, 2 + rng.below(2), 1 + rng.below(3), 1 + rng.below(2), kQ);
            CHECK(is_commuting(rep));
            CHECK(is_stable(rep));
        }
    }
}

TEST_CASE("rep coordinates round-trip") {
    CounterRng rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        const FramedRep rep = random_rep(rng, 1 + rng.below(3), rng.below(3), 1 + rng.below(2), kQ);
        const Vec coords = rep_coordinates(rep);
        CHECK(coords.size() == layout_of(rep).dim());
        CHECK(rep_from_coordinates(rep.m(), rep.n(), rep.r(), rep.field(), coords) == rep);
    }
}

TEST_CASE("framed rep validation") {
    CHECK_THROWS_AS(FramedRep(0, 1, 1, kQ, {}, {unit_vec(1, 0, kQ)}), Error);
    CHECK_THROWS_AS(FramedRep(1, 1, 0, kQ, {from_ints(kQ, {{1}})}, {}), Error);
    CHECK_THROWS_AS(FramedRep(1, 2, 1, kQ, {from_ints(kQ, {{1}})}, {unit_vec(2, 0, kQ)}), Error);
    CHECK_THROWS_AS(FramedRep(1, 1, 1, Field::prime(5), {from_ints(kQ, {{1}})}, {unit_vec(1, 0, kQ)}),
                    FieldMismatch);
}
