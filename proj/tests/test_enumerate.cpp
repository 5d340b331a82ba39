#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "quot/enumerate.hpp"
#include "quot/tangent.hpp"
#include "quot/json_io.hpp"

using namespace quot;

namespace {

// Exhaustive recount of stable commuting tuples through the generic
// FramedRep path, cross-validating the oracle's private F_q arithmetic.
std::uint64_t recount_via_framed_reps(std::size_t m, std::size_t n, std::size_t r, std::uint64_t q) {
    const Field f = Field::prime(q);
    const RepLayout lay{m, n, r};
    const std::size_t digits = lay.dim();
    std::vector<std::uint64_t> odo(digits, 0);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < digits; ++k) total *= q;

    std::uint64_t hits = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec coords;
        coords.reserve(digits);
        for (std::uint64_t d : odo) coords.push_back(Scalar::of_int(f, static_cast<long long>(d)));
        const FramedRep rep = rep_from_coordinates(m, n, r, f, coords);
        if (is_commuting(rep) && is_stable(rep)) ++hits;
        for (std::size_t t = digits; t-- > 0;) {
            if (++odo[t] < q) break;
            odo[t] = 0;
        }
    }
    return hits;
}

} // namespace

TEST_CASE("general linear group orders") {
    CHECK(gl_group_order(0, 5) == 1);
    CHECK(gl_group_order(1, 5) == 4);
    CHECK(gl_group_order(2, 2) == 6);
    CHECK(gl_group_order(2, 3) == 48);
    CHECK(gl_group_order(3, 2) == 168);
}

TEST_CASE("point counts over tiny fields") {
    SUBCASE("the affine line") {
        const CountResult c = count_quot_points(1, 1, 1, 2);
        CHECK(c.orbit_count == 2);
        CHECK(c.gauge_group_order == 1);
        CHECK(c.stable_commuting_points == 2);
    }
    SUBCASE("two framing vectors on a single point") {
        const CountResult c = count_quot_points(2, 1, 2, 2);
        CHECK(c.orbit_count == 12); // q^m (q^r - 1)/(q - 1) = 4 * 3
        CHECK(c.stable_commuting_points == c.orbit_count * c.gauge_group_order);
    }
    SUBCASE("n = 0 has exactly one empty quotient") {
        const CountResult c = count_quot_points(2, 0, 1, 3);
        CHECK(c.orbit_count == 1);
        CHECK(c.gauge_group_order == 1);
    }
    SUBCASE("length two on the plane, frozen oracle value") {
        // Regression constant recorded from the exhaustive run; matches the
        // cell count q^4 + q^3 of the length-2 Hilbert scheme at q = 2.
        const CountResult c = count_quot_points(2, 2, 1, 2);
        CHECK(c.gauge_group_order == 6);
        CHECK(c.orbit_count == 24);
        CHECK(c.stable_commuting_points == 144);
    }
    SUBCASE("rank-two length-two quotients, frozen against a support stratification") {
        // Hand count: pairs of rational points contribute C(q^2,2)(q+1)^2,
        // degree-2 closed points (q^4-q^2)(q^2+1)/2, and each rational point
        // carries 1 + q(q+1)^2 punctual quotients.
        for (std::uint64_t q : {2, 3}) {
            const std::uint64_t q2 = q * q, q4 = q2 * q2;
            const std::uint64_t expected = q2 * (q2 - 1) / 2 * (q + 1) * (q + 1) +
                                           (q4 - q2) * (q2 + 1) / 2 + q2 * (1 + q * (q + 1) * (q + 1));
            CHECK(count_quot_points(2, 2, 2, q).orbit_count == expected);
        }
        CHECK(count_quot_points(2, 2, 2, 2).orbit_count == 160);
        CHECK(count_quot_points(2, 2, 2, 3).orbit_count == 1377);
    }
}

TEST_CASE("n = 1 counts match the closed-form polynomial") {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t r = 1; r <= 2; ++r) {
            const RationalPoly closed = n1_orbit_polynomial(m, r);
            CHECK(closed.degree() == static_cast<int>(m - 1 + r));
            for (std::uint64_t q : {2, 3}) {
                const CountResult c = count_quot_points(m, 1, r, q);
                CHECK(Rational(static_cast<long>(c.orbit_count)) == closed.eval(Rational(static_cast<long>(q))));
            }
        }
    }
}

TEST_CASE("oracle agrees with the exact-linear-algebra predicates") {
    const std::uint64_t oracle = count_quot_points(2, 2, 1, 2).stable_commuting_points;
    CHECK(oracle == recount_via_framed_reps(2, 2, 1, 2));
}

TEST_CASE("budget is a hard cap") {
    EnumerateOptions opts;
    opts.budget = 1000;
    CHECK_THROWS_AS(count_quot_points(2, 2, 1, 2, opts), BudgetExceeded);
    CHECK_THROWS_AS(count_first_order_lifts(punctual_point(2, 2, Field::prime(2)), 1000), BudgetExceeded);
    CHECK_THROWS_AS(count_quot_points(2, 1, 1, 4), NotPrime);
}

TEST_CASE("sharded enumeration matches the sequential count") {
    EnumerateOptions sharded;
    sharded.threads = 3;
    const CountResult a = count_quot_points(2, 1, 2, 3);
    const CountResult b = count_quot_points(2, 1, 2, 3, sharded);
    CHECK(a.stable_commuting_points == b.stable_commuting_points);
    CHECK(a.orbit_count == b.orbit_count);
}

TEST_CASE("checkpointed enumeration") {
    const std::string path = "checkpoint_test.tmp";
    std::remove(path.c_str());

    const CountResult plain = count_quot_points(2, 1, 2, 2);

    EnumerateOptions opts;
    opts.checkpoint_path = path;
    opts.checkpoint_stride = 7; // force many save/load chunks
    const CountResult chunked = count_quot_points(2, 1, 2, 2, opts);
    CHECK(chunked.orbit_count == plain.orbit_count);

    // The finished checkpoint resumes to the same answer without recounting.
    const CountResult resumed = count_quot_points(2, 1, 2, 2, opts);
    CHECK(resumed.orbit_count == plain.orbit_count);

    // A checkpoint for different parameters is refused.
    CHECK_THROWS_AS(count_quot_points(2, 1, 2, 3, opts), Error);
    std::remove(path.c_str());
}

TEST_CASE("first-order lift counts") {
    const Field f2 = Field::prime(2);
    SUBCASE("singular punctual point") {
        CHECK(count_first_order_lifts(punctual_point(2, 2, f2)) == 256); // 2^(2 r^2)
    }
    SUBCASE("scalar points") {
        const FramedRep rep(2, 1, 1, f2,
                            {Matrix::identity(1, f2), Matrix::identity(1, f2)},
                            {unit_vec(1, 0, f2)});
        CHECK(count_first_order_lifts(rep) == 4); // 2^(m - 1 + r)
    }
    SUBCASE("odd characteristic") {
        const Field f3 = Field::prime(3);
        const FramedRep rep = punctual_point(2, 2, f3);
        std::uint64_t expected = 1;
        for (std::size_t k = 0; k < tangent_dim(rep); ++k) expected *= 3;
        CHECK(count_first_order_lifts(rep) == expected); // 3^8
    }
    SUBCASE("rejects unstable and wrong-field input") {
        const FramedRep unstable(2, 1, 1, f2, {Matrix(1, 1, f2), Matrix(1, 1, f2)}, {zero_vec(1, f2)});
        CHECK_THROWS_AS(count_first_order_lifts(unstable), NotStable);
        CHECK_THROWS_AS(count_first_order_lifts(punctual_point(2, 1, Field::rationals())), FieldMismatch);
    }
    SUBCASE("rejects non-commuting base points") {
        std::vector<Matrix> a;
        Matrix e12(2, 2, f2), e21(2, 2, f2);
        e12.set(0, 1, Scalar::one(f2));
        e21.set(1, 0, Scalar::one(f2));
        const FramedRep rep(2, 2, 1, f2, {e12, e21}, {unit_vec(2, 0, f2)});
        CHECK_THROWS_AS(count_first_order_lifts(rep), NotCommuting);
    }
}

TEST_CASE("count results serialize") {
    const CountResult c = count_quot_points(2, 1, 2, 2);
    const Json j = count_result_to_json(c);
    CHECK(j["orbit_count"] == 12);
    CHECK(j["q"] == 2);
    CHECK(j["gauge_group_order"] == 1);
}
