#include "quot/sampling.hpp"

namespace quot {

namespace {

constexpr int kMaxRejections = 4096;

[[noreturn]] void give_up(const char* what) {
    throw Error(std::string(what) + ": rejection sampling failed to produce a valid draw");
}

} // namespace

Scalar random_scalar(CounterRng& rng, const Field& field, long long box) {
    if (field.is_rationals()) return Scalar::of_int(field, rng.int_in(-box, box));
    return Scalar::of_int(field, static_cast<long long>(rng.below(field.characteristic())));
}

Matrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols, const Field& field,
                     long long box) {
    Matrix m(rows, cols, field);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(rng, field, box));
    return m;
}

Vec random_vec(CounterRng& rng, std::size_t len, const Field& field, long long box) {
    Vec v;
    v.reserve(len);
    for (std::size_t k = 0; k < len; ++k) v.push_back(random_scalar(rng, field, box));
    return v;
}

FramedRep random_rep(CounterRng& rng, std::size_t m, std::size_t n, std::size_t r, const Field& field,
                     long long box) {
    std::vector<Matrix> a;
    a.reserve(m);
    for (std::size_t i = 0; i < m; ++i) a.push_back(random_matrix(rng, n, n, field, box));
    std::vector<Vec> v;
    v.reserve(r);
    for (std::size_t j = 0; j < r; ++j) v.push_back(random_vec(rng, n, field, box));
    return FramedRep(m, n, r, field, std::move(a), std::move(v));
}

GaugeElement random_gauge(CounterRng& rng, std::size_t n, const Field& field, long long box) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        Matrix g = random_matrix(rng, n, n, field, box);
        if (rank(g) == n) return GaugeElement(std::move(g));
    }
    give_up("random_gauge");
}

FramedRep random_commuting_rep(CounterRng& rng, std::size_t m, std::size_t n, std::size_t r,
                               const Field& field, long long box) {
    std::vector<Matrix> a;
    a.reserve(m);
    a.push_back(random_matrix(rng, n, n, field, box));

    // Powers of A_1 up to degree n-1 span the algebra generated by A_1.
    std::vector<Matrix> powers;
    powers.push_back(Matrix::identity(n, field));
    for (std::size_t d = 1; d < n; ++d) powers.push_back(powers.back() * a.front());

    for (std::size_t i = 1; i < m; ++i) {
        Matrix ai(n, n, field);
        for (const Matrix& p : powers) ai = ai + p.scaled(random_scalar(rng, field, box));
        a.push_back(std::move(ai));
    }

    std::vector<Vec> v;
    v.reserve(r);
    for (std::size_t j = 0; j < r; ++j) v.push_back(random_vec(rng, n, field, box));
    return FramedRep(m, n, r, field, std::move(a), std::move(v));
}

FramedRep random_stable_commuting_rep(CounterRng& rng, std::size_t m, std::size_t n, std::size_t r,
                                      const Field& field, long long box) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        FramedRep rep = random_commuting_rep(rng, m, n, r, field, box);
        if (is_stable(rep)) return rep;
    }
    give_up("random_stable_commuting_rep");
}

FramedRep random_etale_rep(CounterRng& rng, std::size_t m, std::size_t n, std::size_t r,
                           const Field& field, long long box) {
    std::vector<std::vector<Scalar>> supports;
    supports.reserve(n);
    for (int attempt = 0; attempt < kMaxRejections && supports.size() < n; ++attempt) {
        std::vector<Scalar> tuple;
        tuple.reserve(m);
        for (std::size_t i = 0; i < m; ++i) tuple.push_back(random_scalar(rng, field, box));
        bool fresh = true;
        for (const auto& seen : supports) fresh = fresh && !(seen == tuple);
        if (fresh) supports.push_back(std::move(tuple));
    }
    if (supports.size() < n) give_up("random_etale_rep");

    std::vector<std::size_t> assignment;
    assignment.reserve(n);
    for (std::size_t p = 0; p < n; ++p) assignment.push_back(rng.below(r));
    return etale_point(m, r, n, field, supports, assignment);
}

AdhmDatum random_stable_adhm_solution(CounterRng& rng, std::size_t n, std::size_t r, const Field& field,
                                      long long box) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        // Commuting pair: B_2 a random polynomial in B_1.
        Matrix b1 = random_matrix(rng, n, n, field, box);
        Matrix b2(n, n, field);
        Matrix power = Matrix::identity(n, field);
        for (std::size_t d = 0; d < std::max<std::size_t>(n, 1); ++d) {
            b2 = b2 + power.scaled(random_scalar(rng, field, box));
            power = power * b1;
        }

        const bool with_framing_cokernel = r > 1 && rng.below(2) == 1;
        Matrix i = random_matrix(rng, n, r, field, box);
        Matrix j(r, n, field);
        if (with_framing_cokernel) {
            // i j = 0 with j != 0: zero the last column of i and support j on
            // that framing index alone.
            for (std::size_t row = 0; row < n; ++row) i.set(row, r - 1, Scalar::zero(field));
            for (std::size_t col = 0; col < n; ++col) j.set(r - 1, col, random_scalar(rng, field, box));
            if (j.is_zero() && n > 0) j.set(r - 1, 0, Scalar::one(field));
        }

        AdhmDatum d(n, r, field, std::move(b1), std::move(b2), std::move(i), std::move(j));
        if (moment(d).is_zero() && is_stable_adhm(d)) return d;
    }
    give_up("random_stable_adhm_solution");
}

} // namespace quot
