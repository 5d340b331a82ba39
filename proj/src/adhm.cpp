#include "quot/adhm.hpp"

namespace quot {

AdhmDatum::AdhmDatum(std::size_t n, std::size_t r, const Field& field, Matrix b1, Matrix b2, Matrix i,
                     Matrix j)
    : n_(n), r_(r), field_(field), b1_(std::move(b1)), b2_(std::move(b2)), i_(std::move(i)), j_(std::move(j)) {
    if (r_ < 1) throw Error("AdhmDatum: framing rank r must be >= 1");
    if (b1_.rows() != n_ || b1_.cols() != n_ || b2_.rows() != n_ || b2_.cols() != n_)
        throw Error("AdhmDatum: B matrices must be n x n");
    if (i_.rows() != n_ || i_.cols() != r_) throw Error("AdhmDatum: i must be n x r");
    if (j_.rows() != r_ || j_.cols() != n_) throw Error("AdhmDatum: j must be r x n");
    for (const Matrix* m : {&b1_, &b2_, &i_, &j_}) {
        if (m->field() != field_) throw FieldMismatch("AdhmDatum: component field differs from datum field");
    }
}

bool AdhmDatum::operator==(const AdhmDatum& o) const {
    return n_ == o.n_ && r_ == o.r_ && field_ == o.field_ && b1_ == o.b1_ && b2_ == o.b2_ && i_ == o.i_ &&
           j_ == o.j_;
}

Matrix moment(const AdhmDatum& d) {
    return Matrix::commutator(d.B1(), d.B2()) + d.i() * d.j();
}

bool is_stable_adhm(const AdhmDatum& d) {
    // Same worklist closure as for framed reps, seeded by the columns of i.
    std::vector<Vec> cols;
    cols.reserve(d.r());
    for (std::size_t c = 0; c < d.r(); ++c) {
        Vec col = zero_vec(d.n(), d.field());
        for (std::size_t row = 0; row < d.n(); ++row) col[row] = d.i()(row, c);
        cols.push_back(std::move(col));
    }
    FramedRep as_rep(2, d.n(), d.r(), d.field(), {d.B1(), d.B2()}, std::move(cols));
    return is_stable(as_rep);
}

namespace {

// Parameter order: B_1 block, B_2 block, i block, j block, all row-major.
struct AdhmLayout {
    std::size_t n, r;
    std::size_t dim() const { return 2 * n * n + 2 * n * r; }
    std::size_t b_index(std::size_t which, std::size_t row, std::size_t col) const {
        return which * n * n + row * n + col;
    }
    std::size_t i_index(std::size_t row, std::size_t col) const { return 2 * n * n + row * r + col; }
    std::size_t j_index(std::size_t row, std::size_t col) const {
        return 2 * n * n + n * r + row * n + col;
    }
};

Matrix moment_jacobian(const AdhmDatum& d) {
    const AdhmLayout lay{d.n(), d.r()};
    const std::size_t n = d.n(), r = d.r();
    Matrix jac(n * n, lay.dim(), d.field());

    auto scatter = [&](const Matrix& block, std::size_t col) {
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t cc = 0; cc < n; ++cc) jac.set(row * n + cc, col, block(row, cc));
    };

    // d moment = [b_1, B_2] + [B_1, b_2] + di j + i dj.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Matrix dir(n, n, d.field());
            dir.set(a, b, Scalar::one(d.field()));
            scatter(Matrix::commutator(dir, d.B2()), lay.b_index(0, a, b));
            scatter(Matrix::commutator(d.B1(), dir), lay.b_index(1, a, b));
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
            Matrix dir(n, r, d.field());
            dir.set(a, b, Scalar::one(d.field()));
            scatter(dir * d.j(), lay.i_index(a, b));
        }
    }
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Matrix dir(r, n, d.field());
            dir.set(a, b, Scalar::one(d.field()));
            scatter(d.i() * dir, lay.j_index(a, b));
        }
    }
    return jac;
}

} // namespace

std::size_t moment_jacobian_rank(const AdhmDatum& d) {
    if (!moment(d).is_zero()) throw NotOnVariety("moment_jacobian_rank: moment map does not vanish");
    if (!is_stable_adhm(d)) throw NotStable("moment_jacobian_rank: datum is not stable");
    return rank(moment_jacobian(d));
}

std::size_t adhm_tangent_dim(const AdhmDatum& d) {
    const AdhmLayout lay{d.n(), d.r()};
    const std::size_t jac_rank = moment_jacobian_rank(d);
    return lay.dim() - jac_rank - d.n() * d.n();
}

AdhmDatum eta_embed(const FramedRep& rep) {
    if (rep.m() != 2) throw WrongLoopCount("eta_embed: requires m = 2, got m = " + std::to_string(rep.m()));
    if (!is_commuting(rep)) throw NotCommuting("eta_embed: representation is not commuting");
    if (!is_stable(rep)) throw NotStable("eta_embed: representation is not stable");

    const Matrix i = Matrix::from_columns(rep.field(), rep.n(), rep.V());
    const Matrix j(rep.r(), rep.n(), rep.field());
    return AdhmDatum(rep.n(), rep.r(), rep.field(), rep.A(0), rep.A(1), i, j);
}

FramedRep eta_restrict(const AdhmDatum& d) {
    std::vector<Vec> v;
    v.reserve(d.r());
    for (std::size_t c = 0; c < d.r(); ++c) {
        Vec col = zero_vec(d.n(), d.field());
        for (std::size_t row = 0; row < d.n(); ++row) col[row] = d.i()(row, c);
        v.push_back(std::move(col));
    }
    return FramedRep(2, d.n(), d.r(), d.field(), {d.B1(), d.B2()}, std::move(v));
}

FramedQuotDims framed_vs_quot_dims(std::size_t n, std::size_t r) {
    FramedQuotDims dims{};
    dims.framed_dim = 2 * n * r;
    dims.quot_dim = (r + 1) * n;
    dims.codim = dims.framed_dim - dims.quot_dim;
    if (dims.codim != n * (r - 1)) throw Error("framed_vs_quot_dims: codimension identity violated");
    return dims;
}

} // namespace quot
