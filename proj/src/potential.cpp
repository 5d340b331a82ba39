#include "quot/potential.hpp"

#include "quot/tangent.hpp"

namespace quot {

namespace {

void require_three_loops(const FramedRep& rep, const char* op) {
    if (rep.m() != 3) {
        throw WrongLoopCount(std::string(op) + ": requires m = 3, got m = " + std::to_string(rep.m()));
    }
}

void scatter_block(Matrix& grad_like, const RepLayout& lay, std::size_t block, const Matrix& value,
                   std::size_t col) {
    for (std::size_t row = 0; row < lay.n; ++row)
        for (std::size_t cc = 0; cc < lay.n; ++cc)
            grad_like.set(lay.a_index(block, row, cc), col, value(row, cc));
}

} // namespace

PotentialPoint potential_point(const FramedRep& rep) {
    require_three_loops(rep, "potential_point");
    return PotentialPoint{rep, potential_value(rep), potential_gradient(rep), hessian(rep)};
}

Scalar potential_value(const FramedRep& rep) {
    require_three_loops(rep, "potential_value");
    if (rep.n() == 0) return Scalar::zero(rep.field());
    return (rep.A(0) * Matrix::commutator(rep.A(1), rep.A(2))).trace();
}

Vec potential_gradient(const FramedRep& rep) {
    require_three_loops(rep, "potential_gradient");
    const RepLayout lay = layout_of(rep);
    Vec grad = zero_vec(lay.dim(), rep.field());

    const Matrix blocks[3] = {
        Matrix::commutator(rep.A(1), rep.A(2)).transpose(),
        Matrix::commutator(rep.A(2), rep.A(0)).transpose(),
        Matrix::commutator(rep.A(0), rep.A(1)).transpose(),
    };
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t row = 0; row < lay.n; ++row)
            for (std::size_t cc = 0; cc < lay.n; ++cc)
                grad[lay.a_index(i, row, cc)] = blocks[i](row, cc);
    return grad;
}

Matrix hessian(const FramedRep& rep) {
    require_three_loops(rep, "hessian");
    const RepLayout lay = layout_of(rep);
    const std::size_t n = lay.n;
    Matrix hess(lay.dim(), lay.dim(), rep.field());

    // Column k = differential of the gradient map in the direction of the
    // k-th coordinate. Directions along v and gradient v-blocks both vanish.
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t col = lay.a_index(k, a, b);
                Matrix dir(n, n, rep.field());
                dir.set(a, b, Scalar::one(rep.field()));

                // d grad_1 = [a_2, A_3]^T + [A_2, a_3]^T, and cyclic shifts.
                Matrix d0(n, n, rep.field());
                Matrix d1(n, n, rep.field());
                Matrix d2(n, n, rep.field());
                if (k == 0) {
                    d1 = Matrix::commutator(rep.A(2), dir).transpose();
                    d2 = Matrix::commutator(dir, rep.A(1)).transpose();
                } else if (k == 1) {
                    d0 = Matrix::commutator(dir, rep.A(2)).transpose();
                    d2 = Matrix::commutator(rep.A(0), dir).transpose();
                } else {
                    d0 = Matrix::commutator(rep.A(1), dir).transpose();
                    d1 = Matrix::commutator(dir, rep.A(0)).transpose();
                }
                scatter_block(hess, lay, 0, d0, col);
                scatter_block(hess, lay, 1, d1, col);
                scatter_block(hess, lay, 2, d2, col);
            }
        }
    }
    return hess;
}

bool crit_equals_commuting_tangent(const FramedRep& rep) {
    require_three_loops(rep, "crit_equals_commuting_tangent");
    if (!is_stable(rep)) throw NotStable("crit_equals_commuting_tangent: representation is not stable");
    if (!is_commuting(rep)) throw NotCommuting("crit_equals_commuting_tangent: representation is not commuting");

    const Matrix hess = hessian(rep);
    const Matrix jac = relation_jacobian(rep);
    const std::size_t rank_h = rank(hess);
    const std::size_t rank_j = rank(jac);
    const std::size_t rank_stack = rank(vstack(hess, jac));
    // ker H = ker J iff neither matrix adds row space to the other.
    return rank_stack == rank_h && rank_stack == rank_j;
}

} // namespace quot
