#include "quot/tangent.hpp"

namespace quot {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Smooth: return "Smooth";
        case Verdict::Singular: return "Singular";
        default: return "Unknown";
    }
}

Matrix gauge_differential(const FramedRep& rep) {
    const RepLayout lay = layout_of(rep);
    const std::size_t n = lay.n;
    Matrix d1(lay.dim(), n * n, rep.field());

    // Column for xi = E_{ab}.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t col = a * n + b;
            Matrix xi(n, n, rep.field());
            xi.set(a, b, Scalar::one(rep.field()));
            for (std::size_t i = 0; i < lay.m; ++i) {
                const Matrix comm = Matrix::commutator(xi, rep.A(i));
                for (std::size_t row = 0; row < n; ++row)
                    for (std::size_t cc = 0; cc < n; ++cc)
                        d1.set(lay.a_index(i, row, cc), col, comm(row, cc));
            }
            for (std::size_t j = 0; j < lay.r; ++j) {
                // (E_{ab} v_j)_a = (v_j)_b, all other coordinates vanish.
                d1.set(lay.v_index(j, a), col, rep.v(j)[b]);
            }
        }
    }
    return d1;
}

Matrix relation_jacobian(const FramedRep& rep) {
    const RepLayout lay = layout_of(rep);
    const std::size_t n = lay.n;
    Matrix d2(lay.relation_rows(), lay.dim(), rep.field());

    // Column for the direction a_k = E_{ab}; w-directions contribute nothing.
    for (std::size_t k = 0; k < lay.m; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t col = lay.a_index(k, a, b);
                Matrix dir(n, n, rep.field());
                dir.set(a, b, Scalar::one(rep.field()));

                std::size_t pair = 0;
                for (std::size_t i = 0; i < lay.m; ++i) {
                    for (std::size_t j = i + 1; j < lay.m; ++j, ++pair) {
                        if (k != i && k != j) continue;
                        // d[A_i, A_j] in direction (a_i, a_j) = [a_i, A_j] + [A_i, a_j]
                        const Matrix block = (k == i) ? Matrix::commutator(dir, rep.A(j))
                                                      : Matrix::commutator(rep.A(i), dir);
                        for (std::size_t row = 0; row < n; ++row)
                            for (std::size_t cc = 0; cc < n; ++cc)
                                d2.set(pair * n * n + row * n + cc, col, block(row, cc));
                    }
                }
            }
        }
    }
    return d2;
}

std::size_t tangent_dim(const FramedRep& rep) {
    if (!is_stable(rep)) throw NotStable("tangent_dim: representation is not stable");
    if (!is_commuting(rep)) throw NotCommuting("tangent_dim: representation is not commuting");
    const RepLayout lay = layout_of(rep);
    const std::size_t jac_rank = rank(relation_jacobian(rep));
    return lay.dim() - jac_rank - lay.n * lay.n;
}

std::size_t ambient_dim(std::size_t m, std::size_t n, std::size_t r) {
    return (m - 1) * n * n + r * n;
}

TangentReport classify_point(const FramedRep& rep, std::optional<std::size_t> expected_dim) {
    if (!is_stable(rep)) throw NotStable("classify_point: representation is not stable");
    if (!is_commuting(rep)) throw NotCommuting("classify_point: representation is not commuting");

    const RepLayout lay = layout_of(rep);
    TangentReport rep_out{};
    rep_out.ambient_dim = ambient_dim(lay.m, lay.n, lay.r);
    rep_out.rep_space_dim = lay.dim();
    rep_out.jacobian_rank = rank(relation_jacobian(rep));
    rep_out.tangent_dim = rep_out.rep_space_dim - rep_out.jacobian_rank - lay.n * lay.n;
    rep_out.reference_dim = expected_dim;

    if (!expected_dim) {
        rep_out.verdict = Verdict::Unknown;
    } else if (*expected_dim > rep_out.tangent_dim) {
        throw DimensionMismatch("classify_point: reference dimension " + std::to_string(*expected_dim) +
                                " exceeds tangent dimension " + std::to_string(rep_out.tangent_dim));
    } else {
        rep_out.verdict = (*expected_dim == rep_out.tangent_dim) ? Verdict::Smooth : Verdict::Singular;
    }
    return rep_out;
}

} // namespace quot
