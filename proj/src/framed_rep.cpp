#include "quot/framed_rep.hpp"

#include <string>

namespace quot {

namespace {

// Incremental row-echelon basis of a subspace of k^n, used for span closure.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t n) : n_(n) {}

    std::size_t dim() const { return rows_.size(); }

    // Reduces v against the basis; if a nonzero remainder survives, inserts
    // it (normalized) and returns true.
    bool insert(Vec v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Scalar& lead = v[pivots_[k]];
            if (!lead.is_zero()) v = vec_sub(v, vec_scale(lead, rows_[k]));
        }
        std::size_t piv = 0;
        while (piv < n_ && v[piv].is_zero()) ++piv;
        if (piv == n_) return false;
        rows_.push_back(vec_scale(v[piv].inverse(), v));
        pivots_.push_back(piv);
        return true;
    }

private:
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace

FramedRep::FramedRep(std::size_t m, std::size_t n, std::size_t r, const Field& field,
                     std::vector<Matrix> a, std::vector<Vec> v)
    : m_(m), n_(n), r_(r), field_(field), a_(std::move(a)), v_(std::move(v)) {
    if (m_ < 1) throw Error("FramedRep: loop count m must be >= 1");
    if (r_ < 1) throw Error("FramedRep: framing rank r must be >= 1");
    if (a_.size() != m_) throw Error("FramedRep: expected " + std::to_string(m_) + " loop matrices");
    if (v_.size() != r_) throw Error("FramedRep: expected " + std::to_string(r_) + " framing vectors");
    for (const Matrix& ai : a_) {
        if (ai.rows() != n_ || ai.cols() != n_) throw Error("FramedRep: loop matrix is not n x n");
        if (ai.field() != field_) throw FieldMismatch("FramedRep: loop matrix field differs from rep field");
    }
    for (const Vec& vj : v_) {
        if (vj.size() != n_) throw Error("FramedRep: framing vector length differs from n");
        for (const Scalar& e : vj) {
            if (e.field() != field_) throw FieldMismatch("FramedRep: framing vector field differs from rep field");
        }
    }
}

bool FramedRep::operator==(const FramedRep& o) const {
    return m_ == o.m_ && n_ == o.n_ && r_ == o.r_ && field_ == o.field_ && a_ == o.a_ && v_ == o.v_;
}

GaugeElement::GaugeElement(Matrix g) : g_(std::move(g)), g_inv_(g_.rows(), g_.cols(), g_.field()) {
    if (!g_.is_square()) throw SingularGauge("GaugeElement: matrix is not square");
    std::optional<Matrix> inv = inverse(g_);
    if (!inv) throw SingularGauge("GaugeElement: matrix is singular");
    g_inv_ = std::move(*inv);
}

std::vector<Matrix> commutators(const FramedRep& rep) {
    std::vector<Matrix> out;
    out.reserve(rep.m() * (rep.m() - 1) / 2);
    for (std::size_t i = 0; i < rep.m(); ++i)
        for (std::size_t j = i + 1; j < rep.m(); ++j) out.push_back(Matrix::commutator(rep.A(i), rep.A(j)));
    return out;
}

bool is_commuting(const FramedRep& rep) {
    for (std::size_t i = 0; i < rep.m(); ++i)
        for (std::size_t j = i + 1; j < rep.m(); ++j)
            if (!Matrix::commutator(rep.A(i), rep.A(j)).is_zero()) return false;
    return true;
}

bool is_stable(const FramedRep& rep) {
    const std::size_t n = rep.n();
    if (n == 0) return true;

    SpanBasis basis(n);
    std::vector<Vec> worklist;
    for (const Vec& vj : rep.V()) {
        if (basis.insert(vj)) worklist.push_back(vj);
    }
    while (!worklist.empty() && basis.dim() < n) {
        Vec x = std::move(worklist.back());
        worklist.pop_back();
        for (const Matrix& a : rep.A()) {
            Vec ax = mat_vec(a, x);
            if (basis.insert(ax)) worklist.push_back(std::move(ax));
        }
    }
    return basis.dim() == n;
}

FramedRep gauge_act(const GaugeElement& g, const FramedRep& rep) {
    if (g.n() != rep.n()) throw Error("gauge_act: gauge size differs from rep dimension");
    if (g.g().field() != rep.field()) throw FieldMismatch("gauge_act: gauge field differs from rep field");
    std::vector<Matrix> a;
    a.reserve(rep.m());
    for (const Matrix& ai : rep.A()) a.push_back(g.g() * ai * g.g_inverse());
    std::vector<Vec> v;
    v.reserve(rep.r());
    for (const Vec& vj : rep.V()) v.push_back(mat_vec(g.g(), vj));
    return FramedRep(rep.m(), rep.n(), rep.r(), rep.field(), std::move(a), std::move(v));
}

FramedRep punctual_point(std::size_t m, std::size_t r, const Field& field) {
    if (m < 1 || r < 1) throw Error("punctual_point: need m >= 1 and r >= 1");
    std::vector<Matrix> a(m, Matrix(r, r, field));
    std::vector<Vec> v;
    v.reserve(r);
    for (std::size_t j = 0; j < r; ++j) v.push_back(unit_vec(r, j, field));
    return FramedRep(m, r, r, field, std::move(a), std::move(v));
}

FramedRep etale_point(std::size_t m, std::size_t r, std::size_t n, const Field& field,
                      const std::vector<std::vector<Scalar>>& supports,
                      const std::vector<std::size_t>& assignment) {
    if (supports.size() != n) throw Error("etale_point: expected n support tuples");
    if (assignment.size() != n) throw Error("etale_point: expected one framing index per point");
    for (const auto& s : supports) {
        if (s.size() != m) throw Error("etale_point: support tuple length differs from m");
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (assignment[p] >= r) throw Error("etale_point: framing index out of range");
        for (std::size_t q = p + 1; q < n; ++q) {
            if (supports[p] == supports[q]) {
                throw DuplicateSupport("etale_point: support tuples " + std::to_string(p) + " and " +
                                       std::to_string(q) + " coincide");
            }
        }
    }

    std::vector<Matrix> a;
    a.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Matrix ai(n, n, field);
        for (std::size_t p = 0; p < n; ++p) ai.set(p, p, supports[p][i]);
        a.push_back(std::move(ai));
    }
    std::vector<Vec> v(r, zero_vec(n, field));
    for (std::size_t p = 0; p < n; ++p) v[assignment[p]][p] = Scalar::one(field);
    return FramedRep(m, n, r, field, std::move(a), std::move(v));
}

RepLayout layout_of(const FramedRep& rep) {
    return RepLayout{rep.m(), rep.n(), rep.r()};
}

Vec rep_coordinates(const FramedRep& rep) {
    const RepLayout lay = layout_of(rep);
    Vec coords = zero_vec(lay.dim(), rep.field());
    for (std::size_t i = 0; i < lay.m; ++i)
        for (std::size_t row = 0; row < lay.n; ++row)
            for (std::size_t col = 0; col < lay.n; ++col)
                coords[lay.a_index(i, row, col)] = rep.A(i)(row, col);
    for (std::size_t j = 0; j < lay.r; ++j)
        for (std::size_t k = 0; k < lay.n; ++k) coords[lay.v_index(j, k)] = rep.v(j)[k];
    return coords;
}

FramedRep rep_from_coordinates(std::size_t m, std::size_t n, std::size_t r, const Field& field,
                               const Vec& coords) {
    const RepLayout lay{m, n, r};
    if (coords.size() != lay.dim()) throw Error("rep_from_coordinates: wrong coordinate count");
    std::vector<Matrix> a;
    a.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Matrix ai(n, n, field);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col) ai.set(row, col, coords[lay.a_index(i, row, col)]);
        a.push_back(std::move(ai));
    }
    std::vector<Vec> v;
    v.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
        Vec vj = zero_vec(n, field);
        for (std::size_t k = 0; k < n; ++k) vj[k] = coords[lay.v_index(j, k)];
        v.push_back(std::move(vj));
    }
    return FramedRep(m, n, r, field, std::move(a), std::move(v));
}

} // namespace quot
