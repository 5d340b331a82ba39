#include "quot/matrix.hpp"

namespace quot {

namespace {

void require_same_field(const Field& a, const Field& b, const char* op) {
    if (a != b) {
        throw FieldMismatch(std::string("Matrix: mixed fields in ") + op + " (" + a.to_string() +
                            " vs " + b.to_string() + ")");
    }
}

void require_shape(bool ok, const char* what) {
    if (!ok) throw Error(std::string("Matrix: shape mismatch in ") + what);
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const Field& field) {
    Matrix m(n, n, field);
    const Scalar one = Scalar::one(field);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        require_shape(rows[i].size() == c, "from_rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(rows, columns.size(), field);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require_shape(columns[j].size() == rows, "from_columns");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
    require_same_field(field_, value.field(), "set");
    entries_[i * cols_ + j] = value;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(field_, o.field_, "+");
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "+");
    Matrix m(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + o.entries_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(field_, o.field_, "-");
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "-");
    Matrix m(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - o.entries_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(field_, o.field_, "*");
    require_shape(cols_ == o.rows_, "*");
    Matrix m(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                m.entries_[i * o.cols_ + j] += aik * o(k, j);
            }
        }
    }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    require_same_field(field_, c.field(), "scaled");
    Matrix m(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = c * entries_[k];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, (*this)(i, j));
    return m;
}

Scalar Matrix::trace() const {
    require_shape(is_square(), "trace");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const Scalar& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return entries_ == o.entries_;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

EchelonForm rref(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;

    // Work on a mutable copy of the entry rows.
    std::vector<Vec> work(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        work[i].reserve(cols);
        for (std::size_t j = 0; j < cols; ++j) work[i].push_back(m(i, j));
    }

    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && work[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(work[sel], work[pivot_row]);

        const Scalar inv = work[pivot_row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) work[pivot_row][j] = inv * work[pivot_row][j];

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || work[i][col].is_zero()) continue;
            const Scalar factor = work[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                work[i][j] = work[i][j] - factor * work[pivot_row][j];
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }

    Matrix reduced = Matrix::from_rows(m.field(), work);
    if (rows == 0) reduced = Matrix(0, cols, m.field());
    return EchelonForm{std::move(reduced), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    const EchelonForm ech = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    basis.reserve(cols - ech.rank);
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = zero_vec(cols, m.field());
        v[free_col] = Scalar::one(m.field());
        for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
            v[ech.pivots[k]] = -ech.reduced(k, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    require_shape(b.size() == m.rows(), "solve");
    Matrix aug = hstack(m, Matrix::from_columns(m.field(), m.rows(), {b}));
    const EchelonForm ech = rref(aug);

    // Inconsistent iff the augmented column is a pivot.
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;

    Vec x = zero_vec(m.cols(), m.field());
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
        x[ech.pivots[k]] = ech.reduced(k, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    require_shape(m.is_square(), "inverse");
    const std::size_t n = m.rows();
    const EchelonForm ech = rref(hstack(m, Matrix::identity(n, m.field())));
    if (ech.rank < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, ech.reduced(i, n + j));
    return inv;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "hstack");
    require_shape(a.rows() == b.rows(), "hstack");
    Matrix m(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b(i, j));
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "vstack");
    require_shape(a.cols() == b.cols(), "vstack");
    Matrix m(a.rows() + b.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, j, b(i, j));
    return m;
}

Vec zero_vec(std::size_t len, const Field& field) {
    return Vec(len, Scalar::zero(field));
}

Vec unit_vec(std::size_t len, std::size_t k, const Field& field) {
    Vec v = zero_vec(len, field);
    v.at(k) = Scalar::one(field);
    return v;
}

Vec mat_vec(const Matrix& m, const Vec& x) {
    require_shape(x.size() == m.cols(), "mat_vec");
    Vec y = zero_vec(m.rows(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

Scalar dot(const Vec& a, const Vec& b) {
    require_shape(a.size() == b.size() && !a.empty(), "dot");
    Scalar s = Scalar::zero(a.front().field());
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
    require_shape(a.size() == b.size(), "vec_add");
    Vec v = a;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += b[k];
    return v;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_shape(a.size() == b.size(), "vec_sub");
    Vec v = a;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= b[k];
    return v;
}

Vec vec_scale(const Scalar& c, const Vec& x) {
    Vec v = x;
    for (Scalar& e : v) e = c * e;
    return v;
}

bool is_zero(const Vec& x) {
    for (const Scalar& e : x)
        if (!e.is_zero()) return false;
    return true;
}

} // namespace quot
