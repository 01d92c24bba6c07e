#include "qosp/matrix.hpp"

namespace qosp {

namespace {

void require_same_shape(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) usage_error("matrix shape mismatch");
    if (!x.field()->same_field(*y.field())) usage_error("matrices over different fields");
}

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref_in_place(ExactMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        const Scalar inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const Scalar factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) {
                if (m.at(row, j).is_zero()) continue;
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

ExactMatrix::ExactMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) usage_error("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, field_->zero());
}

ExactMatrix ExactMatrix::identity(const FieldPtr& field, int n) {
    ExactMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

int ExactMatrix::dim() const {
    if (rows_ != cols_) usage_error("matrix is not square");
    return rows_;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    require_same_shape(x, y);
    ExactMatrix r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
    return r;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    require_same_shape(x, y);
    ExactMatrix r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols() != y.rows()) usage_error("matrix product shape mismatch");
    if (!x.field()->same_field(*y.field())) usage_error("matrices over different fields");
    ExactMatrix r(x.field(), x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i) {
        for (int m = 0; m < x.cols(); ++m) {
            const Scalar& xim = x.at(i, m);
            if (xim.is_zero()) continue;
            for (int j = 0; j < y.cols(); ++j) {
                const Scalar& ymj = y.at(m, j);
                if (ymj.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + xim * ymj;
            }
        }
    }
    return r;
}

ExactMatrix operator*(const Scalar& c, const ExactMatrix& x) {
    ExactMatrix r = x;
    for (auto& v : r.a_) v = c * v;
    return r;
}

bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (size_t i = 0; i < x.a_.size(); ++i)
        if (x.a_[i] != y.a_[i]) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::pow(long n) const {
    ExactMatrix base = n < 0 ? inverse() : *this;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    ExactMatrix result = identity(field_, dim());
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<Scalar> ExactMatrix::as_scalar() const {
    const int n = dim();
    if (n == 0) return std::nullopt;
    const Scalar& c = at(0, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j ? (at(i, j) != c) : !at(i, j).is_zero()) return std::nullopt;
        }
    return c;
}

ExactMatrix ExactMatrix::inverse() const {
    const int n = dim();
    ExactMatrix aug(field_, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = field_->one();
    }
    auto pivots = rref_in_place(aug);
    // invertible iff the pivots are exactly the first n columns
    if (static_cast<int>(pivots.size()) < n) arith_error("matrix is singular");
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) arith_error("matrix is singular");
    ExactMatrix inv(field_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

int ExactMatrix::rank() const {
    ExactMatrix copy = *this;
    return static_cast<int>(rref_in_place(copy).size());
}

ExactMatrix ExactMatrix::nullspace() const {
    ExactMatrix r = *this;
    auto pivots = rref_in_place(r);
    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (int j = 0; j < cols_; ++j) {
            if (p < pivots.size() && pivots[p] == j)
                ++p;
            else
                free_cols.push_back(j);
        }
    }
    ExactMatrix basis(field_, cols_, static_cast<int>(free_cols.size()));
    for (size_t t = 0; t < free_cols.size(); ++t) {
        const int fc = free_cols[t];
        basis.at(fc, static_cast<int>(t)) = field_->one();
        for (size_t p = 0; p < pivots.size(); ++p)
            basis.at(pivots[p], static_cast<int>(t)) = -r.at(static_cast<int>(p), fc);
    }
    return basis;
}

ExactMatrix ExactMatrix::solve(const ExactMatrix& rhs) const {
    if (rhs.rows() != rows_) usage_error("solve: shape mismatch");
    ExactMatrix aug(field_, rows_, cols_ + rhs.cols());
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (int j = 0; j < rhs.cols(); ++j) aug.at(i, cols_ + j) = rhs.at(i, j);
    }
    auto pivots = rref_in_place(aug);
    for (int p : pivots)
        if (p >= cols_) arith_error("solve: inconsistent system");
    if (static_cast<int>(pivots.size()) != cols_) arith_error("solve: rank-deficient system");
    ExactMatrix x(field_, cols_, rhs.cols());
    for (int i = 0; i < cols_; ++i)
        for (int j = 0; j < rhs.cols(); ++j) x.at(i, j) = aug.at(i, cols_ + j);
    return x;
}

ExactMatrix ExactMatrix::column_range(int first, int last) const {
    if (first < 0 || last > cols_ || first > last) usage_error("column range out of bounds");
    ExactMatrix r(field_, rows_, last - first);
    for (int i = 0; i < rows_; ++i)
        for (int j = first; j < last; ++j) r.at(i, j - first) = at(i, j);
    return r;
}

SpanBasis::SpanBasis(FieldPtr field, size_t width) : field_(std::move(field)), width_(width) {}

bool SpanBasis::insert(std::vector<Scalar> v) {
    if (v.size() != width_) usage_error("span vector width mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const size_t p = pivots_[r];
        if (v[p].is_zero()) continue;
        const Scalar factor = v[p];
        const auto& row = rows_[r];
        for (size_t j = p; j < width_; ++j) {
            if (row[j].is_zero()) continue;
            v[j] = v[j] - factor * row[j];
        }
    }
    size_t pivot = width_;
    for (size_t j = 0; j < width_; ++j) {
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == width_) return false;
    const Scalar inv = v[pivot].inverse();
    for (size_t j = pivot; j < width_; ++j)
        if (!v[j].is_zero()) v[j] = v[j] * inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace qosp
