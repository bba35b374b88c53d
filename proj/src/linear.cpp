#include "smashcalc/linear.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

namespace smashcalc {

namespace {
std::atomic<int> g_exec{static_cast<int>(Exec::Parallel)};
}

Exec default_exec() { return static_cast<Exec>(g_exec.load()); }
void set_default_exec(Exec e) { g_exec.store(static_cast<int>(e)); }
int worker_count() { return omp_get_max_threads(); }

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v)
{
    if (v.size() != rows_)
        throw Error(ErrorKind::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] += b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] -= b.data_[i];
    return r;
}

Matrix multiply(const Matrix& a, const Matrix& b, Exec exec)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix r(a.rows(), b.cols());
    for_each_index(
        a.rows(),
        [&](std::size_t i) {
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Scalar& x = a(i, k);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols(); ++j) {
                    const Scalar& y = b(k, j);
                    if (!y.is_zero())
                        r(i, j) += x * y;
                }
            }
        },
        exec);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b, default_exec()); }

Vector apply_matrix(const Matrix& a, const Vector& v)
{
    if (a.cols() != v.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero())
                r[i] += a(i, j) * v[j];
    return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b)
{
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero())
                        r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

Echelon row_reduce(Matrix m, Exec exec)
{
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        std::size_t best_cost = 0;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (m(r, col).is_zero())
                continue;
            std::size_t cost = m(r, col).complexity();
            if (best == m.rows() || cost < best_cost) {
                best = r;
                best_cost = cost;
            }
        }
        if (best == m.rows())
            continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(best, j), m(row, j));
        Scalar inv = m(row, col).inv();
        std::vector<std::size_t> support;
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) {
                m(row, j) *= inv;
                support.push_back(j);
            }
        const std::size_t pivot_row = row;
        for_each_index(
            m.rows(),
            [&](std::size_t r) {
                if (r == pivot_row || m(r, col).is_zero())
                    return;
                Scalar f = m(r, col);
                for (std::size_t j : support)
                    m(r, j) -= f * m(pivot_row, j);
            },
            exec);
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m, Exec exec) { return row_reduce(m, exec).pivots.size(); }

Matrix nullspace(const Matrix& m, Exec exec)
{
    Echelon e = row_reduce(m, exec);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j])
            free_cols.push_back(j);
    Matrix n(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        n(f, k) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            n(e.pivots[r], k) = -e.reduced(r, f);
    }
    return n;
}

Matrix column_space(const Matrix& m, Exec exec)
{
    Echelon e = row_reduce(m, exec);
    Matrix c(m.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            c(i, k) = m(i, e.pivots[k]);
    return c;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, Exec exec)
{
    if (b.size() != a.rows())
        throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = row_reduce(std::move(aug), exec);
    if (!e.pivots.empty() && e.pivots.back() == a.cols())
        return std::nullopt;
    Vector x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& a, Exec exec)
{
    if (a.rows() != a.cols())
        throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = Scalar(1);
    }
    Echelon e = row_reduce(std::move(aug), exec);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

BasedSpace BasedSpace::numbered(const std::string& label, std::size_t n)
{
    BasedSpace s{label, {}};
    for (std::size_t i = 0; i < n; ++i)
        s.basis.push_back(label + "[" + std::to_string(i) + "]");
    return s;
}

BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b)
{
    BasedSpace s{a.label + "⊗" + b.label, {}};
    for (const auto& x : a.basis)
        for (const auto& y : b.basis)
            s.basis.push_back(x + "⊗" + y);
    return s;
}

LinMap::LinMap(BasedSpace dom, BasedSpace cod, Matrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m))
{
    if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
        throw Error(ErrorKind::DimensionMismatch, "matrix shape does not match " + domain.label + " -> " + codomain.label);
}

LinMap LinMap::identity(const BasedSpace& s) { return LinMap(s, s, Matrix::identity(s.dim())); }

LinMap LinMap::zero(const BasedSpace& dom, const BasedSpace& cod) { return LinMap(dom, cod, Matrix(cod.dim(), dom.dim())); }

LinMap compose(const LinMap& f, const LinMap& g)
{
    if (g.codomain.dim() != f.domain.dim() || g.codomain.basis != f.domain.basis)
        throw Error(ErrorKind::DimensionMismatch, "cannot compose " + g.codomain.label + " into " + f.domain.label);
    return LinMap(g.domain, f.codomain, f.matrix * g.matrix);
}

LinMap tensor(const LinMap& f, const LinMap& g)
{
    return LinMap(tensor_space(f.domain, g.domain), tensor_space(f.codomain, g.codomain), kronecker(f.matrix, g.matrix));
}

LinMap difference(const LinMap& f, const LinMap& g)
{
    if (f.domain.basis != g.domain.basis || f.codomain.basis != g.codomain.basis)
        throw Error(ErrorKind::DimensionMismatch, "difference of maps with different shapes");
    return LinMap(f.domain, f.codomain, f.matrix - g.matrix);
}

Subspace kernel(const LinMap& f, Exec exec)
{
    Matrix n = nullspace(f.matrix, exec);
    BasedSpace s = BasedSpace::numbered("ker", n.cols());
    return {s, LinMap(s, f.domain, n)};
}

Subspace image(const LinMap& f, Exec exec)
{
    Matrix c = column_space(f.matrix, exec);
    BasedSpace s = BasedSpace::numbered("im", c.cols());
    return {s, LinMap(s, f.codomain, c)};
}

std::optional<Vector> solve(const LinMap& f, const Vector& target, Exec exec) { return solve(f.matrix, target, exec); }

}  // namespace smashcalc
