#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smashcalc/lincomb.hpp"
#include "smashcalc/parallel.hpp"
#include "smashcalc/scalar.hpp"

namespace smashcalc {

using Vector = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b, Exec exec);
Vector apply_matrix(const Matrix& a, const Vector& v);
// Kronecker product; the left factor's index varies slowest.
Matrix kronecker(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

// Gauss-Jordan elimination, pivoting on the lowest-complexity entry of each column.
Echelon row_reduce(Matrix m, Exec exec);
std::size_t rank(const Matrix& m, Exec exec = default_exec());
// Columns form a basis of the null space; free coordinates are unit vectors.
Matrix nullspace(const Matrix& m, Exec exec = default_exec());
// Columns form a basis of the column space (a subset of the input columns).
Matrix column_space(const Matrix& m, Exec exec = default_exec());
// A solution with all free coordinates zero, or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b, Exec exec = default_exec());
std::optional<Matrix> inverse(const Matrix& a, Exec exec = default_exec());

struct BasedSpace {
    std::string label;
    std::vector<std::string> basis;
    std::size_t dim() const { return basis.size(); }
    static BasedSpace numbered(const std::string& label, std::size_t n);
};

BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b);

struct LinMap {
    BasedSpace domain;
    BasedSpace codomain;
    Matrix matrix;  // codomain.dim() x domain.dim(); column j is the image of basis vector j

    LinMap() = default;
    LinMap(BasedSpace dom, BasedSpace cod, Matrix m);
    static LinMap identity(const BasedSpace& s);
    static LinMap zero(const BasedSpace& dom, const BasedSpace& cod);
    Vector operator()(const Vector& v) const { return apply_matrix(matrix, v); }
};

LinMap compose(const LinMap& f, const LinMap& g);  // f after g
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap difference(const LinMap& f, const LinMap& g);

struct Subspace {
    BasedSpace space;
    LinMap inclusion;
};

Subspace kernel(const LinMap& f, Exec exec = default_exec());
Subspace image(const LinMap& f, Exec exec = default_exec());
std::optional<Vector> solve(const LinMap& f, const Vector& target, Exec exec = default_exec());

// Bijection between keys and coordinates.
template <class Key>
class KeyIndex {
public:
    KeyIndex() = default;
    explicit KeyIndex(std::vector<Key> keys) : keys_(std::move(keys))
    {
        for (std::size_t i = 0; i < keys_.size(); ++i)
            index_.emplace(keys_[i], i);
    }
    std::size_t size() const { return keys_.size(); }
    const std::vector<Key>& keys() const { return keys_; }
    const Key& key(std::size_t i) const { return keys_[i]; }
    std::optional<std::size_t> find(const Key& k) const
    {
        auto it = index_.find(k);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }
    std::size_t push(const Key& k)
    {
        auto it = index_.find(k);
        if (it != index_.end())
            return it->second;
        keys_.push_back(k);
        index_.emplace(k, keys_.size() - 1);
        return keys_.size() - 1;
    }
    // Coordinates of x; throws ShapeMismatch if x uses a key outside the index.
    Vector coords(const LinComb<Key>& x) const
    {
        Vector v(keys_.size());
        for (const auto& [k, c] : x) {
            auto i = find(k);
            if (!i)
                throw Error(ErrorKind::ShapeMismatch, "key outside the indexed basis");
            v[*i] = c;
        }
        return v;
    }
    LinComb<Key> combination(const Vector& v) const
    {
        LinComb<Key> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out.add(keys_[i], v[i]);
        return out;
    }

private:
    std::vector<Key> keys_;
    std::map<Key, std::size_t> index_;
};

// Incremental echelon basis of a span of sparse combinations.
template <class Key>
class SpanBasis {
public:
    // Returns true if v was independent of the span so far.
    bool insert(LinComb<Key> v)
    {
        reduce(v);
        if (v.is_zero())
            return false;
        Key lead = std::prev(v.end())->first;
        Scalar c = std::prev(v.end())->second.inv();
        pivots_.emplace(lead, c * v);
        return true;
    }
    bool contains(LinComb<Key> v) const
    {
        reduce(v);
        return v.is_zero();
    }
    std::size_t rank() const { return pivots_.size(); }
    std::vector<LinComb<Key>> basis() const
    {
        std::vector<LinComb<Key>> out;
        for (const auto& [k, v] : pivots_)
            out.push_back(v);
        return out;
    }

private:
    void reduce(LinComb<Key>& v) const
    {
        // Each step removes one pivot key and only introduces smaller keys.
        while (!v.is_zero()) {
            bool changed = false;
            for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
                auto p = pivots_.find(it->first);
                if (p == pivots_.end())
                    continue;
                Scalar c = it->second;
                v.add(p->second, -c);
                changed = true;
                break;
            }
            if (!changed)
                break;
        }
    }

    std::map<Key, LinComb<Key>> pivots_;
};

}  // namespace smashcalc
