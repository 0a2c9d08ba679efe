#pragma once

// Small dense matrices. Graphs here are desk-scale (a few hundred vertices
// at most) so everything is row-major std::vector storage.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopspec {

/// Dense row-major matrix.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Square matrix whose symmetry holds by construction: every write goes to
/// both (i, j) and (j, i).
template <class T>
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, T{}) {}

    /// Rejects ragged or non-symmetric input (exact comparison).
    static SymmetricMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t n = rows.size();
        SymmetricMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw std::invalid_argument("matrix is not square");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (rows[i][j] != rows[j][i]) {
                    throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                                std::to_string(j) + ")");
                }
                m.data_[i * n + j] = rows[i][j];
            }
        }
        return m;
    }

    static SymmetricMatrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        std::vector<std::vector<T>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return from_rows(v);
    }

    static SymmetricMatrix identity(std::size_t dim) {
        SymmetricMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.set(i, i, T{1});
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    T operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    void set(std::size_t i, std::size_t j, T v) {
        data_[i * dim_ + j] = v;
        data_[j * dim_ + i] = v;
    }

    void add(std::size_t i, std::size_t j, T v) {
        data_[i * dim_ + j] += v;
        if (i != j) data_[j * dim_ + i] += v;
    }

    template <class U>
    SymmetricMatrix<U> cast() const {
        SymmetricMatrix<U> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j) out.set(i, j, static_cast<U>((*this)(i, j)));
        return out;
    }

    SymmetricMatrix operator-(const SymmetricMatrix& o) const {
        check_same(o);
        SymmetricMatrix out(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
        return out;
    }

    SymmetricMatrix operator+(const SymmetricMatrix& o) const {
        check_same(o);
        SymmetricMatrix out(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
        return out;
    }

    T trace() const {
        T t{};
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (i != j && (*this)(i, j) != T{}) return false;
        return true;
    }

    std::vector<T> multiply(const std::vector<T>& x) const {
        if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
        std::vector<T> y(dim_, T{});
        for (std::size_t i = 0; i < dim_; ++i) {
            T s{};
            for (std::size_t j = 0; j < dim_; ++j) s += data_[i * dim_ + j] * x[j];
            y[i] = s;
        }
        return y;
    }

    /// xᵀ M x
    T quadratic_form(const std::vector<T>& x) const {
        const auto y = multiply(x);
        T s{};
        for (std::size_t i = 0; i < dim_; ++i) s += x[i] * y[i];
        return s;
    }

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    void check_same(const SymmetricMatrix& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    }

    std::size_t dim_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SymmetricMatrix<std::int64_t>;
using RealMatrix = SymmetricMatrix<double>;

/// Frobenius norm.
template <class T>
double frobenius_norm(const SymmetricMatrix<T>& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) s += static_cast<double>(m(i, j)) * static_cast<double>(m(i, j));
    return std::sqrt(s);
}

/// One row per line, entries separated by single spaces.
template <class M>
void write_matrix(std::ostream& out, const M& m) {
    const std::size_t rows = [&] {
        if constexpr (requires { m.dim(); }) return m.dim(); else return m.rows();
    }();
    const std::size_t cols = [&] {
        if constexpr (requires { m.dim(); }) return m.dim(); else return m.cols();
    }();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

template <class M>
std::string matrix_to_string(const M& m) {
    std::ostringstream ss;
    write_matrix(ss, m);
    return ss.str();
}

}  // namespace loopspec
