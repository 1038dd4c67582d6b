#pragma once

#include <json.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twistlab/numeric.hpp"

namespace twistlab {

// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long v : row) a_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool operator<(const IntMatrix& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return a_ < o.a_;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const { return combined(o, +1); }
    IntMatrix operator-(const IntMatrix& o) const { return combined(o, -1); }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<Int> r(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += q * row j
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += q * (*this)(j, k);
    }
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += q * (*this)(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }

    std::vector<Int> row(std::size_t i) const {
        return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_row(std::size_t i, const std::vector<Int>& v) {
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

private:
    IntMatrix combined(const IntMatrix& o, int sign) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + sign * o.a_[k];
        return r;
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Fraction-free Gaussian elimination (Bareiss). Every division below is exact,
// so the whole computation stays in Z; intermediate entries are themselves
// minors of the input, which bounds their growth far better than naive
// cross-multiplication would.
inline Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

// Rank over Q by fraction-free elimination with full pivot search.
inline std::size_t rank_over_q(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) m.swap_rows(r, pr);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = divexact(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

// JSON shape: array of arrays, row-major. Entries are emitted as JSON numbers
// when they fit in 64 bits and as decimal strings otherwise; both forms are
// accepted on input.
inline nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
    return nlohmann::json(v.get_str());
}

inline Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

inline nlohmann::json to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::invalid_argument("matrix literal must be a non-empty array of arrays");
    IntMatrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) throw std::invalid_argument("ragged matrix literal");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

inline nlohmann::json vector_to_json(const std::vector<Int>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

inline std::vector<Int> vector_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected array");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(int_from_json(e));
    return v;
}

}  // namespace twistlab
