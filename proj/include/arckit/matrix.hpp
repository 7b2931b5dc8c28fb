#pragma once
#include <vector>

#include "arckit/errors.hpp"

namespace arckit {

// Minimal dense matrix over any exact coefficient type with +, -, * and a
// caller-supplied zero exemplar. Sizes here are tiny (Jacobian blocks), so
// determinants and adjugates use cofactor expansion.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, const T& fill) : r_(rows), c_(cols), d_((size_t)(rows * cols), fill) {
        if (rows < 0 || cols < 0) throw parameter_error("negative matrix dimension");
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& at(int i, int j) { return d_[(size_t)(i * c_ + j)]; }
    const T& at(int i, int j) const { return d_[(size_t)(i * c_ + j)]; }

    Mat minor_matrix(int drop_row, int drop_col) const {
        Mat m(r_ - 1, c_ - 1, d_[0]);
        int mi = 0;
        for (int i = 0; i < r_; ++i) {
            if (i == drop_row) continue;
            int mj = 0;
            for (int j = 0; j < c_; ++j) {
                if (j == drop_col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> d_;
};

template <class T>
T mat_det(const Mat<T>& m, const T& zero) {
    if (m.rows() != m.cols()) throw parameter_error("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) throw parameter_error("determinant of empty matrix");
    if (n == 1) return m.at(0, 0);
    T acc = zero;
    for (int j = 0; j < n; ++j) {
        T term = m.at(0, j) * mat_det(m.minor_matrix(0, j), zero);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Cofactor transpose: adj * m = m * adj = det(m) * I.
template <class T>
Mat<T> mat_adjugate(const Mat<T>& m, const T& zero, const T& one) {
    if (m.rows() != m.cols()) throw parameter_error("adjugate of non-square matrix");
    int n = m.rows();
    Mat<T> adj(n, n, zero);
    if (n == 1) {
        adj.at(0, 0) = one;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T cof = mat_det(m.minor_matrix(i, j), zero);
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : (zero - cof);
        }
    return adj;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b, const T& zero) {
    if (a.cols() != b.rows()) throw parameter_error("matrix product shape mismatch");
    Mat<T> r(a.rows(), b.cols(), zero);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            T acc = zero;
            for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

template <class T>
std::vector<T> mat_apply(const Mat<T>& a, const std::vector<T>& v, const T& zero) {
    if (a.cols() != (int)v.size()) throw parameter_error("matrix apply shape mismatch");
    std::vector<T> r((size_t)a.rows(), zero);
    for (int i = 0; i < a.rows(); ++i) {
        T acc = zero;
        for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * v[(size_t)k];
        r[(size_t)i] = acc;
    }
    return r;
}

} // namespace arckit
