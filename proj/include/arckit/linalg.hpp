#pragma once
#include <optional>
#include <vector>

#include "arckit/field.hpp"

namespace arckit {

// Dense exact linear algebra over a Field. Row-major matrices as nested
// vectors; sizes are small (oracle systems, Jacobian ranks).
using FVec = std::vector<FieldElem>;
using FMat = std::vector<FVec>;

inline int linalg_rank(const Field& F, FMat m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!fe_is_zero(F, m[(size_t)i][(size_t)col])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[(size_t)rank], m[(size_t)piv]);
        FieldElem inv = fe_inv(F, m[(size_t)rank][(size_t)col]);
        for (int j = col; j < cols; ++j)
            m[(size_t)rank][(size_t)j] = fe_mul(F, m[(size_t)rank][(size_t)j], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || fe_is_zero(F, m[(size_t)i][(size_t)col])) continue;
            FieldElem f = m[(size_t)i][(size_t)col];
            for (int j = col; j < cols; ++j)
                m[(size_t)i][(size_t)j] =
                    fe_sub(F, m[(size_t)i][(size_t)j], fe_mul(F, f, m[(size_t)rank][(size_t)j]));
        }
        ++rank;
    }
    return rank;
}

struct LinSolveResult {
    bool solvable = false;
    FVec particular;            // one solution when solvable
    std::vector<FVec> kernel;   // basis of the homogeneous solution space
};

// Solve A x = b by Gauss-Jordan elimination; also returns a kernel basis.
inline LinSolveResult linalg_solve(const Field& F, FMat a, FVec b) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    if ((int)b.size() != rows) throw parameter_error("linalg_solve shape mismatch");
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!fe_is_zero(F, a[(size_t)i][(size_t)col])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[(size_t)rank], a[(size_t)piv]);
        std::swap(b[(size_t)rank], b[(size_t)piv]);
        FieldElem inv = fe_inv(F, a[(size_t)rank][(size_t)col]);
        for (int j = col; j < cols; ++j)
            a[(size_t)rank][(size_t)j] = fe_mul(F, a[(size_t)rank][(size_t)j], inv);
        b[(size_t)rank] = fe_mul(F, b[(size_t)rank], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || fe_is_zero(F, a[(size_t)i][(size_t)col])) continue;
            FieldElem f = a[(size_t)i][(size_t)col];
            for (int j = col; j < cols; ++j)
                a[(size_t)i][(size_t)j] =
                    fe_sub(F, a[(size_t)i][(size_t)j], fe_mul(F, f, a[(size_t)rank][(size_t)j]));
            b[(size_t)i] = fe_sub(F, b[(size_t)i], fe_mul(F, f, b[(size_t)rank]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    LinSolveResult out;
    for (int i = rank; i < rows; ++i)
        if (!fe_is_zero(F, b[(size_t)i])) return out; // inconsistent
    out.solvable = true;
    out.particular.assign((size_t)cols, fe_zero(F));
    for (int r = 0; r < rank; ++r) out.particular[(size_t)pivot_col[(size_t)r]] = b[(size_t)r];
    std::vector<bool> is_pivot((size_t)cols, false);
    for (int c : pivot_col) is_pivot[(size_t)c] = true;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[(size_t)free_col]) continue;
        FVec v((size_t)cols, fe_zero(F));
        v[(size_t)free_col] = fe_one(F);
        for (int r = 0; r < rank; ++r)
            v[(size_t)pivot_col[(size_t)r]] = fe_neg(F, a[(size_t)r][(size_t)free_col]);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

} // namespace arckit
