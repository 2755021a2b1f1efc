#pragma once

#include "sepdef/domains.hpp"

namespace sepdef {

/// Dense matrix over a coefficient field, row-major.
template <class D>
struct Mat {
    static_assert(D::is_field, "linear algebra requires a coefficient field");
    using Scalar = typename D::Scalar;
    D dom;
    size_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(D d, size_t r, size_t c) : dom(d), rows(r), cols(c), a(r * c, d.zero()) {}

    static Mat identity(D d, size_t n) {
        Mat m(d, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = d.one();
        return m;
    }

    Scalar& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Scalar& at(size_t r, size_t c) const { return a[r * cols + c]; }

    bool operator==(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!dom.eq(a[i], o.a[i])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }
};

template <class D>
Mat<D> mat_mul(const Mat<D>& A, const Mat<D>& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat<D> C(A.dom, A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            const auto& s = A.at(i, k);
            if (A.dom.is_zero(s)) continue;
            for (size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = A.dom.add(C.at(i, j), A.dom.mul(s, B.at(k, j)));
        }
    return C;
}

template <class D>
std::vector<typename D::Scalar> mat_vec(const Mat<D>& A, const std::vector<typename D::Scalar>& v) {
    if (A.cols != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<typename D::Scalar> r(A.rows, A.dom.zero());
    for (size_t j = 0; j < A.cols; ++j) {
        if (A.dom.is_zero(v[j])) continue;
        for (size_t i = 0; i < A.rows; ++i)
            r[i] = A.dom.add(r[i], A.dom.mul(A.at(i, j), v[j]));
    }
    return r;
}

template <class D>
Mat<D> mat_add(const Mat<D>& A, const Mat<D>& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("matrix shape mismatch");
    Mat<D> C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.dom.add(C.a[i], B.a[i]);
    return C;
}

template <class D>
Mat<D> mat_sub(const Mat<D>& A, const Mat<D>& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("matrix shape mismatch");
    Mat<D> C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.dom.sub(C.a[i], B.a[i]);
    return C;
}

/// In-place reduced row echelon form with leftmost-nonzero pivoting (first
/// nonzero row in the leftmost unresolved column).  Returns pivot columns.
template <class D>
std::vector<size_t> rref(Mat<D>& M) {
    const D dom = M.dom;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
        size_t p = r;
        while (p < M.rows && dom.is_zero(M.at(p, c))) ++p;
        if (p == M.rows) continue;
        if (p != r)
            for (size_t j = c; j < M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
        auto inv = dom.inv(M.at(r, c));
        for (size_t j = c; j < M.cols; ++j) M.at(r, j) = dom.mul(M.at(r, j), inv);
        for (size_t i = 0; i < M.rows; ++i) {
            if (i == r || dom.is_zero(M.at(i, c))) continue;
            auto f = M.at(i, c);
            for (size_t j = c; j < M.cols; ++j)
                M.at(i, j) = dom.sub(M.at(i, j), dom.mul(f, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class D>
size_t rank(Mat<D> M) {
    return rref(M).size();
}

/// Canonical kernel basis from the rref: one vector per free column, with a 1
/// in the free coordinate, ordered by free column index.
template <class D>
std::vector<std::vector<typename D::Scalar>> kernel(Mat<D> M) {
    const D dom = M.dom;
    std::vector<size_t> piv = rref(M);
    std::vector<int> pivot_row(M.cols, -1);
    for (size_t k = 0; k < piv.size(); ++k) pivot_row[piv[k]] = (int)k;
    std::vector<std::vector<typename D::Scalar>> basis;
    for (size_t c = 0; c < M.cols; ++c) {
        if (pivot_row[c] >= 0) continue;
        std::vector<typename D::Scalar> v(M.cols, dom.zero());
        v[c] = dom.one();
        for (size_t j = 0; j < M.cols; ++j)
            if (pivot_row[j] >= 0) v[j] = dom.neg(M.at((size_t)pivot_row[j], c));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b; returns false when inconsistent.
template <class D>
bool solve(const Mat<D>& A, const std::vector<typename D::Scalar>& b,
           std::vector<typename D::Scalar>& x) {
    if (A.rows != b.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    Mat<D> M(A.dom, A.rows, A.cols + 1);
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols) = b[i];
    }
    std::vector<size_t> piv = rref(M);
    if (!piv.empty() && piv.back() == A.cols) return false;  // pivot in the RHS column
    x.assign(A.cols, A.dom.zero());
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = M.at(k, A.cols);
    return true;
}

template <class D>
bool invert(const Mat<D>& A, Mat<D>& out) {
    if (A.rows != A.cols) throw std::invalid_argument("inverse of a non-square matrix");
    size_t n = A.rows;
    Mat<D> M(A.dom, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, n + i) = A.dom.one();
    }
    std::vector<size_t> piv = rref(M);
    if (piv.size() < n || piv[n - 1] != n - 1) return false;
    out = Mat<D>(A.dom, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = M.at(i, n + j);
    return true;
}

/// Row-space helper for repeated membership tests: rows kept in rref.
template <class D>
struct RowSpace {
    D dom;
    size_t cols = 0;
    std::vector<std::vector<typename D::Scalar>> rows;  // rref, pivot cols ascending
    std::vector<size_t> pivots;

    RowSpace(D d, size_t c) : dom(d), cols(c) {}

    size_t dim() const { return rows.size(); }

    /// Reduce v against the rows in place; afterwards v = 0 iff v was in the span.
    void reduce(std::vector<typename D::Scalar>& v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            const auto& s = v[pivots[k]];
            if (dom.is_zero(s)) continue;
            auto f = s;
            const auto& row = rows[k];
            for (size_t j = pivots[k]; j < cols; ++j)
                v[j] = dom.sub(v[j], dom.mul(f, row[j]));
        }
    }

    bool contains(std::vector<typename D::Scalar> v) const {
        reduce(v);
        for (const auto& s : v)
            if (!dom.is_zero(s)) return false;
        return true;
    }

    /// Insert v; returns true if it enlarged the space.
    bool insert(std::vector<typename D::Scalar> v) {
        reduce(v);
        size_t p = 0;
        while (p < cols && dom.is_zero(v[p])) ++p;
        if (p == cols) return false;
        auto inv = dom.inv(v[p]);
        for (size_t j = p; j < cols; ++j) v[j] = dom.mul(v[j], inv);
        // eliminate the new pivot from existing rows, keep pivot order
        for (size_t k = 0; k < rows.size(); ++k) {
            auto& row = rows[k];
            if (dom.is_zero(row[p])) continue;
            auto f = row[p];
            for (size_t j = p; j < cols; ++j)
                row[j] = dom.sub(row[j], dom.mul(f, v[j]));
        }
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        pivots.insert(pivots.begin() + (long)pos, p);
        rows.insert(rows.begin() + (long)pos, std::move(v));
        return true;
    }
};

}  // namespace sepdef
