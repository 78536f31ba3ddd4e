// Exact dense linear algebra over BigInt / Rational / Gauss.
#ifndef QKM_LINALG_HPP
#define QKM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "qkm/gauss.hpp"

namespace qkm {

using IntMat = std::vector<std::vector<long long>>;
using GaussVec = std::vector<Gauss>;
using GaussMat = std::vector<GaussVec>;

// Fraction-free (Bareiss) determinant of a square integer matrix.
inline BigInt detBareiss(const IntMat& m) {
    size_t n = m.size();
    if (n == 0) return BigInt(1);
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = BigInt(m[i][j]);
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].isZero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].isZero()) ++p;
            if (p == n) return BigInt(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    BigInt d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

// Rank of an integer matrix via exact rational elimination.
inline int rankInt(const IntMat& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = Rational(m[i][j]);
    int rank = 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p][c].isZero()) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        Rational piv = a[rank][c];
        for (size_t j = c; j < cols; ++j) a[rank][j] /= piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == static_cast<size_t>(rank) || a[i][c].isZero()) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// In-place reduced row echelon form; returns pivot column per row.
inline std::vector<size_t> rref(GaussMat& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].isZero()) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Gauss inv = a[r][c].inv();
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].isZero()) continue;
            Gauss f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

// Incremental echelon span with membership reduction.
class GaussSpan {
public:
    explicit GaussSpan(size_t cols = 0) : cols_(cols) {}

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    const GaussMat& rows() const { return rows_; }

    // Reduces v against the span; returns the residual.
    GaussVec reduce(GaussVec v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Gauss& c = v[pivots_[r]];
            if (c.isZero()) continue;
            Gauss f = c;
            for (size_t j = pivots_[r]; j < cols_; ++j) v[j] -= f * rows_[r][j];
        }
        return v;
    }

    bool contains(const GaussVec& v) const {
        GaussVec res = reduce(v);
        for (const auto& x : res)
            if (!x.isZero()) return false;
        return true;
    }

    // Inserts v if independent; returns true when the rank grew.
    bool insert(GaussVec v) {
        v = reduce(std::move(v));
        size_t piv = cols_;
        for (size_t j = 0; j < cols_; ++j)
            if (!v[j].isZero()) { piv = j; break; }
        if (piv == cols_) return false;
        Gauss inv = v[piv].inv();
        for (size_t j = piv; j < cols_; ++j) v[j] *= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            Gauss f = rows_[r][piv];
            if (f.isZero()) continue;
            for (size_t j = piv; j < cols_; ++j) rows_[r][j] -= f * v[j];
        }
        size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < piv) ++at;
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, piv);
        return true;
    }

    bool sameSpan(const GaussSpan& other) const {
        return pivots_ == other.pivots_ && rows_ == other.rows_;
    }

private:
    size_t cols_;
    GaussMat rows_;            // reduced row echelon form
    std::vector<size_t> pivots_;
};

// Basis of the right nullspace { x : a x = 0 }.
inline GaussMat nullspace(GaussMat a, size_t cols) {
    std::vector<size_t> piv = rref(a);
    std::vector<bool> isPivot(cols, false);
    for (size_t c : piv) isPivot[c] = true;
    GaussMat basis;
    for (size_t c = 0; c < cols; ++c) {
        if (isPivot[c]) continue;
        GaussVec v(cols, Gauss(0));
        v[c] = Gauss(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qkm

#endif
