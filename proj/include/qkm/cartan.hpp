// Generalized Cartan matrices: validation, principal-block permutation,
// the nonsingular extended matrix E, and the realization with its
// quaternion-valued pairing table.
#ifndef QKM_CARTAN_HPP
#define QKM_CARTAN_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkm/linalg.hpp"
#include "qkm/quat.hpp"

namespace qkm {

struct Violation {
    enum Kind { DiagonalNotTwo, PositiveOffDiagonal, AsymmetricZero };
    Kind kind;
    int i, j;  // 1-based cell

    std::string toString() const {
        std::string name = kind == DiagonalNotTwo      ? "DiagonalNotTwo"
                           : kind == PositiveOffDiagonal ? "PositiveOffDiagonal"
                                                         : "AsymmetricZero";
        return name + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

struct CartanMatrix {
    int n = 0;
    IntMat a;
    long long at(int i, int j) const { return a[i - 1][j - 1]; }  // 1-based
};

struct ValidationResult {
    bool ok = false;
    std::vector<Violation> violations;
    CartanMatrix matrix;
};

inline ValidationResult validateGcm(const IntMat& a) {
    ValidationResult res;
    int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("validateGcm: matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (a[i][i] != 2)
            res.violations.push_back({Violation::DiagonalNotTwo, i + 1, i + 1});
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0)
                res.violations.push_back({Violation::PositiveOffDiagonal, i + 1, j + 1});
            if (a[i][j] != 0 && a[j][i] == 0)
                res.violations.push_back({Violation::AsymmetricZero, j + 1, i + 1});
        }
    }
    res.ok = res.violations.empty();
    res.matrix = CartanMatrix{n, a};
    return res;
}

struct SingularBlock : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlockPermutation {
    int n = 0;
    int r = 0;                 // rank of the matrix
    std::vector<int> rowPerm;  // position p holds original row rowPerm[p] (0-based)
    std::vector<int> colPerm;
    bool principal = true;     // rowPerm == colPerm
};

namespace detail {

inline IntMat submatrix(const IntMat& a, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
    IntMat s(rows.size(), std::vector<long long>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s[i][j] = a[rows[i]][cols[j]];
    return s;
}

// Enumerates k-subsets of {0..n-1} in lexicographic order.
inline bool nextSubset(std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> firstSubset(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    return s;
}

inline std::vector<int> permFromSubset(const std::vector<int>& s, int n) {
    std::vector<int> perm = s;
    std::vector<bool> used(n, false);
    for (int x : s) used[x] = true;
    for (int x = 0; x < n; ++x)
        if (!used[x]) perm.push_back(x);
    return perm;
}

}  // namespace detail

// Permutes rows/columns so a nonsingular r x r block sits top-left, r = rank A.
// Prefers the lexicographically smallest principal subset; falls back to a
// row/column subset pair when no principal block of full rank exists.
inline BlockPermutation principalBlockPermute(const IntMat& a) {
    BlockPermutation bp;
    bp.n = static_cast<int>(a.size());
    bp.r = rankInt(a);
    if (bp.r == 0) {
        bp.rowPerm = detail::permFromSubset({}, bp.n);
        bp.colPerm = bp.rowPerm;
        return bp;
    }
    std::vector<int> s = detail::firstSubset(bp.r);
    do {
        if (!detBareiss(detail::submatrix(a, s, s)).isZero()) {
            bp.rowPerm = detail::permFromSubset(s, bp.n);
            bp.colPerm = bp.rowPerm;
            return bp;
        }
    } while (detail::nextSubset(s, bp.n));
    // No principal block of size r: pick the lexicographically smallest
    // (row subset, column subset) pair with a nonsingular block.
    std::vector<int> rows = detail::firstSubset(bp.r);
    do {
        std::vector<int> cols = detail::firstSubset(bp.r);
        do {
            if (!detBareiss(detail::submatrix(a, rows, cols)).isZero()) {
                bp.rowPerm = detail::permFromSubset(rows, bp.n);
                bp.colPerm = detail::permFromSubset(cols, bp.n);
                bp.principal = false;
                return bp;
            }
        } while (detail::nextSubset(cols, bp.n));
    } while (detail::nextSubset(rows, bp.n));
    throw std::logic_error("principalBlockPermute: no block of rank r found");
}

inline IntMat applyPermutation(const IntMat& a, const BlockPermutation& bp) {
    IntMat p(bp.n, std::vector<long long>(bp.n));
    for (int i = 0; i < bp.n; ++i)
        for (int j = 0; j < bp.n; ++j) p[i][j] = a[bp.rowPerm[i]][bp.colPerm[j]];
    return p;
}

// E = (A(r) B 0; C D I; 0 I 0), size (2n-r) x (2n-r); det E = +/- det A(r).
inline IntMat extend(const IntMat& aPermuted, int r) {
    int n = static_cast<int>(aPermuted.size());
    if (r > 0) {
        std::vector<int> lead(r);
        for (int i = 0; i < r; ++i) lead[i] = i;
        if (detBareiss(detail::submatrix(aPermuted, lead, lead)).isZero())
            throw SingularBlock("extend: leading r x r block is singular");
    }
    int dim = 2 * n - r;
    IntMat e(dim, std::vector<long long>(dim, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[i][j] = aPermuted[i][j];
    for (int k = 0; k < n - r; ++k) {
        e[r + k][n + k] = 1;
        e[n + k][r + k] = 1;
    }
    return e;
}

// Realization of a GCM: H = C^(2n-r) with the rows of E as basis, coroots the
// first n rows, root functionals the coordinate projections (post-permutation).
struct Realization {
    int n = 0;
    int r = 0;
    int dim = 0;               // 2n - r
    std::vector<int> perm;     // row/col permutation used (0-based)
    std::vector<int> pos;      // pos[original index] = permuted position
    IntMat a;                  // original matrix
    IntMat b0;                 // J-pairing matrix, defaults to a
    IntMat e;                  // extended matrix, permuted order

    // <alpha_l, h_k> for h_k the k-th E-row basis vector (0-based k, 1-based l).
    long long pairAH(int l, int k) const { return e[k][pos[l - 1]]; }
    // Coroot alpha_i^v is the basis row pos[i-1].
    int corootRow(int i) const { return pos[i - 1]; }
};

inline Realization realize(const CartanMatrix& gcm, std::optional<IntMat> b0 = std::nullopt) {
    Realization re;
    re.n = gcm.n;
    re.a = gcm.a;
    re.b0 = b0 ? *b0 : gcm.a;
    if (b0) {
        if (static_cast<int>(b0->size()) != gcm.n)
            throw RankMismatch("realize: B0 has wrong size");
        if (rankInt(*b0) != rankInt(gcm.a))
            throw RankMismatch("realize: rank B0 != rank A");
    }
    BlockPermutation bp = principalBlockPermute(gcm.a);
    re.r = bp.r;
    re.dim = 2 * gcm.n - bp.r;
    re.perm = bp.rowPerm;
    re.pos.assign(gcm.n, 0);
    for (int p = 0; p < gcm.n; ++p) re.pos[bp.rowPerm[p]] = p;
    re.e = extend(applyPermutation(gcm.a, bp), bp.r);
    return re;
}

// The four marker cases of the dual pairing <m1 alpha_i, m2 alpha_j^v>:
// (1,1) -> A_ji, (J,1) and (1,J) -> J (B0)_ji, (J,J) -> -A_ji.
inline Quat pairValue(const Realization& re, int rootIdx, Marker rootMarker, int corootIdx,
                      Marker corootMarker) {
    long long aji = re.a[corootIdx - 1][rootIdx - 1];
    long long bji = re.b0[corootIdx - 1][rootIdx - 1];
    bool jr = rootMarker == Marker::J, jc = corootMarker == Marker::J;
    if (!jr && !jc) return Quat(Gauss(Rational(aji)));
    if (jr && jc) return Quat(Gauss(Rational(-aji)));
    return Quat(Gauss(0), Gauss(Rational(bji)));
}

}  // namespace qkm

#endif
