#pragma once

#include <vector>

#include "qgr/zseries.hpp"

namespace qgr {

// Dense matrix over ZLaurent.
class LMat {
public:
    LMat() : rows_(0), cols_(0) {}
    LMat(int rows, int cols, const ZLaurent& fill)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), fill) {}

    static LMat identity(int n, int order);
    static LMat zero(int rows, int cols, int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    ZLaurent& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const ZLaurent& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }

    LMat operator*(const LMat& o) const;
    LMat operator+(const LMat& o) const;
    LMat operator-(const LMat& o) const;
    LMat mul_scalar(const ZLaurent& s) const;
    LMat shifted(long k) const;  // * z^k entrywise

    // Kronecker product (tensor of linear maps in the standard bases)
    static LMat kron(const LMat& a, const LMat& b);

    bool congruent(const LMat& o) const;  // entrywise window-overlap equality
    bool window_zero() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<ZLaurent> a_;
};

// Smith decomposition over the DVR k(q)[[z]]:
//   M = U * diag(z^a) * V, with U, V unimodular over the DVR.
// Inverses are tracked during elimination so callers get them exactly.
struct SmithResult {
    LMat u, uinv, v, vinv;
    std::vector<long> exponents;  // ascending
};

// Pivot choice: entry of minimal certified valuation, ties by smallest
// (row, column).  Throws InsufficientPrecision when no pivot is certifiable.
SmithResult series_smith(const LMat& m);

// Free O-lattice of full rank in K^dim, spanned by the columns of `basis`.
class LatticeBasis {
public:
    LatticeBasis() = default;
    LatticeBasis(int dim, LMat basis) : dim_(dim), basis_(std::move(basis)) {}

    static LatticeBasis standard(int dim, int order);

    int dim() const { return dim_; }
    const LMat& basis() const { return basis_; }

    LatticeBasis scaled(long k) const { return LatticeBasis(dim_, basis_.shifted(k)); }

private:
    int dim_ = 0;
    LMat basis_;
};

// Elementary divisors c_1 <= ... <= c_d of L2 relative to L1: there is a
// common basis f_i with L1 = (+) O f_i and L2 = (+) z^{c_i} O f_i.
std::vector<long> relative_divisors(const LatticeBasis& l1, const LatticeBasis& l2);

// Common basis F together with the divisors: L1 = F * O^d, L2 = F diag(z^c) O^d.
struct CommonBasis {
    LMat f;
    std::vector<long> divisors;
};
CommonBasis common_basis(const LatticeBasis& l1, const LatticeBasis& l2);

LatticeBasis lattice_meet(const LatticeBasis& l1, const LatticeBasis& l2);
LatticeBasis lattice_join(const LatticeBasis& l1, const LatticeBasis& l2);

// x in L, decided by solving the basis system and checking integrality
bool lattice_contains(const LatticeBasis& l, const std::vector<ZLaurent>& x);
bool lattice_subset(const LatticeBasis& inner, const LatticeBasis& outer);

// inverse of a K-invertible matrix via its Smith decomposition
LMat lmat_inverse(const LMat& m);

}  // namespace qgr
