#include "qgr/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

LMat LMat::identity(int n, int order) {
    LMat m = zero(n, n, order);
    for (int i = 0; i < n; ++i) m.at(i, i) = ZLaurent(ZSeries::one(order));
    return m;
}

LMat LMat::zero(int rows, int cols, int order) {
    return LMat(rows, cols, ZLaurent(0, std::vector<QRat>(static_cast<std::size_t>(order))));
}

LMat LMat::operator*(const LMat& o) const {
    if (cols_ != o.rows_) throw Error("Internal", "matrix shape mismatch");
    LMat r(rows_, o.cols_, ZLaurent());
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < o.cols_; ++j) {
            ZLaurent acc = at(i, 0) * o.at(0, j);
            for (int k = 1; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    }
    return r;
}

LMat LMat::operator+(const LMat& o) const {
    LMat r(rows_, cols_, ZLaurent());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

LMat LMat::operator-(const LMat& o) const {
    LMat r(rows_, cols_, ZLaurent());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

LMat LMat::mul_scalar(const ZLaurent& s) const {
    LMat r(rows_, cols_, ZLaurent());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
    return r;
}

LMat LMat::shifted(long k) const {
    LMat r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = r.at(i, j).shifted(k);
    return r;
}

LMat LMat::kron(const LMat& a, const LMat& b) {
    LMat r(a.rows() * b.rows(), a.cols() * b.cols(), ZLaurent());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return r;
}

bool LMat::congruent(const LMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).congruent(o.at(i, j))) return false;
    return true;
}

bool LMat::window_zero() const {
    for (const auto& e : a_)
        if (!e.window_zero()) return false;
    return true;
}

std::string LMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? " | " : "");
        os << " ]\n";
    }
    return os.str();
}

namespace {

int working_order(const LMat& m) {
    long w = m.at(0, 0).hi() - std::min(0L, m.at(0, 0).lo());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) w = std::min(w, m.at(i, j).hi());
    return static_cast<int>(std::max(2L, w));
}

}  // namespace

SmithResult series_smith(const LMat& m) {
    if (m.rows() != m.cols()) throw Error("Internal", "smith expects a square matrix");
    const int d = m.rows();
    const int ord = working_order(m);
    LMat a = m;
    LMat u = LMat::identity(d, ord), uinv = LMat::identity(d, ord);
    LMat v = LMat::identity(d, ord), vinv = LMat::identity(d, ord);
    std::vector<long> exps;

    for (int k = 0; k < d; ++k) {
        // pivot of minimal certified valuation in the trailing block
        long best = 0;
        int bi = -1, bj = -1;
        for (int i = k; i < d; ++i) {
            for (int j = k; j < d; ++j) {
                auto val = a.at(i, j).valuation();
                if (!val) continue;
                if (bi < 0 || *val < best) {
                    best = *val;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi < 0)
            throw InsufficientPrecision(
                "no pivot certifiable below the truncation order in series_smith");

        if (bi != k) {
            for (int j = 0; j < d; ++j) std::swap(a.at(bi, j), a.at(k, j));
            for (int i = 0; i < d; ++i) std::swap(u.at(i, bi), u.at(i, k));
            for (int j = 0; j < d; ++j) std::swap(uinv.at(bi, j), uinv.at(k, j));
        }
        if (bj != k) {
            for (int i = 0; i < d; ++i) std::swap(a.at(i, bj), a.at(i, k));
            for (int j = 0; j < d; ++j) std::swap(v.at(bj, j), v.at(k, j));
            for (int i = 0; i < d; ++i) std::swap(vinv.at(i, bj), vinv.at(i, k));
        }

        const ZLaurent pivot = a.at(k, k);
        const ZLaurent pinv = pivot.inverse();

        // clear the column below, tracking U and U^{-1}
        for (int i = k + 1; i < d; ++i) {
            if (a.at(i, k).window_zero()) continue;
            ZLaurent f = a.at(i, k) * pinv;  // valuation >= 0 by pivot minimality
            for (int j = k; j < d; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
            for (int r = 0; r < d; ++r) u.at(r, k) = u.at(r, k) + f * u.at(r, i);
            for (int c = 0; c < d; ++c) uinv.at(i, c) = uinv.at(i, c) - f * uinv.at(k, c);
        }
        // clear the row to the right, tracking V and V^{-1}
        for (int j = k + 1; j < d; ++j) {
            if (a.at(k, j).window_zero()) continue;
            ZLaurent g = a.at(k, j) * pinv;
            for (int i = k; i < d; ++i) a.at(i, j) = a.at(i, j) - a.at(i, k) * g;
            for (int c = 0; c < d; ++c) v.at(k, c) = v.at(k, c) + g * v.at(j, c);
            for (int r = 0; r < d; ++r) vinv.at(r, j) = vinv.at(r, j) - vinv.at(r, k) * g;
        }
        // pivot = z^best * unit; absorb the unit into U
        ZLaurent unit = pivot.shifted(-best);
        ZLaurent unit_inv = unit.inverse();
        for (int j = k; j < d; ++j) a.at(k, j) = unit_inv * a.at(k, j);
        for (int r = 0; r < d; ++r) u.at(r, k) = u.at(r, k) * unit;
        for (int c = 0; c < d; ++c) uinv.at(k, c) = unit_inv * uinv.at(k, c);
        exps.push_back(best);
    }
    // DVR pivoting with a global minimum makes the exponents ascending already
    if (!std::is_sorted(exps.begin(), exps.end()))
        throw Error("Internal", "smith exponents not ascending");
    return SmithResult{std::move(u), std::move(uinv), std::move(v), std::move(vinv),
                       std::move(exps)};
}

LatticeBasis LatticeBasis::standard(int dim, int order) {
    return LatticeBasis(dim, LMat::identity(dim, order));
}

CommonBasis common_basis(const LatticeBasis& l1, const LatticeBasis& l2) {
    if (l1.dim() != l2.dim()) throw Error("Internal", "lattice dimension mismatch");
    // X = B1^{-1} B2 = Vi * z^{-a} * Ui * B2 from the Smith form of B1
    SmithResult s1 = series_smith(l1.basis());
    LMat y = s1.uinv * l2.basis();
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j)
            y.at(i, j) = y.at(i, j).shifted(-s1.exponents[static_cast<std::size_t>(i)]);
    LMat x = s1.vinv * y;
    SmithResult sx = series_smith(x);
    // common basis columns: F = B1 * Ux
    return CommonBasis{l1.basis() * sx.u, sx.exponents};
}

std::vector<long> relative_divisors(const LatticeBasis& l1, const LatticeBasis& l2) {
    return common_basis(l1, l2).divisors;
}

LatticeBasis lattice_meet(const LatticeBasis& l1, const LatticeBasis& l2) {
    CommonBasis cb = common_basis(l1, l2);
    LMat b = cb.f;
    for (int j = 0; j < b.cols(); ++j) {
        long e = std::max(0L, cb.divisors[static_cast<std::size_t>(j)]);
        if (e != 0)
            for (int i = 0; i < b.rows(); ++i) b.at(i, j) = b.at(i, j).shifted(e);
    }
    return LatticeBasis(l1.dim(), std::move(b));
}

LatticeBasis lattice_join(const LatticeBasis& l1, const LatticeBasis& l2) {
    CommonBasis cb = common_basis(l1, l2);
    LMat b = cb.f;
    for (int j = 0; j < b.cols(); ++j) {
        long e = std::min(0L, cb.divisors[static_cast<std::size_t>(j)]);
        if (e != 0)
            for (int i = 0; i < b.rows(); ++i) b.at(i, j) = b.at(i, j).shifted(e);
    }
    return LatticeBasis(l1.dim(), std::move(b));
}

LMat lmat_inverse(const LMat& m) {
    SmithResult s = series_smith(m);
    LMat y = s.uinv;
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j)
            y.at(i, j) = y.at(i, j).shifted(-s.exponents[static_cast<std::size_t>(i)]);
    return s.vinv * y;
}

bool lattice_contains(const LatticeBasis& l, const std::vector<ZLaurent>& x) {
    // solve B y = x, check y integral
    SmithResult s = series_smith(l.basis());
    const int d = l.dim();
    std::vector<ZLaurent> y(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        ZLaurent acc = s.uinv.at(i, 0) * x[0];
        for (int k = 1; k < d; ++k) acc = acc + s.uinv.at(i, k) * x[static_cast<std::size_t>(k)];
        y[static_cast<std::size_t>(i)] = acc.shifted(-s.exponents[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < d; ++i) {
        ZLaurent acc = s.vinv.at(i, 0) * y[0];
        for (int k = 1; k < d; ++k) acc = acc + s.vinv.at(i, k) * y[static_cast<std::size_t>(k)];
        auto val = acc.valuation();
        if (val && *val < 0) return false;
        if (!val && acc.lo() < 0) {
            // window-zero with a window dipping below 0: treat as integral
            continue;
        }
    }
    return true;
}

bool lattice_subset(const LatticeBasis& inner, const LatticeBasis& outer) {
    std::vector<long> c = relative_divisors(outer, inner);
    return std::all_of(c.begin(), c.end(), [](long e) { return e >= 0; });
}

}  // namespace qgr
