#include "qgr/lattice_jantzen.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<QRat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] += b.c_[k];
    }
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + b.mul_scalar(QRat(Int(-1))); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<QRat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::mul_scalar(const QRat& k) const {
    if (k.is_zero()) return UPoly();
    std::vector<QRat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * k;
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(c_.back().inverse());
}

UPoly UPoly::div_exact(const UPoly& d) const {
    if (d.is_zero()) throw Error("Internal", "UPoly division by zero");
    UPoly rem = *this;
    if (rem.is_zero()) return rem;
    std::vector<QRat> q(static_cast<std::size_t>(std::max(0, rem.degree() - d.degree() + 1)));
    QRat dl = d.c_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        QRat coef = rem.c_.back() / dl;
        q[static_cast<std::size_t>(k)] = coef;
        std::vector<QRat> sub(static_cast<std::size_t>(k));
        sub.insert(sub.end(), d.c_.begin(), d.c_.end());
        rem = rem - UPoly(std::move(sub)).mul_scalar(coef);
    }
    if (!rem.is_zero()) throw Error("Internal", "non-exact UPoly division");
    return UPoly(std::move(q));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        // remainder of a by b
        UPoly r = a;
        QRat bl = b.c_.back();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            QRat coef = r.c_.back() / bl;
            std::vector<QRat> sub(static_cast<std::size_t>(k));
            sub.insert(sub.end(), b.c_.begin(), b.c_.end());
            r = r - UPoly(std::move(sub)).mul_scalar(coef);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ZLaurent UPoly::eval(const ZLaurent& u) const {
    std::vector<QRat> zero(static_cast<std::size_t>(std::max(2L, u.hi())));
    ZLaurent acc(0, std::move(zero));
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc = acc * u;
        if (!c_[k].is_zero()) {
            ZLaurent c(0, std::vector<QRat>{c_[k]});
            // widen the constant to the window of acc
            std::vector<QRat> cs(static_cast<std::size_t>(std::max(acc.hi(), 2L)));
            cs[0] = c_[k];
            acc = acc + ZLaurent(0, std::move(cs));
        }
    }
    return acc;
}

QURat::QURat(UPoly n, UPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw Error("Internal", "QURat zero denominator");
    if (num_.is_zero()) {
        den_ = UPoly(QRat::one());
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    QRat lead = den_.coeffs().back();
    if (!(lead == QRat::one())) {
        num_ = num_.mul_scalar(lead.inverse());
        den_ = den_.mul_scalar(lead.inverse());
    }
}

QURat operator+(const QURat& a, const QURat& b) {
    return QURat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QURat operator-(const QURat& a, const QURat& b) {
    return QURat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
QURat operator*(const QURat& a, const QURat& b) {
    return QURat(a.num_ * b.num_, a.den_ * b.den_);
}
QURat operator/(const QURat& a, const QURat& b) {
    if (b.is_zero()) throw Error("Internal", "QURat division by zero");
    return QURat(a.num_ * b.den_, a.den_ * b.num_);
}

ZLaurent QURat::eval(const ZLaurent& u) const {
    ZLaurent n = num_.eval(u);
    if (num_.is_zero()) return n;
    ZLaurent d = den_.eval(u);
    return n * d.inverse();
}

LatticeEngine::LatticeEngine(int max_d)
    : max_d_(max_d), alpha_(AlphaTable::a1()), a1_(CartanDatum::from_type("A1")) {}

int LatticeEngine::default_order(std::size_t d) const {
    // 2 * C(d,2) * alpha_max + 8 with alpha_max = 1 for the built-in table
    return static_cast<int>(d * (d - 1)) + 8;
}

QURatMat LatticeEngine::t_matrix(int a, int b) {
    if (((a % 2) + 2) % 2 != 0 || ((b % 2) + 2) % 2 != 0)
        throw ValidationFailure("t_matrix expects even spectral shifts");
    auto qpow = [](long k) { return QRat::var_pow(k); };
    const UPoly u = UPoly::variable();
    const UPoly den = u - UPoly(qpow(b - a - 2));  // u - q^{b-a-2}
    QURat one = QURat::of(QRat(Int(1)));
    QURatMat t(4, std::vector<QURat>(4));
    t[0][0] = one;
    t[3][3] = one;
    // u (1 - q^{-2}) / (u - q^{b-a-2})
    t[1][1] = QURat(u.mul_scalar(QRat::one() - qpow(-2)), den);
    // q^{-1} (u - q^{b-a}) / (u - q^{b-a-2})
    QURat mid = QURat((u - UPoly(qpow(b - a))).mul_scalar(qpow(-1)), den);
    t[1][2] = mid;
    t[2][1] = mid;
    // q^{b-a} (1 - q^{-2}) / (u - q^{b-a-2})
    t[2][2] = QURat(UPoly(qpow(b - a) * (QRat::one() - qpow(-2))), den);
    return t;
}

LMat LatticeEngine::renorm_r(long j, long j2, int order) const {
    if (j == j2) throw ValidationFailure("renorm_r needs distinct indices");
    const int a = static_cast<int>(j - 1), b = static_cast<int>(j2 - 1);
    const int pole = (b - a == 2) ? 1 : 0;
    QURatMat t = t_matrix(a, b);
    ZLaurent u(ZSeries::exp_az(j - j2, order));
    ZLaurent factor(ZSeries::one(order));
    if (pole == 1) {
        // u - 1, a valuation-1 series
        ZSeries em = ZSeries::exp_az(j - j2, order);
        em.set_coeff(0, QRat::zero());
        factor = ZLaurent(em);
    }
    LMat r(4, 4, ZLaurent::zero_window(0, order));
    long minval = order;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) {
                r.at(i, k) = ZLaurent::zero_window(0, order);
                continue;
            }
            ZLaurent e = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].eval(u);
            if (pole == 1) e = e * factor;
            auto val = e.valuation();
            if (val) {
                if (*val < 0)
                    throw InsufficientPrecision("renormalized R-matrix entry has a pole");
                minval = std::min(minval, *val);
            }
            r.at(i, k) = e.clipped(order);
        }
    if (minval != 0)
        throw InsufficientPrecision("renormalization certificate failed: no valuation-0 entry");
    if (unit_twist_) {
        ZLaurent tw{*unit_twist_};
        r = r.mul_scalar(tw);
    }
    return r;
}

namespace {

// BFS over adjacent swaps; returns the list of (position, pair) moves
std::optional<std::vector<std::pair<std::size_t, std::pair<long, long>>>> find_path(
    const std::vector<long>& from, const std::vector<long>& to, const AlphaTable& alpha,
    bool upward) {
    if (from == to) return std::vector<std::pair<std::size_t, std::pair<long, long>>>{};
    std::map<std::vector<long>, std::pair<std::vector<long>, std::size_t>> parent;
    std::deque<std::vector<long>> queue{from};
    parent[from] = {from, 0};
    while (!queue.empty()) {
        std::vector<long> cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
            long x = cur[k], y = cur[k + 1];
            if (x == y) continue;
            int al = alpha.alpha(x, y);
            bool ok = upward ? (al == 0 || x > y) : (al == 0 || x < y);
            if (!ok) continue;
            std::vector<long> nxt = cur;
            std::swap(nxt[k], nxt[k + 1]);
            if (parent.count(nxt)) continue;
            parent[nxt] = {cur, k};
            if (nxt == to) {
                std::vector<std::pair<std::size_t, std::pair<long, long>>> moves;
                std::vector<long> s = to;
                while (s != from) {
                    auto [prev, pos] = parent[s];
                    moves.emplace_back(pos, std::pair(prev[pos], prev[pos + 1]));
                    s = prev;
                }
                std::reverse(moves.begin(), moves.end());
                return moves;
            }
            queue.push_back(nxt);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<QRat>> qrat_columns_at_zero(const LMat& g,
                                                    const std::vector<int>& cols) {
    std::vector<std::vector<QRat>> out;
    for (int j : cols) {
        std::vector<QRat> col(static_cast<std::size_t>(g.rows()));
        for (int i = 0; i < g.rows(); ++i) col[static_cast<std::size_t>(i)] = g.at(i, j).coeff(0);
        out.push_back(std::move(col));
    }
    return out;
}

// rank of a list of QRat row vectors by Gaussian elimination
int qrat_rank(std::vector<std::vector<QRat>> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        QRat inv = rows[static_cast<std::size_t>(rank)][c].inverse();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c].is_zero()) continue;
            QRat f = rows[r][c] * inv;
            for (std::size_t cc = c; cc < cols; ++cc)
                rows[r][cc] -= f * rows[static_cast<std::size_t>(rank)][cc];
        }
        ++rank;
    }
    return rank;
}

bool qrat_span_contains(const std::vector<std::vector<QRat>>& space,
                        const std::vector<std::vector<QRat>>& vectors) {
    if (vectors.empty()) return true;
    std::vector<std::vector<QRat>> all = space;
    int base = qrat_rank(all);
    all.insert(all.end(), vectors.begin(), vectors.end());
    return qrat_rank(all) == base;
}

long ceil_div2(long x) { return x >= 0 ? (x + 1) / 2 : x / 2; }

}  // namespace

LMat LatticeEngine::composed_r(const std::vector<long>& from, const std::vector<long>& to,
                               int order) const {
    if (from.size() != to.size()) throw ValidationFailure("sequence length mismatch");
    {
        std::vector<long> a = from, b = to;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw NotComparable("sequences are not rearrangements of each other");
    }
    const std::size_t d = from.size();
    for (long j : from)
        if (((j % 2) + 2) % 2 != 1) throw ValidationFailure("indices must be odd for type A1");
    auto moves = find_path(from, to, alpha_, /*upward=*/true);
    if (!moves) moves = find_path(from, to, alpha_, /*upward=*/false);
    if (!moves) throw NotComparable("no chain of admissible swaps between the sequences");

    const int dim = 1 << d;
    LMat total = LMat::identity(dim, order);
    for (const auto& [pos, pair] : *moves) {
        LMat r4 = renorm_r(pair.first, pair.second, order);
        LMat factor = LMat::identity(1 << pos, order);
        factor = LMat::kron(factor, r4);
        if (pos + 2 < d) factor = LMat::kron(factor, LMat::identity(1 << (d - pos - 2), order));
        total = factor * total;
    }
    return total;
}

long LatticeEngine::beta_val(const std::vector<long>& to, const std::vector<long>& from) const {
    const int order = default_order(from.size());
    LMat c = composed_r(from, to, order);
    std::optional<long> best;
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) {
            auto v = c.at(i, j).valuation();
            if (v && (!best || *v < *best)) best = *v;
        }
    if (!best) throw InsufficientPrecision("composed R-matrix is zero to working precision");
    return *best;
}

long LatticeEngine::alpha_val(const std::vector<long>& to, const std::vector<long>& from) const {
    const int order = default_order(from.size());
    LMat c1 = composed_r(from, to, order);
    LMat c2 = composed_r(to, from, order);
    LMat p = c2 * c1;
    // must be z^alpha * unit * identity
    std::optional<long> val;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) {
            if (i == j) continue;
            if (!p.at(i, j).window_zero())
                throw NotScalar("round-trip composite has an off-diagonal entry");
        }
    for (int i = 0; i < p.rows(); ++i) {
        if (!p.at(i, i).congruent(p.at(0, 0)))
            throw NotScalar("round-trip composite diagonal is not constant");
        auto v = p.at(i, i).valuation();
        if (v && (!val || *v < *val)) val = *v;
    }
    if (!val) throw InsufficientPrecision("round-trip scalar is zero to working precision");
    return *val;
}

std::vector<long> LatticeEngine::filtration_dims(const std::vector<long>& eps, int order,
                                                 long n_lo, long n_hi,
                                                 std::vector<std::vector<QRat>>* f_bases,
                                                 bool verify_closed_form) const {
    const std::size_t d = eps.size();
    const int dim = 1 << d;
    std::vector<long> s = eps, c = eps;
    std::sort(s.rbegin(), s.rend());
    std::sort(c.begin(), c.end());

    LMat bs = composed_r(s, eps, order);
    LMat mc = composed_r(eps, c, order);
    LMat bc = lmat_inverse(mc);

    LatticeBasis ls(dim, bs), lc(dim, bc);
    CommonBasis cb = common_basis(ls, lc);
    LatticeBasis std_lat = LatticeBasis::standard(dim, order);

    std::vector<long> dims;
    for (long n = n_lo; n <= n_hi; ++n) {
        LMat sig = cb.f;
        for (int j = 0; j < sig.cols(); ++j) {
            long e = ceil_div2(n + cb.divisors[static_cast<std::size_t>(j)]);
            if (e != 0)
                for (int i = 0; i < sig.rows(); ++i) sig.at(i, j) = sig.at(i, j).shifted(e);
        }
        LatticeBasis sigma(dim, sig);
        if (verify_closed_form) {
            // the closed form must reproduce the direct windowed sum of
            // z^k L_s  meet  z^{n-k} L_c; the window covers both [-B, n+B]
            // and the centered range where max(k, n-k+c_i) minimizes
            long b = 1;
            for (long cv : cb.divisors) b = std::max(b, std::abs(cv) + 1);
            long k_lo = std::min(-b, ceil_div2(n) - b);
            long k_hi = std::max(n + b, ceil_div2(n) + b);
            std::optional<LatticeBasis> brute;
            for (long k = k_lo; k <= k_hi; ++k) {
                LatticeBasis part = lattice_meet(ls.scaled(k), lc.scaled(n - k));
                brute = brute ? lattice_join(*brute, part) : part;
            }
            std::vector<long> check = relative_divisors(sigma, *brute);
            if (!std::all_of(check.begin(), check.end(), [](long e) { return e == 0; }))
                throw ValidationFailure(
                    "inner-sum closed form disagrees with the windowed sum at level " +
                    std::to_string(n));
        }
        // e_i(n) relative to the standard lattice
        SmithResult sm = series_smith(sigma.basis());
        long cnt = 0;
        std::vector<int> keep;
        for (std::size_t i = 0; i < sm.exponents.size(); ++i)
            if (sm.exponents[i] <= 0) {
                ++cnt;
                keep.push_back(static_cast<int>(i));
            }
        dims.push_back(cnt);
        if (f_bases) {
            LMat g = sm.u;  // common basis of (O^dim, Sigma_n)
            auto cols = qrat_columns_at_zero(g, keep);
            f_bases[n - n_lo] = std::move(cols);
        }
    }
    return dims;
}

FiltrationReport LatticeEngine::filtration_at_order(const std::vector<long>& eps, int order,
                                                    bool verify_closed_form) const {
    const std::size_t d = eps.size();
    const int dim = 1 << d;
    // conservative level window from the divisors of (L_s, L_c): jumps happen
    // within [-(max|c|+1), max|c|+1]
    long bound = 2 * static_cast<long>(d) + 2;
    long n_lo = -bound - 1, n_hi = bound + 1;
    std::vector<long> dims =
        filtration_dims(eps, order, n_lo, n_hi, nullptr, verify_closed_form);
    if (dims.front() != dim || dims.back() != 0)
        throw InsufficientPrecision("filtration window did not exhaust the module");
    FiltrationReport rep;
    rep.eps = eps;
    rep.precision_used = order;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        long gr = dims[k] - dims[k + 1];
        if (gr < 0) throw ValidationFailure("filtration dimensions increased");
        if (gr > 0) {
            long n = n_lo + static_cast<long>(k);
            rep.graded_dims[n] = gr;
            rep.poincare.add_term(2 * n, Int(gr));
        }
    }
    return rep;
}

FiltrationReport LatticeEngine::jantzen_filtration(const std::vector<long>& eps,
                                                   bool verify_closed_form) const {
    if (static_cast<int>(eps.size()) > max_d_)
        throw ValidationFailure("sequence longer than the configured maximum");
    if (eps.empty()) throw ValidationFailure("empty sequence");
    int order = default_order(eps.size());
    for (int attempt = 0; attempt < 3; ++attempt) {
        FiltrationReport r1 = filtration_at_order(eps, order, verify_closed_form);
        FiltrationReport r2 = filtration_at_order(eps, order + 4, false);
        if (r1.graded_dims == r2.graded_dims) return r1;
        order += 4;
    }
    throw InsufficientPrecision("graded dimensions unstable under truncation escalation");
}

std::pair<bool, std::string> LatticeEngine::poincare_bridge(const std::vector<long>& eps,
                                                            CharTable& a1_table) const {
    FiltrationReport rep = jantzen_filtration(eps, false);
    JClass cls = jantzen_class(a1_table, SeqEps(a1_, eps));
    LaurentHalf torus_side;
    for (const auto& [m, coeff] : cls.expansion) {
        Int dim = a1_table.dim_simple(m);
        torus_side += coeff * LaurentHalf(dim);
    }
    if (torus_side == rep.poincare) return {true, ""};
    std::ostringstream os;
    os << "lattice Poincare " << rep.poincare.str() << " vs torus " << torus_side.str();
    return {false, os.str()};
}

bool LatticeEngine::check_specialized_r_props(const std::vector<long>& eps,
                                              const std::vector<long>& eps2) const {
    const std::size_t d = eps.size();
    const int dim = 1 << d;
    const int order = default_order(d) + 4;

    SeqOrder ord = eps_preorder(SeqEps(a1_, eps), SeqEps(a1_, eps2), alpha_);
    if (ord == SeqOrder::Incomparable) throw NotComparable("sequences are incomparable");

    LMat cmp = composed_r(eps, eps2, order);
    long beta = 0;
    {
        std::optional<long> best;
        for (int i = 0; i < cmp.rows(); ++i)
            for (int j = 0; j < cmp.cols(); ++j) {
                auto v = cmp.at(i, j).valuation();
                if (v && (!best || *v < *best)) best = *v;
            }
        if (!best) throw InsufficientPrecision("zero composed R-matrix");
        beta = *best;
    }
    // specialized map: z^{-beta} composite at z = 0
    std::vector<std::vector<QRat>> rmat(static_cast<std::size_t>(dim),
                                        std::vector<QRat>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) rmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            cmp.at(i, j).coeff(beta);

    long shift;
    if (ord == SeqOrder::Less || ord == SeqOrder::Equivalent) {
        shift = -2 * beta;  // r(F_N M(eps)) in F_{N-2beta} M(eps2)
    } else {
        long alpha = alpha_val(eps2, eps);
        shift = 2 * alpha - 2 * beta;
    }

    long bound = 2 * static_cast<long>(d) + 2;
    long n_lo = -bound - 1, n_hi = bound + 1;
    std::vector<std::vector<std::vector<QRat>>> f_from(static_cast<std::size_t>(n_hi - n_lo + 1));
    std::vector<std::vector<std::vector<QRat>>> f_to(static_cast<std::size_t>(n_hi - n_lo + 1));
    filtration_dims(eps, order, n_lo, n_hi, f_from.data(), false);
    filtration_dims(eps2, order, n_lo, n_hi, f_to.data(), false);

    for (long n = n_lo; n <= n_hi; ++n) {
        const auto& fn = f_from[static_cast<std::size_t>(n - n_lo)];
        long m = n + shift;
        std::vector<std::vector<QRat>> target;
        if (m < n_lo)
            continue;  // target is the whole module
        if (m <= n_hi) target = f_to[static_cast<std::size_t>(m - n_lo)];
        // image vectors r(v)
        std::vector<std::vector<QRat>> image;
        for (const auto& v : fn) {
            std::vector<QRat> w(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) {
                QRat acc;
                for (int j = 0; j < dim; ++j)
                    if (!rmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero() &&
                        !v[static_cast<std::size_t>(j)].is_zero())
                        acc += rmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                               v[static_cast<std::size_t>(j)];
                w[static_cast<std::size_t>(i)] = acc;
            }
            image.push_back(std::move(w));
        }
        if (!qrat_span_contains(target, image)) return false;
    }
    return true;
}

bool LatticeEngine::check_kdual(const IMonomial& d) const {
    SeqEps es = standard_sequence(a1_, d);
    SeqEps ec = es.reversed();
    FiltrationReport rs = jantzen_filtration(es.entries(), false);
    FiltrationReport rc = jantzen_filtration(ec.entries(), false);
    std::map<long, long> mirror;
    for (const auto& [n, v] : rc.graded_dims) mirror[-n] = v;
    return mirror == rs.graded_dims;
}

}  // namespace qgr
