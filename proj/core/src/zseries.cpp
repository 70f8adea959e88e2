#include "qgr/zseries.hpp"

#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

ZSeries::ZSeries(int order, std::vector<QRat> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order_ < 1) throw Error("Internal", "series order must be >= 1");
    c_.resize(static_cast<std::size_t>(order_));
}

ZSeries ZSeries::z_pow(int k, int order) {
    ZSeries s(order);
    if (k < order) s.c_[static_cast<std::size_t>(k)] = QRat::one();
    s.known_valuation_ = k;
    return s;
}

ZSeries ZSeries::exp_az(long a, int order) {
    ZSeries s(order);
    Int num = 1, den = 1;
    for (int m = 0; m < order; ++m) {
        if (m > 0) {
            num *= a;
            den *= m;
        }
        s.c_[static_cast<std::size_t>(m)] = QRat(num, den);
    }
    s.known_valuation_ = 0;
    return s;
}

bool ZSeries::window_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<int> ZSeries::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return std::nullopt;
}

ZSeries ZSeries::truncated(int order) const {
    ZSeries s(order);
    for (int k = 0; k < std::min(order, order_); ++k)
        s.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return s;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
    int n = std::min(order_, o.order_);
    *this = truncated(n);
    for (int k = 0; k < n; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
    int n = std::min(order_, o.order_);
    *this = truncated(n);
    for (int k = 0; k < n; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
    return *this;
}

ZSeries operator-(const ZSeries& a) {
    ZSeries r(a.order_);
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = -a.c_[k];
    return r;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    int n = std::min(a.order_, b.order_);
    ZSeries r(n);
    for (int i = 0; i < n; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j < n; ++j) {
            if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
            r.c_[static_cast<std::size_t>(i + j)] +=
                a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

ZSeries ZSeries::mul_scalar(const QRat& k) const {
    ZSeries r(order_);
    if (k.is_zero()) return r;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) r.c_[i] = c_[i] * k;
    return r;
}

ZSeries ZSeries::unit_inverse() const {
    if (c_.empty() || c_[0].is_zero())
        throw InsufficientPrecision("unit_inverse on a series without certified unit part");
    ZSeries r(order_);
    QRat inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k < order_; ++k) {
        QRat acc = QRat::zero();
        for (int j = 1; j <= k; ++j) {
            if (c_[static_cast<std::size_t>(j)].is_zero()) continue;
            acc += c_[static_cast<std::size_t>(j)] * r.c_[static_cast<std::size_t>(k - j)];
        }
        r.c_[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return r;
}

std::string ZSeries::str() const {
    std::ostringstream os;
    bool some = false;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (some) os << " + ";
        os << "(" << c_[k].str("q") << ")";
        if (k > 0) os << "*z^" << k;
        some = true;
    }
    if (!some) os << "0";
    os << " + O(z^" << order_ << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// ZLaurent: common-denominator representation

namespace {

// degree threshold past which a full content/gcd reduction is attempted
constexpr int kReduceDegree = 48;

}  // namespace

ZLaurent::ZLaurent(long lo, std::vector<QRat> coeffs) : lo_(lo), den_(IntPoly::one()) {
    // common denominator = product of distinct denominators via lcm chain
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        IntPoly g = IntPoly::gcd(den_, c.den());
        den_ = den_ * c.den().div_exact(g).mul_scalar(Int(1));
        // divide out the integer content mismatch later; scale exactly:
        // den_ = lcm(den_, c.den()) up to content
    }
    num_.resize(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        num_[k] = coeffs[k].num() * den_.div_exact(IntPoly::gcd(den_, coeffs[k].den()) ==
                                                           IntPoly::one()
                                                       ? IntPoly::one()
                                                       : coeffs[k].den());
        // fall back to exact division when den_ is a true multiple
        IntPoly quot = den_;
        quot = quot.div_exact(coeffs[k].den());
        num_[k] = coeffs[k].num() * quot;
    }
    normalize_window();
}

ZLaurent::ZLaurent(const ZSeries& s) : ZLaurent(0, s.coeffs()) {}

void ZLaurent::normalize_window() {
    std::size_t lead = 0;
    while (lead < num_.size() && num_[lead].is_zero() && num_.size() - lead > 1) ++lead;
    if (lead > 0) {
        num_.erase(num_.begin(), num_.begin() + static_cast<long>(lead));
        lo_ += static_cast<long>(lead);
    }
}

void ZLaurent::reduce(bool force) {
    if (!force && den_.degree() < kReduceDegree) {
        // cheap content-only reduction
        Int c = den_.content();
        if (c > 1) {
            for (const auto& n : num_) {
                c = boost::multiprecision::gcd(c, n.content());
                if (c == 1) break;
            }
            if (c > 1) {
                den_ = den_.div_scalar_exact(c);
                for (auto& n : num_) n = n.div_scalar_exact(c);
            }
        }
        if (den_.lead() < 0) {
            den_ = -den_;
            for (auto& n : num_) n = -n;
        }
        return;
    }
    // full reduction: divide by gcd(den, gcd of numerators)
    IntPoly g = den_;
    for (const auto& n : num_) {
        if (n.is_zero()) continue;
        g = IntPoly::gcd(g, n);
        if (g.degree() == 0) break;
    }
    if (g.degree() > 0) {
        den_ = den_.div_exact(g);
        for (auto& n : num_)
            if (!n.is_zero()) n = n.div_exact(g);
    }
    Int c = den_.content();
    for (const auto& n : num_) {
        if (c == 1) break;
        c = boost::multiprecision::gcd(c, n.content());
    }
    if (c > 1) {
        den_ = den_.div_scalar_exact(c);
        for (auto& n : num_) n = n.div_scalar_exact(c);
    }
    if (den_.lead() < 0) {
        den_ = -den_;
        for (auto& n : num_) n = -n;
    }
}

bool ZLaurent::window_zero() const {
    for (const auto& n : num_)
        if (!n.is_zero()) return false;
    return true;
}

std::optional<long> ZLaurent::valuation() const {
    for (std::size_t k = 0; k < num_.size(); ++k)
        if (!num_[k].is_zero()) return lo_ + static_cast<long>(k);
    return std::nullopt;
}

ZLaurent operator+(const ZLaurent& a, const ZLaurent& b) {
    long lo = std::min(a.lo_, b.lo_);
    long hi = std::min(a.hi(), b.hi());
    if (hi <= lo) throw InsufficientPrecision("empty window in Laurent addition");
    IntPoly g = IntPoly::gcd(a.den_, b.den_);
    IntPoly fa = b.den_, fb = a.den_;
    if (g.degree() > 0 || (g.degree() == 0 && g.lead() != 1)) {
        fa = b.den_.div_exact(g);
        fb = a.den_.div_exact(g);
    }
    ZLaurent r;
    r.lo_ = lo;
    r.den_ = a.den_ * fa;
    r.num_.assign(static_cast<std::size_t>(hi - lo), IntPoly());
    for (long e = lo; e < hi; ++e) {
        IntPoly acc;
        if (e >= a.lo_ && e < a.hi()) acc += a.num_[static_cast<std::size_t>(e - a.lo_)] * fa;
        if (e >= b.lo_ && e < b.hi()) acc += b.num_[static_cast<std::size_t>(e - b.lo_)] * fb;
        r.num_[static_cast<std::size_t>(e - lo)] = std::move(acc);
    }
    r.normalize_window();
    r.reduce();
    return r;
}

ZLaurent operator-(const ZLaurent& a, const ZLaurent& b) { return a + (-b); }

ZLaurent operator-(const ZLaurent& a) {
    ZLaurent r = a;
    for (auto& n : r.num_) n = -n;
    return r;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    long lo = a.lo_ + b.lo_;
    long hi = std::min(a.hi() + b.lo_, b.hi() + a.lo_);
    if (hi <= lo) throw InsufficientPrecision("empty window in Laurent multiplication");
    ZLaurent r;
    r.lo_ = lo;
    if (a.window_zero() || b.window_zero()) {
        r.den_ = IntPoly::one();
        r.num_.assign(static_cast<std::size_t>(hi - lo), IntPoly());
        return r;
    }
    r.den_ = a.den_ * b.den_;
    r.num_.assign(static_cast<std::size_t>(hi - lo), IntPoly());
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i].is_zero()) continue;
        long ea = a.lo_ + static_cast<long>(i);
        for (std::size_t j = 0; j < b.num_.size(); ++j) {
            if (b.num_[j].is_zero()) continue;
            long e = ea + b.lo_ + static_cast<long>(j);
            if (e >= hi) break;
            r.num_[static_cast<std::size_t>(e - lo)] += a.num_[i] * b.num_[j];
        }
    }
    r.normalize_window();
    r.reduce(r.den_.degree() >= kReduceDegree);
    return r;
}

ZLaurent ZLaurent::mul_scalar(const QRat& k) const {
    ZLaurent r = *this;
    if (k.is_zero()) {
        r.den_ = IntPoly::one();
        for (auto& n : r.num_) n = IntPoly();
        return r;
    }
    r.den_ = den_ * k.den();
    for (auto& n : r.num_)
        if (!n.is_zero()) n = n * k.num();
    r.reduce();
    return r;
}

ZLaurent ZLaurent::inverse() const {
    auto v = valuation();
    if (!v) throw InsufficientPrecision("inverse of a series with no certified nonzero term");
    const long val = *v;
    const std::size_t off = static_cast<std::size_t>(val - lo_);
    const int n = static_cast<int>(num_.size() - off);
    // invert N(z) = sum n_k z^k with n_0 != 0: coefficients of N^{-1} have
    // denominators n_0^{k+1}; keep everything over n_0^n and multiply den_
    const IntPoly& n0 = num_[off];
    std::vector<IntPoly> s(static_cast<std::size_t>(n));
    // s_k over denominator n0^{k+1}, scaled progressively
    s[0] = IntPoly::one();
    for (int k = 1; k < n; ++k) {
        IntPoly acc;  // sum_{j=1..k} n_j * s_{k-j} * n0^{j-1}
        IntPoly pw = IntPoly::one();
        for (int j = 1; j <= k; ++j) {
            const IntPoly& nj = num_[off + static_cast<std::size_t>(j)];
            if (!nj.is_zero()) acc += nj * s[static_cast<std::size_t>(k - j)] * pw;
            pw = pw * n0;
        }
        s[static_cast<std::size_t>(k)] = -acc;
    }
    // lift everything to the common denominator n0^n
    ZLaurent r;
    r.lo_ = -val;
    IntPoly n0n = IntPoly::one();
    for (int k = 0; k < n; ++k) n0n = n0n * n0;
    r.den_ = n0n;
    r.num_.assign(static_cast<std::size_t>(n), IntPoly());
    IntPoly lift = IntPoly::one();  // n0^{n-1-k}
    std::vector<IntPoly> lifts(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        lifts[static_cast<std::size_t>(k)] = lift;
        lift = lift * n0;
    }
    for (int k = 0; k < n; ++k)
        r.num_[static_cast<std::size_t>(k)] =
            s[static_cast<std::size_t>(k)] * lifts[static_cast<std::size_t>(k)] * den_;
    r.reduce(true);
    return r;
}

ZLaurent ZLaurent::clipped(long hi_new) const {
    if (hi_new >= hi()) return *this;
    if (hi_new <= lo_) throw InsufficientPrecision("window clipped to nothing");
    ZLaurent r = *this;
    r.num_.resize(static_cast<std::size_t>(hi_new - lo_));
    return r;
}

bool ZLaurent::congruent(const ZLaurent& o) const {
    long lo = std::min(lo_, o.lo_);
    long hi = std::min(this->hi(), o.hi());
    for (long e = lo; e < hi; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

ZSeries ZLaurent::to_series(int order) const {
    if (valuation().has_value() && *valuation() < 0)
        throw Error("Internal", "Laurent value with a pole cannot become a ZSeries");
    if (hi() < order)
        throw InsufficientPrecision("window too small for requested series order");
    ZSeries s(order);
    for (int k = 0; k < order; ++k) s.set_coeff(k, coeff(k));
    if (auto v = valuation())
        if (*v >= 0) s.set_known_valuation(*v);
    return s;
}

std::string ZLaurent::str() const {
    std::ostringstream os;
    bool some = false;
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k].is_zero()) continue;
        if (some) os << " + ";
        os << "(" << QRat(num_[k], den_).str("q") << ")*z^" << (lo_ + static_cast<long>(k));
        some = true;
    }
    if (!some) os << "0";
    os << " + O(z^" << hi() << ")";
    return os.str();
}

}  // namespace qgr
