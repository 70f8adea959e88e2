#include "qgr/unipotent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

SymCartan SymCartan::from_type(const std::string& type) {
    if (type == "A2") return SymCartan({{2, -1}, {-1, 2}});
    if (type == "A3") return SymCartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    if (type == "D4")
        return SymCartan({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
    throw ConfigError("unsupported symmetric type: " + type);
}

SymCartan::SymCartan(std::vector<std::vector<int>> cartan)
    : n_(static_cast<int>(cartan.size())), c_(std::move(cartan)) {
    for (int i = 1; i <= n_; ++i) {
        if (form(i, i) != 2) throw ConfigError("diagonal of a Cartan matrix must be 2");
        for (int j = 1; j <= n_; ++j)
            if (form(i, j) != form(j, i)) throw ConfigError("Cartan matrix must be symmetric");
    }
}

SymCartan::Root SymCartan::simple(int i) const {
    Root r(static_cast<std::size_t>(n_), 0);
    r[static_cast<std::size_t>(i - 1)] = 1;
    return r;
}

SymCartan::Root SymCartan::reflect(int i, const Root& r) const {
    long pairing = 0;
    for (int j = 1; j <= n_; ++j)
        pairing += static_cast<long>(r[static_cast<std::size_t>(j - 1)]) * form(j, i);
    Root out = r;
    out[static_cast<std::size_t>(i - 1)] -= static_cast<int>(pairing);
    return out;
}

long SymCartan::pair(const Root& a, const Root& b) const {
    long s = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            s += static_cast<long>(a[static_cast<std::size_t>(i - 1)]) *
                 b[static_cast<std::size_t>(j - 1)] * form(i, j);
    return s;
}

bool SymCartan::is_positive(const Root& r) const {
    bool nonzero = false;
    for (int v : r) {
        if (v < 0) return false;
        if (v > 0) nonzero = true;
    }
    return nonzero;
}

int SymCartan::height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

namespace {

// directed edge set of one orientation of the Dynkin diagram
using Orientation = std::vector<std::pair<int, int>>;  // (source, target)

std::vector<std::pair<int, int>> dynkin_edges(const SymCartan& g) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= g.rank(); ++i)
        for (int j = i + 1; j <= g.rank(); ++j)
            if (g.form(i, j) < 0) e.emplace_back(i, j);
    return e;
}

bool word_adapted_to(const SymCartan& g, const std::vector<int>& word, Orientation q) {
    for (int letter : word) {
        for (const auto& [s, t] : q)
            if (t == letter) return false;  // not a source
        for (auto& [s, t] : q)
            if (s == letter) std::swap(s, t);  // reflect at the source
    }
    return true;
}

bool infer_adapted(const SymCartan& g, const std::vector<int>& word) {
    auto edges = dynkin_edges(g);
    const std::size_t m = edges.size();
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << m); ++mask) {
        Orientation q;
        for (std::size_t k = 0; k < m; ++k) {
            auto [a, b] = edges[k];
            if (mask & (static_cast<std::size_t>(1) << k))
                q.emplace_back(b, a);
            else
                q.emplace_back(a, b);
        }
        if (word_adapted_to(g, word, q)) return true;
    }
    return false;
}

}  // namespace

QuiverData::QuiverData(SymCartan cartan, std::vector<int> word)
    : g_(std::move(cartan)), word_(std::move(word)) {
    if (word_.empty()) throw ConfigError("empty word");
    SymCartan::Root acc;
    for (std::size_t j = 0; j < word_.size(); ++j) {
        int ij = word_[j];
        if (ij < 1 || ij > g_.rank()) throw ConfigError("word letter out of range");
        SymCartan::Root r = g_.simple(ij);
        for (std::size_t k = j; k-- > 0;) r = g_.reflect(word_[k], r);
        if (!g_.is_positive(r))
            throw ConfigError("word is not reduced (negative root at position " +
                              std::to_string(j + 1) + ")");
        roots_.push_back(std::move(r));
    }
    for (std::size_t a = 0; a < roots_.size(); ++a)
        for (std::size_t b = a + 1; b < roots_.size(); ++b)
            if (roots_[a] == roots_[b]) throw ConfigError("word is not reduced (repeated root)");
    adapted_ = infer_adapted(g_, word_);
}

UqElement UqElement::unit(const SymCartan& g) {
    UqElement e(SymCartan::Root(static_cast<std::size_t>(g.rank()), 0));
    e.c_[{}] = QRat::one();
    return e;
}

UqElement UqElement::generator(const SymCartan& g, int i) {
    UqElement e(g.simple(i));
    // <e_i, e_i> = 1/(1 - t^2), t = s^2
    IntPoly den(std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(-1)});  // 1 - s^4
    e.c_[{i}] = QRat(IntPoly::one(), den);
    return e;
}

UqElement& UqElement::operator+=(const UqElement& o) {
    if (beta_ != o.beta_ && !o.c_.empty() && !c_.empty())
        throw WeightMismatch("adding elements of different weights");
    if (c_.empty()) beta_ = o.beta_;
    for (const auto& [w, v] : o.c_) {
        auto it = c_.find(w);
        if (it == c_.end()) {
            if (!v.is_zero()) c_[w] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

UqElement& UqElement::operator-=(const UqElement& o) { return *this += o.scaled(QRat(Int(-1))); }

UqElement UqElement::scaled(const QRat& k) const {
    UqElement r(beta_);
    if (k.is_zero()) return r;
    for (const auto& [w, v] : c_) r.c_[w] = v * k;
    return r;
}

std::string UqElement::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, v] : c_) {
        if (!first) os << ", ";
        first = false;
        os << "e(";
        for (std::size_t k = 0; k < w.size(); ++k) os << w[k] << (k + 1 < w.size() ? "" : "");
        os << ") -> " << v.str("s");
    }
    return os.str();
}

QRat uq_pairing_word(const UqElement& x, const UqElement::Word& w) {
    if (!x.is_zero()) {
        SymCartan::Root wt(x.weight().size(), 0);
        for (int letter : w) wt[static_cast<std::size_t>(letter - 1)] += 1;
        if (wt != x.weight()) throw WeightMismatch("word weight differs from element weight");
    }
    return x.coord(w);
}

UqElement uq_mul(const SymCartan& g, const UqElement& x, const UqElement& y) {
    if (x.is_zero() || y.is_zero()) {
        UqElement z(x.weight());
        return z;
    }
    SymCartan::Root wt = x.weight();
    for (std::size_t k = 0; k < wt.size(); ++k) wt[k] += y.weight()[k];
    const int hx = SymCartan::height(x.weight());
    UqElement out(wt);
    for (const auto& w : words_of_weight(g, wt)) {
        const int len = static_cast<int>(w.size());
        // subsets of positions carrying the x-part
        std::vector<int> idx(static_cast<std::size_t>(hx));
        std::iota(idx.begin(), idx.end(), 0);
        QRat acc;
        bool more = hx <= len;
        if (hx == 0) {
            acc = x.coord({}) * y.coord(w);
            more = false;
        }
        while (more) {
            // twist: pairs k < l with k outside, l inside the subset
            UqElement::Word wx, wy;
            std::vector<bool> in(static_cast<std::size_t>(len), false);
            for (int i : idx) in[static_cast<std::size_t>(i)] = true;
            long tw = 0;
            for (int k = 0; k < len; ++k) {
                if (in[static_cast<std::size_t>(k)]) {
                    wx.push_back(w[static_cast<std::size_t>(k)]);
                    for (int l = 0; l < k; ++l)
                        if (!in[static_cast<std::size_t>(l)])
                            tw += g.form(w[static_cast<std::size_t>(l)],
                                         w[static_cast<std::size_t>(k)]);
                } else {
                    wy.push_back(w[static_cast<std::size_t>(k)]);
                }
            }
            QRat cx = x.coord(wx);
            if (!cx.is_zero()) {
                QRat cy = y.coord(wy);
                if (!cy.is_zero()) acc += cx * cy * QRat::var_pow(-2 * tw);
            }
            // next subset
            int i = hx - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == len - hx + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int k = i + 1; k < hx; ++k)
                idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
        }
        if (!acc.is_zero()) out.set_coord(w, acc);
    }
    return out;
}

UqElement iota_prime(const UqElement& x) {
    UqElement r(x.weight());
    for (const auto& [w, v] : x.coords()) r.set_coord(w, v.bar());
    return r;
}

UqElement bar_renorm(const SymCartan& g, const UqElement& x) {
    long bb = g.pair(x.weight(), x.weight());
    return iota_prime(x).scaled(QRat::var_pow(-bb));
}

std::vector<UqElement::Word> words_of_weight(const SymCartan& g, const SymCartan::Root& beta) {
    std::vector<UqElement::Word> out;
    UqElement::Word cur;
    SymCartan::Root left = beta;
    std::function<void()> rec = [&]() {
        bool empty = true;
        for (int v : left) {
            if (v < 0) return;
            if (v > 0) empty = false;
        }
        if (empty) {
            out.push_back(cur);
            return;
        }
        for (int i = 1; i <= g.rank(); ++i) {
            if (left[static_cast<std::size_t>(i - 1)] == 0) continue;
            left[static_cast<std::size_t>(i - 1)] -= 1;
            cur.push_back(i);
            rec();
            cur.pop_back();
            left[static_cast<std::size_t>(i - 1)] += 1;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

QRat uq_pairing(const SymCartan& g, const UqElement& x, const UqElement& y) {
    if (x.weight() != y.weight()) throw WeightMismatch("pairing elements of different weights");
    // <x, y> = sum_w <x, e_w> * (coefficient of y on the word basis).  The
    // word-monomial expansion of y is recovered through the Gram matrix, so
    // we instead express y in word monomials by solving G a = coords(y).
    auto words = words_of_weight(g, x.weight());
    const std::size_t n = words.size();
    // Gram matrix G[w][v] = <e_w, e_v>
    std::vector<UqElement> wordelts;
    for (const auto& w : words) {
        UqElement e = UqElement::unit(g);
        for (int letter : w) e = uq_mul(g, e, UqElement::generator(g, letter));
        wordelts.push_back(std::move(e));
    }
    // a solves G a = coords(y); then <x,y> = coords(x)^T a
    std::vector<std::vector<QRat>> aug(n, std::vector<QRat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = wordelts[j].coord(words[i]);
        aug[i][n] = y.coord(words[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && aug[piv][k].is_zero()) ++piv;
        if (piv == n) throw Error("Internal", "degenerate word Gram matrix");
        std::swap(aug[k], aug[piv]);
        QRat inv = aug[k][k].inverse();
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || aug[r][k].is_zero()) continue;
            QRat f = aug[r][k] * inv;
            for (std::size_t c = k; c <= n; ++c) aug[r][c] -= f * aug[k][c];
        }
    }
    QRat acc;
    for (std::size_t i = 0; i < n; ++i) {
        QRat a = aug[i][n] / aug[i][i];
        if (!a.is_zero()) acc += a * x.coord(words[i]);
    }
    return acc;
}

namespace {

// multiply by (1 - t^2)^k, k possibly negative (exact division)
UqElement scale_by_one_minus_t2(const SymCartan& g, const UqElement& x, int k) {
    IntPoly omt(std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(-1)});  // 1 - s^4
    QRat f(omt, IntPoly::one());
    UqElement r = x;
    for (int rep = 0; rep < std::abs(k); ++rep)
        r = r.scaled(k > 0 ? f : f.inverse());
    return r;
}

bool all_coords_laurent(const UqElement& x) {
    for (const auto& [w, v] : x.coords()) {
        const IntPoly& d = v.den();
        if (d.low_order() != d.degree()) return false;  // not +-s^k
    }
    return true;
}

bool all_coords_divisible(const SymCartan& g, const UqElement& x) {
    UqElement t = scale_by_one_minus_t2(g, x, -1);
    return all_coords_laurent(t);
}

// normalize a candidate dual root vector in place; returns false when no
// scalar of the allowed shape works
bool normalize_dual_vector(const SymCartan& g, UqElement& x) {
    if (x.is_zero()) return false;
    // canonical (1-t^2) clearing
    int guard = 0;
    while (!all_coords_laurent(x)) {
        x = scale_by_one_minus_t2(g, x, 1);
        if (++guard > 64) return false;
    }
    while (all_coords_divisible(g, x)) {
        x = scale_by_one_minus_t2(g, x, -1);
        if (++guard > 128) return false;
    }
    // integral content normalization: denominators are now +-c s^k, so clear
    // the lcm of the constants and divide out the numerator gcd
    Int den_lcm = 1;
    for (const auto& [w, v] : x.coords()) {
        const IntPoly& d = v.den();
        Int c = d.coeff(static_cast<std::size_t>(d.low_order()));
        if (c < 0) c = -c;
        den_lcm = boost::multiprecision::lcm(den_lcm, c);
    }
    if (den_lcm > 1) x = x.scaled(QRat(den_lcm));
    Int num_gcd = 0;
    for (const auto& [w, v] : x.coords())
        for (const Int& c : v.num().coeffs()) num_gcd = boost::multiprecision::gcd(num_gcd, c);
    if (num_gcd < 0) num_gcd = -num_gcd;
    if (num_gcd > 1) x = x.scaled(QRat(Int(1), num_gcd));
    // bar alignment: find sigma = +-s^k with sigma x iota'-fixed
    const UqElement barred = iota_prime(x);
    // candidate ratio from one nonzero coordinate
    const auto& [w0, f0] = *x.coords().begin();
    QRat ratio = barred.coord(w0) / f0;  // must be +- s^{2k}
    const IntPoly &rn = ratio.num(), &rd = ratio.den();
    if (rn.low_order() != rn.degree() || rd.low_order() != rd.degree()) return false;
    long kk = rn.degree() - rd.degree();
    Int cn = rn.coeff(static_cast<std::size_t>(rn.degree()));
    Int cd = rd.coeff(static_cast<std::size_t>(rd.degree()));
    if (cn != cd && cn != -cd) return false;
    if (cn != cd) return false;  // sign -1 has no real square root in +-t^{Z/2}
    if (((kk % 2) + 2) % 2 != 0) return false;
    // sigma = s^{k/...}: bar(sigma x) = sigma^{-1} bar(x) = sigma^{-1} ratio x
    // = sigma x  requires sigma^2 = ratio
    UqElement cand = x.scaled(QRat::var_pow(kk / 2));
    if (!(iota_prime(cand) == cand)) {
        cand = x.scaled(QRat::var_pow(-kk / 2));
        if (!(iota_prime(cand) == cand)) return false;
    }
    x = std::move(cand);
    // positive leading coefficient at the lexicographically first word
    const auto& [wl, fl] = *x.coords().begin();
    if (fl.num().lead() < 0) x = x.scaled(QRat(Int(-1)));
    return true;
}

}  // namespace

std::vector<UqElement> dual_root_vectors(const QuiverData& qd) {
    const SymCartan& g = qd.cartan();
    const std::size_t ell = qd.length();
    std::vector<UqElement> out(ell);
    for (std::size_t j = 1; j <= ell; ++j) {
        const SymCartan::Root& r = qd.root(j);
        if (SymCartan::height(r) == 1) {
            int i = 0;
            for (std::size_t k = 0; k < r.size(); ++k)
                if (r[k] == 1) i = static_cast<int>(k) + 1;
            // (1 - t^2) e_i: single coordinate 1 at the one-letter word
            UqElement e(g.simple(i));
            e.set_coord({i}, QRat::one());
            out[j - 1] = std::move(e);
            continue;
        }
        // minimal pair: a < j < b with root(a) + root(b) = root(j),
        // a maximal then b minimal
        int pa = -1, pb = -1;
        for (int a = static_cast<int>(j) - 1; a >= 1 && pa < 0; --a) {
            for (int b = static_cast<int>(j) + 1; b <= static_cast<int>(ell); ++b) {
                SymCartan::Root sum = qd.root(static_cast<std::size_t>(a));
                const SymCartan::Root& rb = qd.root(static_cast<std::size_t>(b));
                for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += rb[k];
                if (sum == r) {
                    pa = a;
                    pb = b;
                    break;
                }
            }
        }
        if (pa < 0)
            throw NormalizationFailure("no minimal pair for position " + std::to_string(j));
        const UqElement& ea = out[static_cast<std::size_t>(pa - 1)];
        const UqElement& eb = out[static_cast<std::size_t>(pb - 1)];
        if (ea.is_zero() || eb.is_zero())
            throw NormalizationFailure("minimal pair depends on a later position");
        long c = -qd.root_pair(static_cast<std::size_t>(pa), static_cast<std::size_t>(pb));
        UqElement x = uq_mul(g, ea, eb) - uq_mul(g, eb, ea).scaled(QRat::var_pow(2 * c));
        if (!normalize_dual_vector(g, x))
            throw NormalizationFailure("bracket at position " + std::to_string(j) +
                                       " admits no admissible normalization");
        out[j - 1] = std::move(x);
    }
    return out;
}

SymCartan::Root weight_of(const QuiverData& qd, const MultiIndex& d) {
    SymCartan::Root beta(static_cast<std::size_t>(qd.cartan().rank()), 0);
    for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t k = 0; k < beta.size(); ++k)
            beta[k] += d[j] * qd.root(j + 1)[k];
    return beta;
}

UqElement dual_pbw(const QuiverData& qd, const MultiIndex& d,
                   const std::vector<UqElement>& roots) {
    const SymCartan& g = qd.cartan();
    SymCartan::Root beta = weight_of(qd, d);
    long bb = g.pair(beta, beta);
    long spow = -bb / 2;  // renormalization t^{-(beta,beta)/4}
    for (std::size_t j = 0; j < d.size(); ++j) spow += 2 * (d[j] * (d[j] - 1) / 2);
    UqElement prod = UqElement::unit(g);
    for (std::size_t j = d.size(); j-- > 0;) {  // larger j to the left
        for (int rep = 0; rep < d[j]; ++rep) prod = uq_mul(g, prod, roots[j]);
    }
    return prod.scaled(QRat::var_pow(spow));
}

std::vector<MultiIndex> multiindices_of_weight(const QuiverData& qd,
                                               const SymCartan::Root& beta) {
    std::vector<MultiIndex> out;
    MultiIndex cur(qd.length(), 0);
    SymCartan::Root left = beta;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        bool empty = true;
        for (int v : left) {
            if (v < 0) return;
            if (v != 0) empty = false;
        }
        if (j == qd.length()) {
            if (empty) out.push_back(cur);
            return;
        }
        // bound the exponent by the smallest coordinate ratio
        int maxexp = SymCartan::height(left);
        for (int e = 0; e <= maxexp; ++e) {
            cur[j] = e;
            rec(j + 1);
            for (std::size_t k = 0; k < left.size(); ++k) left[k] -= qd.root(j + 1)[k];
        }
        for (int e = 0; e <= maxexp; ++e)
            for (std::size_t k = 0; k < left.size(); ++k) left[k] += qd.root(j + 1)[k];
        cur[j] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());  // left-lex refinement of the bi-lex order
    return out;
}

namespace {

// expand an element of a weight space over given basis elements (exact solve)
std::vector<QRat> expand_over(const SymCartan& g, const std::vector<UqElement>& basis,
                              const UqElement& x,
                              const std::vector<UqElement::Word>& words) {
    const std::size_t n = basis.size(), m = words.size();
    std::vector<std::vector<QRat>> aug(m, std::vector<QRat>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = basis[j].coord(words[i]);
        aug[i][n] = x.coord(words[i]);
    }
    std::vector<int> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < m; ++c) {
        std::size_t piv = row;
        while (piv < m && aug[piv][c].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(aug[row], aug[piv]);
        QRat inv = aug[row][c].inverse();
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || aug[r][c].is_zero()) continue;
            QRat f = aug[r][c] * inv;
            for (std::size_t cc = c; cc <= n; ++cc) aug[r][cc] -= f * aug[row][cc];
        }
        pivot_of_col[c] = static_cast<int>(row);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (!aug[r][n].is_zero())
            throw TriangularityViolation("element outside the span of the PBW basis");
    std::vector<QRat> out(n);
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_of_col[c] >= 0) {
            std::size_t r = static_cast<std::size_t>(pivot_of_col[c]);
            out[c] = aug[r][n] / aug[r][c];
        }
    return out;
}

LaurentHalf positive_half_l(const LaurentHalf& w) {
    LaurentHalf q;
    for (const auto& [e, c] : w.coeffs())
        if (e > 0) q.add_term(e, c);
    return q;
}

}  // namespace

std::map<MultiIndex, UqElement> dual_canonical(const QuiverData& qd,
                                               const SymCartan::Root& beta,
                                               std::size_t word_cap) {
    const SymCartan& g = qd.cartan();
    auto words = words_of_weight(g, beta);
    if (words.size() > word_cap)
        throw NonTermination("weight space larger than the configured cap");
    auto roots = dual_root_vectors(qd);
    auto indices = multiindices_of_weight(qd, beta);
    std::vector<UqElement> pbw;
    for (const auto& d : indices) pbw.push_back(dual_pbw(qd, d, roots));

    std::map<MultiIndex, UqElement> out;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        UqElement x = pbw[k];
        int guard = 0;
        while (true) {
            if (++guard > 256)
                throw TriangularityViolation("canonical correction loop did not settle");
            UqElement defect = x - bar_renorm(g, x);
            if (defect.is_zero()) break;
            std::vector<QRat> w = expand_over(g, pbw, defect, words);
            int lead = -1;
            for (std::size_t j = 0; j < w.size(); ++j)
                if (!w[j].is_zero()) lead = static_cast<int>(j);
            if (lead < 0) break;
            if (static_cast<std::size_t>(lead) >= k)
                throw TriangularityViolation("bar defect not strictly triangular");
            LaurentHalf wl = w[static_cast<std::size_t>(lead)].to_laurent_half();
            LaurentHalf q = positive_half_l(wl);
            if (!((q - q.bar()) == wl))
                throw TriangularityViolation("bar defect coefficient is not anti-symmetric");
            const UqElement& lower = out.at(indices[static_cast<std::size_t>(lead)]);
            x -= lower.scaled(QRat::from_laurent_half(q));
        }
        out[indices[k]] = std::move(x);
    }
    return out;
}

long gamma_word_doubled(const QuiverData& qd, int a, int b) {
    if (a == b) return 0;
    long p = qd.root_pair(static_cast<std::size_t>(std::min(a, b)),
                          static_cast<std::size_t>(std::max(a, b)));
    return a < b ? p : -p;
}

std::map<MultiIndex, LaurentHalf> mixed_dual(const QuiverData& qd,
                                             const std::vector<int>& eps) {
    const SymCartan& g = qd.cartan();
    auto roots = dual_root_vectors(qd);
    // renormalized factors and the gamma twist
    long spow = 0;
    for (std::size_t k = 0; k < eps.size(); ++k) {
        spow -= qd.root_pair(static_cast<std::size_t>(eps[k]), static_cast<std::size_t>(eps[k])) / 2;
        for (std::size_t l = k + 1; l < eps.size(); ++l)
            spow += gamma_word_doubled(qd, eps[k], eps[l]);
    }
    UqElement prod = UqElement::unit(g);
    for (int e : eps) prod = uq_mul(g, prod, roots[static_cast<std::size_t>(e - 1)]);
    prod = prod.scaled(QRat::var_pow(spow));

    SymCartan::Root beta = prod.weight();
    auto canon = dual_canonical(qd, beta);
    auto words = words_of_weight(g, beta);
    std::vector<MultiIndex> keys;
    std::vector<UqElement> basis;
    for (const auto& [d, v] : canon) {
        keys.push_back(d);
        basis.push_back(v);
    }
    std::vector<QRat> coeffs = expand_over(g, basis, prod, words);
    std::map<MultiIndex, LaurentHalf> out;
    for (std::size_t k = 0; k < keys.size(); ++k)
        if (!coeffs[k].is_zero()) out[keys[k]] = coeffs[k].to_laurent_half();
    return out;
}

}  // namespace qgr
