#include "qgr/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "qgr/errors.hpp"

namespace qgr {

namespace {
using Rat = boost::rational<long long>;
}

CartanDatum CartanDatum::from_type(const std::string& type) {
    if (type == "A1") return CartanDatum("A1", {{2}}, {1}, {0});
    if (type == "A2") return CartanDatum("A2", {{2, -1}, {-1, 2}}, {1, 1}, {0, 1});
    if (type == "A3")
        return CartanDatum("A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, {0, 1, 0});
    if (type == "D4")
        return CartanDatum("D4",
                           {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}},
                           {1, 1, 1, 1}, {0, 1, 0, 0});
    if (type == "B2") return CartanDatum("B2", {{2, -1}, {-2, 2}}, {2, 1}, {0, 1});
    throw ConfigError("unknown Cartan type: " + type);
}

CartanDatum::CartanDatum(std::string name, std::vector<std::vector<int>> cartan,
                         std::vector<int> symmetrizer, std::vector<int> parity)
    : name_(std::move(name)),
      n_(static_cast<int>(cartan.size())),
      c_(std::move(cartan)),
      r_(std::move(symmetrizer)),
      eps_(std::move(parity)) {
    lacing_ = 1;
    for (int ri : r_) lacing_ = std::max(lacing_, ri);
    validate();
    // level weights: 2 <w_i, rho^vee> = sum_j 2 (C^{-1})_{ji}, doubled to stay integral
    // solved exactly over rationals
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n_),
                                    std::vector<Rat>(static_cast<std::size_t>(n_ + 1)));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) m[i][j] = Rat(c_[j][i]);
        m[i][n_] = Rat(1);
    }
    // gaussian elimination for C^T x = (1,..,1); level2_i = 2 * x_i * lcm-ish
    for (int k = 0; k < n_; ++k) {
        int piv = k;
        while (m[piv][k] == Rat(0)) ++piv;
        std::swap(m[k], m[piv]);
        for (int i = 0; i < n_; ++i) {
            if (i == k || m[i][k] == Rat(0)) continue;
            Rat f = m[i][k] / m[k][k];
            for (int j = k; j <= n_; ++j) m[i][j] -= f * m[k][j];
        }
    }
    long long denom = 1;
    std::vector<Rat> x(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        x[i] = m[i][n_] / m[i][i];
        denom = std::lcm(denom, x[i].denominator());
    }
    level2_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        level2_[i] = 2 * x[i].numerator() * (denom / x[i].denominator());
}

void CartanDatum::validate() const {
    if (n_ < 1) throw ConfigError("empty Cartan matrix");
    if (static_cast<int>(r_.size()) != n_ || static_cast<int>(eps_.size()) != n_)
        throw ConfigError("symmetrizer/parity size mismatch");
    for (int i = 1; i <= n_; ++i) {
        if (cartan(i, i) != 2) throw ConfigError("Cartan diagonal must be 2");
        for (int j = 1; j <= n_; ++j) {
            if (i != j && cartan(i, j) > 0) throw ConfigError("off-diagonal entries must be <= 0");
            if (sym(i) * cartan(i, j) != sym(j) * cartan(j, i))
                throw ConfigError("symmetrizer does not symmetrize the Cartan matrix");
        }
    }
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            int delta = parity(i) - parity(j) - std::min(sym(i), sym(j));
            if (cartan(i, j) < 0 && ((delta % 2) + 2) % 2 != 0)
                throw ConfigError("parity function violates the adjacency constraint");
        }
}

std::vector<long> CartanDatum::qcartan_inverse(int i, int j, int m_max) const {
    if (m_max < 1) throw ConfigError("m_max must be >= 1");
    std::vector<long> out(static_cast<std::size_t>(m_max));
    for (int m = 1; m <= m_max; ++m) out[static_cast<std::size_t>(m - 1)] = ctilde(i, j, m);
    return out;
}

long CartanDatum::ctilde(int i, int j, int m) const {
    if (m <= 0) return 0;
    auto key = std::pair(i, j);
    auto it = ct_cache_.find(key);
    if (it != ct_cache_.end() && static_cast<int>(it->second.size()) >= m)
        return it->second[static_cast<std::size_t>(m - 1)];

    // Solve M(z) Ct(z) = diag(z^{r_i}) order by order, where
    // M(z) = diag(z^{r_i}) C(z) is a polynomial matrix with unimodular
    // constant term M0 for the supported types.
    int grow = std::max(m, 16);
    int maxdeg = 2 * lacing_;
    // rows of M as integer matrices M_k, k = 0..maxdeg
    std::vector<std::vector<std::vector<long>>> mk(
        static_cast<std::size_t>(maxdeg + 1),
        std::vector<std::vector<long>>(static_cast<std::size_t>(n_),
                                       std::vector<long>(static_cast<std::size_t>(n_), 0)));
    for (int a = 1; a <= n_; ++a) {
        // z^{r_a} C_{aa} = 1 + z^{2 r_a}
        mk[0][a - 1][a - 1] += 1;
        mk[static_cast<std::size_t>(2 * sym(a))][a - 1][a - 1] += 1;
        for (int b = 1; b <= n_; ++b) {
            if (a == b || cartan(a, b) == 0) continue;
            // z^{r_a} [c_{ab}]_z = -(z^{r_a+1+c_{ab}} + z^{r_a+3+c_{ab}} + ... + z^{r_a-1-c_{ab}})
            for (int e = sym(a) + 1 + cartan(a, b); e <= sym(a) - 1 - cartan(a, b); e += 2) {
                if (e < 0 || e > maxdeg)
                    throw SingularAtZero("quantum Cartan matrix row not polynomial after clearing");
                mk[static_cast<std::size_t>(e)][a - 1][b - 1] -= 1;
            }
        }
    }
    // invert M0 over the integers (it is unimodular for supported data)
    std::vector<std::vector<Rat>> m0inv(static_cast<std::size_t>(n_),
                                        std::vector<Rat>(static_cast<std::size_t>(n_)));
    {
        std::vector<std::vector<Rat>> aug(static_cast<std::size_t>(n_),
                                          std::vector<Rat>(static_cast<std::size_t>(2 * n_)));
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) aug[a][b] = Rat(mk[0][a][b]);
            aug[a][static_cast<std::size_t>(n_ + a)] = Rat(1);
        }
        for (int k = 0; k < n_; ++k) {
            int piv = k;
            while (piv < n_ && aug[piv][k] == Rat(0)) ++piv;
            if (piv == n_) throw SingularAtZero("constant term of cleared Cartan matrix singular");
            std::swap(aug[k], aug[piv]);
            for (int a = 0; a < n_; ++a) {
                if (a == k || aug[a][k] == Rat(0)) continue;
                Rat f = aug[a][k] / aug[k][k];
                for (int b = k; b < 2 * n_; ++b) aug[a][b] -= f * aug[k][b];
            }
        }
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) m0inv[a][b] = aug[a][static_cast<std::size_t>(n_ + b)] / aug[a][a];
    }

    // ct[m][a][b], m = 1..grow  (ct[m] = coefficient matrix of z^m)
    std::vector<std::vector<std::vector<Rat>>> ct(
        static_cast<std::size_t>(grow + 1),
        std::vector<std::vector<Rat>>(static_cast<std::size_t>(n_),
                                      std::vector<Rat>(static_cast<std::size_t>(n_), Rat(0))));
    for (int mm = 1; mm <= grow; ++mm) {
        std::vector<std::vector<Rat>> rhs(static_cast<std::size_t>(n_),
                                          std::vector<Rat>(static_cast<std::size_t>(n_), Rat(0)));
        for (int a = 1; a <= n_; ++a)
            if (mm == sym(a)) rhs[a - 1][a - 1] = Rat(1);
        for (int k = 1; k <= std::min(mm - 1, maxdeg); ++k)
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b) {
                    if (mk[static_cast<std::size_t>(k)][a][b] == 0) continue;
                    for (int col = 0; col < n_; ++col)
                        rhs[a][col] -= Rat(mk[static_cast<std::size_t>(k)][a][b]) *
                                       ct[static_cast<std::size_t>(mm - k)][b][col];
                }
        for (int a = 0; a < n_; ++a)
            for (int col = 0; col < n_; ++col) {
                Rat acc(0);
                for (int b = 0; b < n_; ++b) acc += m0inv[a][b] * rhs[b][col];
                ct[static_cast<std::size_t>(mm)][a][col] = acc;
            }
    }
    // store every (a,b) pair while we are at it
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b) {
            auto& vec = ct_cache_[{a, b}];
            vec.resize(static_cast<std::size_t>(grow));
            for (int mm = 1; mm <= grow; ++mm) {
                const Rat& v = ct[static_cast<std::size_t>(mm)][a - 1][b - 1];
                if (v.denominator() != 1)
                    throw SingularAtZero("non-integral inverse quantum Cartan coefficient");
                vec[static_cast<std::size_t>(mm - 1)] = v.numerator();
            }
        }
    return ct_cache_[{i, j}][static_cast<std::size_t>(m - 1)];
}

long CartanDatum::n_form(int i, int p, int j, int s) const {
    return ctilde(i, j, p - s - sym(i)) - ctilde(i, j, p - s + sym(i)) -
           ctilde(i, j, s - p - sym(i)) + ctilde(i, j, s - p + sym(i));
}

IHatNode::IHatNode(const CartanDatum& d, int i_, int p_) : i(i_), p(p_) {
    if (!d.in_ihat(i_, p_))
        throw NotInLattice("(" + std::to_string(i_) + "," + std::to_string(p_) +
                           ") violates the parity constraint");
}

long embed_e(const CartanDatum& d, int i, int p) { return i + static_cast<long>(d.rank()) * p; }

std::pair<int, int> unembed_e(const CartanDatum& d, long j) {
    const int n = d.rank();
    long i = j % n;
    if (i <= 0) i += n;
    long p = (j - i) / n;
    if (!d.in_ihat(static_cast<int>(i), static_cast<int>(p)))
        throw NotInLattice("index " + std::to_string(j) + " does not decode into I^");
    return {static_cast<int>(i), static_cast<int>(p)};
}

std::string IMonomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    for (const auto& [k, v] : e_) {
        os << "Y(" << k.first << "," << k.second << ")";
        if (v != 1) os << "^" << v;
    }
    return os.str();
}

IMonomial IMonomial::parse(const std::string& text) {
    IMonomial m;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1' ) {
        ++pos;
        skip_ws();
        if (pos == text.size()) return m;
        throw ConfigError("bad monomial: " + text);
    }
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ConfigError("bad monomial: " + text);
        return std::stoi(text.substr(start, pos - start));
    };
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != 'Y') throw ConfigError("bad monomial: " + text);
        ++pos;
        skip_ws();
        if (pos == text.size() || text[pos] != '(') throw ConfigError("bad monomial: " + text);
        ++pos;
        int i = read_int();
        skip_ws();
        if (pos == text.size() || text[pos] != ',') throw ConfigError("bad monomial: " + text);
        ++pos;
        int p = read_int();
        skip_ws();
        if (pos == text.size() || text[pos] != ')') throw ConfigError("bad monomial: " + text);
        ++pos;
        int exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = read_int();
        }
        m.mul_var(i, p, exp);
    }
    return m;
}

IMonomial a_monomial(const CartanDatum& d, int i, int p) {
    if (!d.in_ihat(i, p - d.sym(i)))
        throw NotInLattice("A(" + std::to_string(i) + "," + std::to_string(p) +
                           ") fails the parity constraint");
    IMonomial m;
    m.mul_var(i, p - d.sym(i), 1);
    m.mul_var(i, p + d.sym(i), 1);
    for (int j = 1; j <= d.rank(); ++j) {
        if (!d.adjacent(i, j)) continue;
        for (int s = p - d.sym(i) + 1; s <= p + d.sym(i) - 1; ++s)
            if (d.in_ihat(j, s)) m.mul_var(j, s, -1);
    }
    return m;
}

long nakajima_level(const CartanDatum& d, const IMonomial& m) {
    long lvl = 0;
    for (const auto& [k, v] : m.exps())
        lvl += static_cast<long>(v) * d.level_weights()[static_cast<std::size_t>(k.first - 1)];
    return lvl;
}

bool MonomialProcessOrder::operator()(const IMonomial& a, const IMonomial& b) const {
    long la = nakajima_level(*d, a), lb = nakajima_level(*d, b);
    if (la != lb) return la > lb;
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exps() < b.exps();
}

bool nakajima_leq(const CartanDatum& d, const IMonomial& m, const IMonomial& m2) {
    IMonomial diff = m2 * m.inverse();
    if (diff.is_one()) return true;
    // candidate window of A_{i,p} factors: support padded by 2r
    int pmin = 0, pmax = 0;
    bool any = false;
    for (const auto& [k, v] : diff.exps()) {
        if (!any) {
            pmin = pmax = k.second;
            any = true;
        }
        pmin = std::min(pmin, k.second);
        pmax = std::max(pmax, k.second);
    }
    if (!any) return true;
    int pad = 2 * d.lacing() + 2;
    pmin -= pad;
    pmax += pad;

    struct Unknown {
        int i, p;
        IMonomial vec;
    };
    std::vector<Unknown> unknowns;
    for (int i = 1; i <= d.rank(); ++i)
        for (int p = pmin; p <= pmax; ++p)
            if (d.in_ihat(i, p - d.sym(i))) unknowns.push_back({i, p, a_monomial(d, i, p)});

    // slot index over the padded window
    std::map<IMonomial::Key, int> slot;
    auto touch = [&](const IMonomial& mm) {
        for (const auto& [k, v] : mm.exps())
            if (!slot.count(k)) slot.emplace(k, static_cast<int>(slot.size()));
    };
    touch(diff);
    for (auto& u : unknowns) touch(u.vec);

    const int rows = static_cast<int>(slot.size());
    const int cols = static_cast<int>(unknowns.size());
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows),
                                    std::vector<Rat>(static_cast<std::size_t>(cols + 1), Rat(0)));
    for (int c = 0; c < cols; ++c)
        for (const auto& [k, v] : unknowns[static_cast<std::size_t>(c)].vec.exps())
            a[static_cast<std::size_t>(slot[k])][static_cast<std::size_t>(c)] = Rat(v);
    for (const auto& [k, v] : diff.exps())
        a[static_cast<std::size_t>(slot[k])][static_cast<std::size_t>(cols)] = Rat(v);

    // gaussian elimination; the A-vectors are linearly independent, so the
    // solution is unique when it exists
    int row = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && row < rows; ++c) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != Rat(0)) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(pr)]);
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] /
                    a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            if (f == Rat(0)) continue;
            for (int cc = c; cc <= cols; ++cc)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                    f * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(cc)];
        }
        pivot_col.push_back(c);
        ++row;
    }
    // consistency
    for (int r = row; r < rows; ++r)
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)] != Rat(0)) return false;
    // nonnegative integral solution
    for (int r = 0; r < row; ++r) {
        Rat v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)] /
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])];
        if (v.denominator() != 1 || v.numerator() < 0) return false;
    }
    return true;
}

}  // namespace qgr
