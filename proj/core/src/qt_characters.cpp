#include "qgr/qt_characters.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "qgr/errors.hpp"

namespace qgr {

namespace {

bool is_rank_one(const CartanDatum& d) { return d.rank() == 1 && d.sym(1) == 1; }

// the part of w with positive exponents; for anti-symmetric w this is the
// unique q in t^{>0} Z[t^{1/2}] with q - bar(q) = w
LaurentHalf positive_half(const LaurentHalf& w) {
    LaurentHalf q;
    for (const auto& [e, c] : w.coeffs())
        if (e > 0) q.add_term(e, c);
    return q;
}

// factor a monomial quotient of an sl2 lattice into A_{1,s} exponents:
// diff = prod_s A_{1,s}^{v_s}; returns (s, v_s) with v_s > 0
std::vector<std::pair<int, int>> sl2_a_path(const IMonomial& diff) {
    std::map<int, int> tau;
    for (const auto& [k, v] : diff.exps()) tau[k.second] = v;
    std::vector<std::pair<int, int>> out;
    while (!tau.empty()) {
        auto it = tau.begin();
        int s0 = it->first, v = it->second;
        tau.erase(it);
        if (v == 0) continue;
        if (v < 0) throw Error("Internal", "negative exponent in sl2 A-path");
        out.emplace_back(s0 + 1, v);
        tau[s0 + 2] -= v;
        if (tau[s0 + 2] == 0) tau.erase(s0 + 2);
    }
    return out;
}

}  // namespace

CharTable::CharTable(CartanDatum datum, std::size_t monomial_cap)
    : datum_(std::move(datum)), cap_(monomial_cap) {}

CharTable& CharTable::sl2_table() {
    static CharTable t(CartanDatum::from_type("A1"));
    return t;
}

bool CharTable::proc_less(const IMonomial& a, const IMonomial& b) const {
    long la = nakajima_level(datum_, a), lb = nakajima_level(datum_, b);
    if (la != lb) return la > lb;
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return reverse_tiebreak_ ? b.exps() < a.exps() : a.exps() < b.exps();
}

QTElement CharTable::node_expansion(const IMonomial& m, int j) const {
    const int rj = datum_.sym(j);
    const int period = 2 * rj;
    // node content grouped by spectral residue class
    std::map<int, std::map<int, int>> classes;  // anchor -> (sl2 slot -> exponent)
    for (const auto& [k, v] : m.exps()) {
        if (k.first != j) continue;
        if (v < 0) throw Error("Internal", "node_expansion on a non-dominant content");
        int anchor = ((k.second % period) + period) % period;
        classes[anchor][(k.second - anchor) / rj] += v;
    }
    QTElement out = QTElement::underline(m);
    for (const auto& [anchor, content] : classes) {
        IMonomial top;
        for (const auto& [s, v] : content) top.mul_var(1, s, v);
        QTElement local = is_rank_one(datum_)
                              ? const_cast<CharTable*>(this)->lt_canonical(top)
                              : sl2_table().lt_canonical(top);
        // transport: each sl2 term nu = top * prod A_{1,s}^{-v}; lift the
        // A-path into this datum at node j and residue class `anchor`
        QTElement lifted;
        for (const auto& [nu, coeff] : local.terms()) {
            IMonomial shift;  // multiplies m
            for (const auto& [s, v] : sl2_a_path(top * nu.inverse())) {
                IMonomial a = a_monomial(datum_, j, anchor + s * rj);
                for (int rep = 0; rep < v; ++rep) shift = shift * a.inverse();
            }
            lifted.add_term(shift, coeff);
        }
        // combine with the classes already handled: coefficients multiply and
        // the A-shifts compose
        QTElement next;
        for (const auto& [sh1, c1] : out.terms())
            for (const auto& [sh2, c2] : lifted.terms()) next.add_term(sh1 * sh2, c1 * c2);
        out = std::move(next);
    }
    return out;
}

QTElement CharTable::ft_uncached(int i, int p) const {
    if (!datum_.in_ihat(i, p))
        throw NotInLattice("fundamental index (" + std::to_string(i) + "," +
                           std::to_string(p) + ") not in I^");
    if (is_rank_one(datum_)) {
        QTElement f = QTElement::underline(IMonomial::variable(1, p));
        f.add_term(IMonomial::variable(1, p) * a_monomial(datum_, 1, p + 1).inverse(),
                   LaurentHalf::one());
        return f;
    }
    if (!datum_.simply_laced() && datum_.name() != "B2")
        throw ValidationFailure("F_t supported for simply-laced data and B2 only");

    const int n = datum_.rank();
    auto cmp = [this](const IMonomial& a, const IMonomial& b) { return proc_less(a, b); };
    std::set<IMonomial, decltype(cmp)> agenda(cmp);
    std::set<IMonomial> done;
    std::vector<std::map<IMonomial, LaurentHalf>> forced(static_cast<std::size_t>(n));
    const IMonomial top = IMonomial::variable(i, p);
    agenda.insert(top);
    QTElement result;
    std::size_t processed = 0;

    while (!agenda.empty()) {
        if (++processed > cap_)
            throw NonTermination("monomial cap " + std::to_string(cap_) +
                                 " exceeded in fundamental character completion");
        IMonomial m = *agenda.begin();
        agenda.erase(agenda.begin());
        done.insert(m);

        std::vector<int> dom_dirs, other_dirs;
        for (int j = 1; j <= n; ++j)
            (m.node_dominant(j) ? dom_dirs : other_dirs).push_back(j);

        LaurentHalf coeff;
        if (m == top) {
            coeff = LaurentHalf::one();
        } else if (!other_dirs.empty()) {
            auto grab = [&](int j) {
                auto it = forced[static_cast<std::size_t>(j - 1)].find(m);
                return it == forced[static_cast<std::size_t>(j - 1)].end() ? LaurentHalf::zero()
                                                                           : it->second;
            };
            coeff = grab(other_dirs.front());
            for (std::size_t k = 1; k < other_dirs.size(); ++k)
                if (grab(other_dirs[k]) != coeff)
                    throw ValidationFailure(
                        "inconsistent node-forced coefficients at " + m.str() +
                        " while completing F_t(" + top.str() + ")");
        } else {
            // dominant in every direction means dominant, impossible below top
            throw ValidationFailure("second dominant monomial " + m.str() +
                                    " discovered in F_t(" + top.str() + ")");
        }

        for (int j : dom_dirs) {
            auto& fj = forced[static_cast<std::size_t>(j - 1)];
            LaurentHalf have;
            if (auto it = fj.find(m); it != fj.end()) have = it->second;
            LaurentHalf lambda = coeff - have;
            if (lambda.is_zero()) continue;
            QTElement e = node_expansion(m, j);
            for (const auto& [mu, c] : e.terms()) {
                auto [it, ins] = fj.try_emplace(mu, lambda * c);
                if (!ins) {
                    it->second += lambda * c;
                    if (it->second.is_zero()) fj.erase(it);
                }
                if (mu != m && !done.count(mu)) agenda.insert(mu);
            }
        }
        result.add_term(m, coeff);
    }
    // independent validation
    for (int j = 1; j <= n; ++j)
        if (!in_k_it(result, j))
            throw ValidationFailure("completed F_t(" + top.str() +
                                    ") fails the node-" + std::to_string(j) +
                                    " membership test");
    int dominants = 0;
    for (const auto& [m, c] : result.terms())
        if (m.dominant()) ++dominants;
    if (dominants != 1 || result.coeff(top) != LaurentHalf::one())
        throw ValidationFailure("F_t(" + top.str() + ") lacks a unique dominant monomial");
    return result;
}

QTElement CharTable::ft_fundamental(int i, int p) {
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = ft_cache_.find({i, p});
        if (it != ft_cache_.end()) return it->second;
    }
    QTElement f = ft_uncached(i, p);
    std::lock_guard<std::mutex> g(mu_);
    return ft_cache_.emplace(std::pair(i, p), std::move(f)).first->second;
}

QTElement CharTable::et_uncached(const IMonomial& m) {
    if (!m.dominant()) throw ValidationFailure("E_t of a non-dominant monomial " + m.str());
    if (m.is_one()) return QTElement::one();
    // factors ordered with larger spectral parameter to the left; inside a
    // fixed parameter, by node index
    std::vector<std::pair<int, int>> factors;  // (i,p) repeated per exponent
    for (const auto& [k, v] : m.exps())
        for (int rep = 0; rep < v; ++rep) factors.emplace_back(k.first, k.second);
    std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    // monomial prefactor: u(m) * (ordered product of u(Y))^{-1} is a pure
    // power of t since the monomials agree
    QTElement mono = QTElement::underline(IMonomial::variable(factors[0].first, factors[0].second));
    QTElement prod = ft_fundamental(factors[0].first, factors[0].second);
    for (std::size_t k = 1; k < factors.size(); ++k) {
        mono = qt_mul(datum_, mono,
                      QTElement::underline(IMonomial::variable(factors[k].first, factors[k].second)));
        prod = qt_mul(datum_, prod, ft_fundamental(factors[k].first, factors[k].second));
    }
    if (mono.size() != 1 || !(mono.terms().begin()->first == m))
        throw Error("Internal", "ordered monomial product mismatch in E_t");
    const LaurentHalf& tw = mono.terms().begin()->second;  // +-t^{k/2}
    if (!tw.is_monomial()) throw Error("Internal", "non-monomial twist in E_t");
    auto [e, c] = *tw.coeffs().begin();
    if (c != 1 && c != -1) throw Error("Internal", "non-unit twist in E_t");
    LaurentHalf inv(-e, c);  // inverse of +-t^{e/2}
    return prod.scaled(inv);
}

QTElement CharTable::et_standard(const IMonomial& m) {
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = et_cache_.find(m);
        if (it != et_cache_.end()) return it->second;
    }
    QTElement e = et_uncached(m);
    std::lock_guard<std::mutex> g(mu_);
    return et_cache_.emplace(m, std::move(e)).first->second;
}

QTElement CharTable::lt_uncached(const IMonomial& m) {
    QTElement l = et_standard(m);
    while (true) {
        QTElement d = l - qt_bar(l);
        if (d.is_zero()) break;
        // maximal monomial of the defect in processing order
        const IMonomial* mu = nullptr;
        for (const auto& [mm, c] : d.terms())
            if (!mu || proc_less(mm, *mu)) mu = &mm;
        if (!mu->dominant())
            throw TriangularityViolation("bar defect led by non-dominant monomial " +
                                         mu->str() + " below " + m.str());
        if (*mu == m || !nakajima_leq(datum_, *mu, m))
            throw TriangularityViolation("bar defect monomial " + mu->str() +
                                         " is not strictly below " + m.str());
        LaurentHalf q = positive_half(d.coeff(*mu));
        if ((q - q.bar()) != d.coeff(*mu))
            throw TriangularityViolation("bar defect at " + mu->str() +
                                         " is not anti-symmetric");
        l -= lt_canonical(*mu).scaled(q);
    }
    return l;
}

QTElement CharTable::lt_canonical(const IMonomial& m) {
    if (!m.dominant()) throw ValidationFailure("L_t of a non-dominant monomial " + m.str());
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = lt_cache_.find(m);
        if (it != lt_cache_.end()) return it->second;
    }
    QTElement l = lt_uncached(m);
    std::lock_guard<std::mutex> g(mu_);
    return lt_cache_.emplace(m, std::move(l)).first->second;
}

std::map<IMonomial, LaurentHalf> CharTable::lt_expand(const QTElement& x) {
    std::map<IMonomial, LaurentHalf> out;
    QTElement r = x;
    std::size_t guard = 0;
    while (!r.is_zero()) {
        if (++guard > cap_) throw NonTermination("L_t expansion did not terminate");
        const IMonomial* mu = nullptr;
        for (const auto& [mm, c] : r.terms())
            if (!mu || proc_less(mm, *mu)) mu = &mm;
        if (!mu->dominant())
            throw TriangularityViolation("L_t expansion led by non-dominant " + mu->str());
        LaurentHalf p = r.coeff(*mu);
        out[*mu] = p;
        r -= lt_canonical(*mu).scaled(p);
    }
    return out;
}

std::map<IMonomial, LaurentHalf> CharTable::p_polynomials(const IMonomial& m) {
    return lt_expand(et_standard(m));
}

Int CharTable::dim_simple(const IMonomial& m) {
    if (!datum_.simply_laced())
        throw ValidationFailure("dim_simple requires a simply-laced datum");
    Int s = 0;
    for (const auto& [mm, v] : ev_t1(lt_canonical(m))) s += v;
    return s;
}

bool CharTable::in_k_it(const QTElement& x, int i) const {
    QTElement r = x;
    std::size_t guard = 0;
    while (!r.is_zero()) {
        if (++guard > cap_) throw NonTermination("membership test did not terminate");
        const IMonomial* mu = nullptr;
        for (const auto& [mm, c] : r.terms())
            if (!mu || proc_less(mm, *mu)) mu = &mm;
        if (!mu->node_dominant(i)) return false;
        r -= node_expansion(*mu, i).scaled(r.coeff(*mu));
    }
    return true;
}

bool CharTable::in_kt(const QTElement& x) const {
    for (int i = 1; i <= datum_.rank(); ++i)
        if (!in_k_it(x, i)) return false;
    return true;
}

}  // namespace qgr
