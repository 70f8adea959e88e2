#include "qgr/mixed.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

SeqEps::SeqEps(const CartanDatum& d, std::vector<long> entries)
    : d_(&d), e_(std::move(entries)) {
    nodes_.reserve(e_.size());
    for (long j : e_) nodes_.push_back(unembed_e(d, j));
}

bool SeqEps::is_standard() const {
    return std::is_sorted(e_.rbegin(), e_.rend());
}

bool SeqEps::is_costandard() const {
    return std::is_sorted(e_.begin(), e_.end());
}

SeqEps SeqEps::reversed() const {
    std::vector<long> v(e_.rbegin(), e_.rend());
    return SeqEps(*d_, std::move(v));
}

SeqEps SeqEps::sorted_standard() const {
    std::vector<long> v = e_;
    std::sort(v.rbegin(), v.rend());
    return SeqEps(*d_, std::move(v));
}

SeqEps SeqEps::sorted_costandard() const {
    std::vector<long> v = e_;
    std::sort(v.begin(), v.end());
    return SeqEps(*d_, std::move(v));
}

SeqEps SeqEps::concat(const SeqEps& o) const {
    std::vector<long> v = e_;
    v.insert(v.end(), o.e_.begin(), o.e_.end());
    return SeqEps(*d_, std::move(v));
}

IMonomial SeqEps::product_monomial() const {
    IMonomial m;
    for (const auto& [i, p] : nodes_) m.mul_var(i, p, 1);
    return m;
}

std::string SeqEps::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < e_.size(); ++k) os << e_[k] << (k + 1 < e_.size() ? "," : "");
    os << ")";
    return os.str();
}

SeqEps standard_sequence(const CartanDatum& d, const IMonomial& m) {
    std::vector<long> v;
    for (const auto& [k, e] : m.exps()) {
        if (e < 0) throw ValidationFailure("standard sequence of a non-dominant monomial");
        for (int rep = 0; rep < e; ++rep) v.push_back(embed_e(d, k.first, k.second));
    }
    std::sort(v.rbegin(), v.rend());
    return SeqEps(d, std::move(v));
}

SeqEps costandard_sequence(const CartanDatum& d, const IMonomial& m) {
    SeqEps s = standard_sequence(d, m);
    return s.reversed();
}

AlphaTable AlphaTable::a1() {
    AlphaTable t;
    t.a1_rule_ = true;
    return t;
}

AlphaTable AlphaTable::from_pairs(const std::vector<std::tuple<long, long, int>>& entries) {
    AlphaTable t;
    for (const auto& [a, b, v] : entries) {
        t.t_[{std::min(a, b), std::max(a, b)}] = v;
    }
    return t;
}

int AlphaTable::alpha(long j, long j2) const {
    if (j == j2) return 0;
    if (a1_rule_) return std::abs(j - j2) == 2 ? 1 : 0;
    auto it = t_.find({std::min(j, j2), std::max(j, j2)});
    if (it == t_.end())
        throw ConfigError("alpha(" + std::to_string(j) + "," + std::to_string(j2) +
                          ") not present in the supplied table");
    return it->second;
}

std::vector<std::vector<long>> eps_up_set(const SeqEps& a, const AlphaTable& table) {
    std::set<std::vector<long>> seen{a.entries()};
    std::deque<std::vector<long>> queue{a.entries()};
    while (!queue.empty()) {
        std::vector<long> cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
            long x = cur[k], y = cur[k + 1];
            if (x == y) continue;
            int al = table.alpha(x, y);
            // neutral swaps move both ways; positive swaps (descending pair)
            // move strictly up
            if (al == 0 || (al > 0 && x > y)) {
                std::vector<long> nxt = cur;
                std::swap(nxt[k], nxt[k + 1]);
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

SeqOrder eps_preorder(const SeqEps& a, const SeqEps& b, const AlphaTable& table) {
    if (a.size() != b.size()) throw ValidationFailure("sequences of different length");
    auto up_a = eps_up_set(a, table);
    bool ab = std::find(up_a.begin(), up_a.end(), b.entries()) != up_a.end();
    auto up_b = eps_up_set(b, table);
    bool ba = std::find(up_b.begin(), up_b.end(), a.entries()) != up_b.end();
    if (ab && ba) return SeqOrder::Equivalent;
    if (ab) return SeqOrder::Less;
    if (ba) return SeqOrder::Greater;
    return SeqOrder::Incomparable;
}

long gamma_doubled(const CartanDatum& d, const IMonomial& da, const IMonomial& db) {
    return -n_form_monomials(d, da, db);
}

QTElement et_mixed(CharTable& table, const SeqEps& eps) {
    const CartanDatum& d = table.datum();
    if (eps.size() == 0) return QTElement::one();
    long twist = 0;  // doubled: sum of N(eps_k, eps_l) over k < l
    for (std::size_t k = 0; k < eps.size(); ++k)
        for (std::size_t l = k + 1; l < eps.size(); ++l) {
            const auto& [ik, pk] = eps.nodes()[k];
            const auto& [il, pl] = eps.nodes()[l];
            twist += d.n_form(ik, pk, il, pl);
        }
    QTElement prod = table.ft_fundamental(eps.nodes()[0].first, eps.nodes()[0].second);
    for (std::size_t k = 1; k < eps.size(); ++k)
        prod = qt_mul(d, prod, table.ft_fundamental(eps.nodes()[k].first, eps.nodes()[k].second));
    return prod.scaled(LaurentHalf::t_half_pow(twist));
}

JClass JClass::scaled(const LaurentHalf& c) const {
    JClass r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : expansion) r.expansion[m] = k * c;
    return r;
}

JClass& JClass::operator+=(const JClass& o) {
    for (const auto& [m, c] : o.expansion) {
        auto [it, ins] = expansion.try_emplace(m, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) expansion.erase(it);
        }
    }
    return *this;
}

std::string JClass::str() const {
    if (expansion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : expansion) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[" << m.str() << "]";
    }
    return os.str();
}

JClass jantzen_class(CharTable& table, const SeqEps& eps) {
    if (!table.datum().simply_laced())
        throw ValidationFailure("Jantzen classes require a simply-laced datum");
    JClass r;
    r.expansion = table.lt_expand(et_mixed(table, eps));
    return r;
}

JClass m_n(CharTable& table, const std::vector<IMonomial>& entries) {
    const CartanDatum& d = table.datum();
    if (entries.empty()) throw ValidationFailure("m_n needs at least one entry");
    long twist = 0;  // doubled gamma sum
    for (std::size_t k = 0; k < entries.size(); ++k)
        for (std::size_t l = k + 1; l < entries.size(); ++l)
            twist += gamma_doubled(d, entries[k], entries[l]);
    SeqEps seq = standard_sequence(d, entries[0]);
    for (std::size_t k = 1; k < entries.size(); ++k)
        seq = seq.concat(standard_sequence(d, entries[k]));
    return jantzen_class(table, seq).scaled(LaurentHalf::t_half_pow(twist));
}

std::map<IMonomial, LaurentHalf> to_standard_basis(CharTable& table, const JClass& x) {
    std::map<IMonomial, LaurentHalf> out;
    JClass r = x;
    MonomialProcessOrder ord{&table.datum()};
    std::size_t guard = 0;
    while (!r.is_zero()) {
        if (++guard > table.monomial_cap())
            throw NonTermination("standard-basis expansion did not terminate");
        const IMonomial* mu = nullptr;
        for (const auto& [m, c] : r.expansion)
            if (!mu || ord(m, *mu)) mu = &m;
        LaurentHalf a = r.expansion.at(*mu);
        IMonomial d = *mu;
        out[d] = a;
        JClass basis = jantzen_class(table, standard_sequence(table.datum(), d));
        r += basis.scaled(-a);
    }
    return out;
}

JClass star(CharTable& table, const JClass& x, const JClass& y) {
    const CartanDatum& dat = table.datum();
    auto xs = to_standard_basis(table, x);
    auto ys = to_standard_basis(table, y);
    JClass out;
    for (const auto& [dx, cx] : xs)
        for (const auto& [dy, cy] : ys) {
            long tw = gamma_doubled(dat, dx, dy);
            SeqEps seq = standard_sequence(dat, dx).concat(standard_sequence(dat, dy));
            out += jantzen_class(table, seq).scaled(cx * cy * LaurentHalf::t_half_pow(tw));
        }
    return out;
}

std::vector<std::string> check_associativity(CharTable& table,
                                             const std::vector<IMonomial>& entries) {
    std::vector<std::string> failures;
    const std::size_t n = entries.size();
    if (n < 2) return failures;
    JClass full = m_n(table, entries);
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<IMonomial> left(entries.begin(), entries.begin() + static_cast<long>(k));
        std::vector<IMonomial> right(entries.begin() + static_cast<long>(k), entries.end());
        JClass split = star(table, m_n(table, left), m_n(table, right));
        if (!(split == full)) {
            std::ostringstream os;
            os << "split at " << k << ": m_n gives " << full.str() << " but product gives "
               << split.str();
            failures.push_back(os.str());
        }
    }
    return failures;
}

bool check_duality(CharTable& table, const SeqEps& eps) {
    return qt_bar(et_mixed(table, eps)) == et_mixed(table, eps.reversed());
}

}  // namespace qgr
