#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgr/laurent.hpp"

namespace qgr {

// Finite-type Cartan datum with symmetrizer and parity function.  The parity
// fixes the sublattice I^ = {(i,p) : p = eps_i mod 2} of spectral parameters.
class CartanDatum {
public:
    static CartanDatum from_type(const std::string& type);  // "A1","A2","A3","D4","B2"
    CartanDatum(std::string name, std::vector<std::vector<int>> cartan,
                std::vector<int> symmetrizer, std::vector<int> parity);

    const std::string& name() const { return name_; }
    int rank() const { return n_; }
    int cartan(int i, int j) const { return c_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
    int sym(int i) const { return r_[static_cast<std::size_t>(i - 1)]; }
    int lacing() const { return lacing_; }
    int parity(int i) const { return eps_[static_cast<std::size_t>(i - 1)]; }
    bool simply_laced() const { return lacing_ == 1; }
    bool adjacent(int i, int j) const { return i != j && cartan(i, j) < 0; }

    bool in_ihat(int i, int p) const {
        return i >= 1 && i <= n_ && ((p - parity(i)) % 2 == 0);
    }

    // inverse quantum Cartan coefficients c~_{ij}(m), m = 1..m_max
    std::vector<long> qcartan_inverse(int i, int j, int m_max) const;

    // the skew form N(i,p;j,s)
    long n_form(int i, int p, int j, int s) const;

    // 2 rho^vee pairing weights: twice the level of the fundamental weight
    // w_i, used for a strictly monotone refinement of the Nakajima order
    const std::vector<long>& level_weights() const { return level2_; }

private:
    void validate() const;
    long ctilde(int i, int j, int m) const;  // memoized, 0 for m <= 0

    std::string name_;
    int n_;
    std::vector<std::vector<int>> c_;
    std::vector<int> r_;
    int lacing_;
    std::vector<int> eps_;
    std::vector<long> level2_;
    // memo: (i,j) -> expansion coefficients, grown on demand
    mutable std::map<std::pair<int, int>, std::vector<long>> ct_cache_;
};

// A node (i,p) of I^.  Construction enforces the parity constraint.
struct IHatNode {
    int i;
    int p;
    IHatNode(const CartanDatum& d, int i_, int p_);
    friend bool operator<(const IHatNode& a, const IHatNode& b) {
        return std::pair(a.i, a.p) < std::pair(b.i, b.p);
    }
    friend bool operator==(const IHatNode& a, const IHatNode& b) {
        return a.i == b.i && a.p == b.p;
    }
};

// e : (i,p) -> i + n p   (injective on I^, order-compatible in p)
long embed_e(const CartanDatum& d, int i, int p);
// inverse of e; validates membership in I^
std::pair<int, int> unembed_e(const CartanDatum& d, long j);

// Laurent monomial in the variables Y_{i,p}, stored as its exponent map.
class IMonomial {
public:
    using Key = std::pair<int, int>;  // (i, p)
    using Map = std::map<Key, int>;

    IMonomial() = default;

    static IMonomial variable(int i, int p, int exp = 1) {
        IMonomial m;
        if (exp != 0) m.e_[{i, p}] = exp;
        return m;
    }

    bool is_one() const { return e_.empty(); }
    const Map& exps() const { return e_; }
    int exp(int i, int p) const {
        auto it = e_.find({i, p});
        return it == e_.end() ? 0 : it->second;
    }
    void mul_var(int i, int p, int k) {
        if (k == 0) return;
        auto [it, ins] = e_.try_emplace({i, p}, k);
        if (!ins) {
            it->second += k;
            if (it->second == 0) e_.erase(it);
        }
    }

    IMonomial operator*(const IMonomial& o) const {
        IMonomial r = *this;
        for (const auto& [k, v] : o.e_) r.mul_var(k.first, k.second, v);
        return r;
    }
    IMonomial inverse() const {
        IMonomial r;
        for (const auto& [k, v] : e_) r.e_[k] = -v;
        return r;
    }

    bool dominant() const {
        for (const auto& [k, v] : e_)
            if (v < 0) return false;
        return true;
    }
    // all exponents of node i are >= 0
    bool node_dominant(int i) const {
        for (const auto& [k, v] : e_)
            if (k.first == i && v < 0) return false;
        return true;
    }
    int total_degree() const {
        int s = 0;
        for (const auto& [k, v] : e_) s += v;
        return s;
    }

    friend bool operator==(const IMonomial& a, const IMonomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const IMonomial& a, const IMonomial& b) { return !(a == b); }
    friend bool operator<(const IMonomial& a, const IMonomial& b) { return a.e_ < b.e_; }

    std::string str() const;                          // "Y(1,0)Y(1,2)^2" or "1"
    static IMonomial parse(const std::string& text);  // inverse of str

private:
    Map e_;
};

// loop analog of a simple root: A_{i,p}; requires (i, p - r_i) in I^
IMonomial a_monomial(const CartanDatum& d, int i, int p);

// Nakajima partial order: m <= m2 iff m2 * m^{-1} is a product of A_{i,p}
// with nonnegative exponents (unique candidate by linear independence)
bool nakajima_leq(const CartanDatum& d, const IMonomial& m, const IMonomial& m2);

// strictly monotone refinement of the Nakajima order used as processing
// order: level decreases exactly by one for every A^{-1} factor
long nakajima_level(const CartanDatum& d, const IMonomial& m);

// deterministic total order: higher level first, then total degree, then lex
struct MonomialProcessOrder {
    const CartanDatum* d;
    bool operator()(const IMonomial& a, const IMonomial& b) const;
};

}  // namespace qgr
