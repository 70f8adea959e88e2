#include "qgr/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace qgr {

std::string LaurentHalf::str() const {
    if (coeffs().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs().rbegin(); it != coeffs().rend(); ++it) {
        Int c = it->second;
        long e = it->first;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (e == 0 || c != 1) os << c.str();
        if (e != 0) {
            if (c != 1) os << "*";
            os << "t";
            if (e != 2) {
                if (e % 2 == 0)
                    os << "^" << (e / 2);
                else
                    os << "^(" << e << "/2)";
            }
        }
    }
    return os.str();
}

json laurent_to_json(const LaurentHalf& p) {
    json o = json::object();
    for (const auto& [e, c] : p.coeffs()) o[std::to_string(e)] = c.str();
    return o;
}

json zseries_to_json(const ZSeries& s) {
    json o;
    o["order"] = s.order();
    json arr = json::array();
    for (const auto& c : s.coeffs()) arr.push_back(c.str("q"));
    o["coeffs"] = arr;
    return o;
}

json qtelement_to_json(const QTElement& x) {
    std::vector<const IMonomial*> keys;
    for (const auto& [m, c] : x.terms()) keys.push_back(&m);
    std::sort(keys.begin(), keys.end(), [](const IMonomial* a, const IMonomial* b) {
        if (a->total_degree() != b->total_degree())
            return a->total_degree() < b->total_degree();
        return a->exps() < b->exps();
    });
    json arr = json::array();
    for (const IMonomial* m : keys) {
        json t;
        t["monomial"] = m->str();
        t["coeff"] = laurent_to_json(x.coeff(*m));
        arr.push_back(std::move(t));
    }
    json o;
    o["schema"] = 1;
    o["terms"] = arr;
    return o;
}

std::string sl2_pretty(const CartanDatum& d, const IMonomial& m) {
    if (d.rank() != 1) return m.str();
    if (m.is_one()) return "1";
    if (!m.dominant()) return m.str();
    // single fundamental factor: S_j with j = e(1,p)
    if (m.exps().size() == 1 && m.exps().begin()->second == 1) {
        long j = embed_e(d, 1, m.exps().begin()->first.second);
        return "S_" + std::to_string(j);
    }
    return "L(" + m.str() + ")";
}

json jclass_to_json(const CartanDatum& d, const JClass& c, bool conjectural) {
    json arr = json::array();
    for (const auto& [m, coeff] : c.expansion) {
        json t;
        t["simple"] = m.str();
        if (d.rank() == 1) t["name"] = sl2_pretty(d, m);
        t["coeff"] = laurent_to_json(coeff);
        arr.push_back(std::move(t));
    }
    json o;
    o["schema"] = 1;
    o["expansion"] = arr;
    if (conjectural) o["interpretation"] = "conjectural";
    return o;
}

json filtration_to_json(const FiltrationReport& r) {
    json o;
    o["schema"] = 1;
    json seq = json::array();
    for (long j : r.eps) seq.push_back(j);
    o["eps"] = seq;
    json dims = json::object();
    for (const auto& [n, v] : r.graded_dims) dims[std::to_string(n)] = v;
    o["graded_dims"] = dims;
    o["poincare"] = laurent_to_json(r.poincare);
    o["precision_used"] = r.precision_used;
    return o;
}

json mixed_dual_to_json(const std::map<MultiIndex, LaurentHalf>& exp, bool adapted) {
    json o;
    o["schema"] = 1;
    json arr = json::array();
    for (const auto& [d, c] : exp) {
        json t;
        std::ostringstream key;
        for (std::size_t k = 0; k < d.size(); ++k) key << d[k] << (k + 1 < d.size() ? "," : "");
        t["d"] = key.str();
        t["coeff"] = laurent_to_json(c);
        arr.push_back(std::move(t));
    }
    o["expansion"] = arr;
    if (!adapted) o["interpretation"] = "conjectural";
    return o;
}

}  // namespace qgr
