#include "quiverk/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qk {

std::string VarId::str() const {
    const char* f = family == Family::s ? "s" : family == Family::t ? "t" : "a";
    return std::string(f) + "[" + std::to_string(vertex) + "," + std::to_string(position) + "]";
}

std::string VarId::json_key() const {
    const char* f = family == Family::s ? "s" : family == Family::t ? "t" : "a";
    return std::string(f) + "." + std::to_string(vertex) + "." + std::to_string(position);
}

VarId VarId::parse_json_key(const std::string& s) {
    auto d1 = s.find('.');
    auto d2 = s.find('.', d1 == std::string::npos ? d1 : d1 + 1);
    if (d1 != 1 || d2 == std::string::npos) throw std::invalid_argument("bad variable key: " + s);
    VarId v;
    if (s[0] == 's') v.family = Family::s;
    else if (s[0] == 't') v.family = Family::t;
    else throw std::invalid_argument("bad variable family: " + s);
    v.vertex = std::stoi(s.substr(2, d2 - 2));
    v.position = std::stoi(s.substr(d2 + 1));
    if (v.vertex < 0 || v.position < 1) throw std::invalid_argument("bad variable index: " + s);
    return v;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial mono_inv(const Monomial& a) {
    Monomial out = a;
    for (auto& p : out) p.second = -p.second;
    return out;
}

int mono_exp(const Monomial& m, std::uint32_t var) {
    for (const auto& p : m)
        if (p.first == var) return p.second;
    return 0;
}

int mono_degree(const Monomial& m) {
    int d = 0;
    for (const auto& p : m) d += p.second;
    return d;
}

bool mono_lex_greater(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        std::uint32_t va = i < a.size() ? a[i].first : UINT32_MAX;
        std::uint32_t vb = j < b.size() ? b[j].first : UINT32_MAX;
        if (va == vb) {
            if (a[i].second != b[j].second) return a[i].second > b[j].second;
            ++i;
            ++j;
        } else if (va < vb) {
            return a[i].second > 0;
        } else {
            return b[j].second < 0;
        }
    }
    return false;
}

namespace {
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_lex_greater(a, b); }
};
}  // namespace

LaurentPoly::LaurentPoly(long long c) {
    if (c) terms_.emplace(Monomial{}, Coeff(c));
}

LaurentPoly LaurentPoly::constant(const Coeff& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
}

LaurentPoly LaurentPoly::var(VarId v, int exp) {
    LaurentPoly p;
    Monomial m;
    if (exp) m.emplace_back(v.key(), exp);
    p.terms_.emplace(std::move(m), Coeff(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Coeff& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

LaurentPoly LaurentPoly::one_minus_ratio(VarId a, VarId b) {
    if (a == b) return LaurentPoly();
    Monomial m;
    if (a.key() < b.key()) m = {{a.key(), 1}, {b.key(), -1}};
    else m = {{b.key(), -1}, {a.key(), 1}};
    LaurentPoly p(1);
    p.terms_.emplace(std::move(m), Coeff(-1));
    return p;
}

Coeff LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<std::pair<Monomial, Coeff>> LaurentPoly::sorted_terms() const {
    std::vector<std::pair<Monomial, Coeff>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return mono_lex_greater(a.first, b.first); });
    return v;
}

std::vector<VarId> LaurentPoly::variables() const {
    std::set<std::uint32_t> keys;
    for (const auto& [m, c] : terms_)
        for (const auto& p : m) keys.insert(p.first);
    std::vector<VarId> out;
    for (auto k : keys) out.push_back(VarId::from_key(k));
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.size() * b.size() / 2 + 1);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m, const Coeff& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mono_mul(mm, m), cc * c);
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    LaurentPoly r(1), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

bool LaurentPoly::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) != d) return false;
    return true;
}

int LaurentPoly::min_degree() const {
    int d = INT32_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, mono_degree(m));
    return d;
}

int LaurentPoly::max_degree() const {
    int d = INT32_MIN;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

namespace {
std::string render_vars(const Monomial& m, int sign) {
    std::string out;
    int n = 0;
    for (const auto& [k, e] : m) {
        if ((e > 0) != (sign > 0)) continue;
        if (n++) out += "*";
        out += VarId::from_key(k).str();
        int a = e > 0 ? e : -e;
        if (a != 1) out += "^" + std::to_string(a);
    }
    if (n > 1 && sign < 0) out = "(" + out + ")";
    return out;
}
}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        Coeff a = c < 0 ? Coeff(-c) : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        std::string num = render_vars(m, 1), den = render_vars(m, -1);
        if (num.empty()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << num;
        }
        if (!den.empty()) os << "/" << den;
    }
    return os.str();
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (num.is_zero()) return LaurentPoly();
    if (den.size() == 1) {
        const auto& [m, c] = *den.terms().begin();
        LaurentPoly q;
        for (const auto& [mm, cc] : num.terms()) {
            if (cc % c != 0) throw NotDivisible("coefficient not divisible");
            q.add_term(mono_mul(mm, mono_inv(m)), cc / c);
        }
        return q;
    }
    // any quotient monomial lies in the box of per-variable exponent ranges
    std::map<std::uint32_t, std::pair<int, int>> box_num, box_den;
    auto ranges = [](const LaurentPoly& p, std::map<std::uint32_t, std::pair<int, int>>& box) {
        std::set<std::uint32_t> vars;
        for (const auto& [m, c] : p.terms())
            for (const auto& e : m) vars.insert(e.first);
        for (auto v : vars) box[v] = {INT32_MAX, INT32_MIN};
        for (const auto& [m, c] : p.terms())
            for (auto v : vars) {
                int e = mono_exp(m, v);
                box[v].first = std::min(box[v].first, e);
                box[v].second = std::max(box[v].second, e);
            }
    };
    ranges(num, box_num);
    ranges(den, box_den);
    auto range_of = [](const std::map<std::uint32_t, std::pair<int, int>>& box, std::uint32_t v) {
        auto it = box.find(v);
        return it == box.end() ? std::pair<int, int>{0, 0} : it->second;
    };
    std::set<std::uint32_t> all_vars;
    for (auto& [v, r] : box_num) all_vars.insert(v);
    for (auto& [v, r] : box_den) all_vars.insert(v);
    std::map<std::uint32_t, std::pair<int, int>> qbox;
    for (auto v : all_vars) {
        auto rn = range_of(box_num, v), rd = range_of(box_den, v);
        qbox[v] = {rn.first - rd.first, rn.second - rd.second};
        if (qbox[v].first > qbox[v].second) throw NotDivisible("Newton box of the quotient is empty");
    }
    auto in_box = [&](const Monomial& m) {
        for (auto& [v, r] : qbox) {
            int e = mono_exp(m, v);
            if (e < r.first || e > r.second) return false;
        }
        for (const auto& e : m)
            if (!qbox.count(e.first)) return false;
        return true;
    };

    auto dterms = den.sorted_terms();
    const Monomial lead_m = dterms.front().first;
    const Coeff lead_c = dterms.front().second;
    const Monomial lead_inv = mono_inv(lead_m);

    std::map<Monomial, Coeff, LexGreater> rem(num.terms().begin(), num.terms().end());
    LaurentPoly q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (it->second % lead_c != 0) throw NotDivisible("leading coefficient not divisible");
        Monomial qm = mono_mul(it->first, lead_inv);
        Coeff qc = it->second / lead_c;
        if (!in_box(qm)) throw NotDivisible("quotient term outside the Newton box");
        q.add_term(qm, qc);
        for (const auto& [dm, dc] : dterms) {
            Monomial m = mono_mul(qm, dm);
            auto [jt, fresh] = rem.try_emplace(m, -qc * dc);
            if (!fresh) {
                jt->second -= qc * dc;
                if (jt->second == 0) rem.erase(jt);
            }
        }
    }
    return q;
}

LaurentPoly exact_div_difference(const LaurentPoly& num, VarId a, VarId b) {
    if (a == b) throw std::invalid_argument("division by the zero polynomial");
    const std::uint32_t ka = a.key(), kb = b.key();
    // each cofactor of a monomial free of a and b divides separately
    using Bivariate = std::map<int, std::map<int, Coeff>>;  // a-exponent -> b-exponent -> coeff
    absl::flat_hash_map<Monomial, Bivariate> groups;
    for (const auto& [m, c] : num.terms()) {
        Monomial rest;
        int ea = 0, eb = 0;
        for (const auto& p : m) {
            if (p.first == ka) ea = p.second;
            else if (p.first == kb) eb = p.second;
            else rest.push_back(p);
        }
        groups[rest][ea][eb] += c;
    }
    LaurentPoly q;
    for (auto& [rest, f] : groups) {
        // f_k = q_{k-1} - b q_k, solved from the top a-exponent down
        std::map<int, Coeff> qk;
        const int lo = f.begin()->first;
        for (int k = f.rbegin()->first; k > lo; --k) {
            std::map<int, Coeff> next;
            for (const auto& [e, c] : qk) next[e + 1] += c;
            if (auto it = f.find(k); it != f.end())
                for (const auto& [e, c] : it->second) next[e] += c;
            for (const auto& [e, c] : next) {
                if (c == 0) continue;
                Monomial extra;
                if (k - 1) extra.emplace_back(ka, k - 1);
                if (e) extra.emplace_back(kb, e);
                if (extra.size() == 2 && extra[0].first > extra[1].first) std::swap(extra[0], extra[1]);
                q.add_term(mono_mul(rest, extra), c);
            }
            qk = std::move(next);
        }
        std::map<int, Coeff> residue = f.begin()->second;
        for (const auto& [e, c] : qk) residue[e + 1] += c;
        for (const auto& [e, c] : residue)
            if (c != 0) throw NotDivisible("nonzero remainder dividing by a binomial");
    }
    return q;
}

LaurentPoly exact_div_one_minus_ratio(const LaurentPoly& num, VarId a, VarId b) {
    // 1 - a/b = -(a - b)/b
    Monomial bm;
    bm.emplace_back(b.key(), 1);
    return -exact_div_difference(num, a, b).times_monomial(bm);
}

LaurentPoly rename(const LaurentPoly& p, const VarMap& map) {
    LaurentPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial out;
        for (const auto& [k, e] : m) {
            Monomial one;
            one.emplace_back(map(VarId::from_key(k)).key(), e);
            out = mono_mul(out, one);
        }
        r.add_term(out, c);
    }
    return r;
}

LaurentPoly rename(const LaurentPoly& p, const std::map<VarId, VarId>& map) {
    return rename(p, [&](VarId v) {
        auto it = map.find(v);
        if (it == map.end()) throw std::invalid_argument("rename map is not total on " + v.str());
        return it->second;
    });
}

namespace {

Coeff binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Coeff r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Degree-`deg` part of K(1 - y), K a polynomial in vars[idx..]; lower parts must vanish.
LaurentPoly md_rec(const LaurentPoly& k, const std::vector<std::uint32_t>& vars, std::size_t idx, int deg,
                   int total) {
    if (k.is_zero()) return LaurentPoly();
    if (idx == vars.size()) {
        if (deg == 0) return k;
        throw LowerDegreeResidue("component of degree " + std::to_string(total - deg) +
                                 " survives below the expected degree " + std::to_string(total));
    }
    std::uint32_t v = vars[idx];
    std::map<int, LaurentPoly> by_exp;
    for (const auto& [m, c] : k.terms()) {
        Monomial rest;
        int e = 0;
        for (const auto& p : m) {
            if (p.first == v) e = p.second;
            else rest.push_back(p);
        }
        by_exp[e].add_term(rest, c);
    }
    int kmax = by_exp.rbegin()->first;
    LaurentPoly out;
    for (int j = 0; j <= std::min(deg, kmax); ++j) {
        LaurentPoly g;
        for (const auto& [e, part] : by_exp) {
            Coeff b = binom(e, j);
            if (b == 0) continue;
            if (j & 1) b = -b;
            for (const auto& [m, c] : part.terms()) g.add_term(m, c * b);
        }
        LaurentPoly sub = md_rec(g, vars, idx + 1, deg - j, total);
        if (sub.is_zero()) continue;
        Monomial yj;
        if (j) yj.emplace_back(v, j);
        out += sub.times_monomial(yj);
    }
    return out;
}

}  // namespace

LaurentPoly multidegree_of(const LaurentPoly& kpoly, int expected_degree) {
    if (expected_degree < 0) throw std::invalid_argument("negative expected degree");
    if (kpoly.is_zero()) return LaurentPoly();
    // x^M K has the same lowest component as K
    std::map<std::uint32_t, int> lo;
    for (const auto& [m, c] : kpoly.terms())
        for (const auto& p : m) lo[p.first] = std::min(lo[p.first], p.second);
    Monomial shift;
    for (auto& [v, e] : lo)
        if (e < 0) shift.emplace_back(v, -e);
    LaurentPoly k = kpoly.times_monomial(shift);
    std::vector<std::uint32_t> vars;
    for (auto& [v, e] : lo) vars.push_back(v);
    return md_rec(k, vars, 0, expected_degree, expected_degree);
}

}  // namespace qk
