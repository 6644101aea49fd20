#include "quiverk/schubert.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace qk {

namespace {

constexpr int kFormalVertex = 0;
constexpr int kPaddingVertex = 1;

std::uint32_t formal_key(int i) { return VarId{Family::a, kFormalVertex, i}.key(); }

Monomial with_two(const Monomial& rest, std::uint32_t x, int ex, std::uint32_t y, int ey) {
    Monomial extra;
    if (ex) extra.emplace_back(x, ex);
    if (ey) extra.emplace_back(y, ey);
    if (extra.size() == 2 && extra[0].first > extra[1].first) std::swap(extra[0], extra[1]);
    return mono_mul(rest, extra);
}

// Termwise divided difference (y f - x f^{s}) / (y - x) for x = a_i, y = a_{i+1}.
LaurentPoly divided_difference(const LaurentPoly& f, std::uint32_t x, std::uint32_t y) {
    LaurentPoly out;
    for (const auto& [m, c] : f.terms()) {
        int p = 0, q = 0;
        Monomial rest;
        for (const auto& e : m) {
            if (e.first == x) p = e.second;
            else if (e.first == y) q = e.second;
            else rest.push_back(e);
        }
        if (p <= q) {
            for (int j = 0; j <= q - p; ++j) out.add_term(with_two(rest, x, p + j, y, q - j), c);
        } else if (p > q + 1) {
            Coeff neg = -c;
            for (int j = 0; j < p - q - 1; ++j) out.add_term(with_two(rest, x, q + 1 + j, y, p - 1 - j), neg);
        }
    }
    return out;
}

// Termwise (f - f^{s}) / (x - y) for x = a_i, y = a_{i+1}.
LaurentPoly plain_divided_difference(const LaurentPoly& f, std::uint32_t x, std::uint32_t y) {
    LaurentPoly out;
    for (const auto& [m, c] : f.terms()) {
        int p = 0, q = 0;
        Monomial rest;
        for (const auto& e : m) {
            if (e.first == x) p = e.second;
            else if (e.first == y) q = e.second;
            else rest.push_back(e);
        }
        if (p == q) continue;
        const int lo = std::min(p, q), span = std::abs(p - q);
        const Coeff cc = p > q ? c : Coeff(-c);
        for (int j = 0; j < span; ++j) out.add_term(with_two(rest, x, lo + span - 1 - j, y, lo + j), cc);
    }
    return out;
}

LaurentPoly substitute_key(const LaurentPoly& f, std::uint32_t from, std::uint32_t to) {
    LaurentPoly out;
    for (const auto& [m, c] : f.terms()) {
        int e = mono_exp(m, from);
        if (!e) {
            out.add_term(m, c);
            continue;
        }
        Monomial rest;
        for (const auto& p : m)
            if (p.first != from) rest.push_back(p);
        Monomial one;
        one.emplace_back(to, e);
        out.add_term(mono_mul(rest, one), c);
    }
    return out;
}

// f * (x - b)
LaurentPoly times_difference(const LaurentPoly& f, std::uint32_t x, std::uint32_t b) {
    if (x == b) return LaurentPoly();
    Monomial mx{{x, 1}}, mb{{b, 1}};
    LaurentPoly out;
    for (const auto& [m, c] : f.terms()) {
        out.add_term(mono_mul(m, mx), c);
        out.add_term(mono_mul(m, mb), -c);
    }
    return out;
}

// f * (1 - x/b)
LaurentPoly times_one_minus(const LaurentPoly& f, std::uint32_t x, std::uint32_t b) {
    if (x == b) return LaurentPoly();
    Monomial r;
    if (x < b) r = {{x, 1}, {b, -1}};
    else r = {{b, -1}, {x, 1}};
    LaurentPoly out = f;
    for (const auto& [m, c] : f.terms()) out.add_term(mono_mul(m, r), -c);
    return out;
}

HeckeWord lex_first_chain(const Perm& w) {
    int m = w.size();
    Perm x = w.inverse() * Perm::longest(m);
    HeckeWord picks;
    for (;;) {
        auto d = descents(x);
        if (d.empty()) break;
        picks.push_back(d.front());
        x = x.times_s(d.front());
    }
    std::reverse(picks.begin(), picks.end());
    return picks;
}

}  // namespace

Alphabet Alphabet::reversed() const {
    Alphabet r = *this;
    std::reverse(r.vars.begin(), r.vars.end());
    return r;
}

Alphabet Alphabet::prefix(int n) const {
    if (n > size()) throw AlphabetTooShort("alphabet prefix longer than alphabet");
    Alphabet r;
    r.vars.assign(vars.begin(), vars.begin() + n);
    return r;
}

Alphabet Alphabet::then(const Alphabet& o) const {
    Alphabet r = *this;
    r.vars.insert(r.vars.end(), o.vars.begin(), o.vars.end());
    return r;
}

Alphabet Alphabet::padded(int n, int side) const {
    Alphabet r = *this;
    int next = 1;
    for (const VarId& v : vars)
        if (v.family == Family::a && v.vertex == kPaddingVertex + side) next = std::max(next, v.position + 1);
    while (r.size() < n) r.vars.push_back({Family::a, kPaddingVertex + side, next++});
    return r;
}

Alphabet Alphabet::pads(int count, int side) {
    return Alphabet().padded(count, side);
}

Alphabet Alphabet::of(Family f, int vertex, int n) {
    Alphabet r;
    for (int i = 1; i <= n; ++i) r.vars.push_back({f, vertex, i});
    return r;
}

bool is_padding(VarId v) { return v.family == Family::a && v.vertex >= kPaddingVertex; }

LaurentPoly top_grothendieck(int m, const Alphabet& a, const Alphabet& b) {
    if (m > 1 && (a.size() < m - 1 || b.size() < m - 1)) throw AlphabetTooShort("alphabet shorter than m-1");
    LaurentPoly r(1);
    for (int i = 1; i < m; ++i)
        for (int j = 1; i + j <= m; ++j) r *= LaurentPoly::one_minus_ratio(a[i], b[j]);
    return r;
}

LaurentPoly demazure_op(const LaurentPoly& f, int i, const Alphabet& a) {
    if (a.size() < i + 1) throw AlphabetTooShort("alphabet too short for the operator");
    return divided_difference(f, a[i].key(), a[i + 1].key());
}

namespace {

LaurentPoly demazure_engine(const Perm& w, const HeckeWord& chain, const Alphabet& a, const Alphabet& b, bool ktheory) {
    const int m = w.size();
    if (m <= 1) return LaurentPoly(1);
    {
        Perm x = Perm::identity(m);
        for (int letter : chain) x = x * Perm::simple(letter, m);
        if (!(w * x == Perm::longest(m)) || static_cast<int>(chain.size()) != length(Perm::longest(m)) - length(w))
            throw std::invalid_argument("chain is not a reduced word for w^{-1} w0");
    }
    auto factor = ktheory ? times_one_minus : times_difference;
    std::vector<int> ops(chain.rbegin(), chain.rend());
    int need_a = m - 1;
    for (int k : ops) need_a = std::max(need_a, k + 1);
    if (a.size() < need_a || b.size() < m - 1) throw AlphabetTooShort("alphabet too short for the permutation");

    std::vector<int> last_use(m + 2, -1);
    for (int s = 0; s < static_cast<int>(ops.size()); ++s) {
        last_use[ops[s]] = s;
        last_use[ops[s] + 1] = s;
    }

    struct Pending {
        int ai;
        std::uint32_t b;
    };
    std::vector<Pending> pending;
    for (int i = 1; i < m; ++i)
        for (int j = 1; i + j <= m; ++j) pending.push_back({i, b[j].key()});

    LaurentPoly P(1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> final_factors;
    bool zero = false;

    auto specialize = [&](int j) {
        if (j > a.size()) return;
        std::uint32_t spec = a[j].key();
        P = substitute_key(P, formal_key(j), spec);
        std::vector<Pending> keep;
        for (const Pending& f : pending) {
            if (f.ai != j) {
                keep.push_back(f);
                continue;
            }
            if (f.b == spec) zero = true;
            final_factors.emplace_back(spec, f.b);
        }
        pending.swap(keep);
    };

    for (int j = 1; j <= m; ++j)
        if (last_use[j] < 0) specialize(j);
    if (zero) return LaurentPoly();

    for (int s = 0; s < static_cast<int>(ops.size()); ++s) {
        const int k = ops[s];
        // factors symmetric in a_k, a_{k+1} commute with the operator
        std::map<std::uint32_t, std::pair<int, int>> count;
        for (const Pending& f : pending) {
            if (f.ai == k) ++count[f.b].first;
            else if (f.ai == k + 1) ++count[f.b].second;
        }
        std::vector<Pending> keep;
        std::map<std::uint32_t, std::pair<int, int>> kept;
        for (const Pending& f : pending) {
            if (f.ai != k && f.ai != k + 1) {
                keep.push_back(f);
                continue;
            }
            auto& c = count[f.b];
            auto& kc = kept[f.b];
            int sym = std::min(c.first, c.second);
            int& used = f.ai == k ? kc.first : kc.second;
            if (used < sym) {
                ++used;
                keep.push_back(f);
            } else {
                P = factor(P, formal_key(f.ai), f.b);
            }
        }
        pending.swap(keep);
        P = ktheory ? divided_difference(P, formal_key(k), formal_key(k + 1))
                    : plain_divided_difference(P, formal_key(k), formal_key(k + 1));
        if (P.is_zero()) return P;
        for (int j : {k, k + 1})
            if (last_use[j] == s) specialize(j);
        if (zero) return LaurentPoly();
    }
    for (const Pending& f : pending) final_factors.emplace_back(formal_key(f.ai), f.b);
    for (const auto& [x, y] : final_factors) {
        P = factor(P, x, y);
        if (P.is_zero()) break;
    }
    return P;
}

}  // namespace

LaurentPoly grothendieck_along(const Perm& w, const HeckeWord& chain, const Alphabet& a, const Alphabet& b) {
    return demazure_engine(w, chain, a, b, true);
}

LaurentPoly grothendieck(const Perm& w, const Alphabet& a, const Alphabet& b) {
    Perm t = w.trimmed();
    return grothendieck_along(t, lex_first_chain(t), a, b);
}

LaurentPoly grothendieck_fk(const Perm& w_in, const Alphabet& a, const Alphabet& b) {
    const Perm w = w_in.trimmed();
    const int m = std::max(w.size(), 1);
    std::vector<Cell> cells;  // reading order: rows top to bottom, right to left
    for (int i = 1; i < m; ++i)
        for (int j = m - i; j >= 1; --j) cells.push_back({i, j});
    if (cells.size() > 24) throw std::invalid_argument("staircase too large for the oracle");
    if (m > 1 && (a.size() < m - 1 || b.size() < m - 1)) throw AlphabetTooShort("alphabet shorter than m-1");
    const int lw = length(w);
    LaurentPoly sum;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
        HeckeWord word;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (mask >> c & 1) word.push_back(cells[c].i + cells[c].j - 1);
        if (!(demazure_product(word, m) == w.resized(m))) continue;
        LaurentPoly term(((static_cast<int>(word.size()) - lw) % 2) ? -1 : 1);
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (mask >> c & 1) term *= LaurentPoly::one_minus_ratio(a[cells[c].i], b[cells[c].j]);
        sum += term;
    }
    return sum;
}

LaurentPoly schubert(const Perm& w, const Alphabet& a, const Alphabet& b) {
    const Perm t = w.trimmed();
    return demazure_engine(t, lex_first_chain(t), a, b, false);
}

LaurentPoly grothendieck_partial(const PartialPerm& p, CompletionMode mode, const Alphabet& a, const Alphabet& b) {
    if (mode == CompletionMode::complete) {
        Perm c = complete(p);
        if (a.size() < c.size() || b.size() < c.size())
            throw AlphabetTooShort("alphabet shorter than the completion");
        return grothendieck(c, a, b);
    }
    Perm oc = opposite_complete(p);
    int m = oc.size();
    if (a.size() < m || b.size() < m) throw AlphabetTooShort("alphabet shorter than the completion");
    return grothendieck(conj_longest(oc), a.prefix(m).reversed(), b.prefix(m).reversed());
}

}  // namespace qk
