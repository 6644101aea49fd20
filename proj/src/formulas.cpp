#include "quiverk/formulas.hpp"

#include <sstream>

#include "quiverk/schubert.hpp"
#include "quiverk/zelevinsky.hpp"

namespace qk {

std::string to_string(Formula f) {
    switch (f) {
        case Formula::ratio: return "ratio";
        case Formula::pipe: return "pipe";
        case Formula::component: return "component";
    }
    return "?";
}

Formula parse_formula(const std::string& s) {
    if (s == "ratio") return Formula::ratio;
    if (s == "pipe") return Formula::pipe;
    if (s == "component") return Formula::component;
    throw std::invalid_argument("unknown formula '" + s + "'");
}

BipartiteContext::BipartiteContext(const QuiverSpec& q, Limits lim)
    : b_(q), layout_(b_), vstar_(v_star(layout_)), lim_(lim) {}

Perm BipartiteContext::zperm(const OrbitSpec& spec) const { return zperm_from_orbit(spec, layout_); }

int BipartiteContext::codim(const OrbitSpec& spec) const { return qk::codim(zperm(spec), vstar_); }

const LaurentPoly& BipartiteContext::g_vstar() const {
    if (!gstar_) gstar_ = grothendieck(vstar_, layout_.row_alphabet(), layout_.col_alphabet());
    return *gstar_;
}

const LaurentPoly& BipartiteContext::s_vstar() const {
    if (!sstar_) sstar_ = schubert(vstar_, layout_.row_alphabet(), layout_.col_alphabet());
    return *sstar_;
}

const std::optional<std::vector<Cell>>& BipartiteContext::vstar_factors() const {
    if (!factors_) {
        const Alphabet ra = layout_.row_alphabet(), ca = layout_.col_alphabet();
        const std::vector<Cell> cells = star_pipe_dream(layout_).crosses;
        LaurentPoly g(1), s(1);
        for (const Cell& c : cells) {
            g *= LaurentPoly::one_minus_ratio(ra[c.i], ca[c.j]);
            s *= LaurentPoly::var(ra[c.i]) - LaurentPoly::var(ca[c.j]);
        }
        factors_ = (g == g_vstar() && s == s_vstar()) ? std::optional<std::vector<Cell>>(cells) : std::nullopt;
    }
    return *factors_;
}

LaurentPoly BipartiteContext::divide_by_g_vstar(const LaurentPoly& num) const {
    const auto& cells = vstar_factors();
    if (!cells) return exact_div(num, g_vstar());
    const Alphabet ra = layout_.row_alphabet(), ca = layout_.col_alphabet();
    LaurentPoly q = num;
    for (const Cell& c : *cells) q = exact_div_one_minus_ratio(q, ra[c.i], ca[c.j]);
    return q;
}

LaurentPoly BipartiteContext::divide_by_s_vstar(const LaurentPoly& num) const {
    const auto& cells = vstar_factors();
    if (!cells) return exact_div(num, s_vstar());
    const Alphabet ra = layout_.row_alphabet(), ca = layout_.col_alphabet();
    LaurentPoly q = num;
    for (const Cell& c : *cells) q = exact_div_difference(q, ra[c.i], ca[c.j]);
    return q;
}

namespace {

int parity_sign(int e) { return (e % 2 + 2) % 2 ? -1 : 1; }

FormulaResult start(Formula f, const OrbitSpec& spec, const BipartiteContext& ctx) {
    spec.check(ctx.structure().quiver());
    FormulaResult r;
    r.formula = f;
    r.orbit = spec;
    r.codim = ctx.codim(spec);
    return r;
}

}  // namespace

FormulaResult ratio_formula(const OrbitSpec& spec, const BipartiteContext& ctx) {
    FormulaResult r = start(Formula::ratio, spec, ctx);
    if (ctx.structure().d() > ctx.limits().max_ratio_d)
        throw TooLarge("ratio formula refused: d = " + std::to_string(ctx.structure().d()) + " exceeds " +
                       std::to_string(ctx.limits().max_ratio_d));
    const Perm vr = ctx.zperm(spec);
    const Alphabet ra = ctx.layout().row_alphabet(), ca = ctx.layout().col_alphabet();
    const LaurentPoly g = grothendieck(vr, ra, ca);
    r.kpoly = ctx.divide_by_g_vstar(g);
    r.multidegree = ctx.divide_by_s_vstar(schubert(vr, ra, ca));
    r.counts["numerator_terms"] = g.size();
    r.counts["denominator_terms"] = ctx.g_vstar().size();
    return r;
}

std::vector<PipeSummand> pipe_summands(const OrbitSpec& spec, const BipartiteContext& ctx) {
    const BlockLayout& layout = ctx.layout();
    const Perm vr = ctx.zperm(spec);
    const int cd = qk::codim(vr, ctx.vstar());
    std::vector<PipeSummand> out;
    for (PipeDream& p : enumerate_pipes(layout, vr, false, ctx.limits().max_enumeration)) {
        std::vector<Cell> snake = snake_crosses(p, layout);
        PipeSummand s{std::move(p), parity_sign(static_cast<int>(snake.size()) - cd), LaurentPoly(1)};
        for (const Cell& c : snake) s.value *= LaurentPoly::one_minus_ratio(layout.row_var(c.i), layout.col_var(c.j));
        if (s.sign < 0) s.value = -s.value;
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

LaurentPoly pipe_monomial_md(const PipeDream& p, const BlockLayout& layout) {
    LaurentPoly m(1);
    for (const Cell& c : snake_crosses(p, layout))
        m *= LaurentPoly::var(layout.row_var(c.i)) - LaurentPoly::var(layout.col_var(c.j));
    return m;
}

}  // namespace

FormulaResult pipe_formula(const OrbitSpec& spec, const BipartiteContext& ctx) {
    FormulaResult r = start(Formula::pipe, spec, ctx);
    std::size_t reduced = 0;
    for (const PipeSummand& s : pipe_summands(spec, ctx)) {
        r.kpoly += s.value;
        if (is_reduced(s.pipe)) {
            ++reduced;
            r.multidegree += pipe_monomial_md(s.pipe, ctx.layout());
        }
        ++r.counts["pipe_dreams"];
    }
    r.counts["reduced_pipe_dreams"] = reduced;
    return r;
}

LaurentPoly arrow_factor(const BipartiteStructure& b, int a, const PartialPerm& p) {
    const QuiverSpec& q = b.quiver();
    const Alphabet ta = b.alphabet(q.tail(a)), ha = b.alphabet(q.head(a));
    if (q.arrows[a] == Dir::right) {
        const int m = complete(p).size();
        return grothendieck_partial(p, CompletionMode::complete, ta.padded(m, 0), ha.padded(m, 1));
    }
    const int m = opposite_complete(p).size();
    return grothendieck_partial(p, CompletionMode::opposite, Alphabet::pads(m - p.rows(), 0).then(ta),
                                Alphabet::pads(m - p.cols(), 1).then(ha));
}

namespace {

struct FactorCache {
    const BipartiteStructure& b;
    std::map<std::pair<int, PartialPerm>, LaurentPoly> g, s;

    const LaurentPoly& groth(int a, const PartialPerm& p) {
        auto key = std::make_pair(a, p);
        auto it = g.find(key);
        if (it == g.end()) it = g.emplace(key, arrow_factor(b, a, p)).first;
        return it->second;
    }
    const LaurentPoly& schub(int a, const PartialPerm& p, const Perm& ext) {
        auto key = std::make_pair(a, p);
        auto it = s.find(key);
        if (it == s.end()) it = s.emplace(key, multidegree_of(groth(a, p), length(ext))).first;
        return it->second;
    }
};

bool skipped(const std::vector<bool>& skip, int a) { return a < static_cast<int>(skip.size()) && skip[a]; }

LaurentPoly groth_product(const LacingDiagram& w, FactorCache& cache, const std::vector<bool>& skip) {
    LaurentPoly out(1);
    for (int a = 0; a < w.quiver().arrow_count() && !out.is_zero(); ++a)
        if (!skipped(skip, a)) out *= cache.groth(a, w.at(a));
    return out;
}

LaurentPoly schub_product(const LacingDiagram& w, FactorCache& cache, const std::vector<bool>& skip) {
    LaurentPoly out(1);
    for (int a = 0; a < w.quiver().arrow_count() && !out.is_zero(); ++a)
        if (!skipped(skip, a)) out *= cache.schub(a, w.at(a), extended_perm(w, a));
    return out;
}

}  // namespace

LaurentPoly lacing_grothendieck(const LacingDiagram& w, const BipartiteStructure& b, const std::vector<bool>& skip) {
    FactorCache cache{b, {}, {}};
    return groth_product(w, cache, skip);
}

LaurentPoly lacing_schubert(const LacingDiagram& w, const BipartiteStructure& b, const std::vector<bool>& skip) {
    FactorCache cache{b, {}, {}};
    return schub_product(w, cache, skip);
}

std::vector<ComponentSummand> component_summands(const OrbitSpec& spec, const BipartiteContext& ctx) {
    const QuiverSpec& q = ctx.structure().quiver();
    const int cd = ctx.codim(spec);
    FactorCache cache{ctx.structure(), {}, {}};
    std::vector<ComponentSummand> out;
    for (LacingDiagram& w : ktheoretic_lacings(q, spec, ctx.limits().max_enumeration)) {
        const int sign = parity_sign(extended_length(w) - cd);
        LaurentPoly v = groth_product(w, cache, {});
        if (sign < 0) v = -v;
        out.push_back({std::move(w), sign, std::move(v)});
    }
    return out;
}

FormulaResult component_formula(const OrbitSpec& spec, const BipartiteContext& ctx) {
    FormulaResult r = start(Formula::component, spec, ctx);
    const auto summands = component_summands(spec, ctx);
    for (const ComponentSummand& s : summands) r.kpoly += s.value;
    FactorCache cache{ctx.structure(), {}, {}};
    const auto minimal = minimal_lacings(ctx.structure().quiver(), spec, ctx.limits().max_enumeration);
    for (const LacingDiagram& w : minimal) r.multidegree += schub_product(w, cache, {});
    r.counts["ktheoretic_lacings"] = summands.size();
    r.counts["minimal_lacings"] = minimal.size();
    return r;
}

FormulaResult run_formula(Formula f, const OrbitSpec& spec, const BipartiteContext& ctx) {
    switch (f) {
        case Formula::ratio: return ratio_formula(spec, ctx);
        case Formula::pipe: return pipe_formula(spec, ctx);
        case Formula::component: return component_formula(spec, ctx);
    }
    throw std::invalid_argument("unknown formula");
}

OrientedContext::OrientedContext(const QuiverSpec& q, Limits lim)
    : c_(bipartite_complete(q)), ctx_(c_.completed.quiver(), lim), sub_(sub_map(c_)) {}

OrbitSpec OrientedContext::lift(const OrbitSpec& spec) const {
    spec.check(c_.original);
    return qk::lift(spec, c_);
}

LaurentPoly OrientedContext::apply(const LaurentPoly& p) const {
    return rename(p, VarMap([this](VarId v) { return apply_sub(sub_, v); }));
}

FormulaResult arbitrary_orientation(Formula f, const OrbitSpec& spec, const OrientedContext& ctx) {
    const OrbitSpec lifted = ctx.lift(spec);
    const BipartiteContext& bc = ctx.bipartite();
    const BipartiteCompletion& c = ctx.completion();
    const bool bipartite = ctx.quiver().is_bipartite() && c.added_count() == 0 && c.completed.quiver() == ctx.quiver();

    FormulaResult r = run_formula(f, lifted, bc);
    r.orbit = spec;
    r.kpoly = ctx.apply(r.kpoly);
    r.multidegree = ctx.apply(r.multidegree);
    if (bipartite) return r;

    if (f == Formula::pipe) {
        LaurentPoly k, md;
        std::size_t good = 0;
        for (const PipeSummand& s : pipe_summands(lifted, bc)) {
            if (classify_good_bad(s.pipe, bc.layout(), c) != PipeClass::good) continue;
            ++good;
            k += s.value;
            if (is_reduced(s.pipe)) md += pipe_monomial_md(s.pipe, bc.layout());
        }
        r.restricted_kpoly = ctx.apply(k);
        r.restricted_multidegree = ctx.apply(md);
        r.counts["good_pipe_dreams"] = good;
    } else if (f == Formula::component) {
        std::vector<bool> skip(c.arrow_origin.size());
        for (std::size_t a = 0; a < skip.size(); ++a) skip[a] = c.arrow_origin[a] != ArrowOrigin::original;
        FactorCache cache{bc.structure(), {}, {}};
        LaurentPoly k, md;
        const auto kw = ktheoretic_lacings(ctx.quiver(), spec, bc.limits().max_enumeration);
        for (const LacingDiagram& w : kw) {
            const LacingDiagram lw = qk::lift(w, c);
            LaurentPoly v = groth_product(lw, cache, skip);
            k += parity_sign(extended_length(lw) - r.codim) > 0 ? v : -v;
        }
        const auto mw = minimal_lacings(ctx.quiver(), spec, bc.limits().max_enumeration);
        for (const LacingDiagram& w : mw) md += schub_product(qk::lift(w, c), cache, skip);
        r.restricted_kpoly = ctx.apply(k);
        r.restricted_multidegree = ctx.apply(md);
        r.counts["quiver_ktheoretic_lacings"] = kw.size();
        r.counts["quiver_minimal_lacings"] = mw.size();
    }
    return r;
}

Disagreement::Disagreement(std::vector<std::string> f, std::vector<FormulaResult> r)
    : std::runtime_error([&] {
          std::ostringstream o;
          o << "formulas disagree:";
          for (const auto& s : f) o << ' ' << s << ';';
          return o.str();
      }()),
      failures(std::move(f)),
      results(std::move(r)) {}

bool CrosscheckReport::ok() const {
    for (const auto& [name, pass] : checks)
        if (!pass) return false;
    return true;
}

CrosscheckReport crosscheck_report(const OrbitSpec& spec, const OrientedContext& ctx) {
    CrosscheckReport rep;
    rep.orbit = spec;
    for (Formula f : {Formula::ratio, Formula::pipe, Formula::component}) {
        try {
            rep.results.push_back(arbitrary_orientation(f, spec, ctx));
        } catch (const TooLarge&) {
            rep.skipped.push_back(f);
        }
    }
    if (rep.results.empty()) throw TooLarge("every formula exceeds the size limits");
    rep.codim = rep.results[0].codim;
    const auto& R = rep.results;
    for (std::size_t i = 0; i < R.size(); ++i)
        for (std::size_t j = i + 1; j < R.size(); ++j) {
            const std::string pair = to_string(R[i].formula) + "=" + to_string(R[j].formula);
            rep.checks.emplace_back("kpoly " + pair, R[i].kpoly == R[j].kpoly);
            rep.checks.emplace_back("multidegree " + pair, R[i].multidegree == R[j].multidegree);
        }
    for (const FormulaResult& r : R) {
        const std::string f = to_string(r.formula);
        rep.checks.emplace_back("transform " + f, multidegree_of(r.kpoly, r.codim) == r.multidegree);
        rep.checks.emplace_back("homogeneous " + f, r.multidegree.is_homogeneous(r.codim));
        if (r.restricted_kpoly) {
            rep.checks.emplace_back("restricted kpoly " + f, *r.restricted_kpoly == r.kpoly);
            rep.checks.emplace_back("restricted multidegree " + f, *r.restricted_multidegree == r.multidegree);
        }
    }
    return rep;
}

CrosscheckReport crosscheck(const OrbitSpec& spec, const OrientedContext& ctx) {
    CrosscheckReport rep = crosscheck_report(spec, ctx);
    if (!rep.ok()) {
        std::vector<std::string> failed;
        for (const auto& [name, pass] : rep.checks)
            if (!pass) failed.push_back(name);
        throw Disagreement(std::move(failed), rep.results);
    }
    return rep;
}

}  // namespace qk
