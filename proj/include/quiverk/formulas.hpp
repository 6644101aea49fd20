#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverk/lacing.hpp"
#include "quiverk/laurent.hpp"
#include "quiverk/pipedreams.hpp"
#include "quiverk/quiver.hpp"

namespace qk {

enum class Formula { ratio, pipe, component };
std::string to_string(Formula f);
Formula parse_formula(const std::string& s);  // throws std::invalid_argument

struct Limits {
    int max_ratio_d = 10;  // ratio formula refuses larger d with TooLarge
    std::size_t max_enumeration = 1000000;
};

struct FormulaResult {
    Formula formula = Formula::ratio;
    OrbitSpec orbit;
    int codim = 0;
    LaurentPoly kpoly;
    LaurentPoly multidegree;
    // pipe: sum over good pipe dreams only; component: sum over the quiver's own lacing diagrams.
    // Set only for non-bipartite quivers.
    std::optional<LaurentPoly> restricted_kpoly;
    std::optional<LaurentPoly> restricted_multidegree;
    std::map<std::string, std::size_t> counts;
};

// Everything about a bipartite quiver that does not depend on the orbit.
class BipartiteContext {
public:
    explicit BipartiteContext(const QuiverSpec& q, Limits lim = {});

    const BipartiteStructure& structure() const { return b_; }
    const BlockLayout& layout() const { return layout_; }
    const Perm& vstar() const { return vstar_; }
    const Limits& limits() const { return lim_; }

    Perm zperm(const OrbitSpec& spec) const;
    int codim(const OrbitSpec& spec) const;

    // G_{v_*} and S_{v_*} over the row/column alphabets, computed once
    const LaurentPoly& g_vstar() const;
    const LaurentPoly& s_vstar() const;
    // cells of P_* when G_{v_*} and S_{v_*} equal the products over them (checked exactly)
    const std::optional<std::vector<Cell>>& vstar_factors() const;

    // num / G_{v_*} and num / S_{v_*}, one binomial at a time when the factorization holds
    LaurentPoly divide_by_g_vstar(const LaurentPoly& num) const;
    LaurentPoly divide_by_s_vstar(const LaurentPoly& num) const;

private:
    BipartiteStructure b_;
    BlockLayout layout_;
    Perm vstar_;
    Limits lim_;
    mutable std::optional<LaurentPoly> gstar_;
    mutable std::optional<LaurentPoly> sstar_;
    mutable std::optional<std::optional<std::vector<Cell>>> factors_;
};

FormulaResult ratio_formula(const OrbitSpec& spec, const BipartiteContext& ctx);
FormulaResult pipe_formula(const OrbitSpec& spec, const BipartiteContext& ctx);
FormulaResult component_formula(const OrbitSpec& spec, const BipartiteContext& ctx);
FormulaResult run_formula(Formula f, const OrbitSpec& spec, const BipartiteContext& ctx);

// Per-arrow factor of G_w: c(w_a) over (t, s) on right arrows, the reversed oc(w_a) pattern on left arrows.
LaurentPoly arrow_factor(const BipartiteStructure& b, int a, const PartialPerm& p);
// Product over arrows; skip marks arrows whose factor is omitted.
LaurentPoly lacing_grothendieck(const LacingDiagram& w, const BipartiteStructure& b, const std::vector<bool>& skip = {});
LaurentPoly lacing_schubert(const LacingDiagram& w, const BipartiteStructure& b, const std::vector<bool>& skip = {});

struct ComponentSummand {
    LacingDiagram diagram;
    int sign = 1;
    LaurentPoly value;  // signed
};
std::vector<ComponentSummand> component_summands(const OrbitSpec& spec, const BipartiteContext& ctx);

struct PipeSummand {
    PipeDream pipe;
    int sign = 1;
    LaurentPoly value;  // signed
};
std::vector<PipeSummand> pipe_summands(const OrbitSpec& spec, const BipartiteContext& ctx);

// Orbit on an arbitrary type A quiver, computed on its bipartite completion.
class OrientedContext {
public:
    explicit OrientedContext(const QuiverSpec& q, Limits lim = {});

    const QuiverSpec& quiver() const { return c_.original; }
    const BipartiteCompletion& completion() const { return c_; }
    const BipartiteContext& bipartite() const { return ctx_; }
    const std::map<VarId, VarId>& sub() const { return sub_; }

    OrbitSpec lift(const OrbitSpec& spec) const;
    LaurentPoly apply(const LaurentPoly& p) const;

private:
    BipartiteCompletion c_;
    BipartiteContext ctx_;
    std::map<VarId, VarId> sub_;
};

FormulaResult arbitrary_orientation(Formula f, const OrbitSpec& spec, const OrientedContext& ctx);

struct Disagreement : std::runtime_error {
    std::vector<std::string> failures;
    std::vector<FormulaResult> results;
    Disagreement(std::vector<std::string> f, std::vector<FormulaResult> r);
};

struct CrosscheckReport {
    OrbitSpec orbit;
    int codim = 0;
    std::vector<FormulaResult> results;  // ratio, pipe, component
    std::vector<Formula> skipped;        // refused with TooLarge
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
};

// All three formulas plus the pairwise and transform checks. Throws Disagreement when any check fails.
CrosscheckReport crosscheck(const OrbitSpec& spec, const OrientedContext& ctx);
// Same checks without throwing.
CrosscheckReport crosscheck_report(const OrbitSpec& spec, const OrientedContext& ctx);

}  // namespace qk
