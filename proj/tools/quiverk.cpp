#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quiverk/formulas.hpp"
#include "quiverk/io.hpp"
#include "quiverk/zelevinsky.hpp"

using namespace qk;
using io::json;

namespace {

enum Exit { ok = 0, bad_input = 1, disagreement = 2, too_large = 3 };

struct Job {
    std::string quiver_file;
    std::string orbit_file;
    std::string format = "text";
    std::size_t max_enumeration = 1000000;
    bool expensive = false;
};

struct Loaded {
    QuiverSpec q;
    OrientedContext ctx;
    std::optional<OrbitSpec> orbit;
};

Loaded load(const Job& job, bool need_orbit) {
    if (job.quiver_file.empty()) throw io::InputError("--quiver is required");
    QuiverSpec q = io::quiver_from_json(io::read_file(job.quiver_file));
    Limits lim;
    lim.max_enumeration = job.max_enumeration;
    if (job.expensive) lim.max_ratio_d = 64;
    Loaded l{q, OrientedContext(q, lim), std::nullopt};
    if (!job.orbit_file.empty()) l.orbit = io::orbit_from_json(io::read_file(job.orbit_file), q);
    if (need_orbit && !l.orbit) throw io::InputError("--orbit is required");
    return l;
}

// interface index = bipartite label, and where each completed vertex came from
std::string legend(const OrientedContext& ctx) {
    const BipartiteCompletion& c = ctx.completion();
    const BipartiteStructure& b = c.completed;
    std::ostringstream o;
    o << "vertices:";
    for (int v = 0; v < ctx.quiver().vertices(); ++v) o << ' ' << v << '=' << b.label(c.completed_vertex[v]).str();
    if (c.added_count() || b.quiver().vertices() != ctx.quiver().vertices()) {
        o << "\ncompleted:";
        for (int v = 0; v < b.quiver().vertices(); ++v) {
            o << ' ' << b.label(v).str() << '(';
            switch (c.vertex_origin[v]) {
                case VertexOrigin::original: o << c.vertex_source[v]; break;
                case VertexOrigin::added: o << "added " << c.vertex_source[v]; break;
                case VertexOrigin::padding: o << "pad"; break;
            }
            o << ')';
        }
    }
    o << '\n';
    return o.str();
}

void emit(const Job& job, const json& j, const std::string& text) {
    if (job.format == "json") std::cout << j.dump(2) << '\n';
    else std::cout << text;
}

int cmd_orbits(const Job& job) {
    Loaded l = load(job, false);
    json out = json::array();
    std::ostringstream t;
    t << legend(l.ctx);
    for (const OrbitSpec& o : enumerate_orbits(l.q, job.max_enumeration)) {
        const int cd = l.ctx.bipartite().codim(l.ctx.lift(o));
        const std::size_t w = minimal_lacings(l.q, o, job.max_enumeration).size();
        json e = io::to_json(o);
        e["codim"] = cd;
        e["minimal_lacings"] = w;
        out.push_back(e);
        t << o.str() << "  codim " << cd << "  minimal_lacings " << w << '\n';
    }
    emit(job, out, t.str());
    return ok;
}

int cmd_laces(const Job& job, bool ktheory) {
    Loaded l = load(job, true);
    const auto ds = ktheory ? ktheoretic_lacings(l.q, *l.orbit, job.max_enumeration)
                            : minimal_lacings(l.q, *l.orbit, job.max_enumeration);
    json out = json::array();
    std::ostringstream t;
    t << legend(l.ctx) << ds.size() << (ktheory ? " K-theoretic" : " minimal") << " lacing diagrams\n";
    for (std::size_t k = 0; k < ds.size(); ++k) {
        out.push_back(io::to_json(ds[k]));
        t << "\n# " << k + 1 << '\n' << render(ds[k]);
    }
    emit(job, out, t.str());
    return ok;
}

json block_ranks_of(const Perm& v, const BlockLayout& layout) {
    json out = json::array();
    for (const Block& rb : layout.row_blocks()) {
        json row = json::array();
        for (const Block& cb : layout.col_blocks()) {
            int r = 0;
            for (int i = 1; i <= rb.offset + rb.size; ++i) r += v(i) <= cb.offset + cb.size;
            row.push_back(r);
        }
        out.push_back(row);
    }
    return out;
}

int cmd_zperm(const Job& job) {
    Loaded l = load(job, true);
    const BipartiteContext& bc = l.ctx.bipartite();
    const Perm v = bc.zperm(l.ctx.lift(*l.orbit));
    json j = {{"zperm", io::to_json(v)},
              {"vstar", io::to_json(bc.vstar())},
              {"codim", codim(v, bc.vstar())},
              {"block_rank_matrix", block_ranks_of(v, bc.layout())}};
    std::ostringstream t;
    t << legend(l.ctx) << "v(r) = " << v.str() << "\nv_* = " << bc.vstar().str() << "\ncodim " << codim(v, bc.vstar())
      << '\n'
      << render_block_perm(v, bc.layout());
    emit(job, j, t.str());
    return ok;
}

int cmd_pipedreams(const Job& job, bool reduced, bool good_only) {
    Loaded l = load(job, true);
    const BipartiteContext& bc = l.ctx.bipartite();
    const Perm v = bc.zperm(l.ctx.lift(*l.orbit));
    json out = json::array();
    std::ostringstream body;
    std::size_t count = 0;
    for (const PipeDream& p : enumerate_pipes(bc.layout(), v, reduced, job.max_enumeration)) {
        if (good_only && classify_good_bad(p, bc.layout(), l.ctx.completion()) != PipeClass::good) continue;
        ++count;
        out.push_back(io::to_json(p));
        body << "\n# " << count << " (" << p.size() << " crosses)\n" << render(p, bc.layout(), l.ctx.sub());
    }
    std::ostringstream t;
    t << legend(l.ctx) << count << (reduced ? " reduced" : "") << (good_only ? " good" : "") << " pipe dreams\n"
      << body.str();
    emit(job, out, t.str());
    return ok;
}

int cmd_formula(const Job& job, const std::string& which, bool multidegree) {
    Loaded l = load(job, true);
    const FormulaResult r = arbitrary_orientation(parse_formula(which), *l.orbit, l.ctx);
    const LaurentPoly& p = multidegree ? r.multidegree : r.kpoly;
    emit(job, io::to_json(r), p.str() + '\n');
    return ok;
}

int cmd_crosscheck(const Job& job, bool all) {
    Loaded l = load(job, !all);
    std::vector<OrbitSpec> orbits = all ? enumerate_orbits(l.q, job.max_enumeration) : std::vector<OrbitSpec>{*l.orbit};
    json out = json::array();
    std::ostringstream t;
    bool agree = true;
    for (const OrbitSpec& o : orbits) {
        const CrosscheckReport rep = crosscheck_report(o, l.ctx);
        agree = agree && rep.ok();
        out.push_back(io::to_json(rep));
        t << (rep.ok() ? "ok   " : "FAIL ") << o.str() << "  codim " << rep.codim;
        for (Formula f : rep.skipped) t << "  (" << to_string(f) << " skipped: too large)";
        t << '\n';
        for (const auto& [name, pass] : rep.checks)
            if (!pass) t << "  failed: " << name << '\n';
    }
    t << orbits.size() << " orbits, " << (agree ? "all formulas agree" : "disagreement found") << '\n';
    emit(job, out, t.str());
    return agree ? ok : disagreement;
}

int cmd_render(const Job& job, const std::string& what, const std::string& object_file) {
    const bool from_file = !object_file.empty();
    Loaded l = load(job, !from_file);
    std::ostringstream t;
    t << legend(l.ctx);
    json j;
    if (what == "lace") {
        const LacingDiagram w = from_file ? io::lacing_from_json(io::read_file(object_file), l.q) : canonical_lacing(l.q, *l.orbit);
        t << render(w);
        j = io::to_json(w);
    } else if (what == "pipedream") {
        const BlockLayout& layout = l.ctx.bipartite().layout();
        const BipartiteStructure& b = layout.structure();
        const PipeDream p = from_file ? io::pipe_from_json(io::read_file(object_file), b.d_y(), b.d_x()) : star_pipe_dream(layout);
        t << render(p, layout, l.ctx.sub());
        j = io::to_json(p);
    } else {
        const BipartiteContext& bc = l.ctx.bipartite();
        const Perm v = from_file ? io::perm_from_json(io::read_file(object_file)) : bc.zperm(l.ctx.lift(*l.orbit));
        if (v.size() != bc.structure().d()) throw io::InputError("permutation size does not match the quiver");
        t << render_block_perm(v, bc.layout());
        j = io::to_json(v);
    }
    emit(job, j, t.str());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-polynomials and multidegrees of type A quiver orbit closures"};
    app.require_subcommand(1);
    app.fallthrough();
    Job job;
    app.add_option("--quiver", job.quiver_file, "quiver JSON {\"dims\":[..],\"arrows\":[\"left\"|\"right\",..]}");
    app.add_option("--orbit", job.orbit_file, "orbit JSON: {\"multiplicities\":[..]} or {\"representative\":[..]}");
    app.add_option("--format", job.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-enumeration", job.max_enumeration, "cap on enumerated objects")->check(CLI::PositiveNumber);

    auto* orbits = app.add_subcommand("orbits", "all orbits with codimension and minimal lacing count");

    auto* laces = app.add_subcommand("laces", "minimal or K-theoretic lacing diagrams of the orbit");
    bool minimal = false, ktheory = false;
    auto* mflag = laces->add_flag("--minimal", minimal, "minimal diagrams (default)");
    laces->add_flag("--ktheory", ktheory, "K-theoretic diagrams")->excludes(mflag);

    auto* zperm = app.add_subcommand("zperm", "Zelevinsky permutation of the orbit");

    auto* pipes = app.add_subcommand("pipedreams", "pipe dreams for the Zelevinsky permutation");
    bool reduced = false, good_only = false;
    pipes->add_flag("--reduced", reduced, "reduced pipe dreams only");
    pipes->add_flag("--good-only", good_only, "skip pipe dreams with crosses in inverted blocks");

    std::string formula = "component";
    auto* kpoly = app.add_subcommand("kpoly", "K-polynomial of the orbit closure");
    kpoly->add_option("--formula", formula)->check(CLI::IsMember({"ratio", "pipe", "component"}));
    kpoly->add_flag("--expensive", job.expensive, "lift the ratio formula size limit");
    auto* mdeg = app.add_subcommand("multidegree", "multidegree of the orbit closure");
    mdeg->add_option("--formula", formula)->check(CLI::IsMember({"ratio", "pipe", "component"}));
    mdeg->add_flag("--expensive", job.expensive, "lift the ratio formula size limit");

    auto* cross = app.add_subcommand("crosscheck", "compare all three formulas");
    bool all = false;
    cross->add_flag("--all-orbits", all, "every orbit of the quiver");
    cross->add_flag("--expensive", job.expensive, "lift the ratio formula size limit");

    auto* rend = app.add_subcommand("render", "ASCII rendering");
    std::string what, object_file;
    rend->add_option("object", what)->required()->check(CLI::IsMember({"lace", "pipedream", "zperm"}));
    rend->add_option("--file", object_file, "JSON file with the object; defaults come from the orbit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? bad_input : ok;
    }

    try {
        if (orbits->parsed()) return cmd_orbits(job);
        if (laces->parsed()) return cmd_laces(job, ktheory);
        if (zperm->parsed()) return cmd_zperm(job);
        if (pipes->parsed()) return cmd_pipedreams(job, reduced, good_only);
        if (kpoly->parsed()) return cmd_formula(job, formula, false);
        if (mdeg->parsed()) return cmd_formula(job, formula, true);
        if (cross->parsed()) return cmd_crosscheck(job, all);
        if (rend->parsed()) return cmd_render(job, what, object_file);
    } catch (const TooLarge& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return too_large;
    } catch (const Disagreement& e) {
        std::cerr << e.what() << '\n';
        return disagreement;
    } catch (const NotDivisible& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return disagreement;
    } catch (const LowerDegreeResidue& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return disagreement;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return bad_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return bad_input;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return disagreement;
    }
    return bad_input;
}
