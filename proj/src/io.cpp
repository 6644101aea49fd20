#include "quiverk/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace qk::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<std::vector<long long>> int_rows(const json& j) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::vector<std::vector<long long>> rows;
    for (const json& r : j) {
        if (!r.is_array()) throw InputError("matrix row must be an array");
        std::vector<long long> row;
        for (const json& x : r) {
            if (!x.is_number_integer()) throw InputError("matrix entries must be integers");
            row.push_back(x.get<long long>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Cell> cells_from_json(const json& j) {
    if (!j.is_array()) throw InputError("cells must be an array of [i,j] pairs");
    std::vector<Cell> out;
    for (const json& c : j) {
        if (!c.is_array() || c.size() != 2) throw InputError("cell must be a pair [i,j]");
        out.push_back({as_int(c[0], "cell row"), as_int(c[1], "cell column")});
    }
    return out;
}

}  // namespace

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

json to_json(const QuiverSpec& q) {
    json arrows = json::array();
    for (Dir d : q.arrows) arrows.push_back(d == Dir::left ? "left" : "right");
    return {{"dims", q.dims}, {"arrows", arrows}};
}

QuiverSpec quiver_from_json(const json& j) {
    const json& d = field(j, "dims");
    const json& a = field(j, "arrows");
    if (!d.is_array() || !a.is_array()) throw InputError("dims and arrows must be arrays");
    std::vector<int> dims;
    for (const json& x : d) dims.push_back(as_int(x, "dimension"));
    std::vector<Dir> arrows;
    for (const json& x : a) {
        if (x == "left") arrows.push_back(Dir::left);
        else if (x == "right") arrows.push_back(Dir::right);
        else throw InputError("arrow must be \"left\" or \"right\"");
    }
    try {
        return QuiverSpec(dims, arrows);
    } catch (const InvalidQuiver& e) {
        throw InputError(e.what());
    }
}

json to_json(const Matrix& m) { return m.to_rows(); }

Matrix matrix_from_json(const json& j, int rows, int cols) {
    auto r = int_rows(j);
    if (static_cast<int>(r.size()) != rows) throw InputError("matrix has the wrong number of rows");
    for (const auto& row : r)
        if (static_cast<int>(row.size()) != cols) throw InputError("matrix row has the wrong length");
    return Matrix::from_rows(r, cols);
}

json to_json(const Representation& v) {
    json out = json::array();
    for (const Matrix& m : v.maps) out.push_back(to_json(m));
    return out;
}

Representation representation_from_json(const json& j, const QuiverSpec& q) {
    if (!j.is_array() || static_cast<int>(j.size()) != q.arrow_count())
        throw InputError("representative needs one matrix per arrow");
    std::vector<Matrix> maps;
    for (int a = 0; a < q.arrow_count(); ++a) maps.push_back(matrix_from_json(j[a], q.dims[q.tail(a)], q.dims[q.head(a)]));
    return Representation(q, maps);
}

json to_json(const OrbitSpec& o) {
    json m = json::array();
    for (const auto& [iv, c] : o.mult) m.push_back({{"left", iv.first}, {"right", iv.second}, {"count", c}});
    return {{"multiplicities", m}};
}

OrbitSpec orbit_from_json(const json& j, const QuiverSpec& q) {
    if (j.is_object() && j.contains("representative")) return orbit_of(representation_from_json(j.at("representative"), q));
    const json& m = field(j, "multiplicities");
    if (!m.is_array()) throw InputError("multiplicities must be an array");
    OrbitSpec o;
    for (const json& e : m) {
        int l = as_int(field(e, "left"), "left"), r = as_int(field(e, "right"), "right"), c = as_int(field(e, "count"), "count");
        if (l < 0 || r < l || r >= q.vertices()) throw InputError("lace endpoints out of range");
        if (c < 0) throw InputError("negative lace count");
        if (c) o.mult[{l, r}] += c;
    }
    try {
        o.check(q);
    } catch (const InconsistentMultiplicities& e) {
        throw InputError(e.what());
    }
    return o;
}

json to_json(const LacingDiagram& w) {
    json out = json::array();
    for (const PartialPerm& p : w.maps()) out.push_back(to_json(Matrix::of(p)));
    return out;
}

LacingDiagram lacing_from_json(const json& j, const QuiverSpec& q) {
    const Representation v = representation_from_json(j, q);
    std::vector<PartialPerm> maps;
    for (const Matrix& m : v.maps) {
        PartialPerm p(m.rows, m.cols);
        for (int i = 1; i <= m.rows; ++i)
            for (int k = 1; k <= m.cols; ++k) {
                if (m(i, k) != 0 && m(i, k) != 1) throw InputError("lacing matrices must be 0/1");
                if (m(i, k) == 1) {
                    if (p.col_of(i) || p.row_of(k)) throw InputError("lacing matrix is not a partial permutation");
                    p.set(i, k);
                }
            }
        maps.push_back(p);
    }
    return LacingDiagram(q, maps);
}

json to_json(const Perm& p) { return p.one_line(); }

Perm perm_from_json(const json& j) {
    if (!j.is_array()) throw InputError("permutation must be a one-line array");
    std::vector<int> img;
    for (const json& x : j) img.push_back(as_int(x, "permutation entry"));
    try {
        return Perm(img);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json to_json(const PipeDream& p) {
    json c = json::array();
    for (const Cell& e : p.crosses) c.push_back({e.i, e.j});
    return {{"rows", p.rows}, {"cols", p.cols}, {"crosses", c}};
}

PipeDream pipe_from_json(const json& j, int rows, int cols) {
    const json& c = j.is_array() ? j : field(j, "crosses");
    try {
        return PipeDream(rows, cols, cells_from_json(c));
    } catch (const OutOfRange& e) {
        throw InputError(e.what());
    }
}

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.sorted_terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m) exps[VarId::from_key(v).json_key()] = e;
        json coeff;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            coeff = static_cast<long long>(c);
        else
            coeff = c.str();
        out.push_back({{"coeff", coeff}, {"exps", exps}});
    }
    return out;
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw InputError("polynomial must be an array of terms");
    LaurentPoly p;
    for (const json& t : j) {
        const json& c = field(t, "coeff");
        Coeff coeff;
        if (c.is_number_integer()) coeff = c.get<long long>();
        else if (c.is_string()) coeff = Coeff(c.get<std::string>());
        else throw InputError("coefficient must be an integer or a decimal string");
        std::vector<std::pair<std::uint32_t, std::int32_t>> exps;
        for (const auto& [k, e] : field(t, "exps").items()) {
            try {
                exps.emplace_back(VarId::parse_json_key(k).key(), as_int(e, "exponent"));
            } catch (const std::invalid_argument& err) {
                throw InputError(err.what());
            }
        }
        std::sort(exps.begin(), exps.end());
        Monomial m;
        for (const auto& e : exps)
            if (e.second) m.push_back(e);
        p.add_term(m, coeff);
    }
    return p;
}

json to_json(const FormulaResult& r) {
    json j = {{"formula", to_string(r.formula)},
              {"kpoly", to_json(r.kpoly)},
              {"multidegree", to_json(r.multidegree)},
              {"codim", r.codim},
              {"counts", r.counts},
              {"orbit", to_json(r.orbit)}};
    if (r.restricted_kpoly) {
        j["restricted_kpoly"] = to_json(*r.restricted_kpoly);
        j["restricted_multidegree"] = to_json(*r.restricted_multidegree);
    }
    return j;
}

json to_json(const CrosscheckReport& r) {
    json checks = json::array();
    for (const auto& [name, ok] : r.checks) checks.push_back({{"check", name}, {"ok", ok}});
    json results = json::array();
    for (const FormulaResult& f : r.results) results.push_back(to_json(f));
    json skipped = json::array();
    for (Formula f : r.skipped) skipped.push_back(to_string(f));
    return {{"orbit", to_json(r.orbit)}, {"codim", r.codim},       {"ok", r.ok()},
            {"checks", checks},          {"results", results},     {"skipped", skipped}};
}

}  // namespace qk::io
