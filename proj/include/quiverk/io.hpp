#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "quiverk/formulas.hpp"
#include "quiverk/lacing.hpp"
#include "quiverk/laurent.hpp"
#include "quiverk/perm.hpp"
#include "quiverk/pipedreams.hpp"
#include "quiverk/quiver.hpp"

namespace qk::io {

using json = nlohmann::json;

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json read_file(const std::string& path);  // throws InputError

// {"dims":[...], "arrows":["left"|"right", ...]}
json to_json(const QuiverSpec& q);
QuiverSpec quiver_from_json(const json& j);

// rows as arrays
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, int rows, int cols);

// one matrix per arrow
json to_json(const Representation& v);
Representation representation_from_json(const json& j, const QuiverSpec& q);

// {"multiplicities":[{"left":l,"right":r,"count":m}, ...]}
json to_json(const OrbitSpec& o);
// Either orbit form; a representative is reduced to its orbit.
OrbitSpec orbit_from_json(const json& j, const QuiverSpec& q);

// 0/1 matrix per arrow
json to_json(const LacingDiagram& w);
LacingDiagram lacing_from_json(const json& j, const QuiverSpec& q);

json to_json(const Perm& p);  // one-line
Perm perm_from_json(const json& j);

// {"rows":r, "cols":c, "crosses":[[i,j], ...]}
json to_json(const PipeDream& p);
PipeDream pipe_from_json(const json& j, int rows, int cols);

// [{"coeff":c, "exps":{"t.0.1":-1, ...}}, ...] in canonical order; coeff is a string past 64 bits
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

// {formula, kpoly, multidegree, codim, counts, orbit}
json to_json(const FormulaResult& r);
json to_json(const CrosscheckReport& r);

}  // namespace qk::io
