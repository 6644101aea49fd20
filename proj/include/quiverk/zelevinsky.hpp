#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quiverk/lacing.hpp"
#include "quiverk/perm.hpp"
#include "quiverk/quiver.hpp"

namespace qk {

struct NotRealizable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotComparable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// b[i][j] = rank of the NW submatrix through block row i and block column j (0-based blocks).
using BlockRankMatrix = std::vector<std::vector<int>>;

// [[M(V), 1], [1, 0]]
Matrix zelevinsky_image(const Representation& v, const BlockLayout& layout);
BlockRankMatrix block_rank_matrix(const Representation& v);
BlockRankMatrix block_rank_matrix(const Representation& v, const BlockLayout& layout);

// Places count[I][J] ones in block (I, J), NW to SE along every block row and block column.
Perm perm_from_block_counts(const std::vector<std::vector<int>>& count, const BlockLayout& layout);

Perm zperm_from_blockranks(const BlockRankMatrix& b, const BlockLayout& layout);
Perm zperm_from_lacing(const LacingDiagram& w, const BlockLayout& layout);
Perm zperm_from_orbit(const OrbitSpec& spec, const BlockLayout& layout);

// Demazure product of the crosses outside the snake.
Perm v_star(const BlockLayout& layout);

int codim(const Perm& vr, const Perm& vstar);

// 0/1 matrix of p with separators between blocks.
std::string render_block_perm(const Perm& p, const BlockLayout& layout);

}  // namespace qk
