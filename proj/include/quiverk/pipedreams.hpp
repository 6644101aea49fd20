#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverk/lacing.hpp"
#include "quiverk/perm.hpp"
#include "quiverk/quiver.hpp"

namespace qk {

struct NotAboveStar : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoReducedRepresentative : std::logic_error {
    using std::logic_error::logic_error;
};

// Set of cross tiles on a rows x cols grid.
struct PipeDream {
    int rows = 0;
    int cols = 0;
    std::vector<Cell> crosses;  // sorted

    PipeDream() = default;
    PipeDream(int r, int c, std::vector<Cell> x);  // throws OutOfRange

    int size() const { return static_cast<int>(crosses.size()); }
    bool has(Cell c) const;
    PipeDream rotated() const;

    friend bool operator==(const PipeDream&, const PipeDream&) = default;
    friend bool operator<(const PipeDream& a, const PipeDream& b) { return a.crosses < b.crosses; }
};

PipeDream star_pipe_dream(const BlockLayout& layout);

// rows top to bottom, each row right to left, letter i+j-1
HeckeWord word_of(const PipeDream& p);
// ambient rows + cols
Perm demazure_of(const PipeDream& p);
bool is_reduced(const PipeDream& p);

// P in the d_y x d_x grid with delta(P) = target, every P containing P_*.
std::vector<PipeDream> enumerate_pipes(const BlockLayout& layout, const Perm& target, bool reduced_only,
                                       std::size_t limit = 1000000);

// Crosses of p inside the block of arrow a, in block coordinates.
PipeDream block_restriction(const PipeDream& p, const BlockLayout& layout, int a);
// Pipes entering on the left and leaving through the top of a grid, as a rows x cols partial permutation.
PartialPerm follow_pipes(const PipeDream& p);
// Reduced sub-dreams with the same Demazure product.
std::vector<PipeDream> reduced_representatives(const PipeDream& p);

LacingDiagram pipe_to_lace(const PipeDream& p, const BlockLayout& layout);

enum class PipeClass { good, bad };
// good iff every cross outside P_* sits in the block of an original arrow
PipeClass classify_good_bad(const PipeDream& p, const BlockLayout& layout, const BipartiteCompletion& c);

// Crosses of p in the snake, as (row var / col var) factors are read by the formulas.
std::vector<Cell> snake_crosses(const PipeDream& p, const BlockLayout& layout);

// + for crosses, elbows otherwise; block separators and alphabet labels. rename relabels variables.
std::string render(const PipeDream& p, const BlockLayout& layout, const std::map<VarId, VarId>& rename = {});

}  // namespace qk
