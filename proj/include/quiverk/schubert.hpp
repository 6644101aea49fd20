#pragma once

#include <vector>

#include "quiverk/laurent.hpp"
#include "quiverk/perm.hpp"

namespace qk {

struct AlphabetTooShort : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Alphabet {
    std::vector<VarId> vars;

    int size() const { return static_cast<int>(vars.size()); }
    const VarId& operator[](int i) const { return vars[i - 1]; }  // 1-based
    Alphabet reversed() const;
    Alphabet prefix(int n) const;
    Alphabet then(const Alphabet& o) const;
    // appends fresh internal variables until the size reaches n; sides 0 and 1 never share variables
    Alphabet padded(int n, int side = 0) const;
    // count fresh internal variables
    static Alphabet pads(int count, int side = 0);

    // vertex v, positions 1..n of family f
    static Alphabet of(Family f, int vertex, int n);
};

// variables introduced by Alphabet::padded
bool is_padding(VarId v);

// prod over i+j <= m of (1 - a_i/b_j)
LaurentPoly top_grothendieck(int m, const Alphabet& a, const Alphabet& b);

// (a_{i+1} f - a_i f^{s_i}) / (a_{i+1} - a_i)
LaurentPoly demazure_op(const LaurentPoly& f, int i, const Alphabet& a);

// Demazure recursion from the top polynomial along the lex-first descent chain.
LaurentPoly grothendieck(const Perm& w, const Alphabet& a, const Alphabet& b);
// Same recursion along an explicit reduced word of w^{-1} w0 (rightmost letter applied first).
LaurentPoly grothendieck_along(const Perm& w, const HeckeWord& chain, const Alphabet& a, const Alphabet& b);

// Signed sum over staircase pipe dreams. Oracle only.
LaurentPoly grothendieck_fk(const Perm& w, const Alphabet& a, const Alphabet& b);

// Same recursion with plain divided differences from prod (a_i - b_j).
LaurentPoly schubert(const Perm& w, const Alphabet& a, const Alphabet& b);

enum class CompletionMode { complete, opposite };

// complete: G_{c(p)}(a; b). opposite: G_{w0 oc(p) w0}(a~; b~) where a~ reverses the
// first m letters, so the SE block of p uses a_{m-k+1..m} and b_{m-l+1..m}.
LaurentPoly grothendieck_partial(const PartialPerm& p, CompletionMode mode, const Alphabet& a, const Alphabet& b);

}  // namespace qk
