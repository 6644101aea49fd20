#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/inlined_vector.h>
#include <boost/multiprecision/cpp_int.hpp>

namespace qk {

using Coeff = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// s < t in the canonical variable order. Family a is a formal alphabet used
// internally by the Grothendieck engine and never appears in results.
enum class Family : std::uint8_t { s = 0, t = 1, a = 2 };

struct VarId {
    Family family = Family::s;
    int vertex = 0;
    int position = 1;

    std::uint32_t key() const {
        return (static_cast<std::uint32_t>(family) << 28) | (static_cast<std::uint32_t>(vertex) << 14) |
               static_cast<std::uint32_t>(position);
    }
    static VarId from_key(std::uint32_t k) {
        return {static_cast<Family>(k >> 28), static_cast<int>((k >> 14) & 0x3fff), static_cast<int>(k & 0x3fff)};
    }
    std::string str() const;       // t[0,1]
    std::string json_key() const;  // t.0.1
    static VarId parse_json_key(const std::string& s);

    friend bool operator==(const VarId& a, const VarId& b) { return a.key() == b.key(); }
    friend bool operator<(const VarId& a, const VarId& b) { return a.key() < b.key(); }
};

inline VarId var_s(int vertex, int pos) { return {Family::s, vertex, pos}; }
inline VarId var_t(int vertex, int pos) { return {Family::t, vertex, pos}; }

// sorted by variable key, no zero exponents
using Monomial = absl::InlinedVector<std::pair<std::uint32_t, std::int32_t>, 20>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_inv(const Monomial& a);
int mono_exp(const Monomial& m, std::uint32_t var);
int mono_degree(const Monomial& m);
// descending lexicographic order on dense exponent vectors
bool mono_lex_greater(const Monomial& a, const Monomial& b);

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LowerDegreeResidue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class LaurentPoly {
public:
    using Map = absl::flat_hash_map<Monomial, Coeff>;

    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: constants convert implicitly
    static LaurentPoly constant(const Coeff& c);
    static LaurentPoly var(VarId v, int exp = 1);
    static LaurentPoly monomial(const Monomial& m, const Coeff& c = 1);
    // 1 - a/b
    static LaurentPoly one_minus_ratio(VarId a, VarId b);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    Coeff coeff(const Monomial& m) const;
    // canonical order: descending lexicographic by exponent vector
    std::vector<std::pair<Monomial, Coeff>> sorted_terms() const;
    std::vector<VarId> variables() const;

    void add_term(const Monomial& m, const Coeff& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly times_monomial(const Monomial& m, const Coeff& c = 1) const;
    LaurentPoly pow(int e) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // total degree of every term equals d
    bool is_homogeneous(int d) const;
    int min_degree() const;
    int max_degree() const;

    std::string str() const;

private:
    Map terms_;
};

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);
// num / (a - b) and num / (1 - a/b), by synthetic division in a. Throws NotDivisible.
LaurentPoly exact_div_difference(const LaurentPoly& num, VarId a, VarId b);
LaurentPoly exact_div_one_minus_ratio(const LaurentPoly& num, VarId a, VarId b);

using VarMap = std::function<VarId(VarId)>;
LaurentPoly rename(const LaurentPoly& p, const VarMap& map);
LaurentPoly rename(const LaurentPoly& p, const std::map<VarId, VarId>& map);

// a -> 1 - a for every variable, then the degree-expected component.
LaurentPoly multidegree_of(const LaurentPoly& kpoly, int expected_degree);

}  // namespace qk
