#include "quiverk/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qk {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<char> seen(img_.size() + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[v] = 1;
    }
}

Perm Perm::identity(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = i + 1;
    return Perm(std::move(v));
}

Perm Perm::longest(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = m - i;
    return Perm(std::move(v));
}

Perm Perm::simple(int i, int m) {
    if (i < 1 || i >= m) throw std::invalid_argument("simple reflection out of range");
    return identity(m).times_s(i);
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = static_cast<int>(i) + 1;
    Perm r;
    r.img_ = std::move(v);
    return r;
}

Perm Perm::operator*(const Perm& q) const {
    int m = std::max(size(), q.size());
    Perm a = resized(m), b = q.resized(m);
    std::vector<int> v(m);
    for (int i = 1; i <= m; ++i) v[i - 1] = a(b(i));
    Perm r;
    r.img_ = std::move(v);
    return r;
}

Perm Perm::times_s(int i) const {
    Perm r = *this;
    std::swap(r.img_[i - 1], r.img_[i]);
    return r;
}

Perm Perm::resized(int m) const {
    Perm t = trimmed();
    if (m < t.size()) throw std::invalid_argument("cannot shrink permutation past a non-fixed point");
    for (int i = t.size() + 1; i <= m; ++i) t.img_.push_back(i);
    return t;
}

Perm Perm::trimmed() const {
    Perm r = *this;
    while (!r.img_.empty() && r.img_.back() == static_cast<int>(r.img_.size())) r.img_.pop_back();
    return r;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < img_.size(); ++i) os << (i ? "," : "") << img_[i];
    os << ']';
    return os.str();
}

bool same_up_to_fixed_points(const Perm& a, const Perm& b) {
    return a.trimmed() == b.trimmed();
}

PartialPerm::PartialPerm(int rows, int cols)
    : rows_(rows), cols_(cols), r2c_(rows, 0), c2r_(cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative partial permutation shape");
}

PartialPerm::PartialPerm(int rows, int cols, const std::vector<Cell>& ones) : PartialPerm(rows, cols) {
    for (const Cell& c : ones) set(c.i, c.j);
}

void PartialPerm::set(int i, int j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::invalid_argument("cell outside partial permutation");
    if (r2c_[i - 1] == j) return;
    if (r2c_[i - 1] != 0 || c2r_[j - 1] != 0)
        throw std::invalid_argument("two 1s in one row or column");
    r2c_[i - 1] = j;
    c2r_[j - 1] = i;
}

void PartialPerm::clear(int i, int j) {
    if (r2c_[i - 1] == j) {
        r2c_[i - 1] = 0;
        c2r_[j - 1] = 0;
    }
}

PartialPerm PartialPerm::from_perm(const Perm& p) {
    PartialPerm r(p.size(), p.size());
    for (int i = 1; i <= p.size(); ++i) r.set(i, p(i));
    return r;
}

PartialPerm PartialPerm::identity(int rows, int cols) {
    PartialPerm r(rows, cols);
    for (int i = 1; i <= std::min(rows, cols); ++i) r.set(i, i);
    return r;
}

PartialPerm PartialPerm::nw_corner(const Perm& p, int rows, int cols) {
    PartialPerm r(rows, cols);
    for (int i = 1; i <= rows && i <= p.size(); ++i)
        if (p(i) <= cols) r.set(i, p(i));
    return r;
}

PartialPerm PartialPerm::se_corner(const Perm& p, int rows, int cols) {
    int m = p.size();
    PartialPerm r(rows, cols);
    for (int i = m - rows + 1; i <= m; ++i)
        if (p(i) > m - cols) r.set(i - (m - rows), p(i) - (m - cols));
    return r;
}

int PartialPerm::rank() const {
    return static_cast<int>(std::count_if(r2c_.begin(), r2c_.end(), [](int c) { return c != 0; }));
}

std::vector<Cell> PartialPerm::ones() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows_; ++i)
        if (r2c_[i - 1]) out.push_back({i, r2c_[i - 1]});
    return out;
}

PartialPerm PartialPerm::rotated() const {
    PartialPerm r(rows_, cols_);
    for (const Cell& c : ones()) r.set(rows_ + 1 - c.i, cols_ + 1 - c.j);
    return r;
}

PartialPerm PartialPerm::transposed() const {
    PartialPerm r(cols_, rows_);
    for (const Cell& c : ones()) r.set(c.j, c.i);
    return r;
}

bool PartialPerm::is_identity() const {
    if (rank() != std::min(rows_, cols_)) return false;
    for (const Cell& c : ones())
        if (c.i != c.j) return false;
    return true;
}

int length(const Perm& p) {
    int n = p.size(), inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++inv;
    return inv;
}

Perm demazure_product(const HeckeWord& word, int ambient) {
    int m = ambient;
    if (m <= 0) {
        m = 1;
        for (int a : word) m = std::max(m, a + 1);
    }
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = i + 1;
    for (int a : word) {
        if (a < 1 || a >= m) throw std::invalid_argument("Hecke letter outside ambient size");
        if (w[a - 1] < w[a]) std::swap(w[a - 1], w[a]);
    }
    return Perm(std::move(w));
}

std::vector<Cell> rothe_diagram(const PartialPerm& p) {
    std::vector<Cell> out;
    std::vector<char> col_hit(p.cols() + 1, 0);
    for (int i = 1; i <= p.rows(); ++i) {
        int c = p.col_of(i);
        int stop = c ? c : p.cols() + 1;  // cells east of the row's 1 are killed
        for (int j = 1; j < stop && j <= p.cols(); ++j)
            if (!col_hit[j]) out.push_back({i, j});
        if (c) col_hit[c] = 1;
    }
    return out;
}

std::vector<Cell> rothe_diagram(const Perm& p) { return rothe_diagram(PartialPerm::from_perm(p)); }

std::vector<Cell> essential_set(const PartialPerm& p) {
    auto d = rothe_diagram(p);
    std::vector<std::vector<char>> in(p.rows() + 2, std::vector<char>(p.cols() + 2, 0));
    for (const Cell& c : d) in[c.i][c.j] = 1;
    std::vector<Cell> out;
    for (const Cell& c : d)
        if (!in[c.i + 1][c.j] && !in[c.i][c.j + 1]) out.push_back(c);
    return out;
}

std::vector<Cell> essential_set(const Perm& p) { return essential_set(PartialPerm::from_perm(p)); }

Perm complete(const PartialPerm& p) {
    int k = p.rows(), l = p.cols(), m = k + l - p.rank();
    std::vector<int> img(m, 0);
    int next_col = l + 1;
    for (int i = 1; i <= k; ++i) img[i - 1] = p.col_of(i) ? p.col_of(i) : next_col++;
    int row = k + 1;
    for (int j = 1; j <= l; ++j)
        if (!p.row_of(j)) img[row++ - 1] = j;
    return Perm(std::move(img));
}

Perm opposite_complete(const PartialPerm& p) {
    Perm c = complete(p.rotated());
    int m = c.size();
    std::vector<int> img(m);
    for (int i = 1; i <= m; ++i) img[i - 1] = m + 1 - c(m + 1 - i);
    return Perm(std::move(img));
}

std::vector<std::vector<int>> rank_table(const Perm& p) {
    int m = p.size();
    std::vector<std::vector<int>> r(m + 1, std::vector<int>(m + 1, 0));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            r[i][j] = r[i - 1][j] + r[i][j - 1] - r[i - 1][j - 1] + (p(i) == j ? 1 : 0);
    return r;
}

bool bruhat_leq(const Perm& u, const Perm& v) {
    int m = std::max(u.size(), v.size());
    auto ru = rank_table(u.resized(m)), rv = rank_table(v.resized(m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (ru[i][j] < rv[i][j]) return false;
    return true;
}

std::vector<int> descents(const Perm& p) {
    std::vector<int> d;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) d.push_back(i);
    return d;
}

HeckeWord reduced_word(const Perm& p) {
    HeckeWord picks;
    Perm w = p;
    for (;;) {
        auto d = descents(w);
        if (d.empty()) break;
        picks.push_back(d.front());
        w = w.times_s(d.front());
    }
    std::reverse(picks.begin(), picks.end());
    return picks;
}

Perm conj_longest(const Perm& p) {
    int m = p.size();
    std::vector<int> img(m);
    for (int i = 1; i <= m; ++i) img[i - 1] = m + 1 - p(m + 1 - i);
    return Perm(std::move(img));
}

}  // namespace qk
