#include "permucover/affine.hpp"

#include <algorithm>

namespace permucover {

namespace {

void check_same_length(const std::vector<Point>& points) {
    if (points.empty()) throw InputError("no points");
    for (const Point& p : points)
        if (p.size() != points[0].size())
            throw InputError("points of mixed coordinate lengths");
}

// Fraction-free (Bareiss) row echelon form of an integer matrix, in place.
// Returns the rank; pivcols receives the pivot column of each nonzero row.
int bareiss_echelon(std::vector<std::vector<BigInt>>& m, std::vector<int>& pivcols) {
    pivcols.clear();
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; col++) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) sel++;
        if (sel == rows) continue;
        if (sel != rank) std::swap(m[sel], m[rank]);
        for (std::size_t r = rank + 1; r < rows; r++) {
            for (std::size_t c = col + 1; c < cols; c++)
                m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        pivcols.push_back(static_cast<int>(col));
        rank++;
    }
    return static_cast<int>(rank);
}

// Integer row (lambda * p, lambda) with lambda the denominator lcm; row
// scaling leaves the solution space unchanged.
std::vector<BigInt> cleared_row(const Point& p, bool append_one) {
    std::vector<Rat> vals(p);
    if (append_one) vals.push_back(Rat(1));
    BigInt lambda = common_denominator(vals);
    std::vector<BigInt> row(vals.size());
    for (std::size_t i = 0; i < vals.size(); i++)
        row[i] = rat_num(vals[i]) * (lambda / rat_den(vals[i]));
    return row;
}

} // namespace

Hyperplane::Hyperplane(std::vector<BigInt> normal, BigInt offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
    std::size_t first = 0;
    while (first < normal_.size() && normal_[first] == 0) first++;
    if (first == normal_.size()) throw InputError("hyperplane with zero normal");
    BigInt g = offset_;
    for (const BigInt& a : normal_) g = gcd(g, a);
    if (g < 0) g = -g;
    if (normal_[first] < 0) g = -g;
    for (BigInt& a : normal_) a /= g;
    offset_ /= g;
}

Hyperplane Hyperplane::from_rational(const std::vector<Rat>& normal, const Rat& offset) {
    std::vector<Rat> vals = normal;
    vals.push_back(offset);
    BigInt lambda = common_denominator(vals);
    std::vector<BigInt> n(normal.size());
    for (std::size_t i = 0; i < normal.size(); i++)
        n[i] = rat_num(normal[i]) * (lambda / rat_den(normal[i]));
    BigInt b = rat_num(offset) * (lambda / rat_den(offset));
    return Hyperplane(std::move(n), std::move(b));
}

Rat Hyperplane::evaluate(const Point& x) const {
    if (x.size() != normal_.size()) throw InputError("point/hyperplane dimension mismatch");
    Rat acc{0};
    for (std::size_t i = 0; i < normal_.size(); i++) acc += Rat(normal_[i]) * x[i];
    return acc - Rat(offset_);
}

bool Hyperplane::contains(const Point& x) const { return evaluate(x) == 0; }

bool Hyperplane::operator<(const Hyperplane& o) const {
    if (normal_ != o.normal_) return std::lexicographical_compare(
        normal_.begin(), normal_.end(), o.normal_.begin(), o.normal_.end());
    return offset_ < o.offset_;
}

std::string Hyperplane::to_string() const {
    std::string out;
    bool any = false;
    for (std::size_t i = 0; i < normal_.size(); i++) {
        if (normal_[i] == 0) continue;
        BigInt a = normal_[i];
        if (!any) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) out += a.str() + "*";
        out += "x" + std::to_string(i + 1);
        any = true;
    }
    out += " = " + offset_.str();
    return out;
}

int affine_dim(const std::vector<Point>& points) {
    check_same_length(points);
    if (points.size() == 1) return 0;
    std::vector<std::vector<BigInt>> m;
    m.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); i++) {
        std::vector<Rat> diff(points[i].size());
        for (std::size_t c = 0; c < diff.size(); c++) diff[c] = points[i][c] - points[0][c];
        m.push_back(cleared_row(diff, false));
    }
    std::vector<int> pivcols;
    return bareiss_echelon(m, pivcols);
}

std::vector<Hyperplane> affine_functionals(const std::vector<Point>& points) {
    check_same_length(points);
    const std::size_t n = points[0].size();
    const std::size_t cols = n + 1;
    std::vector<std::vector<BigInt>> m;
    m.reserve(points.size());
    for (const Point& p : points) m.push_back(cleared_row(p, true));

    std::vector<int> pivcols;
    int rank = bareiss_echelon(m, pivcols);

    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivcols) is_pivot[static_cast<std::size_t>(pc)] = true;

    std::vector<Hyperplane> basis;
    for (std::size_t fc = 0; fc < cols; fc++) {
        if (is_pivot[fc]) continue;
        // Back-substitute with x[fc] = 1, other free coordinates zero.
        std::vector<Rat> x(cols, Rat(0));
        x[fc] = 1;
        for (int r = rank - 1; r >= 0; r--) {
            std::size_t pc = static_cast<std::size_t>(pivcols[static_cast<std::size_t>(r)]);
            Rat acc{0};
            for (std::size_t c = pc + 1; c < cols; c++)
                if (x[c] != 0) acc += Rat(m[static_cast<std::size_t>(r)][c]) * x[c];
            x[pc] = -acc / Rat(m[static_cast<std::size_t>(r)][pc]);
        }
        // Solution (a, c) with a.p + c = 0 for every p; a is never zero for
        // a nonzero solution since c alone cannot vanish on (p, 1).
        std::vector<Rat> normal(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
        basis.push_back(Hyperplane::from_rational(normal, -x[n]));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::optional<Hyperplane> hyperplane_through(const std::vector<Point>& points) {
    std::vector<Hyperplane> basis = affine_functionals(points);
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

std::string point_to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); i++) {
        if (i) out += ",";
        out += rat_to_string(p[i]);
    }
    out += ")";
    return out;
}

} // namespace permucover
