#include "resolvent/polymatrix.hpp"

#include <algorithm>

#include "resolvent/errors.hpp"

namespace resolvent {

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 1 || cols < 1)
        throw SolverError(ErrorKind::input, "PolyMatrix: dimensions must be >= 1");
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<RatPoly>> init)
    : PolyMatrix(static_cast<int>(init.size()),
                 static_cast<int>(init.begin()->size())) {
    int r = 0;
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_)
            throw SolverError(ErrorKind::input, "PolyMatrix: ragged initializer");
        int c = 0;
        for (const auto& e : row) at(r, c++) = e;
        ++r;
    }
}

namespace {

// Reduced fraction of polynomials, used only during back-substitution.
struct RatFrac {
    RatPoly num, den;  // den nonzero

    static RatFrac of(RatPoly n, RatPoly d) {
        RatFrac f{std::move(n), std::move(d)};
        f.reduce();
        return f;
    }
    void reduce() {
        if (num.is_zero()) {
            den = RatPoly(Rational(1));
            return;
        }
        RatPoly g = RatPoly::gcd(num, den);
        if (g.degree() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
        Rational lead = den.leading();
        num = num / lead;
        den = den / lead;
    }
};

RatFrac operator+(const RatFrac& a, const RatFrac& b) {
    return RatFrac::of(a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFrac operator*(const RatFrac& a, const RatFrac& b) {
    return RatFrac::of(a.num * b.num, a.den * b.den);
}

// Divide a row by the gcd of its entries (polynomial part and content)
// to keep intermediate degrees down.
void make_row_primitive(std::vector<RatPoly>& row) {
    RatPoly g;
    for (const auto& e : row)
        if (!e.is_zero()) g = g.is_zero() ? e : RatPoly::gcd(g, e);
    if (g.is_zero()) return;
    if (g.degree() > 0)
        for (auto& e : row)
            if (!e.is_zero()) e = e.exact_div(g);
    Rational content(0);
    for (const auto& e : row) {
        Rational c = e.content();
        if (content == 0) content = c;
        else if (c != 0) {
            mpz_class gn, gl;
            mpz_gcd(gn.get_mpz_t(), content.get_num_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(gl.get_mpz_t(), content.get_den_mpz_t(), c.get_den_mpz_t());
            content = Rational(gn, gl);
            content.canonicalize();
        }
    }
    if (content != 0 && content != 1)
        for (auto& e : row) e = e * (Rational(1) / content);
}

}  // namespace

std::vector<RatPoly> nullspace_poly_matrix(const PolyMatrix& M) {
    const int rows = M.rows(), cols = M.cols();
    std::vector<std::vector<RatPoly>> A(rows, std::vector<RatPoly>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) A[r][c] = M.at(r, c);

    std::vector<int> pivot_cols;
    int pr = 0;  // next pivot row
    for (int col = 0; col < cols && pr < rows; ++col) {
        int best = -1;
        for (int r = pr; r < rows; ++r) {
            if (A[r][col].is_zero()) continue;
            if (best < 0 || A[r][col].degree() < A[best][col].degree()) best = r;
        }
        if (best < 0) continue;  // free column
        std::swap(A[pr], A[best]);
        for (int r = pr + 1; r < rows; ++r) {
            if (A[r][col].is_zero()) continue;
            RatPoly f = A[r][col];
            for (int c = col; c < cols; ++c)
                A[r][c] = A[r][c] * A[pr][col] - f * A[pr][c];
            make_row_primitive(A[r]);
        }
        pivot_cols.push_back(col);
        ++pr;
    }

    const int rank = static_cast<int>(pivot_cols.size());
    const int nullity = cols - rank;
    if (nullity == 0)
        throw SolverError(ErrorKind::degenerate,
                          "zero-dimensional nullspace: no resolvent of this order");
    if (nullity > 1)
        throw SolverError(ErrorKind::degenerate,
                          "nullspace dimension > 1: degenerate input");

    int free_col = 0;
    {
        std::vector<bool> is_pivot(cols, false);
        for (int c : pivot_cols) is_pivot[c] = true;
        for (int c = 0; c < cols; ++c)
            if (!is_pivot[c]) { free_col = c; break; }
    }

    std::vector<RatFrac> v(cols, RatFrac{RatPoly(), RatPoly(Rational(1))});
    v[free_col] = RatFrac{RatPoly(Rational(1)), RatPoly(Rational(1))};
    for (int k = rank - 1; k >= 0; --k) {
        int pc = pivot_cols[k];
        RatFrac acc{RatPoly(), RatPoly(Rational(1))};
        for (int c = pc + 1; c < cols; ++c) {
            if (A[k][c].is_zero() || v[c].num.is_zero()) continue;
            acc = acc + RatFrac{A[k][c], RatPoly(Rational(1))} * v[c];
        }
        v[pc] = RatFrac::of(-acc.num, acc.den * A[k][pc]);
    }

    // Clear denominators with their lcm.
    RatPoly lcm(Rational(1));
    for (const auto& f : v) {
        RatPoly g = RatPoly::gcd(lcm, f.den);
        lcm = lcm * f.den.exact_div(g.is_zero() ? RatPoly(Rational(1)) : g);
    }
    std::vector<RatPoly> out(cols);
    for (int c = 0; c < cols; ++c)
        out[c] = v[c].num * lcm.exact_div(v[c].den);

    // Normalize: divide out common polynomial factor and content gcd; the
    // sign is fixed so the lowest-order nonzero coefficient of the first
    // nonzero entry is positive.
    make_row_primitive(out);
    for (auto& e : out) {
        if (e.is_zero()) continue;
        for (const auto& c : e.coeffs()) {
            if (c == 0) continue;
            if (c < 0)
                for (auto& f : out) f = -f;
            break;
        }
        break;
    }
    return out;
}

}  // namespace resolvent
