#include "diocone/linalg.hpp"

#include "diocone/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace diocone {

IntVector primitive_part(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0) throw MathError("ZeroVector", "primitive part of the zero vector");
    if (g == 1) return v;
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

namespace {

// Fraction-free (Bareiss) elimination on a working copy.  Returns the number
// of pivots; when `sign_out` is given the permutation sign is reported and
// elimination runs on square pivoting suitable for determinants.
std::size_t bareiss(IntMatrix& a, int* sign_out = nullptr) {
    int sign = 1;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        if (piv != row) {
            std::swap(a[piv], a[row]);
            sign = -sign;
        }
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Int t = a[i][j] * a[row][col] - a[i][col] * a[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    if (sign_out) *sign_out = sign;
    return row;
}

} // namespace

std::size_t rank(const IntMatrix& a) {
    IntMatrix work = a;
    return bareiss(work);
}

Int determinant(const IntMatrix& a) {
    const std::size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw MathError("NotSquare", "determinant of non-square matrix");
    if (n == 0) return 1;
    IntMatrix work = a;
    int sign = 1;
    std::size_t r = bareiss(work, &sign);
    if (r < n) return 0;
    Int d = work[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

Int determinant_abs(const IntMatrix& a) {
    return abs(determinant(a));
}

Adjugate adjugate(const IntMatrix& a) {
    const std::size_t n = a.size();
    Adjugate res;
    res.det = determinant(a);
    res.adj = IntMatrix(n, IntVector(n, 0));
    if (n == 1) {
        res.adj[0][0] = 1;
        return res;
    }
    IntMatrix minor(n - 1, IntVector(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = a[r][c];
                }
                ++rr;
            }
            Int cof = determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            res.adj[j][i] = cof;
        }
    }
    return res;
}

namespace {

// Integer row echelon form via gcd pivoting; U starts as the identity and
// tracks the (unimodular) row operations: on return U * input = M.
void row_echelon_with_transform(IntMatrix& m, IntMatrix& u) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        // shrink column entries below until a single nonzero pivot remains
        while (true) {
            std::size_t piv = rows;
            for (std::size_t i = row; i < rows; ++i) {
                if (m[i][col] != 0 && (piv == rows || cmp(abs(m[i][col]), abs(m[piv][col])) < 0))
                    piv = i;
            }
            if (piv == rows) break; // column clear
            if (piv != row) {
                std::swap(m[piv], m[row]);
                std::swap(u[piv], u[row]);
            }
            bool clean = true;
            for (std::size_t i = row + 1; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[row][col].get_mpz_t());
                if (q != 0) {
                    for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                    for (std::size_t j = 0; j < u[i].size(); ++j) u[i][j] -= q * u[row][j];
                }
                if (m[i][col] != 0) clean = false;
            }
            if (clean) {
                ++row;
                break;
            }
        }
    }
}

} // namespace

IntMatrix integer_kernel_basis(const IntMatrix& a) {
    if (a.empty()) return {};
    const std::size_t n = a[0].size();
    IntMatrix t = transpose(a); // rows of t = columns of a
    IntMatrix u = identity_matrix(n);
    row_echelon_with_transform(t, u);
    IntMatrix kernel;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(t[i])) kernel.push_back(u[i]);
    }
    return kernel;
}

std::optional<IntVector> integral_solve(const IntMatrix& a, const IntVector& b) {
    const std::size_t n = a.empty() ? b.size() : a[0].size();
    IntMatrix t = transpose(a);
    IntMatrix u = identity_matrix(n);
    row_echelon_with_transform(t, u);
    IntVector rest = b;
    IntVector coeff(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = 0;
        while (piv < t[i].size() && t[i][piv] == 0) ++piv;
        if (piv == t[i].size()) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest[piv].get_mpz_t(), t[i][piv].get_mpz_t());
        if (r != 0) return std::nullopt;
        if (q != 0) {
            coeff[i] = q;
            for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= q * t[i][j];
        }
    }
    if (!is_zero(rest)) return std::nullopt;
    return vec_times_matrix(coeff, u);
}

DiagonalForm diagonalize(const IntMatrix& a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    DiagonalForm f;
    f.u = identity_matrix(m);
    f.v = identity_matrix(n);
    f.v_inv = identity_matrix(n);
    IntMatrix w = a;

    auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {
        // C_j <- C_j - q*C_k
        for (std::size_t r = 0; r < m; ++r) w[r][j] -= q * w[r][k];
        for (std::size_t r = 0; r < n; ++r) f.v[r][j] -= q * f.v[r][k];
        for (std::size_t c = 0; c < n; ++c) f.v_inv[k][c] += q * f.v_inv[j][c];
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        for (std::size_t r = 0; r < m; ++r) std::swap(w[r][j], w[r][k]);
        for (std::size_t r = 0; r < n; ++r) std::swap(f.v[r][j], f.v[r][k]);
        std::swap(f.v_inv[j], f.v_inv[k]);
    };
    auto col_negate = [&](std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) w[r][j] = -w[r][j];
        for (std::size_t r = 0; r < n; ++r) f.v[r][j] = -f.v[r][j];
        for (std::size_t c = 0; c < n; ++c) f.v_inv[j][c] = -f.v_inv[j][c];
    };

    std::size_t k = 0;
    while (k < m && k < n) {
        // locate a pivot of minimal absolute value in the trailing block
        std::size_t pi = m, pj = n;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (w[i][j] != 0 && (pi == m || cmp(abs(w[i][j]), abs(w[pi][pj])) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        if (pi != k) {
            std::swap(w[pi], w[k]);
            std::swap(f.u[pi], f.u[k]);
        }
        if (pj != k) col_swap(pj, k);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (w[i][k] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), w[i][k].get_mpz_t(), w[k][k].get_mpz_t());
                if (q != 0) {
                    for (std::size_t j = 0; j < n; ++j) w[i][j] -= q * w[k][j];
                    for (std::size_t j = 0; j < m; ++j) f.u[i][j] -= q * f.u[k][j];
                }
                if (w[i][k] != 0) { // remainder is smaller, promote it to pivot
                    std::swap(w[i], w[k]);
                    std::swap(f.u[i], f.u[k]);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (w[k][j] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), w[k][j].get_mpz_t(), w[k][k].get_mpz_t());
                if (q != 0) col_op(j, k, q);
                if (w[k][j] != 0) {
                    col_swap(j, k);
                    clean = false;
                }
            }
        }
        if (w[k][k] < 0) col_negate(k);
        f.diag.push_back(w[k][k]);
        ++k;
    }
    return f;
}

IntVector LatticeEmbedding::forward(const IntVector& x) const {
    IntVector num = vec_times_matrix(x, forward_num);
    if (denom != 1) {
        for (Int& c : num) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
            if (r != 0) throw MathError("NotInLattice", "vector not in the working lattice");
            c = q;
        }
    }
    return num;
}

IntVector LatticeEmbedding::backward(const IntVector& c) const {
    return vec_times_matrix(c, basis);
}

IntVector LatticeEmbedding::backward_form(const IntVector& form) const {
    return primitive_part(matrix_times_vec(forward_num, form));
}

LatticeEmbedding embedding_from_basis(const IntMatrix& basis, std::size_t ambient_dim,
                                      LatticeMode mode) {
    LatticeEmbedding e;
    e.ambient_dim = ambient_dim;
    e.rank = basis.size();
    e.mode = mode;
    e.basis = basis;
    DiagonalForm f = diagonalize(basis);
    if (f.diag.size() != basis.size())
        throw MathError("DependentBasis", "lattice basis rows are dependent");
    e.denom = 1;
    for (const Int& d : f.diag) e.denom = lcm(e.denom, d);
    // forward = V * diag(denom/d_i) * U  (d x rank)
    IntMatrix scaled(ambient_dim, IntVector(e.rank, 0));
    for (std::size_t a = 0; a < ambient_dim; ++a)
        for (std::size_t i = 0; i < e.rank; ++i) scaled[a][i] = f.v[a][i] * (e.denom / f.diag[i]);
    e.forward_num = matrix_product(scaled, f.u);
    return e;
}

FullDimResult to_full_dimensional(const IntMatrix& generators, LatticeMode mode) {
    if (generators.empty()) throw MathError("ZeroCone", "no generators");
    const std::size_t d = generators[0].size();
    bool all_zero = true;
    for (const auto& g : generators)
        if (!is_zero(g)) all_zero = false;
    if (all_zero) throw MathError("ZeroCone", "all generators are zero");

    IntMatrix basis;
    if (mode == LatticeMode::generated_lattice) {
        IntMatrix work = generators;
        IntMatrix u = identity_matrix(work.size());
        row_echelon_with_transform(work, u);
        for (const auto& row : work)
            if (!is_zero(row)) basis.push_back(row);
    } else {
        IntMatrix forms = integer_kernel_basis(generators);
        if (forms.empty()) {
            basis = identity_matrix(d);
        } else {
            basis = integer_kernel_basis(forms);
        }
    }

    FullDimResult res;
    res.embedding = embedding_from_basis(basis, d, mode);
    res.transformed.reserve(generators.size());
    for (const auto& g : generators) res.transformed.push_back(res.embedding.forward(g));
    return res;
}

} // namespace diocone
