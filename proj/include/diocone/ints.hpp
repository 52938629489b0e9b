#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace diocone {

using Int = mpz_class;
using Rat = mpq_class;

// Row vectors over Z; the length is the ambient dimension.
using IntVector = std::vector<Int>;

// Rectangular matrix, stored as rows.
using IntMatrix = std::vector<IntVector>;

inline bool is_zero(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Int dot(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVector negate(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVector scale(const Int& c, const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// a*c - b*d, the Fourier-Motzkin combination.
inline IntVector combine(const Int& c, const IntVector& a, const Int& d, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i] - d * b[i];
    return r;
}

inline bool lex_less(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline IntVector unit_vector(std::size_t dim, std::size_t i) {
    IntVector r(dim, 0);
    r[i] = 1;
    return r;
}

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = unit_vector(n, i);
    return m;
}

// row vector times matrix (rows of m must match v's length)
inline IntVector vec_times_matrix(const IntVector& v, const IntMatrix& m) {
    IntVector r(m.empty() ? 0 : m[0].size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
    }
    return r;
}

// matrix times column vector
inline IntVector matrix_times_vec(const IntMatrix& m, const IntVector& v) {
    IntVector r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = vec_times_matrix(a[i], b);
    return r;
}

inline IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m[0].size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

} // namespace diocone
