#include "cuknot/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace cuknot {

namespace {

int64_t narrow(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw overflow_error("integer matrix entry exceeds 64 bits");
    return static_cast<int64_t>(v);
}

}  // namespace

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer addition overflow");
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer subtraction overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer multiplication overflow");
    return r;
}

int64_t mod_p(int64_t x, int64_t p) {
    int64_t r = x % p;
    return r < 0 ? r + p : r;
}

bool is_odd_prime(int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = checked_sub(0, data_[i]);
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

int64_t det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Bareiss fraction-free elimination; every division below is exact.
    std::vector<std::vector<int64_t>> a(n, std::vector<int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    int sign = 1;
    int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 t = static_cast<__int128>(a[i][j]) * a[k][k] -
                             static_cast<__int128>(a[i][k]) * a[k][j];
                a[i][j] = narrow(t / prev);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return checked_mul(sign, a[n - 1][n - 1]);
}

namespace {

int64_t inverse_modp(int64_t a, int64_t p) {
    // extended Euclid; a nonzero mod p
    int64_t t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod_p(t, p);
}

}  // namespace

std::vector<ModPVector> nullspace_modp(const IntMatrix& m, int64_t p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("nullspace_modp: p must be an odd prime");
    const std::size_t rows = m.rows(), cols = m.cols();

    std::vector<std::vector<int64_t>> a(rows, std::vector<int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod_p(m.at(i, j), p);

    // row-reduce to RREF over GF(p)
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        int64_t inv = inverse_modp(a[r][c], p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = mod_p(a[r][j] * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            int64_t f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = mod_p(a[i][j] - f * a[r][j], p);
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<ModPVector> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        ModPVector v{p, std::vector<int64_t>(cols, 0)};
        v.entries[free_c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v.entries[pivot_col[i]] = mod_p(-a[i][free_c], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<int64_t>> a(rows, std::vector<int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    std::vector<int64_t> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // bring a nonzero entry of minimal magnitude to (t,t)
        std::size_t pi = t, pj = t;
        int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[pi]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pj]);

        // reduce column t, then row t; a nonzero remainder leaves a smaller
        // candidate pivot, so retrying the same t terminates
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            int64_t q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < cols; ++j)
                a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
            if (a[i][t] != 0) dirty = true;
        }
        if (dirty) continue;
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            int64_t q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < rows; ++i)
                a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
            if (a[t][j] != 0) dirty = true;
        }
        if (dirty) continue;

        // divisibility chain: fold an offending row into row t and retry
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj)
                        a[t][jj] = checked_add(a[t][jj], a[i][jj]);
                    divides_all = false;
                }
        if (!divides_all) continue;

        diag.push_back(std::llabs(a[t][t]));
        ++t;
    }

    SmithForm f;
    f.diagonal = std::move(diag);
    f.rank = f.diagonal.size();
    return f;
}

std::vector<int64_t> nontrivial_invariant_factors(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    std::vector<int64_t> out;
    for (int64_t d : f.diagonal)
        if (d != 1) out.push_back(d);
    return out;
}

std::vector<int64_t> mul_modp(const IntMatrix& m, const std::vector<int64_t>& v, int64_t p) {
    if (v.size() != m.cols()) throw std::invalid_argument("mul_modp: size mismatch");
    std::vector<int64_t> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += static_cast<__int128>(m.at(i, j)) * v[j];
        out[i] = mod_p(narrow(acc), p);
    }
    return out;
}

int64_t quadratic_form(const IntMatrix& m, const std::vector<int64_t>& v) {
    if (m.rows() != m.cols() || v.size() != m.cols())
        throw std::invalid_argument("quadratic_form: size mismatch");
    __int128 acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            __int128 term = static_cast<__int128>(checked_mul(v[i], v[j])) * m.at(i, j);
            acc += term;
        }
    return narrow(acc);
}

}  // namespace cuknot
