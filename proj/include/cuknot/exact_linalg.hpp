#pragma once

#include <cstdint>
#include <vector>

#include "cuknot/errors.hpp"

namespace cuknot {

// Checked 64-bit integer arithmetic. Entries stay exact or the operation
// throws overflow_error; nothing ever wraps silently.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// Reduce into 0..p-1 for any sign of x.
int64_t mod_p(int64_t x, int64_t p);

bool is_odd_prime(int64_t p);

// Dense integer matrix with exact arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix negated() const;
    bool is_symmetric() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int64_t> data_;
};

// Vector of residues mod an odd prime p, entries reduced into 0..p-1.
struct ModPVector {
    int64_t p = 0;
    std::vector<int64_t> entries;

    bool operator==(const ModPVector& other) const = default;
};

// Invariant factors d1 | d2 | ... of an integer matrix. Zero entries
// (rank deficiency) are not listed; `rank` counts the nonzero factors.
struct SmithForm {
    std::vector<int64_t> diagonal;
    std::size_t rank = 0;
};

// Exact determinant via fraction-free (Bareiss) elimination.
int64_t det_exact(const IntMatrix& m);

// Basis of { v : m v = 0 over GF(p) }, deterministic echelon form with
// leading entries 1. Throws if p is not an odd prime.
std::vector<ModPVector> nullspace_modp(const IntMatrix& m, int64_t p);

SmithForm smith_normal_form(const IntMatrix& m);

// diagonal entries of the Smith form that are neither 0 nor 1; this is
// the torsion part, e.g. H1 of the double branched cover for a Goeritz
// matrix.
std::vector<int64_t> nontrivial_invariant_factors(const IntMatrix& m);

// m * v over GF(p).
std::vector<int64_t> mul_modp(const IntMatrix& m, const std::vector<int64_t>& v, int64_t p);

// v^T m v over the integers, exact.
int64_t quadratic_form(const IntMatrix& m, const std::vector<int64_t>& v);

}  // namespace cuknot
