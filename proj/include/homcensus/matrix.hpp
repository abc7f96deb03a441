#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homcensus/field.hpp"

namespace homcensus {

// Dense row-major matrix over F_q.
class MatrixGF {
public:
    MatrixGF(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

    static MatrixGF identity(const Field& field, std::size_t n);
    static MatrixGF from_entries(Field field, std::size_t rows, std::size_t cols,
                                 std::span<const FieldElement> entries);
    // Convenience for tests and bindings: entries given as canonical codes.
    static MatrixGF from_codes(const Field& field, std::size_t rows, std::size_t cols,
                               std::span<const std::uint32_t> codes);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, FieldElement v) { entries_[i * cols_ + j] = v; }
    std::span<const FieldElement> entries() const noexcept { return entries_; }

    MatrixGF mul(const MatrixGF& rhs) const; // DimensionMismatch / FieldMismatch
    MatrixGF add(const MatrixGF& rhs) const;
    bool is_zero() const;

    friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
               a.entries_ == b.entries_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> entries_;
};

// Reduced row echelon form with its pivot columns. Pivoting rule: scanning
// columns left to right, each pivot is the first row (top to bottom among the
// unused rows) with a nonzero entry. This makes every derived basis
// deterministic.
struct Echelon {
    MatrixGF rref;
    std::vector<std::size_t> pivots;
    std::size_t rank;
};

Echelon reduced_row_echelon(const MatrixGF& a);
std::size_t rank(const MatrixGF& a);

// Columns span ker(a); one column per free variable of the RREF, in column
// order. Shape: cols(a) x (cols(a) - rank).
MatrixGF kernel_basis(const MatrixGF& a);
// The pivot columns of a, in order. Shape: rows(a) x rank.
MatrixGF image_basis(const MatrixGF& a);

std::optional<MatrixGF> inverse(const MatrixGF& a); // nullopt when singular

// A validated differential: a square matrix D with D^2 = 0 acting on F_q^n.
class Differential {
public:
    // Throws ValidationError (NotADifferential) when M is not square or
    // M^2 != 0.
    static Differential make(MatrixGF m);

    const MatrixGF& matrix() const noexcept { return mat_; }
    const Field& field() const noexcept { return mat_.field(); }
    std::size_t n() const noexcept { return mat_.rows(); }
    std::size_t rank() const noexcept { return rank_; }
    // dim ker D - dim im D = n - 2 rank(D); same parity as n.
    std::size_t homology_dim() const noexcept { return n() - 2 * rank_; }

private:
    Differential(MatrixGF m, std::size_t r) : mat_(std::move(m)), rank_(r) {}
    MatrixGF mat_;
    std::size_t rank_;
};

// The canonical differential with m acyclic blocks and r-dimensional
// homology on F_q^{2m+r}: zero everywhere except an m x m identity in the
// top-right corner (basis order: images, homology classes, preimages).
Differential canonical_differential(const Field& field, std::size_t m, std::size_t r);

// The same operator in the interleaved basis (e_1, e'_1, ..., e_m, e'_m,
// f_1, ..., f_r): a direct sum of m upper Jordan blocks [[0,1],[0,0]] and r
// zero blocks. Display layout only.
MatrixGF jordan_differential(const Field& field, std::size_t m, std::size_t r);

// Change of basis realizing the canonical form: columns of `basis` are
// (e_1..e_m, f_1..f_r, e'_1..e'_m) where the e_i span im D, the f_j extend
// them to a basis of ker D, and D e'_i = e_i. Satisfies
// basis^{-1} * D * basis == canonical_differential(m, r).
struct NormalForm {
    std::size_t m;
    std::size_t r;
    MatrixGF basis;
    MatrixGF basis_inverse;

    // Columns permuted to the interleaved layout matching
    // jordan_differential(m, r).
    MatrixGF jordan_basis() const;
};

NormalForm normal_form(const Differential& d);

} // namespace homcensus
