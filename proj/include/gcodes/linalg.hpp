#pragma once

#include "gcodes/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gcodes {

using CycVector = std::vector<Cyclotomic>;

/// Dense row-major matrix over a single cyclotomic field.
class CycMatrix {
public:
    CycMatrix(const CycField& field, std::size_t rows, std::size_t cols);

    static CycMatrix identity(const CycField& field, std::size_t n);

    const CycField& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix operator-(const CycMatrix& rhs) const;
    CycMatrix operator*(const Cyclotomic& scalar) const;
    CycVector apply(const CycVector& v) const;

    bool is_square() const { return rows_ == cols_; }
    /// True when every row and column has exactly one nonzero entry.
    bool is_monomial() const;

    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

    /// Canonical byte string, usable as a hash key for exact equality.
    std::string key() const;

private:
    const CycField* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Cyclotomic> entries_;
};

/// Incrementally maintained reduced row-echelon basis of a row space.
/// Rows are kept with pivot entry 1 and every pivot column cleared in all
/// other rows, so the stored basis is canonical for the spanned subspace.
class EchelonBasis {
public:
    EchelonBasis(const CycField& field, std::size_t width) : field_(&field), width_(width) {}

    /// Inserts a row; returns true iff it was independent of the current rows.
    bool insert(CycVector row);
    /// Returns true iff v lies in the current span (v is not modified).
    bool contains(const CycVector& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    /// Rows sorted by pivot column.
    std::vector<CycVector> rows() const;
    std::vector<std::size_t> pivots() const;

private:
    void reduce(CycVector& v) const;

    const CycField* field_;
    std::size_t width_;
    std::vector<CycVector> rows_;
    std::vector<std::size_t> pivot_cols_;
};

std::size_t rank(const CycMatrix& m);

/// Basis of {x : Mx = 0}. One vector per free column f of rref(M): x_f = 1,
/// x_p = -rref(M)[p][f] on pivot columns, zero elsewhere. Canonical.
std::vector<CycVector> nullspace(const CycMatrix& m);

/// Same, for the matrix whose rows are `rows` (each of length `width`).
std::vector<CycVector> nullspace_of_rows(const CycField& field, std::size_t width,
                                         const std::vector<CycVector>& rows);

enum class SpanRelation { Equal, FirstInSecond, SecondInFirst, Incomparable };

struct SpanComparison {
    SpanRelation relation;
    std::size_t dim_first;
    std::size_t dim_second;
    std::size_t dim_union;
};

std::string to_string(SpanRelation r);

/// Compares span(a) and span(b) by exact ranks. Throws DimensionMismatch when
/// vector lengths differ, ConductorMismatch when fields differ.
SpanComparison span_compare(const std::vector<CycVector>& a, const std::vector<CycVector>& b);

}  // namespace gcodes
