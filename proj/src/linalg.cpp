#include "gcodes/linalg.hpp"

#include "gcodes/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gcodes {

CycMatrix::CycMatrix(const CycField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), entries_(rows * cols, Cyclotomic(field)) {}

CycMatrix CycMatrix::identity(const CycField& field, std::size_t n) {
    CycMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one(field);
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                                std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    if (field_ != rhs.field_) throw ConductorMismatch("matrix product across fields");
    CycMatrix out(*field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cyclotomic& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Cyclotomic& b = rhs(k, j);
                if (b.is_zero()) continue;
                out(i, j) += a * b;
            }
        }
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape");
    CycMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

CycMatrix CycMatrix::operator*(const Cyclotomic& scalar) const {
    CycMatrix out = *this;
    for (auto& e : out.entries_) e = e * scalar;
    return out;
}

CycVector CycMatrix::apply(const CycVector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
    CycVector out(rows_, Cyclotomic(*field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Cyclotomic& a = (*this)(i, j);
            if (a.is_zero() || v[j].is_zero()) continue;
            out[i] += a * v[j];
        }
    return out;
}

bool CycMatrix::is_monomial() const {
    if (!is_square()) return false;
    std::vector<int> col_hits(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) {
                ++row_hits;
                ++col_hits[j];
            }
        if (row_hits != 1) return false;
    }
    return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string CycMatrix::key() const {
    std::string k;
    for (const auto& e : entries_) {
        if (e.is_zero()) {
            k += '0';
        } else {
            for (const auto& s : e.to_strings()) {
                k += s;
                k += ',';
            }
        }
        k += ';';
    }
    return k;
}

// ---- EchelonBasis ----

void EchelonBasis::reduce(CycVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivot_cols_[r];
        if (v[p].is_zero()) continue;
        const Cyclotomic f = v[p];
        const CycVector& row = rows_[r];
        for (std::size_t j = 0; j < width_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
}

bool EchelonBasis::contains(const CycVector& v) const {
    if (v.size() != width_) throw DimensionMismatch("vector length " + std::to_string(v.size()) + " vs " +
                                                    std::to_string(width_));
    CycVector w = v;
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool EchelonBasis::insert(CycVector row) {
    if (row.size() != width_) throw DimensionMismatch("vector length " + std::to_string(row.size()) + " vs " +
                                                      std::to_string(width_));
    for (const auto& c : row)
        if (&c.field() != field_) throw ConductorMismatch("row over a different field");
    reduce(row);
    auto lead = std::find_if(row.begin(), row.end(), [](const Cyclotomic& c) { return !c.is_zero(); });
    if (lead == row.end()) return false;
    const auto p = static_cast<std::size_t>(lead - row.begin());
    const Cyclotomic inv = row[p].inverse();
    for (auto& c : row)
        if (!c.is_zero()) c = c * inv;
    // clear the new pivot column in the existing rows
    for (auto& other : rows_) {
        if (other[p].is_zero()) continue;
        const Cyclotomic f = other[p];
        for (std::size_t j = 0; j < width_; ++j)
            if (!row[j].is_zero()) other[j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    pivot_cols_.push_back(p);
    return true;
}

std::vector<CycVector> EchelonBasis::rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_cols_[a] < pivot_cols_[b]; });
    std::vector<CycVector> out;
    for (auto i : order) out.push_back(rows_[i]);
    return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
    auto p = pivot_cols_;
    std::sort(p.begin(), p.end());
    return p;
}

// ---- free functions ----

namespace {

std::vector<CycVector> matrix_rows(const CycMatrix& m) {
    std::vector<CycVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        CycVector r;
        r.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::size_t rank(const CycMatrix& m) {
    EchelonBasis basis(m.field(), m.cols());
    for (auto& r : matrix_rows(m)) basis.insert(std::move(r));
    return basis.rank();
}

std::vector<CycVector> nullspace_of_rows(const CycField& field, std::size_t width,
                                         const std::vector<CycVector>& rows) {
    EchelonBasis basis(field, width);
    for (const auto& r : rows) basis.insert(r);
    const auto rref = basis.rows();
    const auto piv = basis.pivots();
    std::vector<bool> is_pivot(width, false);
    for (auto p : piv) is_pivot[p] = true;

    std::vector<CycVector> out;
    for (std::size_t f = 0; f < width; ++f) {
        if (is_pivot[f]) continue;
        CycVector x(width, Cyclotomic(field));
        x[f] = Cyclotomic::one(field);
        for (std::size_t i = 0; i < rref.size(); ++i)
            if (!rref[i][f].is_zero()) x[piv[i]] = -rref[i][f];
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<CycVector> nullspace(const CycMatrix& m) { return nullspace_of_rows(m.field(), m.cols(), matrix_rows(m)); }

std::string to_string(SpanRelation r) {
    switch (r) {
        case SpanRelation::Equal: return "equal";
        case SpanRelation::FirstInSecond: return "first-in-second";
        case SpanRelation::SecondInFirst: return "second-in-first";
        case SpanRelation::Incomparable: return "incomparable";
    }
    return "?";
}

SpanComparison span_compare(const std::vector<CycVector>& a, const std::vector<CycVector>& b) {
    const CycVector* probe = nullptr;
    for (const auto* list : {&a, &b})
        for (const auto& v : *list) {
            if (probe && v.size() != probe->size())
                throw DimensionMismatch("span_compare vectors of lengths " + std::to_string(v.size()) + " and " +
                                        std::to_string(probe->size()));
            if (!probe) probe = &v;
        }
    if (!probe) return {SpanRelation::Equal, 0, 0, 0};
    const std::size_t width = probe->size();
    if (width == 0) return {SpanRelation::Equal, 0, 0, 0};
    const CycField& field = probe->front().field();

    EchelonBasis ea(field, width), eb(field, width);
    for (const auto& v : a) ea.insert(v);
    for (const auto& v : b) eb.insert(v);
    EchelonBasis eu = ea;
    for (const auto& v : b) eu.insert(v);

    const bool a_in_b = eu.rank() == eb.rank();
    const bool b_in_a = eu.rank() == ea.rank();
    SpanRelation rel = a_in_b && b_in_a ? SpanRelation::Equal
                       : a_in_b         ? SpanRelation::FirstInSecond
                       : b_in_a         ? SpanRelation::SecondInFirst
                                        : SpanRelation::Incomparable;
    return {rel, ea.rank(), eb.rank(), eu.rank()};
}

}  // namespace gcodes
