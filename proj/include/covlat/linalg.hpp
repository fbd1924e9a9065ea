#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "covlat/rational.hpp"

namespace covlat {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // rows
using IntVec = std::vector<long>;
using IntMat = std::vector<std::vector<Integer>>;

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// vector helpers

RatVec rat_vec(std::initializer_list<long> entries);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& c);
RatVec negate(const RatVec& a);
Rational dot(const RatVec& a, const RatVec& b);
bool lex_less(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& a);

// ---------------------------------------------------------------------------
// symmetric matrices and positive definite forms

class SymMatrix {
  public:
    SymMatrix() : d_(0) {}
    explicit SymMatrix(int d) : d_(d), a_(static_cast<size_t>(d) * d) {}
    static SymMatrix identity(int d);

    int dim() const { return d_; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * d_ + j]; }
    // Writes both (i,j) and (j,i).
    void set(int i, int j, const Rational& v);
    void add_at(int i, int j, const Rational& v);

    bool operator==(const SymMatrix& o) const { return d_ == o.d_ && a_ == o.a_; }
    bool operator!=(const SymMatrix& o) const { return !(*this == o); }

    SymMatrix operator+(const SymMatrix& o) const;
    SymMatrix operator-(const SymMatrix& o) const;
    SymMatrix operator*(const Rational& c) const;

    Rational trace() const;

  private:
    int d_;
    std::vector<Rational> a_;
};

// Frobenius pairing sum_ij a_ij b_ij.
Rational frobenius(const SymMatrix& a, const SymMatrix& b);

// Positive definite quadratic form. The constructor verifies positive
// definiteness exactly and throws std::invalid_argument otherwise; trusted()
// skips the check for values produced by code that has already verified it.
class PQF {
  public:
    explicit PQF(SymMatrix m);
    static PQF trusted(SymMatrix m);

    int dim() const { return m_.dim(); }
    const SymMatrix& matrix() const { return m_; }

  private:
    PQF() = default;
    SymMatrix m_;
};

// ---------------------------------------------------------------------------
// exact linear algebra (fraction-free Bareiss elimination throughout;
// pivoting picks the first nonzero entry in column order)

Rational determinant(const SymMatrix& m);
Rational determinant_rows(const RatMat& rows);  // square, general

// All leading principal minors strictly positive (exact Sylvester test).
bool is_positive_definite(const SymMatrix& m);

SymMatrix inverse(const SymMatrix& m);  // throws SingularMatrixError

// Solves a x = b for square nonsingular a (rows).
RatVec solve(const RatMat& a, const RatVec& b);

// Exact kernel of the row span; returns a basis (deterministic order by
// free column). `cols` is the ambient dimension; rows may be empty.
RatMat nullspace(const RatMat& rows, int cols);

Rational evaluate(const SymMatrix& q, const RatVec& v);  // v^t Q v
Rational bilinear(const SymMatrix& q, const RatVec& u, const RatVec& v);
RatVec mat_apply(const SymMatrix& q, const RatVec& v);  // Q v

// ---------------------------------------------------------------------------
// incremental exact row elimination (sparse), used for the big rigidity
// systems where materializing dense RREF rows would be wasteful

class RowEliminator {
  public:
    using SparseRow = std::vector<std::pair<int, Rational>>;

    explicit RowEliminator(int cols) : cols_(cols), pivot_of_col_(cols, -1) {}

    // Reduces the row against the current echelon and absorbs it if it adds
    // rank. Returns true when rank grew.
    bool insert(const RatVec& dense_row);
    // Same, for a row given as sorted (column, value) pairs.
    bool insert_sparse(SparseRow row);
    int rank() const { return static_cast<int>(rows_.size()); }
    // Kernel basis of everything inserted so far.
    RatMat kernel() const;

  private:
    int cols_;
    std::vector<SparseRow> rows_;        // echelon, leading coefficient 1
    std::vector<int> lead_;              // leading column per stored row
    std::vector<int> pivot_of_col_;      // column -> stored row index or -1
};

// ---------------------------------------------------------------------------
// integer lattice utilities

// Row-style Hermite normal form of the lattice generated by `rows`;
// returns the full-rank basis (rank rows, upper triangular, positive pivots).
IntMat hermite_normal_form(const IntMat& rows);

// Exact LLL reduction (delta = 3/4) driven purely by the Gram matrix.
// Returns the unimodular transform U so that U * basis is reduced; `gram`
// is updated in place to U G U^t.
IntMat lll_reduce_gram(SymMatrix& gram);

}  // namespace covlat
