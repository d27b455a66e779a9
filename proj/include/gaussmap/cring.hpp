#ifndef GAUSSMAP_CRING_HPP
#define GAUSSMAP_CRING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gaussmap/matrix.hpp"
#include "gaussmap/polynomial.hpp"

namespace gaussmap {

// Numerical invariants of a complete intersection curve C in P^n cut out by
// hypersurfaces of degrees d_1 >= ... >= d_{n-1} >= 2:
//   xi      adjunction twist, omega_C = O_C(xi), xi = sum d_i - n - 1
//   genus   g = xi * (prod d_i) / 2 + 1
//   degree  deg C = prod d_i
struct CurveInvariants {
    long long xi = 0;
    long long genus = 0;
    long long degree = 0;

    // zeta = xi / h (requires h | xi and h >= 2); the canonical-root twist.
    long long zeta(long long h) const;
};

// Degree-m slice of S/I: ambient monomial basis, trailing-pivot echelon form
// of the ideal piece I_m, and the chosen quotient representatives (the
// graded-lex-greedy complement of the ideal's trailing pivots, so X_0^m is a
// representative whenever possible).
struct QuotientPiece {
    int degree = 0;
    GradedBasis ambient;
    std::shared_ptr<const Eliminator> ideal;  // trailing mode, dim = ambient size
    std::vector<Index> rep_indices;           // free coordinates, ascending
    std::vector<Index> coord_to_rep;          // ambient index -> rep slot or -1

    Index ambient_dim() const { return ambient.size(); }
    Index ideal_dim() const { return ideal->rank(); }
    Index dim() const { return static_cast<Index>(rep_indices.size()); }
    const Monomial& rep_monomial(Index slot) const { return ambient.list[rep_indices[slot]]; }

    // Projection ambient coordinates -> quotient coordinates. Kernel is
    // exactly span(I_m); project(rep basis vector) is a unit vector.
    std::vector<Rational> project(std::vector<Rational> ambient_coords) const;
};

// Graded coordinate ring S/I of a complete intersection X in P^n. Quotient
// pieces are computed degree by degree (no Groebner bases: every ideal slice
// is a column span) and memoized; each piece is certified against the
// closed-form Hilbert series on construction, which verifies that the forms
// are a regular sequence up to that degree.
class CompleteIntersection {
public:
    CompleteIntersection(int n, std::vector<int> degrees, std::vector<Polynomial> forms,
                         std::string label = "");

    int n() const { return n_; }
    int dim_x() const { return n_ - static_cast<int>(forms_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Polynomial>& forms() const { return forms_; }
    const std::string& label() const { return label_; }

    const QuotientPiece& piece(int m) const;

    // Columns: coordinate vectors of x^alpha * F_j over all j and all
    // monomials x^alpha of degree m - d_j.
    RationalMatrix ideal_piece(int m) const;

    // dim (S/I)_m; 0 for m < 0. Throws CertificationError if the elimination
    // result ever disagrees with the Hilbert series coefficient.
    long long hilbert_function(int m) const;

    // Coefficient of t^m in prod_j (1 - t^{d_j}) / (1 - t)^{n+1}.
    long long hilbert_series_coeff(int m) const;

    // Quotient coordinates of a homogeneous polynomial. Zero exactly on I_m.
    std::vector<Rational> normal_form(const Polynomial& p) const;

    CurveInvariants curve_invariants() const;
    long long xi() const;

    // h^0(X, O_X(m)) = HF(m) for m >= 0 (projective normality), 0 for m < 0.
    long long h0_line(int m) const;
    // Curves only: h^1(O_C(m)) = h^0(O_C(xi - m)) by Serre duality.
    long long h1_line(int m) const;

private:
    int n_;
    std::vector<int> degrees_;
    std::vector<Polynomial> forms_;
    std::string label_;

    mutable std::mutex memo_mutex_;
    mutable std::map<int, std::shared_ptr<const QuotientPiece>> pieces_;
};

}  // namespace gaussmap

#endif
