#ifndef GAUSSMAP_GAUSS_MAPS_HPP
#define GAUSSMAP_GAUSS_MAPS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gaussmap/cohom.hpp"
#include "gaussmap/cring.hpp"
#include "gaussmap/matrix.hpp"

namespace gaussmap {

// Lower bound rank >= h^0(L^a) + h^0(L^b) - 3 for maps on curves, strict
// when b(h^0(L^a)-1) != a(h^0(L^b)-1).
struct BoundEq7 {
    long long value = 0;
    bool strict = false;
    bool operator==(const BoundEq7&) const = default;
};

// Result of building a weighted Gaussian map gamma_{a,b} as an explicit
// matrix: sigma (x) tau |-> b tau d sigma - a sigma d tau, from
// H^0(L^a) (x) H^0(L^b) to H^0(Omega^1(ae + be)), with L = O(e).
//
// Always: rank + kernel_dim = domain_dim and rank + coker_dim = codomain_dim.
// On curves codomain_dim is the true h^0 (Omega^1_C is the line bundle
// O_C(xi)); rank/kernel/coker are exact even when obstructed_presentation is
// set, because the image of the curve-level map equals the image of the
// ambient comparison map, which the quotient presentation always contains.
struct GaussMapReport {
    std::string context;  // "pn" | "curve"
    std::string label;
    int n = 0;
    long long e = 0, a = 0, b = 0, t = 0;

    long long domain_dim = 0;
    long long codomain_dim = 0;
    long long rank = 0;
    long long kernel_dim = 0;
    long long coker_dim = 0;
    bool surjective = false;

    BoundEq7 bound_eq7;
    long long eta_rank = 0;  // rank of eta_{a+b}; kernel_dim >= eta_rank

    // curve-only presentation data
    bool obstructed_presentation = false;
    long long presented_codomain_dim = -1;

    // mu_h extras (-1 when not applicable)
    long long h = -1;
    long long zeta = -1;
    long long genus = -1;
    long long r = -1;
    long long tangent_dim = -1;

    bool operator==(const GaussMapReport&) const = default;
};

void to_json(nlohmann::json& j, const BoundEq7& b);
void from_json(const nlohmann::json& j, BoundEq7& b);
void to_json(nlohmann::json& j, const GaussMapReport& r);
void from_json(const nlohmann::json& j, GaussMapReport& r);

// gamma_{a,b}(P^n, O(e)) in Euler coordinates over the degree-(ae+be-1)
// monomial basis. Columns indexed by (sigma, tau) pairs of monomials, sigma
// running over the degree-ae basis (major) and tau over the degree-be basis.
RationalMatrix gauss_pn_matrix(int n, long long e, long long a, long long b);
GaussMapReport gauss_pn(int n, long long e, long long a, long long b);

// One column of the curve-level map for arbitrary homogeneous lifts sigma
// (degree ae) and tau (degree be): Euler blocks b tau d(sigma) - a sigma
// d(tau), each reduced to (S/I)_{t-1} representative coordinates. Lift
// independence modulo the conormal image is a tested property.
std::vector<Rational> gauss_ci_column(const CompleteIntersection& ci, long long a,
                                      long long b, const Polynomial& sigma,
                                      const Polynomial& tau);

// gamma_{a,b}(X, O_X(e)) on representative bases of (S/I)_{ae} and
// (S/I)_{be}. With project_conormal the columns are reduced modulo the
// conormal image, i.e. expressed in the H^0(Omega^1_X(t)) presentation.
RationalMatrix gauss_ci_matrix(const CompleteIntersection& ci, long long e, long long a,
                               long long b, bool project_conormal = true);
GaussMapReport gauss_ci(const CompleteIntersection& ci, long long e, long long a,
                        long long b);

// mu_h = gamma_{1,h-1}(C, O_C(zeta)), zeta = xi/h: the map whose cokernel is
// the tangent space of the h-th-root locus. Requires g >= 2, h >= 2, h | xi,
// zeta >= 1.
GaussMapReport mu_h(const CompleteIntersection& ci, long long h);

// Rank of eta_s: Sym^s H^0(O(e)) -> H^0(O(se)), the span of all s-fold
// products of degree-e basis elements.
long long eta_rank(const CompleteIntersection& ci, long long e, long long s);
long long eta_rank_pn(int n, long long e, long long s);

// Arithmetic bound package for mu_h at a curve (g, h) with r = h^0(L) - 1:
// the rank lower bound with strictness, the r = 0 squeeze, and the pinned
// rank identity rank(mu_h) = h^0(K-L) - 1 = (g-1)(h-2)/h.
struct BoundRecord {
    long long eq7_lower = 0;
    bool eq7_strict = false;
    long long h0_k_minus_l = 0;  // g - (2g-2)/h when h^0(L) = 1
    long long eq9_lower = 0;     // h^0(K-L) - 2
    bool eq9_strict = false;
    long long eq10_upper = 0;    // h^0(K-L) - 1
    long long pinned_rank = 0;   // squeeze result for r = 0
    long long codim = 0;         // (g-1)(h-2)/h
    bool identity_holds = false;
};

BoundRecord rank_bounds(long long g, long long h, long long r, long long h0_La,
                        long long h0_Lb);

// sum_i X_i f_i for a column in P^n Euler coordinates (degree t-1 blocks);
// identically zero for every Gaussian-map column.
Polynomial euler_pairing_pn(int n, int t, const std::vector<Rational>& column);
// Same on X: returns (S/I)_t representative coordinates of sum X_i f_i.
std::vector<Rational> euler_pairing_ci(const CompleteIntersection& ci, int t,
                                       const std::vector<Rational>& column);

}  // namespace gaussmap

#endif
