#ifndef GAUSSMAP_COHOM_HPP
#define GAUSSMAP_COHOM_HPP

#include <string>

#include "gaussmap/cring.hpp"
#include "gaussmap/matrix.hpp"

namespace gaussmap {

// Section space of a twisted cotangent sheaf, presented in Euler coordinates:
// a twisted 1-form is a tuple (f_0, ..., f_n) of degree-(t-1) pieces with
// sum X_i f_i = 0 (exactly on P^n; modulo I_t on X). Coordinates are indexed
// block-major: (variable i, basis element of the degree-(t-1) piece).
struct OmegaSections {
    int t = 0;
    int blocks = 0;          // n + 1
    Index block_dim = 0;     // dim of the degree-(t-1) piece
    Index coords() const { return static_cast<Index>(blocks) * block_dim; }

    long long dim_h0 = 0;    // dimension of H^0 (see lower_bound_only)
    // Dimension of the explicit kernel/conormal presentation. On P^n and on
    // unobstructed twists of X this equals dim_h0; when h^1(N*_X(t)) != 0 the
    // presentation spans only the image of the conormal-sequence map and
    // dim_h0 (known exactly on curves via Riemann-Roch) exceeds it.
    long long presented_dim = 0;
    bool lower_bound_only = false;

    RationalMatrix kernel_basis;   // columns; empty when not requested
    RationalMatrix conormal_gens;  // columns; only meaningful on X
};

// H^0(P^n, Omega^1(t)) as the kernel of V (x) S_{t-1} -> S_t. Requires t >= 1
// (throws UnsupportedTwistError otherwise); t = 1 gives dimension 0.
// `with_basis` controls whether the explicit kernel basis is computed (the
// dimension itself comes from the multiplication-map rank either way).
OmegaSections omega_pn_sections(int n, int t, bool with_basis = true);

// H^0(X, Omega^1_{P^n}|_X(t)) via the restricted Euler sequence: the kernel
// of V (x) (S/I)_{t-1} -> (S/I)_t.
OmegaSections omega_restricted_sections(const CompleteIntersection& ci, int t,
                                        bool with_basis = true);

// Image of H^0(N*_X(t)) = (+)_j H^0(O_X(t - d_j)) in the Euler coordinates of
// omega_restricted_sections: generator g for form F_j maps to the tuple
// (g * dF_j/dX_i)_i reduced mod I_{t-1}.
RationalMatrix conormal_image(const CompleteIntersection& ci, int t);

struct VanishVerdict {
    bool vanishes = false;
    std::string reason;
};

// h^1(N*_X(t)) = 0 iff k >= 2, or k = 1 and t > 2 d_1 + d_2 + ... + d_{n-1}
// - n - 1 (equivalently t > xi + d_1).
VanishVerdict h1_conormal_vanishes(const CompleteIntersection& ci, int t);

// H^0(X, Omega^1_X(t)) for a curve X = C and t >= 1. Since Omega^1_C is the
// line bundle O_C(xi), dim_h0 = HF(xi + t), cross-checked against the
// Riemann-Roch value (2g-2) + t deg C - g + 1. presented_dim is the conormal
// quotient dim(restricted) - rank(conormal); the two agree whenever
// h^1(N*_C(t)) = 0, and lower_bound_only is set when they may not.
OmegaSections omega_x_sections(const CompleteIntersection& ci, int t);

}  // namespace gaussmap

#endif
