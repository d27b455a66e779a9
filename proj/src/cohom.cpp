#include "gaussmap/cohom.hpp"

#include <sstream>

#include "gaussmap/errors.hpp"

namespace gaussmap {

namespace {

// Multiplication map V (x) S_{t-1} -> S_t on P^n, as a matrix over the
// monomial bases. Each column X_i * m is a unit vector.
RationalMatrix pn_multiplication_matrix(int n, int t) {
    GradedBasis lower = GradedBasis::of_degree(n, t - 1);
    GradedBasis upper = GradedBasis::of_degree(n, t);
    RationalMatrix m(upper.size(), static_cast<Index>(n + 1) * lower.size());
    for (int i = 0; i <= n; ++i) {
        for (Index j = 0; j < lower.size(); ++j) {
            Monomial prod = lower.list[j].times(Monomial::variable(n + 1, i));
            m.set(upper.index_of(prod), static_cast<Index>(i) * lower.size() + j, 1);
        }
    }
    return m;
}

// Same map on quotient pieces: column (i, rep j) = normal form of
// X_i * rep_j in (S/I)_t coordinates.
RationalMatrix restricted_multiplication_matrix(const CompleteIntersection& ci, int t) {
    const QuotientPiece& lower = ci.piece(t - 1);
    const QuotientPiece& upper = ci.piece(t);
    int n = ci.n();
    RationalMatrix m(upper.dim(), static_cast<Index>(n + 1) * lower.dim());
    for (int i = 0; i <= n; ++i) {
        for (Index j = 0; j < lower.dim(); ++j) {
            Polynomial prod = Polynomial::monomial(
                lower.rep_monomial(j).times(Monomial::variable(n + 1, i)));
            std::vector<Rational> coords = upper.project(prod.coordinates(upper.ambient));
            for (Index r = 0; r < upper.dim(); ++r)
                if (coords[r] != 0)
                    m.set(r, static_cast<Index>(i) * lower.dim() + j, coords[r]);
        }
    }
    return m;
}

RationalMatrix kernel_columns(const RationalMatrix& m) {
    auto vecs = m.kernel_basis();
    return RationalMatrix::from_columns(m.cols(), vecs);
}

}  // namespace

OmegaSections omega_pn_sections(int n, int t, bool with_basis) {
    if (n < 1) throw InvalidInputError("omega_pn_sections: need n >= 1");
    if (t <= 0) {
        std::ostringstream os;
        os << "omega_pn_sections: twist t = " << t << " unsupported (H^0 vanishes for t <= 1)";
        throw UnsupportedTwistError(os.str());
    }
    OmegaSections s;
    s.t = t;
    s.blocks = n + 1;
    GradedBasis lower = GradedBasis::of_degree(n, t - 1);
    s.block_dim = lower.size();
    RationalMatrix mult = pn_multiplication_matrix(n, t);
    Index mult_rank = mult.rank();
    s.dim_h0 = static_cast<long long>(mult.cols() - mult_rank);
    s.presented_dim = s.dim_h0;
    if (with_basis) s.kernel_basis = kernel_columns(mult);
    return s;
}

OmegaSections omega_restricted_sections(const CompleteIntersection& ci, int t,
                                        bool with_basis) {
    if (t < 1) throw UnsupportedTwistError("omega_restricted_sections: need t >= 1");
    OmegaSections s;
    s.t = t;
    s.blocks = ci.n() + 1;
    s.block_dim = ci.piece(t - 1).dim();
    RationalMatrix mult = restricted_multiplication_matrix(ci, t);
    Index mult_rank = mult.rank();
    s.dim_h0 = static_cast<long long>(mult.cols() - mult_rank);
    s.presented_dim = s.dim_h0;
    if (with_basis) s.kernel_basis = kernel_columns(mult);
    return s;
}

RationalMatrix conormal_image(const CompleteIntersection& ci, int t) {
    if (t < 1) throw UnsupportedTwistError("conormal_image: need t >= 1");
    const int n = ci.n();
    const QuotientPiece& lower = ci.piece(t - 1);
    const Index block = lower.dim();
    std::vector<std::vector<Rational>> cols;
    for (size_t j = 0; j < ci.forms().size(); ++j) {
        int gen_deg = t - ci.degrees()[j];
        if (gen_deg < 0) continue;
        const QuotientPiece& gens = ci.piece(gen_deg);
        std::vector<Polynomial> dF;
        for (int i = 0; i <= n; ++i) dF.push_back(ci.forms()[j].partial_derivative(i));
        for (Index g = 0; g < gens.dim(); ++g) {
            Polynomial gpoly = Polynomial::monomial(gens.rep_monomial(g));
            std::vector<Rational> col(static_cast<Index>(n + 1) * block, Rational(0));
            for (int i = 0; i <= n; ++i) {
                Polynomial entry = gpoly * dF[i];
                std::vector<Rational> reduced = lower.project(entry.coordinates(lower.ambient));
                for (Index r = 0; r < block; ++r)
                    col[static_cast<Index>(i) * block + r] = reduced[r];
            }
            cols.push_back(std::move(col));
        }
    }
    return RationalMatrix::from_columns(static_cast<Index>(n + 1) * block, cols);
}

VanishVerdict h1_conormal_vanishes(const CompleteIntersection& ci, int t) {
    VanishVerdict v;
    int k = ci.dim_x();
    if (k >= 2) {
        v.vanishes = true;
        v.reason = "k >= 2: complete intersections of dimension >= 2 have no intermediate "
                   "line-bundle cohomology";
        return v;
    }
    // k = 1: bound 2 d_1 + d_2 + ... + d_{n-1} - n - 1 = xi + d_1
    long long bound = ci.xi() + (ci.degrees().empty() ? 0 : ci.degrees()[0]);
    v.vanishes = t > bound;
    std::ostringstream os;
    os << "k = 1: t " << (v.vanishes ? ">" : "<=") << " bound " << bound;
    v.reason = os.str();
    return v;
}

OmegaSections omega_x_sections(const CompleteIntersection& ci, int t) {
    if (ci.dim_x() != 1)
        throw InvalidInputError("omega_x_sections: restricted to curves (dim_x = 1)");
    if (t < 1) throw UnsupportedTwistError("omega_x_sections: need t >= 1");

    OmegaSections s = omega_restricted_sections(ci, t);
    s.conormal_gens = conormal_image(ci, t);
    long long conormal_rank = s.conormal_gens.rank();
    s.presented_dim = s.dim_h0 - conormal_rank;

    // Omega^1_C = omega_C = O_C(xi), so the true h^0 is the line-bundle value.
    CurveInvariants inv = ci.curve_invariants();
    long long hf = ci.h0_line(static_cast<int>(inv.xi) + t);
    long long rr = (2 * inv.genus - 2) + static_cast<long long>(t) * inv.degree - inv.genus + 1;
    if (hf != rr) {
        std::ostringstream os;
        os << "omega_x_sections: HF(xi+t) = " << hf << " disagrees with Riemann-Roch " << rr;
        throw CertificationError(os.str(), static_cast<int>(inv.xi) + t);
    }
    s.dim_h0 = rr;

    VanishVerdict vv = h1_conormal_vanishes(ci, t);
    s.lower_bound_only = !vv.vanishes;
    if (vv.vanishes && s.presented_dim != s.dim_h0) {
        std::ostringstream os;
        os << "omega_x_sections: unobstructed twist t = " << t << " but presentation dim "
           << s.presented_dim << " != h^0 = " << s.dim_h0;
        throw CertificationError(os.str(), t);
    }
    return s;
}

}  // namespace gaussmap
