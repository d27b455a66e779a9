#include "gaussmap/cring.hpp"

#include <algorithm>
#include <sstream>

#include "gaussmap/errors.hpp"

namespace gaussmap {

long long CurveInvariants::zeta(long long h) const {
    if (h < 2) throw PreconditionError("zeta: h must be >= 2");
    if (h == 0 || xi % h != 0) {
        std::ostringstream os;
        os << "zeta undefined: h = " << h << " does not divide xi = " << xi;
        throw UndefinedZetaError(os.str());
    }
    return xi / h;
}

std::vector<Rational> QuotientPiece::project(std::vector<Rational> ambient_coords) const {
    if (static_cast<Index>(ambient_coords.size()) != ambient_dim())
        throw DimensionError("project: coordinate length mismatch");
    std::vector<Rational> reduced = ideal->reduce(std::move(ambient_coords));
    std::vector<Rational> out(rep_indices.size());
    for (size_t i = 0; i < rep_indices.size(); ++i) out[i] = reduced[rep_indices[i]];
    return out;
}

CompleteIntersection::CompleteIntersection(int n, std::vector<int> degrees,
                                           std::vector<Polynomial> forms, std::string label)
    : n_(n), degrees_(std::move(degrees)), forms_(std::move(forms)), label_(std::move(label)) {
    if (n_ < 1) throw InvalidInputError("ambient dimension must be >= 1");
    if (degrees_.size() != forms_.size())
        throw InvalidInputError("degree list and form list lengths differ");
    if (static_cast<int>(forms_.size()) > n_)
        throw InvalidInputError("more forms than ambient dimension");
    if (!std::is_sorted(degrees_.rbegin(), degrees_.rend()))
        throw InvalidInputError("degrees must be listed in non-increasing order");
    for (size_t j = 0; j < forms_.size(); ++j) {
        if (degrees_[j] < 2) throw InvalidInputError("all degrees must be >= 2");
        if (forms_[j].num_vars() != n_ + 1)
            throw InvalidInputError("form has wrong number of variables");
        if (forms_[j].is_zero() || !forms_[j].is_homogeneous() ||
            forms_[j].degree() != degrees_[j]) {
            std::ostringstream os;
            os << "form " << j + 1 << " is not homogeneous of degree " << degrees_[j];
            throw InvalidInputError(os.str());
        }
    }
}

const QuotientPiece& CompleteIntersection::piece(int m) const {
    if (m < 0) throw InvalidInputError("piece: negative degree");
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = pieces_.find(m);
    if (it != pieces_.end()) return *it->second;

    auto qp = std::make_shared<QuotientPiece>();
    qp->degree = m;
    qp->ambient = GradedBasis::of_degree(n_, m);
    auto elim = std::make_shared<Eliminator>(qp->ambient.size(), PivotMode::Trailing);
    for (size_t j = 0; j < forms_.size(); ++j) {
        int rem = m - degrees_[j];
        if (rem < 0) continue;
        for (const Monomial& mult : monomial_basis(n_, rem)) {
            Polynomial prod = Polynomial::monomial(mult) * forms_[j];
            elim->insert(prod.coordinates(qp->ambient));
        }
    }
    qp->ideal = elim;
    qp->coord_to_rep.assign(qp->ambient.size(), -1);
    for (Index c = 0; c < qp->ambient.size(); ++c) {
        if (elim->pivot_row(c) < 0) {
            qp->coord_to_rep[c] = static_cast<Index>(qp->rep_indices.size());
            qp->rep_indices.push_back(c);
        }
    }

    long long computed = static_cast<long long>(qp->rep_indices.size());
    long long expected = hilbert_series_coeff(m);
    if (computed != expected) {
        std::ostringstream os;
        os << "regular-sequence certification failed in degree " << m << ": dim (S/I)_" << m
           << " = " << computed << " but the Hilbert series predicts " << expected
           << (label_.empty() ? "" : " (instance " + label_ + ")");
        throw CertificationError(os.str(), m);
    }

    auto [pos, inserted] = pieces_.emplace(m, std::move(qp));
    (void)inserted;
    return *pos->second;
}

RationalMatrix CompleteIntersection::ideal_piece(int m) const {
    if (m < 0) return RationalMatrix(0, 0);
    GradedBasis ambient = GradedBasis::of_degree(n_, m);
    std::vector<std::vector<Rational>> cols;
    for (size_t j = 0; j < forms_.size(); ++j) {
        int rem = m - degrees_[j];
        if (rem < 0) continue;
        for (const Monomial& mult : monomial_basis(n_, rem)) {
            Polynomial prod = Polynomial::monomial(mult) * forms_[j];
            cols.push_back(prod.coordinates(ambient));
        }
    }
    return RationalMatrix::from_columns(ambient.size(), cols);
}

long long CompleteIntersection::hilbert_function(int m) const {
    if (m < 0) return 0;
    return piece(m).dim();
}

long long CompleteIntersection::hilbert_series_coeff(int m) const {
    if (m < 0) return 0;
    // numerator prod_j (1 - t^{d_j}), truncated at degree m
    std::vector<long long> num(m + 1, 0);
    num[0] = 1;
    for (int d : degrees_) {
        std::vector<long long> next(m + 1, 0);
        for (int k = 0; k <= m; ++k) {
            if (num[k] == 0) continue;
            next[k] += num[k];
            if (k + d <= m) next[k + d] -= num[k];
        }
        num = std::move(next);
    }
    // multiply by (1 - t)^{-(n+1)} = sum_i C(n+i, n) t^i and read coeff of t^m
    Integer acc = 0;
    for (int k = 0; k <= m; ++k) {
        if (num[k] == 0) continue;
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n_ + m - k),
                     static_cast<unsigned long>(n_));
        acc += Integer(num[k]) * binom;
    }
    return static_cast<long long>(acc.get_si());
}

std::vector<Rational> CompleteIntersection::normal_form(const Polynomial& p) const {
    if (!p.is_homogeneous())
        throw InvalidInputError("normal_form: input must be homogeneous");
    int m = p.degree().value_or(0);
    const QuotientPiece& qp = piece(m);
    return qp.project(p.coordinates(qp.ambient));
}

long long CompleteIntersection::xi() const {
    long long s = 0;
    for (int d : degrees_) s += d;
    return s - n_ - 1;
}

CurveInvariants CompleteIntersection::curve_invariants() const {
    if (dim_x() != 1)
        throw InvalidInputError("curve_invariants: not a curve (dim_x != 1)");
    CurveInvariants inv;
    inv.xi = xi();
    inv.degree = 1;
    for (int d : degrees_) inv.degree *= d;
    long long twice_gm1 = inv.xi * inv.degree;  // 2g - 2 = xi * deg C
    if (twice_gm1 % 2 != 0)
        throw InvalidInputError("non-integral genus; invalid curve data");
    inv.genus = twice_gm1 / 2 + 1;
    return inv;
}

long long CompleteIntersection::h0_line(int m) const {
    return m < 0 ? 0 : hilbert_function(m);
}

long long CompleteIntersection::h1_line(int m) const {
    if (dim_x() != 1) throw InvalidInputError("h1_line: only defined on curves here");
    return h0_line(static_cast<int>(xi()) - m);
}

}  // namespace gaussmap
