#ifndef GAUSSMAP_POLYNOMIAL_HPP
#define GAUSSMAP_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaussmap/matrix.hpp"
#include "gaussmap/rational.hpp"

namespace gaussmap {

// Monomial in X_0..X_n, stored as its exponent vector.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial one(int num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }
    static Monomial variable(int num_vars, int i);

    int num_vars() const { return static_cast<int>(exps.size()); }
    int degree() const;
    Monomial times(const Monomial& other) const;

    bool operator==(const Monomial& other) const = default;
};

// Global monomial order: graded lexicographic with X_0 > X_1 > ... > X_n.
// `a` precedes `b` in every basis listing iff a is the larger monomial, so
// bases start at X_0^m and end at X_n^m. Fixed once so all matrix coordinates
// are reproducible across runs.
struct GradedLexBefore {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// All C(n+m, n) monomials of degree m in n+1 variables, listed in graded-lex
// order (largest first). Empty for m < 0.
std::vector<Monomial> monomial_basis(int n, int m);

// Basis list plus index lookup; the coordinate space of a graded piece.
struct GradedBasis {
    std::vector<Monomial> list;
    std::map<Monomial, Index, GradedLexBefore> index;

    static GradedBasis of_degree(int n, int m);
    Index size() const { return static_cast<Index>(list.size()); }
    Index index_of(const Monomial& m) const;
};

// Sparse multivariate polynomial over Q. No zero coefficients are stored;
// terms iterate in the global monomial order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexBefore>;

    explicit Polynomial(int num_vars = 1) : num_vars_(num_vars) {}
    static Polynomial monomial(const Monomial& m, const Rational& coeff = Rational(1));
    static Polynomial variable(int num_vars, int i);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& coeff);

    // Degree of the largest term; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& other) const = default;

    Polynomial partial_derivative(int i) const;

    // Coordinates with respect to a degree basis; input must be homogeneous
    // of the basis degree (or zero).
    std::vector<Rational> coordinates(const GradedBasis& basis) const;

    // Text form: terms joined by " + ", each "c * X0^a0*...*Xn^an" with c an
    // integer or "num/den". parse() accepts the same shape.
    std::string to_string() const;
    static Polynomial parse(const std::string& text, int num_vars);

private:
    int num_vars_;
    TermMap terms_;
};

}  // namespace gaussmap

#endif
