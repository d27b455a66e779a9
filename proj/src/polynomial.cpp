#include "gaussmap/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gaussmap/errors.hpp"

namespace gaussmap {

Monomial Monomial::variable(int num_vars, int i) {
    Monomial m = one(num_vars);
    m.exps.at(i) = 1;
    return m;
}

int Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

Monomial Monomial::times(const Monomial& other) const {
    if (exps.size() != other.exps.size())
        throw DimensionError("monomial variable counts differ");
    Monomial m(*this);
    for (size_t i = 0; i < exps.size(); ++i) m.exps[i] += other.exps[i];
    return m;
}

bool GradedLexBefore::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;  // lex on exponent vectors, X_0 dominant
}

std::vector<Monomial> monomial_basis(int n, int m) {
    if (n < 0) throw InvalidInputError("monomial_basis: negative ambient dimension");
    std::vector<Monomial> out;
    if (m < 0) return out;
    std::vector<int> exps(n + 1, 0);
    // odometer from (m,0,...,0) downward in lex order
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n) {
            exps[var] = remaining;
            out.push_back(Monomial(exps));
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, m);
    return out;
}

GradedBasis GradedBasis::of_degree(int n, int m) {
    GradedBasis b;
    b.list = monomial_basis(n, m);
    for (Index i = 0; i < static_cast<Index>(b.list.size()); ++i)
        b.index.emplace(b.list[i], i);
    return b;
}

Index GradedBasis::index_of(const Monomial& m) const {
    auto it = index.find(m);
    if (it == index.end())
        throw InvalidInputError("monomial not in basis (degree mismatch?)");
    return it->second;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& coeff) {
    Polynomial p(m.num_vars());
    p.add_term(m, coeff);
    return p;
}

Polynomial Polynomial::variable(int num_vars, int i) {
    return monomial(Monomial::variable(num_vars, i));
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (m.num_vars() != num_vars_)
        throw DimensionError("term variable count mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (num_vars_ != other.num_vars_)
        throw DimensionError("polynomial variable counts differ");
    Polynomial out(num_vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(num_vars_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::partial_derivative(int i) const {
    if (i < 0 || i >= num_vars_)
        throw InvalidInputError("partial_derivative: variable index out of range");
    Polynomial out(num_vars_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[i] == 0) continue;
        Monomial d(m);
        d.exps[i] -= 1;
        out.add_term(d, c * m.exps[i]);
    }
    return out;
}

std::vector<Rational> Polynomial::coordinates(const GradedBasis& basis) const {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [m, c] : terms_) v[basis.index_of(m)] = c;
    return v;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c);
        for (int i = 0; i < num_vars_; ++i) {
            os << (i == 0 ? " * X" : "*X") << i << "^" << m.exps[i];
        }
    }
    return os.str();
}

Polynomial Polynomial::parse(const std::string& text, int num_vars) {
    Polynomial out(num_vars);
    std::string s = text;
    // split on " + " (coefficients carry their own sign)
    size_t pos = 0;
    auto trim = [](std::string w) {
        size_t b = w.find_first_not_of(" \t");
        size_t e = w.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : w.substr(b, e - b + 1);
    };
    std::vector<std::string> chunks;
    while (true) {
        size_t next = s.find(" + ", pos);
        if (next == std::string::npos) {
            chunks.push_back(trim(s.substr(pos)));
            break;
        }
        chunks.push_back(trim(s.substr(pos, next - pos)));
        pos = next + 3;
    }
    for (const auto& chunk : chunks) {
        if (chunk.empty() || chunk == "0") continue;
        size_t star = chunk.find('*');
        std::string coeff_str = trim(star == std::string::npos ? chunk : chunk.substr(0, star));
        Rational c;
        try {
            c = parse_rational(coeff_str);
        } catch (const std::invalid_argument& e) {
            throw SpecParseError(std::string("polynomial term: ") + e.what());
        }
        Monomial m = Monomial::one(num_vars);
        if (star != std::string::npos) {
            std::string rest = chunk.substr(star + 1);
            std::istringstream is(rest);
            std::string factor;
            while (std::getline(is, factor, '*')) {
                factor = trim(factor);
                if (factor.empty() || factor[0] != 'X')
                    throw SpecParseError("bad monomial factor: " + factor);
                size_t caret = factor.find('^');
                int var, exp = 1;
                try {
                    var = std::stoi(factor.substr(1, caret - 1));
                    if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
                } catch (const std::exception&) {
                    throw SpecParseError("bad monomial factor: " + factor);
                }
                if (var < 0 || var >= num_vars || exp < 0)
                    throw SpecParseError("bad monomial factor: " + factor);
                m.exps[var] += exp;
            }
        }
        out.add_term(m, c);
    }
    return out;
}

}  // namespace gaussmap
