#include "gaussmap/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "gaussmap/errors.hpp"

namespace gaussmap {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

RationalMatrix::RationalMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(Index n) {
    RationalMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Index nc = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
    RationalMatrix m(static_cast<Index>(rows.size()), nc);
    for (Index i = 0; i < m.rows_; ++i) {
        if (static_cast<Index>(rows[i].size()) != nc)
            throw DimensionError("ragged row lengths");
        for (Index j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(Index rows,
                                            const std::vector<std::vector<Rational>>& cols) {
    RationalMatrix m(rows, static_cast<Index>(cols.size()));
    for (Index j = 0; j < m.cols_; ++j) {
        if (static_cast<Index>(cols[j].size()) != rows)
            throw DimensionError("column length does not match row count");
        for (Index i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("hstack: row counts differ");
    RationalMatrix m(a.rows(), a.cols() + b.cols());
    m.entries_ = a.entries_;
    for (const auto& [rc, v] : b.entries_)
        m.entries_.emplace(std::make_pair(rc.first, rc.second + a.cols()), v);
    return m;
}

void RationalMatrix::set(Index r, Index c, const Rational& value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionError("matrix index out of bounds");
    if (value == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = value;
}

Rational RationalMatrix::at(Index r, Index c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionError("matrix index out of bounds");
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix m(cols_, rows_);
    for (const auto& [rc, v] : entries_) m.entries_[{rc.second, rc.first}] = v;
    return m;
}

std::vector<Rational> RationalMatrix::column(Index c) const {
    std::vector<Rational> v(rows_, Rational(0));
    for (const auto& [rc, val] : entries_)
        if (rc.second == c) v[rc.first] = val;
    return v;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense_rows() const {
    std::vector<std::vector<Rational>> rows(rows_, std::vector<Rational>(cols_, Rational(0)));
    for (const auto& [rc, v] : entries_) rows[rc.first][rc.second] = v;
    return rows;
}

namespace {

// Fraction-free Bareiss elimination on a dense integer matrix; returns the
// rank. Intermediate entries are minors of the input, so the divisions are
// exact and coefficient growth stays polynomial.
Index bareiss_rank(std::vector<std::vector<Integer>>& m, Index cap) {
    const Index nr = static_cast<Index>(m.size());
    const Index nc = nr == 0 ? 0 : static_cast<Index>(m[0].size());
    Index r = 0;
    Integer prev = 1;
    for (Index col = 0; col < nc && r < nr; ++col) {
        Index piv = -1;
        for (Index i = r; i < nr; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        for (Index i = r + 1; i < nr; ++i) {
            for (Index j = col + 1; j < nc; ++j) {
                Integer t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
        if (cap >= 0 && r >= cap) break;
    }
    return r;
}

// Row-wise denominator clearing (does not change rank or kernel).
std::vector<std::vector<Integer>> to_integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols(), 0));
    std::vector<Integer> row_lcm(m.rows(), 1);
    for (const auto& [rc, v] : m.entries())
        mpz_lcm(row_lcm[rc.first].get_mpz_t(), row_lcm[rc.first].get_mpz_t(),
                v.get_den().get_mpz_t());
    for (const auto& [rc, v] : m.entries())
        rows[rc.first][rc.second] = v.get_num() * (row_lcm[rc.first] / v.get_den());
    return rows;
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// Barrett-style reduction for x < 2^63 against p < 2^31.
struct FastMod {
    std::uint64_t p;
    std::uint64_t inv;  // floor(2^64 / p)
    explicit FastMod(std::uint64_t p_) : p(p_), inv(~0ULL / p_) {}
    std::uint64_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * inv) >> 64);
        std::uint64_t r = x - q * p;
        if (r >= p) r -= p;
        return r;
    }
};

}  // namespace

Index RationalMatrix::exact_rank(Index cap) const {
    if (rows_ == 0 || cols_ == 0) return 0;
    // Bareiss is ~ rows^2 * cols with rows the pivot dimension; eliminate on
    // the smaller side.
    if (rows_ > cols_) return transposed().exact_rank(cap);
    auto m = to_integer_rows(*this);
    return bareiss_rank(m, cap);
}

Index RationalMatrix::rank() const { return rank(-1); }

Index RationalMatrix::rank(Index upper_bound) const {
    if (rows_ == 0 || cols_ == 0) return 0;
    Index cap = std::min(rows_, cols_);
    if (upper_bound >= 0) cap = std::min(cap, upper_bound);
    if (cap == 0) return 0;
    if (rows_ * cols_ <= 50000) return std::min(exact_rank(-1), cap);
    Index best = 0;
    for (std::uint64_t p : modular_check_primes(3)) {
        Index r = rank_mod_p(p, cap);
        if (r == cap) return cap;  // rank_p <= rank_Q <= cap certifies equality
        best = std::max(best, r);
    }
    Index exact = exact_rank(-1);
    assert(exact >= best);
    return exact;
}

Index RationalMatrix::rank_mod_p(std::uint64_t p, Index cap) const {
    if (rows_ == 0 || cols_ == 0) return 0;
    const Index dim = rows_;
    FastMod fm(p);

    // Residues per column; bail out if a denominator is not invertible.
    std::vector<std::vector<std::pair<Index, std::uint64_t>>> cols(cols_);
    for (const auto& [rc, v] : entries_) {
        std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
        if (den == 0) return -1;
        std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
        std::uint64_t res = fm.reduce(num * mod_inverse(den, p));
        if (res != 0) cols[rc.second].push_back({rc.first, res});
    }

    // Deterministic shuffle of the insertion order: structured matrices often
    // have their "new directions" spread over the columns, so a shuffle
    // reaches the cap (early exit) far sooner than canonical order.
    std::vector<Index> order(cols_);
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(0x9a75f3b1u ^ (static_cast<std::uint64_t>(rows_) << 32) ^
                   static_cast<std::uint64_t>(cols_));
    for (Index i = cols_ - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i + 1))]);

    std::vector<std::vector<std::uint64_t>> ech;
    std::vector<Index> pivot_row(dim, -1);
    std::vector<std::uint64_t> buf(dim);
    Index rank = 0;
    const Index limit = cap >= 0 ? std::min(cap, std::min(rows_, cols_))
                                 : std::min(rows_, cols_);
    for (Index oc : order) {
        if (cols[oc].empty()) continue;
        std::fill(buf.begin(), buf.end(), 0);
        for (const auto& [r, v] : cols[oc]) buf[r] = v;
        for (Index j = 0; j < dim; ++j) {
            if (buf[j] == 0) continue;
            Index pr = pivot_row[j];
            if (pr >= 0) {
                const std::uint64_t c = p - buf[j];
                const std::uint64_t* row = ech[pr].data();
                for (Index k = j; k < dim; ++k)
                    buf[k] = fm.reduce(buf[k] + c * row[k]);
            } else {
                const std::uint64_t inv = mod_inverse(buf[j], p);
                std::vector<std::uint64_t> row(dim, 0);
                for (Index k = j; k < dim; ++k)
                    row[k] = fm.reduce(buf[k] * inv);
                row[j] = 1;
                pivot_row[j] = static_cast<Index>(ech.size());
                ech.push_back(std::move(row));
                ++rank;
                break;
            }
        }
        if (rank >= limit) break;
    }
    return rank;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
    // Reduced row echelon over Q; kernel vectors read off the free columns.
    auto m = to_dense_rows();
    const Index nr = rows_, nc = cols_;
    std::vector<Index> pivot_col;
    Index r = 0;
    for (Index col = 0; col < nc && r < nr; ++col) {
        Index piv = -1;
        for (Index i = r; i < nr; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        Rational lead = m[r][col];
        for (Index j = col; j < nc; ++j) m[r][j] /= lead;
        for (Index i = 0; i < nr; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (Index j = col; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(nc, false);
    for (Index c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (Index f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(nc, Rational(0));
        v[f] = 1;
        for (Index i = 0; i < static_cast<Index>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -m[i][f];
        // normalize: primitive integer vector, leading entry positive
        Integer lcm = 1;
        for (const auto& x : v)
            if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        Integer gcd = 0;
        for (auto& x : v) {
            x *= lcm;
            if (x != 0) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num().get_mpz_t());
        }
        if (gcd > 1)
            for (auto& x : v) x /= gcd;
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Index quotient_dim(Index ambient_dim, const RationalMatrix& subspace_gens,
                   const RationalMatrix& second_gens) {
    if (subspace_gens.rows() != ambient_dim || second_gens.rows() != ambient_dim)
        throw DimensionError("quotient_dim: generator matrices must have ambient_dim rows");
    return RationalMatrix::hstack(subspace_gens, second_gens).rank() - second_gens.rank();
}

std::vector<std::uint64_t> modular_check_primes(int count) {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> primes;
        SplitMix64 rng(0x6d6f6470ULL);  // fixed seed: reports must be reproducible
        while (primes.size() < 8) {
            // candidates in (2^30, 2^31)
            std::uint64_t lo = (1ULL << 30) + 1 + rng.below(1ULL << 30);
            Integer z(static_cast<unsigned long>(lo));
            mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
            std::uint64_t p = z.get_ui();
            if (p < (1ULL << 31) && std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
        }
        return primes;
    }();
    count = std::min<int>(count, static_cast<int>(table.size()));
    return {table.begin(), table.begin() + count};
}

Eliminator::Eliminator(Index dim, PivotMode mode)
    : dim_(dim), mode_(mode), pivot_row_(dim, -1) {}

Index Eliminator::scan_pivot(const std::vector<Rational>& v) const {
    if (mode_ == PivotMode::Leading) {
        for (Index j = 0; j < dim_; ++j)
            if (v[j] != 0) return j;
    } else {
        for (Index j = dim_ - 1; j >= 0; --j)
            if (v[j] != 0) return j;
    }
    return -1;
}

void Eliminator::reduce_inplace(std::vector<Rational>& v) const {
    for (Index j = 0; j < dim_; ++j) {
        if (v[j] == 0) continue;
        Index r = pivot_row_[j];
        if (r < 0) continue;
        Rational c = v[j];
        const auto& row = rows_[r];
        for (Index k = 0; k < dim_; ++k)
            if (row[k] != 0) v[k] -= c * row[k];
    }
}

bool Eliminator::insert(std::vector<Rational> v) {
    if (static_cast<Index>(v.size()) != dim_)
        throw DimensionError("Eliminator: vector dimension mismatch");
    reduce_inplace(v);
    Index piv = scan_pivot(v);
    if (piv < 0) return false;
    Rational lead = v[piv];
    for (auto& x : v) x /= lead;
    // keep the stored form fully reduced
    for (auto& row : rows_) {
        if (row[piv] == 0) continue;
        Rational c = row[piv];
        for (Index k = 0; k < dim_; ++k)
            if (v[k] != 0) row[k] -= c * v[k];
    }
    pivot_row_[piv] = static_cast<Index>(rows_.size());
    row_pivot_.push_back(piv);
    rows_.push_back(std::move(v));
    return true;
}

std::vector<Rational> Eliminator::reduce(std::vector<Rational> v) const {
    if (static_cast<Index>(v.size()) != dim_)
        throw DimensionError("Eliminator: vector dimension mismatch");
    reduce_inplace(v);
    return v;
}

bool Eliminator::contains(std::vector<Rational> v) const {
    v = reduce(std::move(v));
    return scan_pivot(v) < 0;
}

}  // namespace gaussmap
