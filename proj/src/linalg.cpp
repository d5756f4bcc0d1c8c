#include "bnalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "bnalg/errors.hpp"

namespace bnalg {

void make_primitive(SparseVec& v) {
    if (v.empty()) return;
    Integer g = 0;
    for (const auto& [i, a] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g == 1) return;
    for (auto& [i, a] : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

namespace {

// v := s*v - t*p, dropping cancelled entries.
void combine(SparseVec& v, const Integer& s, const Integer& t, const SparseVec& p) {
    SparseVec out;
    out.reserve(v.size() + p.size());
    auto a = v.begin();
    auto b = p.begin();
    Integer x;
    while (a != v.end() || b != p.end()) {
        if (b == p.end() || (a != v.end() && a->first < b->first)) {
            out.emplace_back(a->first, s * a->second);
            ++a;
        } else if (a == v.end() || b->first < a->first) {
            out.emplace_back(b->first, -t * b->second);
            ++b;
        } else {
            x = s * a->second - t * b->second;
            if (x != 0) out.emplace_back(a->first, x);
            ++a;
            ++b;
        }
    }
    v = std::move(out);
}

}  // namespace

SparseVec RowEchelon::reduce(SparseVec v) const {
    std::size_t pos = 0;
    int steps = 0;
    while (pos < v.size()) {
        auto it = pivots_.find(v[pos].first);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        const SparseVec& p = it->second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), v[pos].second.get_mpz_t(), p.front().second.get_mpz_t());
        const Integer s = p.front().second / g;
        const Integer t = v[pos].second / g;
        combine(v, s, t, p);
        if (++steps % 8 == 0) make_primitive(v);
        // entries before pos are unchanged non-pivot columns; the pivot column is gone
    }
    make_primitive(v);
    return v;
}

bool RowEchelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    // keep pivot rows free of other pivot columns to the left only; rows stay
    // in echelon shape since the leading column of v is not a pivot
    const std::size_t lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
}

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, std::size_t ncols) {
    RowEchelon echelon;
    std::vector<SparseVec> kernel;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        SparseVec v = rows[r];
        if (!v.empty() && v.back().first >= ncols) throw std::invalid_argument("left_kernel: column out of range");
        v.emplace_back(ncols + r, Integer(1));
        v = echelon.reduce(std::move(v));
        if (v.front().first >= ncols) {
            SparseVec y;
            y.reserve(v.size());
            for (auto& [i, a] : v) y.emplace_back(i - ncols, std::move(a));
            kernel.push_back(std::move(y));
        } else {
            echelon.insert(std::move(v));
        }
    }
    return kernel;
}

SparseVec to_integer_vector(const std::vector<std::pair<std::size_t, Rational>>& v) {
    Integer l = 1;
    for (const auto& [i, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    SparseVec out;
    for (const auto& [i, q] : v) {
        if (q == 0) continue;
        out.emplace_back(i, Integer(q.get_num() * (l / q.get_den())));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    make_primitive(out);
    return out;
}

namespace {

std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto& q : row) r.emplace_back(q.get_num() * (l / q.get_den()));
        out.push_back(std::move(r));
    }
    return out;
}

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation used.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, int& sign) {
    sign = 1;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    auto a = integer_rows(m);
    int sign = 1;
    return bareiss(a, sign);
}

Rational determinant(const RationalMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (n == 0) return 1;
    Rational scale = 1;
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        scale *= l;
    }
    auto a = integer_rows(m);
    int sign = 1;
    if (bareiss(a, sign) < n) return 0;
    return Rational(a[n - 1][n - 1] * sign) / scale;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    // Newton divided differences, then expansion into the monomial basis
    const std::size_t n = points.size();
    std::vector<Rational> dd;
    for (const auto& p : points) dd.push_back(p.second);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = n - 1; i >= k; --i) {
            const Rational dx = points[i].first - points[i - k].first;
            if (dx == 0) throw std::invalid_argument("interpolation abscissae must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    std::vector<Rational> coeffs(n, Rational(0));
    for (std::size_t k = n; k-- > 0;) {
        // coeffs := coeffs * (c - x_k) + dd[k]
        std::vector<Rational> next(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs[i] == 0) continue;
            if (i + 1 < n) next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * points[k].first;
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }
    return UniPoly(std::move(coeffs));
}

Rational UniPoly::operator()(const Rational& c) const {
    Rational v = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * c + coeffs_[i];
    return v;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    static const Integer kLimit("100000000000000000000");
    if (n > kLimit) throw GuardExceeded("coefficient too large for rational root search");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> UniPoly::rational_roots() const {
    if (is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (coeffs_[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<std::pair<std::size_t, Rational>> rest;
    for (std::size_t i = low; i < coeffs_.size(); ++i) rest.emplace_back(i - low, coeffs_[i]);
    SparseVec ints = to_integer_vector(rest);
    if (ints.size() > 1) {
        const Integer a0 = ints.front().second;
        const Integer an = ints.back().second;
        const UniPoly stripped([&] {
            std::vector<Rational> c(ints.back().first + 1, Rational(0));
            for (const auto& [i, a] : ints) c[i] = a;
            return c;
        }());
        for (const Integer& p : positive_divisors(a0)) {
            for (const Integer& q : positive_divisors(an)) {
                for (int s : {1, -1}) {
                    Rational x(p * s, q);
                    x.canonicalize();
                    if (stripped(x) == 0) roots.push_back(x);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<SparseVec> PolySpan::vectorize(const XPoly& f) const {
    std::vector<std::pair<std::size_t, Rational>> v;
    for (const auto& [m, c] : f.terms()) {
        auto it = columns_.find(m);
        if (it == columns_.end()) return std::nullopt;
        v.emplace_back(it->second, c);
    }
    return to_integer_vector(v);
}

bool PolySpan::insert(const XPoly& f) {
    for (const auto& [m, c] : f.terms()) columns_.emplace(m, columns_.size());
    return echelon_.insert(*vectorize(f));
}

bool PolySpan::contains(const XPoly& f) const {
    auto v = vectorize(f);
    return v && echelon_.contains(*v);
}

}  // namespace bnalg
