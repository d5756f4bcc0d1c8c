#ifndef BNALG_POLY_HPP
#define BNALG_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bnalg/plus_index.hpp"
#include "bnalg/rational.hpp"

namespace bnalg {

/// Power product of variables, stored sparsely as (variable, exponent) pairs
/// sorted by variable with no zero exponents.
template <class Var>
class Monomial {
public:
    using Factor = std::pair<Var, unsigned>;

    Monomial() = default;
    explicit Monomial(const Var& v, unsigned e = 1) {
        if (e) factors_.emplace_back(v, e);
    }
    static Monomial from_factors(std::vector<Factor> factors) {
        std::sort(factors.begin(), factors.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        Monomial m;
        for (auto& f : factors) {
            if (f.second == 0) continue;
            if (!m.factors_.empty() && m.factors_.back().first == f.first) {
                m.factors_.back().second += f.second;
            } else {
                m.factors_.push_back(std::move(f));
            }
        }
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    unsigned exponent(const Var& v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, const Var& x) { return f.first < x; });
        return it != factors_.end() && it->first == v ? it->second : 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        m.factors_.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
                m.factors_.push_back(*a++);
            } else if (a == factors_.end() || b->first < a->first) {
                m.factors_.push_back(*b++);
            } else {
                m.factors_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return m;
    }

    /// Variables with multiplicity, in variable order.
    std::vector<Var> expanded() const {
        std::vector<Var> out;
        for (const auto& [v, e] : factors_) out.insert(out.end(), e, v);
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    /// Graded lexicographic order, earlier variables heavier.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        const auto& fa = a.factors_;
        const auto& fb = b.factors_;
        std::size_t i = 0;
        for (; i < fa.size() && i < fb.size(); ++i) {
            if (fa[i].first != fb[i].first) return fb[i].first < fa[i].first;
            if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
        }
        return i < fb.size();
    }

private:
    std::vector<Factor> factors_;
};

/// Sparse multivariate polynomial with exact rational coefficients. The zero
/// polynomial has no terms; no stored coefficient is zero.
template <class Var>
class Polynomial {
public:
    using Mono = Monomial<Var>;
    using TermMap = std::map<Mono, Rational>;

    Polynomial() = default;
    Polynomial(const Mono& m, const Rational& c) { add_term(m, c); }

    static Polynomial constant(const Rational& c) { return Polynomial(Mono{}, c); }
    static Polynomial variable(const Var& v) { return Polynomial(Mono(v), Rational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_) {
            if (m.degree() != d) return false;
        }
        return true;
    }

    std::set<Var> support() const {
        std::set<Var> vars;
        for (const auto& [m, c] : terms_) {
            for (const auto& [v, e] : m.factors()) vars.insert(v);
        }
        return vars;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        }
        return out;
    }

    Polynomial pow(unsigned e) const {
        Polynomial out = constant(1);
        for (unsigned i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Replaces every variable v for which `image(v)` returns a value.
    Polynomial substitute(const std::function<std::optional<Polynomial>(const Var&)>& image) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial term = constant(c);
            Mono kept;
            for (const auto& [v, e] : m.factors()) {
                if (auto p = image(v)) {
                    term = term * p->pow(e);
                } else {
                    kept = kept * Mono(v, e);
                }
            }
            out += term * Polynomial(kept, Rational(1));
        }
        return out;
    }

    Polynomial substitute(const Var& v, const Polynomial& by) const {
        return substitute([&](const Var& w) -> std::optional<Polynomial> {
            if (w == v) return by;
            return std::nullopt;
        });
    }

    Rational evaluate(const std::function<Rational(const Var&)>& value) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m.factors()) {
                const Rational x = value(v);
                for (unsigned i = 0; i < e; ++i) t *= x;
            }
            total += t;
        }
        return total;
    }

private:
    TermMap terms_;
};

/// Variables of the theta/z ring: label ids of a staged tree, plus z.
using ThetaVar = std::uint32_t;
inline constexpr ThetaVar kZ = UINT32_MAX;

using XMonomial = Monomial<PlusIndex>;
using XPoly = Polynomial<PlusIndex>;
using ThetaMonomial = Monomial<ThetaVar>;
using ThetaPoly = Polynomial<ThetaVar>;

inline XPoly x_var(const PlusIndex& u) { return XPoly::variable(u); }
inline XPoly x_var(std::string_view name) { return XPoly::variable(PlusIndex::parse(name)); }

}  // namespace bnalg

#endif  // BNALG_POLY_HPP
