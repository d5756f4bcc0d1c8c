#ifndef BNALG_LINALG_HPP
#define BNALG_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bnalg/poly.hpp"
#include "bnalg/rational.hpp"

namespace bnalg {

/// Sparse integer vector: (index, value) pairs, indices increasing, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Integer>>;

/// Divides out the gcd of the entries and makes the leading entry positive.
void make_primitive(SparseVec& v);

/// Integer row echelon form built incrementally with fraction-free row
/// operations. The pivot of a row is its smallest index.
class RowEchelon {
public:
    /// Remainder of v after eliminating every pivot column, made primitive.
    SparseVec reduce(SparseVec v) const;
    /// Adds v; returns false (and changes nothing) if v is already in the span.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::size_t, SparseVec> pivots_;
};

/// Basis of the left null space {y : y^T A = 0} of the matrix whose r-th row
/// is rows[r] (columns < ncols). Vectors are primitive integer combinations
/// of the rows; the k-th vector has its last nonzero entry strictly after the
/// (k-1)-th one.
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, std::size_t ncols);

/// Scales a rational vector to a primitive integer vector.
SparseVec to_integer_vector(const std::vector<std::pair<std::size_t, Rational>>& v);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q via fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
std::size_t rank(const RationalMatrix& m);
/// Determinant of a square matrix; throws std::invalid_argument otherwise.
Rational determinant(const RationalMatrix& m);

/// Dense univariate polynomial, coefficient i of c^i; no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    /// The unique polynomial of degree < points.size() through the points
    /// (distinct abscissae).
    static UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational operator()(const Rational& c) const;

    /// Distinct rational roots, increasing, found through the rational root
    /// theorem on the primitive integer multiple. Zero polynomial: throws.
    std::vector<Rational> rational_roots() const;

private:
    std::vector<Rational> coeffs_;
};

/// Exact linear span of x-polynomials.
class PolySpan {
public:
    /// Returns true if f was independent of the elements inserted so far.
    bool insert(const XPoly& f);
    bool contains(const XPoly& f) const;
    std::size_t dimension() const { return echelon_.rank(); }

private:
    std::optional<SparseVec> vectorize(const XPoly& f) const;
    std::map<XMonomial, std::size_t> columns_;
    RowEchelon echelon_;
};

}  // namespace bnalg

#endif  // BNALG_LINALG_HPP
