#include "bnalg/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "bnalg/errors.hpp"

namespace bnalg {

namespace {

ThetaMonomial path_monomial(const DagModel& dag, const PlusIndex& u, bool sink_last_to_z) {
    std::vector<ThetaMonomial::Factor> factors;
    for (Vertex j = 1; j <= dag.size(); ++j) {
        if (sink_last_to_z && dag.is_sink(j) && u[j - 1] == dag.levels(j)) {
            factors.emplace_back(kZ, 1u);
        } else {
            factors.emplace_back(static_cast<ThetaVar>(network_label(dag, j, u.entries())), 1u);
        }
    }
    return ThetaMonomial::from_factors(std::move(factors));
}

}  // namespace

MonomialParam plus_basis(const DagModel& dag) {
    if (!toric_criterion(dag)) {
        throw PreconditionFailed("the induced subgraph on the non-sinks is not perfect; no plus-basis parametrization");
    }
    const NetworkAlgebra alg(dag);
    MonomialParam param;
    for (const PlusIndex& u : basic_indices(dag)) {
        ParamEntry e{plus_basis_index(dag, u), path_monomial(dag, u, true)};
        if (alg.quotient().normal_form(ThetaPoly(e.image, Rational(1))) != alg.variable_image(e.index)) {
            throw std::logic_error("parametrization of " + e.index.name() + " disagrees with the network map");
        }
        param.entries.push_back(std::move(e));
    }
    return param;
}

std::string indexed_label_name(const StagedTree& tree, LabelId id) {
    const LabelInfo& info = tree.label_info(id);
    // labels of one variable are stored by parent configuration, then value
    std::size_t before = 0;
    std::size_t values = 0;
    for (LabelId l = 0; l < tree.label_count(); ++l) {
        const LabelInfo& other = tree.label_info(l);
        if (other.variable != info.variable) continue;
        if (l < id) ++before;
        if (other.parent_values == info.parent_values) ++values;
    }
    const std::size_t config = before / values + 1;
    std::vector<std::size_t> parts{static_cast<std::size_t>(info.variable)};
    if (!info.parent_values.empty()) parts.push_back(config);
    parts.push_back(static_cast<std::size_t>(info.value));
    const bool wide = std::any_of(parts.begin(), parts.end(), [](std::size_t p) { return p > 9; });
    std::string s = "theta";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (wide && i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

XPoly to_plus_coordinates(const DagModel& dag, const XPoly& f) {
    return f.substitute([&](const PlusIndex& u) -> std::optional<XPoly> {
        check_index(dag, u);
        if (u.has_plus()) throw InvalidInput(u.name() + " is not a basic variable");
        // x_{..kappa..} = x_{..+..} - sum of the other values, one sink at a time
        std::vector<std::pair<PlusIndex, Rational>> terms{{u, Rational(1)}};
        for (Vertex i = 1; i <= dag.size(); ++i) {
            if (!dag.is_sink(i) || u[i - 1] != dag.levels(i)) continue;
            std::vector<std::pair<PlusIndex, Rational>> next;
            for (const auto& [v, c] : terms) {
                next.emplace_back(v.with(static_cast<std::size_t>(i - 1), PlusIndex::kPlus), c);
                for (int k = 1; k < dag.levels(i); ++k) next.emplace_back(v.with(static_cast<std::size_t>(i - 1), k), -c);
            }
            terms = std::move(next);
        }
        XPoly out;
        for (const auto& [v, c] : terms) out.add_term(XMonomial(v), c);
        return out;
    });
}

RationalMatrix plus_change_matrix(const DagModel& dag) {
    const auto basic = coordinate_variables(dag, CoordinateBasis::Standard);
    const auto plus = coordinate_variables(dag, CoordinateBasis::Plus);
    std::map<PlusIndex, std::size_t> column;
    for (std::size_t i = 0; i < basic.size(); ++i) column[basic[i]] = i;
    RationalMatrix t(plus.size(), std::vector<Rational>(basic.size(), Rational(0)));
    for (std::size_t r = 0; r < plus.size(); ++r) {
        const XPoly expanded = expand_plus(dag, plus[r]);
        for (const auto& [m, c] : expanded.terms()) t[r][column.at(m.factors().front().first)] = c;
    }
    return t;
}

FiberReport binomial_fibers(const DagModel& dag, int d, CoordinateBasis basis, const Limits& limits) {
    if (d < 0) throw InvalidInput("negative degree");
    std::vector<PlusIndex> vars;
    std::vector<ThetaMonomial> images;
    if (basis == CoordinateBasis::Plus) {
        for (auto& e : plus_basis(dag).entries) {
            vars.push_back(std::move(e.index));
            images.push_back(std::move(e.image));
        }
    } else {
        for (const PlusIndex& u : basic_indices(dag)) {
            vars.push_back(u);
            images.push_back(path_monomial(dag, u, false));
        }
    }
    if (monomial_count(vars.size(), d) > limits.max_monomials) {
        throw GuardExceeded(std::to_string(monomial_count(vars.size(), d)) + " monomials of degree " +
                            std::to_string(d) + " exceed the limit of " + std::to_string(limits.max_monomials));
    }

    std::map<ThetaMonomial, std::vector<XMonomial>> fibers;
    std::vector<std::size_t> idx;
    std::vector<ThetaMonomial> partial{ThetaMonomial{}};
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(idx.size()) == d) {
            std::vector<XMonomial::Factor> factors;
            for (std::size_t i : idx) factors.emplace_back(vars[i], 1u);
            fibers[partial.back()].push_back(XMonomial::from_factors(std::move(factors)));
            return;
        }
        for (std::size_t v = from; v < vars.size(); ++v) {
            idx.push_back(v);
            partial.push_back(partial.back() * images[v]);
            rec(v);
            partial.pop_back();
            idx.pop_back();
        }
    };
    rec(0);

    FiberReport report;
    report.degree = d;
    report.basis = basis;
    for (const auto& [image, members] : fibers) {
        for (std::size_t k = 1; k < members.size(); ++k) {
            XPoly b(members[k], Rational(1));
            b.add_term(members.front(), Rational(-1));
            report.binomials.push_back(std::move(b));
        }
    }
    const NetworkAlgebra alg(dag);
    report.all_in_kernel = std::all_of(report.binomials.begin(), report.binomials.end(),
                                       [&](const XPoly& b) { return alg.in_kernel(b); });
    PolySpan span;
    for (const auto& b : report.binomials) span.insert(b);
    report.binomial_dim = span.dimension();
    const GradedBasis kernel = graded_kernel(alg, d, basis, limits);
    report.kernel_dim = kernel.dimension();
    for (const auto& f : kernel.elements) span.insert(f);
    report.binomial = span.dimension() == report.binomial_dim && span.dimension() == report.kernel_dim;
    return report;
}

namespace {

std::vector<PlusIndex> quadratic_support(const std::vector<const XPoly*>& forms) {
    std::set<PlusIndex> vars;
    for (const XPoly* f : forms) {
        if (!f->is_zero() && (f->degree() != 2 || !f->is_homogeneous())) {
            throw InvalidInput("not a quadratic form: " + to_text(*f));
        }
        for (const auto& v : f->support()) vars.insert(v);
    }
    std::vector<PlusIndex> out(vars.begin(), vars.end());
    return out;
}

RationalMatrix symmetric_matrix(const XPoly& f, const std::vector<PlusIndex>& vars) {
    std::map<PlusIndex, std::size_t> pos;
    for (std::size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = i;
    RationalMatrix s(vars.size(), std::vector<Rational>(vars.size(), Rational(0)));
    for (const auto& [m, c] : f.terms()) {
        const auto xs = m.expanded();
        const std::size_t i = pos.at(xs[0]);
        const std::size_t j = pos.at(xs[1]);
        if (i == j) {
            s[i][i] += c;
        } else {
            s[i][j] += c / 2;
            s[j][i] += c / 2;
        }
    }
    return s;
}

RationalMatrix pencil(const RationalMatrix& a, const RationalMatrix& b, const Rational& c) {
    RationalMatrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += c * b[i][j];
    }
    return m;
}

RationalMatrix principal(const RationalMatrix& m, const std::vector<std::size_t>& rows) {
    RationalMatrix out;
    for (std::size_t i : rows) {
        std::vector<Rational> r;
        for (std::size_t j : rows) r.push_back(m[i][j]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

QuadForm quad_form_matrix(const XPoly& f) {
    QuadForm q;
    q.variables = quadratic_support({&f});
    q.matrix = symmetric_matrix(f, q.variables);
    return q;
}

std::size_t quad_form_rank(const XPoly& f) { return rank(quad_form_matrix(f).matrix); }

PairwiseRank pairwise_rank_poly(const XPoly& fi, const XPoly& fj) {
    const auto vars = quadratic_support({&fi, &fj});
    const RationalMatrix si = symmetric_matrix(fi, vars);
    const RationalMatrix sj = symmetric_matrix(fj, vars);
    const std::size_t m = vars.size();

    PairwiseRank r;
    r.support_size = m;
    // rank drops only at roots of a nonzero minor of degree <= m, so one of
    // m + 1 distinct values attains the generic rank
    Rational best_c = 1;
    for (std::size_t k = 1; k <= m + 1; ++k) {
        const Rational c(static_cast<long>(k));
        const std::size_t rk = rank(pencil(si, sj, c));
        if (rk > r.generic_rank) {
            r.generic_rank = rk;
            best_c = c;
        }
    }
    if (r.generic_rank == 0) {
        r.verdict = true;
        return r;
    }
    // a maximal independent row set of a symmetric matrix indexes a
    // nonsingular principal submatrix
    const RationalMatrix at_best = pencil(si, sj, best_c);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m && rows.size() < r.generic_rank; ++i) {
        rows.push_back(i);
        RationalMatrix sub;
        for (std::size_t k : rows) sub.push_back(at_best[k]);
        if (rank(sub) < rows.size()) rows.pop_back();
    }
    std::vector<std::pair<Rational, Rational>> points;
    for (std::size_t k = 0; k <= rows.size(); ++k) {
        const Rational c(static_cast<long>(k));
        points.emplace_back(c, determinant(principal(pencil(si, sj, c), rows)));
    }
    r.determinant = UniPoly::interpolate(points);
    r.rational_roots = r.determinant.rational_roots();
    for (const Rational& c : r.rational_roots) {
        if (c != 0 && rank(pencil(si, sj, c)) < r.generic_rank) r.drops.push_back(c);
    }
    r.verdict = r.drops.empty();
    return r;
}

}  // namespace bnalg
