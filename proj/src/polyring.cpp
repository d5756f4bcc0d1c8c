#include "bnalg/polyring.hpp"

#include <functional>

#include "bnalg/errors.hpp"

namespace bnalg {

QuotientContext::QuotientContext(const StagedTree& tree)
    : eliminated_(tree.label_count(), false) {
    images_.reserve(tree.label_count());
    for (LabelId id = 0; id < tree.label_count(); ++id) images_.push_back(ThetaPoly::variable(static_cast<ThetaVar>(id)));
    for (const auto& [labels, members] : tree.stages()) {
        if (labels.size() < 2) throw InvalidInput("stage with a single label " + tree.label_name(labels.front()));
        stages_.push_back(labels);
        const LabelId last = labels.back();
        eliminated_[last] = true;
        ThetaPoly image = ThetaPoly::variable(kZ);
        for (std::size_t i = 0; i + 1 < labels.size(); ++i) image -= ThetaPoly::variable(static_cast<ThetaVar>(labels[i]));
        images_[last] = std::move(image);
    }
}

ThetaPoly QuotientContext::normal_form(const ThetaPoly& p) const {
    return p.substitute([this](const ThetaVar& v) -> std::optional<ThetaPoly> {
        if (v == kZ) return std::nullopt;
        if (v >= eliminated_.size()) throw InvalidInput("unknown label id " + std::to_string(v));
        if (!eliminated_[v]) return std::nullopt;
        return images_[v];
    });
}

void check_index(const DagModel& dag, const PlusIndex& u) {
    if (static_cast<int>(u.size()) != dag.size()) {
        throw InvalidInput(u.name() + " has " + std::to_string(u.size()) + " entries, expected " +
                           std::to_string(dag.size()));
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.is_plus(i)) continue;
        if (u[i] < 1 || u[i] > dag.levels(static_cast<Vertex>(i + 1))) {
            throw InvalidInput(u.name() + ": entry " + std::to_string(i + 1) + " out of range");
        }
    }
}

XPoly expand_plus(const DagModel& dag, const PlusIndex& u) {
    check_index(dag, u);
    std::vector<int> entries = u.entries();
    XPoly out;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == entries.size()) {
            out.add_term(XMonomial(PlusIndex(entries)), Rational(1));
            return;
        }
        if (!u.is_plus(i)) {
            fill(i + 1);
            return;
        }
        for (int k = 1; k <= dag.levels(static_cast<Vertex>(i + 1)); ++k) {
            entries[i] = k;
            fill(i + 1);
        }
        entries[i] = PlusIndex::kPlus;
    };
    fill(0);
    return out;
}

XPoly expand_all(const DagModel& dag, const XPoly& f) {
    return f.substitute([&](const PlusIndex& u) -> std::optional<XPoly> {
        check_index(dag, u);
        if (!u.has_plus()) return std::nullopt;
        return expand_plus(dag, u);
    });
}

std::vector<PlusIndex> basic_indices(const DagModel& dag) {
    std::vector<int> plus(static_cast<std::size_t>(dag.size()), PlusIndex::kPlus);
    std::vector<PlusIndex> out;
    const XPoly all = expand_plus(dag, PlusIndex(plus));
    for (const auto& [m, c] : all.terms()) out.push_back(m.factors().front().first);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <class Var, class Namer>
nlohmann::ordered_json poly_json(const Polynomial<Var>& p, const char* ring, Namer name) {
    nlohmann::ordered_json j;
    j["ring"] = ring;
    j["terms"] = nlohmann::ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::ordered_json mono = nlohmann::ordered_json::object();
        for (const auto& [v, e] : it->first.factors()) mono[name(v)] = e;
        j["terms"].push_back({{"coeff", to_string(it->second)}, {"mono", mono}});
    }
    return j;
}

template <class Var, class Parse>
Polynomial<Var> poly_from_json(const nlohmann::json& j, const char* ring, Parse parse) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw InvalidInput("polynomial JSON needs a \"terms\" array");
    }
    if (j.contains("ring") && j["ring"] != ring) {
        throw InvalidInput(std::string("expected ring \"") + ring + "\"");
    }
    Polynomial<Var> p;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("mono") || !t["mono"].is_object()) {
            throw InvalidInput("polynomial term needs \"coeff\" and \"mono\"");
        }
        const Rational c = t["coeff"].is_string() ? parse_rational(t["coeff"].get<std::string>())
                           : t["coeff"].is_number_integer() ? Rational(t["coeff"].get<long>())
                                                            : throw InvalidInput("coefficient must be a string");
        std::vector<typename Monomial<Var>::Factor> factors;
        for (const auto& [name, e] : t["mono"].items()) {
            if (!e.is_number_unsigned()) throw InvalidInput("exponent of " + name + " must be a nonnegative integer");
            factors.emplace_back(parse(name), e.template get<unsigned>());
        }
        p.add_term(Monomial<Var>::from_factors(std::move(factors)), c);
    }
    return p;
}

template <class Var, class Namer>
std::string poly_text(const Polynomial<Var>& p, Namer name) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        c = abs(c);
        const bool unit = c == 1 && !it->first.is_one();
        if (!unit) s += to_string(c);
        bool lead = unit;
        for (const auto& [v, e] : it->first.factors()) {
            if (!lead) s += "*";
            lead = false;
            s += name(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

}  // namespace

std::string theta_var_name(ThetaVar v, const StagedTree& tree) {
    return v == kZ ? std::string("z") : tree.label_name(v);
}

nlohmann::ordered_json to_json(const XPoly& f) {
    return poly_json(f, "x", [](const PlusIndex& u) { return u.name(); });
}

nlohmann::ordered_json to_json(const ThetaPoly& p, const StagedTree& tree) {
    return poly_json(p, "theta", [&](ThetaVar v) { return theta_var_name(v, tree); });
}

XPoly x_poly_from_json(const nlohmann::json& j) {
    return poly_from_json<PlusIndex>(j, "x", [](const std::string& s) { return PlusIndex::parse(s); });
}

ThetaPoly theta_poly_from_json(const nlohmann::json& j, const StagedTree& tree) {
    return poly_from_json<ThetaVar>(j, "theta", [&](const std::string& s) -> ThetaVar {
        if (s == "z") return kZ;
        return static_cast<ThetaVar>(tree.label_by_name(s));
    });
}

std::string to_text(const XPoly& f) {
    return poly_text(f, [](const PlusIndex& u) { return u.name(); });
}

std::string to_text(const ThetaPoly& p, const StagedTree& tree) {
    return poly_text(p, [&](ThetaVar v) { return theta_var_name(v, tree); });
}

}  // namespace bnalg
