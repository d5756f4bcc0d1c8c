#include "bnalg/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bnalg/errors.hpp"
#include "bnalg/graph_io.hpp"
#include "bnalg/ideal_engine.hpp"
#include "bnalg/toric.hpp"

namespace bnalg {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string graph;
    int degree = 2;
    std::string format = "json";
    std::string basis = "standard";
    std::string type;
    std::size_t max_monomials = 100000;
    int max_n = 10;

    Limits limits() const {
        Limits l;
        l.max_monomials = max_monomials;
        l.max_n = max_n;
        return l;
    }
    CoordinateBasis coordinates() const { return basis == "plus" ? CoordinateBasis::Plus : CoordinateBasis::Standard; }
    bool text() const { return format == "text"; }
};

// A command produces the JSON report and its text rendering.
struct Output {
    Json json;
    std::string text;
};

Json vertex_list(const VertexSet& s) {
    Json j = Json::array();
    for (Vertex v : s) j.push_back(v);
    return j;
}

std::string set_text(const VertexSet& s) {
    std::string t = "{";
    for (std::size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + std::to_string(s[i]);
    return t + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json degree_json(const DegreeReport& r) {
    return Json{{"degree", r.degree}, {"kernel_dim", r.kernel_dim}, {"ci_dim", r.ci_dim}, {"equal", r.equal}, {"witness", nullptr}};
}

std::string degree_text(const DegreeReport& r) {
    std::ostringstream s;
    s << "degree " << r.degree << ": kernel " << r.kernel_dim << ", ci " << r.ci_dim << ", " << (r.equal ? "equal" : "not equal")
      << "\n";
    return s.str();
}

DagModel load(const Options& o) {
    if (o.graph.empty()) throw InvalidInput("--graph is required");
    return DagModel::validate(read_graph_file(o.graph));
}

Output witness_output(const DagModel& dag, const Options& o) {
    Output out;
    std::ostringstream t;
    if (o.type == "deg4") {
        const Deg4Witness w = deg4_witness(dag, o.limits());
        const auto& c = w.certificate;
        out.json = Json{{"degree", 4},
                        {"kernel_dim", c.kernel_dim},
                        {"ci_dim", c.component_dim},
                        {"equal", c.kernel_dim == c.component_dim},
                        {"witness", to_json(w.f)},
                        {"certificate", {{"in_kernel", c.in_kernel && w.lifted_in_kernel}, {"outside_component", c.outside_component}}},
                        {"construction",
                         {{"cycle", vertex_list(w.cycle)},
                          {"removed_sinks", vertex_list(w.removed)},
                          {"A", vertex_list(w.a)},
                          {"B", vertex_list(w.b)},
                          {"C", vertex_list(w.c)}}}};
        t << "witness (degree 4): " << to_text(w.f) << "\n";
        t << "cycle " << set_text(w.cycle) << ", A " << set_text(w.a) << ", B " << set_text(w.b) << ", C " << set_text(w.c);
        if (!w.removed.empty()) t << ", removed sinks " << set_text(w.removed);
        t << "\n";
        t << "in kernel: " << yes_no(c.in_kernel && w.lifted_in_kernel) << "\n";
        t << "outside the ideal of the quadrics: " << yes_no(c.outside_component) << "\n";
        t << "degree 4: kernel " << c.kernel_dim << ", generated by quadrics " << c.component_dim << "\n";
    } else if (o.type == "detM") {
        const DetMWitness w = detM_witness(dag, o.limits());
        const auto& c = w.certificate;
        out.json = Json{{"degree", 3},
                        {"kernel_dim", c.kernel_dim},
                        {"ci_dim", c.component_dim},
                        {"equal", c.kernel_dim == c.component_dim},
                        {"witness", to_json(w.f)},
                        {"certificate", {{"in_kernel", c.in_kernel}, {"outside_component", c.outside_component}}},
                        {"det_m", to_json(w.det_m)},
                        {"det_m_in_global", w.det_in_global}};
        t << "det(M): " << to_text(w.det_m) << "\n";
        t << "witness (degree 3): " << to_text(w.f) << "\n";
        t << "in kernel: " << yes_no(c.in_kernel) << "\n";
        t << "outside I_global: " << yes_no(c.outside_component) << "\n";
        t << "degree 3: kernel " << c.kernel_dim << ", I_global " << c.component_dim << "\n";
    } else {
        throw InvalidInput("--type must be deg4 or detM");
    }
    out.text = t.str();
    return out;
}

Output analyze(const Options& o) {
    const DagModel dag = load(o);
    const NetworkAlgebra alg(dag);
    const MarkovProperty markov = global_markov(dag, o.max_n);
    const auto cycles = induced_cycles_gt3(dag);
    Output out;
    Json g = graph_to_json(dag);
    g["original_ids"] = dag.original_ids();
    out.json["graph"] = g;
    out.json["perfect"] = is_perfect(dag, dag.vertices());
    out.json["toric_criterion"] = toric_criterion(dag);
    out.json["sinks"] = vertex_list(dag.sinks());
    out.json["induced_cycles"] = Json::array();
    for (const auto& c : cycles) out.json["induced_cycles"].push_back(vertex_list(c));
    out.json["markov_full_count"] = markov.full.size();
    out.json["markov_reduced"] = Json::array();
    for (const auto& s : markov.reduced) out.json["markov_reduced"].push_back(s.to_string());
    out.json["degrees"] = Json::array();

    std::ostringstream t;
    t << "vertices: " << dag.size() << ", levels";
    for (int k : dag.cardinalities()) t << " " << k;
    t << "\nedges:";
    for (const auto& [a, b] : dag.edges()) t << " " << a << "->" << b;
    t << "\nperfect: " << yes_no(out.json["perfect"].get<bool>()) << "\n";
    t << "toric criterion: " << yes_no(out.json["toric_criterion"].get<bool>()) << "\n";
    t << "sinks: " << set_text(dag.sinks()) << "\n";
    t << "induced cycles longer than three:";
    if (cycles.empty()) t << " none";
    for (const auto& c : cycles) t << " " << set_text(c);
    t << "\nglobal Markov property: " << markov.full.size() << " statements, reduced:\n";
    for (const auto& s : markov.reduced) t << "  " << s.to_string() << "\n";
    for (int d = 2; d <= std::max(2, o.degree); ++d) {
        const DegreeReport r = compare_with_global(alg, d, o.limits());
        out.json["degrees"].push_back(degree_json(r));
        t << degree_text(r);
    }
    if (!o.type.empty()) {
        Output w = witness_output(dag, o);
        out.json["witness"] = w.json;
        t << w.text;
    }
    out.text = t.str();
    return out;
}

Output param(const Options& o) {
    const DagModel dag = load(o);
    const StagedTree tree = build_staged_tree(dag);
    const MonomialParam p = plus_basis(dag);
    Output out;
    out.json["basis"] = Json::array();
    std::ostringstream t;
    for (const auto& e : p.entries) {
        std::string image, indexed;
        for (const auto& [v, k] : e.image.factors()) {
            for (unsigned i = 0; i < k; ++i) {
                if (!image.empty()) {
                    image += "*";
                    indexed += "*";
                }
                image += theta_var_name(v, tree);
                indexed += v == kZ ? std::string("z") : indexed_label_name(tree, v);
            }
        }
        out.json["basis"].push_back({{"variable", e.index.name()}, {"image", image}, {"indexed_image", indexed}});
        t << e.index.name() << "\t" << indexed << "\n";
    }
    out.text = t.str();
    return out;
}

Output ci_gens(const Options& o) {
    const DagModel dag = load(o);
    const MarkovProperty markov = global_markov(dag, o.max_n);
    const GlobalGenerators global = global_generators(dag, o.limits());
    Output out;
    std::ostringstream t;
    out.json["statements"] = Json::array();
    for (const auto& s : markov.reduced) {
        Json gens = Json::array();
        t << s.to_string() << "\n";
        for (const auto& f : ci_generators(dag, s)) {
            gens.push_back(to_json(f));
            t << "  " << to_text(f) << "\n";
        }
        out.json["statements"].push_back({{"statement", s.to_string()}, {"generators", gens}});
    }
    out.json["full_statement_count"] = global.statements.size();
    out.json["raw_generator_count"] = global.raw.size();
    out.json["reduced_dim"] = global.reduced.dimension();
    t << "statements in the global Markov property: " << global.statements.size() << "\n";
    t << "generators over all statements: " << global.raw.size() << ", independent: " << global.reduced.dimension()
      << "\n";
    out.text = t.str();
    return out;
}

Output kernel(const Options& o) {
    const DagModel dag = load(o);
    const NetworkAlgebra alg(dag);
    const GradedBasis k = graded_kernel(alg, o.degree, o.coordinates(), o.limits());
    const DegreeReport r = compare_with_global(alg, o.degree, o.limits());
    Output out;
    out.json = degree_json(r);
    out.json["basis"] = o.basis;
    out.json["elements"] = Json::array();
    std::ostringstream t;
    t << degree_text(r);
    t << "basis (" << o.basis << " coordinates):\n";
    for (const auto& f : k.elements) {
        out.json["elements"].push_back(to_json(f));
        t << "  " << to_text(f) << "\n";
    }
    out.text = t.str();
    return out;
}

Output check_gss(const Options& o) {
    const DagModel dag = load(o);
    const DegreeReport r = compare_with_global(NetworkAlgebra(dag), o.degree, o.limits());
    return Output{degree_json(r), degree_text(r)};
}

Output witness(const Options& o) {
    if (o.type.empty()) throw InvalidInput("--type is required (deg4 or detM)");
    return witness_output(load(o), o);
}

Output rank_cmd(const Options& o) {
    const DagModel dag = load(o);
    const GlobalGenerators global = global_generators(dag, o.limits());
    std::vector<XPoly> forms;
    for (const auto& f : global.reduced.elements) forms.push_back(expand_all(dag, f));
    Output out;
    std::ostringstream t;
    out.json["forms"] = Json::array();
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const std::size_t r = quad_form_rank(forms[i]);
        out.json["forms"].push_back({{"index", i + 1}, {"poly", to_json(global.reduced.elements[i])}, {"rank", r}});
        t << "f" << i + 1 << " = " << to_text(global.reduced.elements[i]) << "  rank " << r << "\n";
    }
    out.json["pairs"] = Json::array();
    bool all = true;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = 0; j < forms.size(); ++j) {
            if (i == j) continue;
            const PairwiseRank p = pairwise_rank_poly(forms[i], forms[j]);
            Json det = Json::array();
            for (const auto& c : p.determinant.coefficients()) det.push_back(to_string(c));
            Json roots = Json::array();
            for (const auto& c : p.rational_roots) roots.push_back(to_string(c));
            out.json["pairs"].push_back({{"i", i + 1},
                                         {"j", j + 1},
                                         {"generic_rank", p.generic_rank},
                                         {"determinant", det},
                                         {"rational_roots", roots},
                                         {"verdict", p.verdict}});
            t << "f" << i + 1 << " + c*f" << j + 1 << ": rank " << p.generic_rank << " for "
              << (p.verdict ? "every rational c != 0" : "generic c, drops at some rational c != 0") << "\n";
            all = all && p.verdict;
        }
    }
    out.json["all_pairs_verdict"] = all;
    out.text = t.str();
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Algebraic analysis of discrete Bayesian networks", "bnalg"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--graph", o.graph, "Graph JSON file");
    app.add_option("--degree", o.degree, "Degree of the graded component")->check(CLI::Range(0, 64));
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--basis", o.basis, "Coordinates of the x-ring")->check(CLI::IsMember({"plus", "standard"}));
    app.add_option("--type", o.type, "Witness type")->check(CLI::IsMember({"deg4", "detM"}));
    app.add_option("--max-monomials", o.max_monomials, "Monomial-count guard");
    app.add_option("--max-n", o.max_n, "Vertex-count guard for exhaustive enumeration");

    using Command = Output (*)(const Options&);
    const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands{
        {"analyze", {"Graph properties, Markov statements and degree comparisons", analyze}},
        {"param", {"Plus-basis monomial parametrization (toric networks)", param}},
        {"ci-gens", {"Generators of the conditional independence ideal", ci_gens}},
        {"kernel", {"Basis of a graded component of the kernel", kernel}},
        {"check-gss", {"Compare a graded component of I_global with the kernel", check_gss}},
        {"witness", {"Witness polynomials with certificates", witness}},
        {"rank", {"Rank certificates of the CI quadrics", rank_cmd}},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, entry] : commands) subs.push_back(app.add_subcommand(name, entry.first)->fallthrough());

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (!subs[i]->parsed()) continue;
            const Output result = commands[i].second.second(o);
            out << (o.text() ? result.text : result.json.dump(2) + "\n");
            return 0;
        }
        err << "error: no command\n";
        return 1;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace bnalg
