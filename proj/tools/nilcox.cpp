// nilcox: command line front end for the affine nilCoxeter algebra library.
//
// Subcommands: elements, graph, kschur, apply, strong, verify,
// reproduce-paper.  Exit codes: 0 success, 1 mismatch or verification
// failure, 2 usage error, 3 resource bound exceeded.

#include "nilcox/nilcox.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace nilcox;

// Window entries are bounded by (L+1)(k+1), far below the checked int64
// range at this bound; enumeration sizes are guarded separately.
constexpr Int kMaxLength = 64;

struct GraphChoice {
    bool strong = true;
    bool figure = false; // truncate at the Grassmannian elements of length L
};

std::vector<AffinePerm> graph_vertices(Rank rank, Int max_length, bool figure) {
    const auto levels = elements_up_to(rank, max_length);
    std::vector<AffinePerm> vertices;
    if (!figure) {
        for (const auto& level : levels)
            for (const auto& w : level) vertices.push_back(w);
        return vertices;
    }
    // Downward Bruhat closure of the 0-Grassmannian elements of length
    // exactly max_length.
    std::set<AffinePerm> closure;
    std::vector<AffinePerm> frontier;
    for (const auto& w : levels.back())
        if (is_grassmannian(w)) {
            closure.insert(w);
            frontier.push_back(w);
        }
    while (!frontier.empty()) {
        std::vector<AffinePerm> next;
        for (const auto& x : frontier)
            for (const auto& y : bruhat_covers(x))
                if (closure.insert(y).second) next.push_back(y);
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

struct WeakEdge {
    AffinePerm source;
    AffinePerm target;
    Int label;
};

std::vector<WeakEdge> weak_edges(const std::vector<AffinePerm>& vertices) {
    std::set<AffinePerm> vset(vertices.begin(), vertices.end());
    std::vector<WeakEdge> out;
    for (const auto& v : vertices)
        for (Int i = 0; i <= v.rank().k(); ++i) {
            AffinePerm w = multiply(simple(v.rank(), i), v);
            if (w.length() == v.length() + 1 && vset.count(w))
                out.push_back(WeakEdge{v, w, i});
        }
    return out;
}

std::vector<StrongEdge> strong_edges(const std::vector<AffinePerm>& vertices) {
    std::set<AffinePerm> vset(vertices.begin(), vertices.end());
    std::vector<StrongEdge> out;
    for (const auto& x : vertices)
        for (const auto& e : strong_edges_from(x))
            if (vset.count(e.target)) out.push_back(e);
    return out;
}

int cmd_elements(Rank rank, Int max_length, bool grassmannian_only,
                 const std::string& format) {
    const auto levels = elements_up_to(rank, max_length);
    if (format == "json") {
        json out = json::array();
        for (std::size_t l = 0; l < levels.size(); ++l) {
            json level = json::array();
            for (const auto& w : levels[l]) {
                if (grassmannian_only && !is_grassmannian(w)) continue;
                json e = to_json(w);
                e["word"] = reduced_word(w);
                level.push_back(std::move(e));
            }
            out.push_back(json{{"length", l}, {"elements", level}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t l = 0; l < levels.size(); ++l) {
            std::cout << "length " << l << ":";
            for (const auto& w : levels[l]) {
                if (grassmannian_only && !is_grassmannian(w)) continue;
                std::cout << " " << word_str(w);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

// With NILCOX_CACHE_DIR set, truncated graphs are persisted as JSON and
// reused across runs.
std::string graph_cache_path(Rank rank, Int max_length, const GraphChoice& choice) {
    const char* dir = std::getenv("NILCOX_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return std::string(dir) + "/nilcox-" + (choice.strong ? "strong" : "weak") + "-k" +
           std::to_string(rank.k()) + "-L" + std::to_string(max_length) +
           (choice.figure ? "-figure" : "") + ".json";
}

json graph_to_json(Rank rank, const std::vector<AffinePerm>& vertices,
                   const GraphChoice& choice) {
    json edges = json::array();
    if (choice.strong) {
        for (const auto& e : strong_edges(vertices)) edges.push_back(to_json(e));
    } else {
        for (const auto& e : weak_edges(vertices))
            edges.push_back(json{{"src", e.source.window()},
                                 {"dst", e.target.window()},
                                 {"label", e.label}});
    }
    json verts = json::array();
    for (const auto& v : vertices) verts.push_back(v.window());
    return json{{"k", rank.k()},
                {"which", choice.strong ? "strong" : "weak"},
                {"vertices", verts},
                {"edges", edges}};
}

int cmd_graph(Rank rank, Int max_length, const GraphChoice& choice,
              const std::string& format) {
    const std::string cache_path = graph_cache_path(rank, max_length, choice);
    if (format == "json" && !cache_path.empty()) {
        if (std::ifstream cached(cache_path); cached) {
            std::cout << json::parse(cached).dump(2) << "\n";
            return 0;
        }
        const json out =
            graph_to_json(rank, graph_vertices(rank, max_length, choice.figure), choice);
        if (std::ofstream store(cache_path); store) store << out.dump(2) << "\n";
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const auto vertices = graph_vertices(rank, max_length, choice.figure);
    if (format == "dot") {
        std::cout << "digraph " << (choice.strong ? "strong" : "weak") << " {\n";
        for (const auto& v : vertices) std::cout << "  \"" << word_str(v) << "\";\n";
        if (choice.strong) {
            for (const auto& e : strong_edges(vertices))
                std::cout << "  \"" << word_str(e.source) << "\" -> \""
                          << word_str(e.target) << "\" [label=\"" << e.label << "\"];\n";
        } else {
            for (const auto& e : weak_edges(vertices))
                std::cout << "  \"" << word_str(e.source) << "\" -> \""
                          << word_str(e.target) << "\" [label=\"" << e.label << "\"];\n";
        }
        std::cout << "}\n";
    } else {
        std::cout << graph_to_json(rank, vertices, choice).dump(2) << "\n";
    }
    return 0;
}

void print_nilcox(const NilCoxElem& a, const std::string& format) {
    if (format == "json")
        std::cout << to_json(a).dump(2) << "\n";
    else if (format == "latex")
        std::cout << render_latex(a) << "\n";
    else
        std::cout << render_text(a) << "\n";
}

void print_symfunc(const SymFunc& f, const std::string& format) {
    if (format == "json")
        std::cout << to_json(f).dump(2) << "\n";
    else if (format == "latex")
        std::cout << render_latex(f) << "\n";
    else
        std::cout << render_text(f) << "\n";
}

int cmd_kschur(Rank rank, const std::string& lambda_str, const std::string& basis,
               const std::string& format) {
    const Partition lambda = lambda_str.empty()
                                 ? Partition{}
                                 : Partition(detail::parse_int_list(lambda_str));
    if (basis == "h") {
        const auto& coeffs = KschurTable::instance(rank).kschur_in_h(lambda);
        if (format == "json") {
            json out = json::array();
            for (const auto& [p, c] : coeffs)
                out.push_back(json{{"index", p.parts()}, {"coeff", c}});
            std::cout << json{{"basis", "h"}, {"k", rank.k()}, {"coeffs", out}}.dump(2)
                      << "\n";
        } else {
            SymFunc f(SfBasis::h, lambda.sum());
            for (const auto& [p, c] : coeffs) f.add_term(p, c);
            print_symfunc(f, format);
        }
    } else {
        const NilCoxElem& s = noncomm_kschur(rank, lambda);
        if (format == "json") {
            json out = json::array();
            for (const auto& [w, c] : s.terms())
                out.push_back(json{{"index", w.window()}, {"coeff", c}});
            std::cout << json{{"basis", "u"}, {"k", rank.k()}, {"coeffs", out}}.dump(2)
                      << "\n";
        } else {
            print_nilcox(s, format);
        }
    }
    return 0;
}

int cmd_apply(Rank rank, const std::string& op_str, const std::string& elem_str,
              const std::string& format) {
    const OpSpec op = parse_op(op_str);
    const NilCoxElem a = NilCoxElem::basis(parse_element(rank, elem_str));
    print_nilcox(apply_op(op, a), format);
    return 0;
}

int cmd_strong(Rank rank, const std::string& u_str, const std::string& v_str,
               const std::string& basis, const std::string& format) {
    const AffinePerm u = parse_element(rank, u_str);
    const AffinePerm v = parse_element(rank, v_str);
    SymFunc f = [&] {
        if (basis == "F") return strong_schur_F(u, v);
        if (basis == "m") return strong_schur_m(u, v);
        if (basis == "h") return strong_schur_h(u, v);
        if (basis == "kschur") return strong_schur_kschur(u, v);
        throw CLI::ValidationError("--basis must be one of F, m, h, kschur");
    }();
    print_symfunc(f, format);
    return 0;
}

int cmd_verify(Rank rank, Int max_length, Int sizes, std::vector<std::string> identities,
               bool all) {
    static const std::vector<std::string> known = {
        "commutation", "product-rule", "refinement-sum", "dh",
        "module-morphism", "commuting-family", "b-stability",
        "pieri-perp", "ribbon-oracle"};
    if (all) identities = known;
    if (identities.empty())
        throw CLI::ValidationError("pass --all or at least one --identity");
    std::vector<OperatorReport> reports;
    for (const auto& name : identities) {
        if (name == "commutation")
            reports.push_back(verify_commutation(rank, max_length, rank.k(), rank.k()));
        else if (name == "product-rule")
            reports.push_back(verify_product_rule(rank, max_length, sizes));
        else if (name == "refinement-sum")
            reports.push_back(verify_refinement_sum(rank, max_length, sizes));
        else if (name == "dh")
            reports.push_back(verify_dh_identity(rank));
        else if (name == "module-morphism")
            reports.push_back(verify_module_morphism(rank, max_length));
        else if (name == "commuting-family")
            reports.push_back(verify_commuting_family(rank, max_length, sizes));
        else if (name == "b-stability")
            reports.push_back(verify_b_stability(rank, max_length, sizes));
        else if (name == "pieri-perp")
            reports.push_back(verify_pieri_perp(rank, max_length, sizes));
        else if (name == "ribbon-oracle")
            reports.push_back(verify_ribbon_oracle(rank, max_length, sizes));
        else
            throw CLI::ValidationError("unknown identity: " + name);
    }
    json out = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        out.push_back(json{{"identity", r.identity_name},
                           {"params", r.params},
                           {"checked", r.checked},
                           {"failures", r.failures},
                           {"pass", r.passed()}});
        ok = ok && r.passed();
    }
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// reproduce-paper: golden-file comparison of the worked examples
// ---------------------------------------------------------------------------

NilCoxElem element_from_golden(Rank rank, const json& terms) {
    NilCoxElem out(rank);
    for (const auto& t : terms)
        out.add_term(from_word(rank, t.at("word").get<std::vector<Int>>()),
                     t.at("coeff").get<Int>());
    return out;
}

int cmd_reproduce(Rank rank, const std::string& golden_path) {
    std::ifstream in(golden_path);
    if (!in) {
        std::cerr << "cannot open golden file: " << golden_path << "\n";
        return 2;
    }
    json golden = json::parse(in);
    if (golden.at("k").get<Int>() != rank.k()) {
        std::cerr << "golden file is for k=" << golden.at("k").get<Int>() << "\n";
        return 2;
    }
    int mismatches = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok      " : "MISMATCH") << "  " << name << "\n";
        if (!ok) ++mismatches;
    };

    for (const auto& ex : golden.at("up_operator_examples")) {
        const NilCoxElem got =
            U(ex.at("j").get<Int>(),
              NilCoxElem::basis(from_word(rank, ex.at("word").get<std::vector<Int>>())));
        check(ex.at("name"), got == element_from_golden(rank, ex.at("expect")));
    }
    for (const auto& ex : golden.at("down_operator_examples")) {
        const NilCoxElem got =
            D_comp(Composition(ex.at("comp").get<std::vector<Int>>()),
                   NilCoxElem::basis(from_word(rank, ex.at("word").get<std::vector<Int>>())));
        check(ex.at("name"), got == element_from_golden(rank, ex.at("expect")));
    }
    {
        const auto& ex = golden.at("ascent_composition_example");
        check("ascent composition",
              ascent_composition(ex.at("labels").get<std::vector<Int>>()) ==
                  Composition(ex.at("expect").get<std::vector<Int>>()));
    }
    {
        const auto& ex = golden.at("marking_example");
        const AffinePerm y = from_word(rank, ex.at("y_word").get<std::vector<Int>>());
        const AffinePerm x = from_word(rank, ex.at("x_word").get<std::vector<Int>>());
        bool ok = true;
        for (const auto& val : ex.at("values"))
            ok = ok && y.apply(val.at("n").get<Int>()) == val.at("expect").get<Int>();
        const AffinePerm t = multiply(inverse(y), x);
        for (const auto& rep : ex.at("transposition_reps")) {
            const auto ij = rep.get<std::vector<Int>>();
            ok = ok && t == transposition(rank, ij[0], ij[1]);
        }
        std::multiset<Int> expect_labels, got_labels;
        for (const auto& l : ex.at("edge_labels")) expect_labels.insert(l.get<Int>());
        for (const auto& e : strong_edges_from(x))
            if (e.target == y) got_labels.insert(e.label);
        ok = ok && expect_labels == got_labels;
        check("marking example (y(1), y(4), double edge)", ok);
    }
    for (const auto& ex : golden.at("dh_instances")) {
        const Int i = ex.at("i").get<Int>(), r = ex.at("r").get<Int>();
        check("D_" + std::to_string(i) + "(h_" + std::to_string(r) + ") = h_" +
                  std::to_string(r - i),
              D(i, h(rank, r)) == h(rank, r - i));
    }
    {
        const auto& fig = golden.at("strong_graph_figure");
        const auto vertices = graph_vertices(rank, fig.at("max_length").get<Int>(), true);
        std::multiset<std::tuple<std::vector<Int>, std::vector<Int>, Int>> got, expect;
        for (const auto& e : strong_edges(vertices))
            got.emplace(e.source.window(), e.target.window(), e.label);
        for (const auto& e : fig.at("edges"))
            expect.emplace(from_word(rank, e.at("src").get<std::vector<Int>>()).window(),
                           from_word(rank, e.at("dst").get<std::vector<Int>>()).window(),
                           e.at("label").get<Int>());
        check("strong order graph figure (" + std::to_string(expect.size()) + " edges)",
              got == expect);
    }
    {
        const auto& fig = golden.at("weak_graph_figure");
        const auto vertices = graph_vertices(rank, fig.at("max_length").get<Int>(), true);
        std::multiset<std::pair<std::vector<Int>, std::vector<Int>>> got, expect;
        for (const auto& e : weak_edges(vertices))
            got.emplace(e.source.window(), e.target.window());
        for (const auto& e : fig.at("edges"))
            expect.emplace(from_word(rank, e.at("src").get<std::vector<Int>>()).window(),
                           from_word(rank, e.at("dst").get<std::vector<Int>>()).window());
        check("weak order graph figure (" + std::to_string(expect.size()) + " edges)",
              got == expect);
    }
    if (mismatches > 0) {
        std::cout << mismatches << " mismatch(es)\n";
        return 1;
    }
    std::cout << "all paper examples reproduced\n";
    return 0;
}

std::string default_golden_path() {
    if (const char* env = std::getenv("NILCOX_GOLDEN")) return env;
#ifdef NILCOX_GOLDEN_DEFAULT
    return NILCOX_GOLDEN_DEFAULT;
#else
    return "golden/worked_examples.json";
#endif
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine nilCoxeter algebra, Pieri operators, and strong Schur functions"};
    app.require_subcommand(1);

    Int k = 2;
    Int max_length = 5;
    Int sizes = 2;
    std::string format = "text";
    std::string lambda_str, op_str, elem_str, u_str, v_str;
    std::string basis = "u";
    std::string which = "strong";
    std::string golden = default_golden_path();
    bool grassmannian_only = false;
    bool figure = false;
    bool all_identities = false;
    std::vector<std::string> identities;

    auto add_common = [&](CLI::App* sub, bool with_length) {
        sub->add_option("-k,--rank", k, "rank k (generators s_0..s_k)")
            ->check(CLI::Range(Int{1}, Int{16}));
        if (with_length)
            sub->add_option("-L,--max-length", max_length, "length bound")
                ->check(CLI::Range(Int{0}, kMaxLength));
    };

    auto* elements = app.add_subcommand("elements", "enumerate elements by length");
    add_common(elements, true);
    elements->add_flag("--grassmannian", grassmannian_only, "0-Grassmannian elements only");
    elements->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* graph = app.add_subcommand("graph", "export the weak or strong order graph");
    add_common(graph, true);
    graph->add_option("--which", which)->check(CLI::IsMember({"weak", "strong"}));
    graph->add_flag("--figure", figure,
                    "truncate at the 0-Grassmannian elements of length L");
    graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* kschur = app.add_subcommand("kschur", "noncommutative k-Schur function");
    add_common(kschur, false);
    kschur->add_option("--lambda", lambda_str, "k-bounded partition, e.g. 2,1");
    kschur->add_option("--basis", basis)->check(CLI::IsMember({"u", "h"}));
    kschur->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

    auto* apply = app.add_subcommand("apply", "apply an operator expression to u_w");
    add_common(apply, false);
    apply->add_option("--op", op_str, "e.g. \"D[2,1]\" or \"D1*U2\"")->required();
    apply->add_option("--elem", elem_str, "word \"0,1,2\" or window \"w:[0,2,4]\" or \"e\"")
        ->required();
    apply->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

    auto* strong = app.add_subcommand("strong", "strong Schur function Strong_{u/v}");
    add_common(strong, false);
    strong->add_option("--u", u_str, "upper element")->required();
    strong->add_option("--v", v_str, "lower element (default identity)");
    strong->add_option("--basis", basis)->check(CLI::IsMember({"F", "m", "h", "kschur"}));
    strong->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

    auto* verify = app.add_subcommand("verify", "machine verification sweeps");
    add_common(verify, true);
    verify->add_option("--sizes", sizes, "composition/degree size bound")
        ->check(CLI::Range(Int{1}, Int{6}));
    verify->add_option("--identity", identities, "identity name, repeatable");
    verify->add_flag("--all", all_identities, "run every identity sweep");

    auto* reproduce = app.add_subcommand("reproduce-paper",
                                         "recompute the worked examples and figures");
    add_common(reproduce, false);
    reproduce->add_option("--golden", golden, "path to the golden example file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (elements->parsed())
            return cmd_elements(Rank(k), max_length, grassmannian_only, format);
        if (graph->parsed())
            return cmd_graph(Rank(k), max_length, GraphChoice{which == "strong", figure},
                             format);
        if (kschur->parsed()) return cmd_kschur(Rank(k), lambda_str, basis, format);
        if (apply->parsed()) return cmd_apply(Rank(k), op_str, elem_str, format);
        if (strong->parsed()) {
            if (strong->count("--basis") == 0) basis = "m";
            return cmd_strong(Rank(k), u_str, v_str, basis, format);
        }
        if (verify->parsed())
            return cmd_verify(Rank(k), max_length, sizes, identities, all_identities);
        if (reproduce->parsed()) return cmd_reproduce(Rank(k), golden);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
