// gleafkit command-line front end: run law suites, compute single
// compositions/gluings/actions, and reproduce the counterexample battery.
//
// Exit codes: 0 = success / all checks pass, 1 = law failure detected,
// 2 = usage or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gleafkit/compository.hpp"
#include "gleafkit/gleaf.hpp"
#include "gleafkit/metric.hpp"
#include "gleafkit/nerve.hpp"
#include "gleafkit/probability.hpp"
#include "gleafkit/relational.hpp"
#include "gleafkit/spans.hpp"
#include "gleafkit/topology.hpp"

using namespace gleafkit;
using nlohmann::json;

namespace {

int thread_cap() {
    const char* env = std::getenv("GLEAFKIT_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

FinCategory default_category() {
    // four-object poset: bot below everything, everything below top
    return poset_category({"bot", "a", "b", "top"},
                          [](int x, int y) { return x == y || x == 0 || y == 3; });
}

// Broken test fixture: composition forgets to divide by the shared marginal.
class BrokenDistInstance {
  public:
    using Simplex = Dist;
    int dim(const Simplex& P) const { return inner_.dim(P); }
    Simplex act(const Simplex& P, const MonotoneMap& f) const { return inner_.act(P, f); }
    Simplex compose(const Simplex& P, int k, const Simplex& Q) const {
        int m = dim(P), n = dim(Q);
        Dist out = Dist::zeros(m + n - k + 1, P.noutcomes);
        for (size_t i = 0; i < out.w.size(); ++i) {
            auto t = out.tuple_of(i);
            std::vector<int> tp(t.begin(), t.begin() + m + 1);
            std::vector<int> tq(t.begin() + m - k, t.end());
            out.w[i] = P.at(tp) * Q.at(tq);
        }
        return out;
    }
    bool valid(const Simplex& P) const { return inner_.valid(P); }
    json to_json(const Simplex& P) const { return inner_.to_json(P); }
    bool exhaustive() const { return false; }
    Simplex random_simplex(int n, Rng& rng) const { return inner_.random_simplex(n, rng); }
    Simplex random_extension(const Simplex& f, int n, Rng& rng) const {
        return inner_.random_extension(f, n, rng);
    }

  private:
    DistInstance inner_{2};
};

struct CheckArgs {
    std::string instance;
    std::string mode = "both";
    int samples = 200;
    unsigned long long seed = 1;
    int dims = -1;  // -1: per-instance default
    std::string out;
};

void append_reports(std::vector<AxiomReport>& into, std::vector<AxiomReport> more) {
    for (auto& r : more) into.push_back(std::move(r));
}

template <class CInst>
std::vector<AxiomReport> run_compository_mode(const CInst& inst, const std::string& name,
                                              const CheckArgs& a, int default_dims) {
    SuiteConfig cfg;
    cfg.max_dim = a.dims >= 0 ? a.dims : default_dims;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.functoriality_map_cap = std::min(3, cfg.max_dim + 1);
    CompositorySuite<CInst> suite(inst, name, cfg);
    return suite.run_all();
}

template <class CInst>
std::vector<AxiomReport> run_delta_gleaf_mode(const CInst& inst, const std::string& name,
                                              const CheckArgs& a, int default_dims) {
    SuiteConfig cfg;
    cfg.max_dim = a.dims >= 0 ? a.dims : default_dims;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    CompositoryAsDeltaGleaf<CInst> G(inst);
    DeltaGleafSuite<CompositoryAsDeltaGleaf<CInst>> suite(G, name, cfg);
    return suite.run_all();
}

template <class GInst>
std::vector<AxiomReport> run_finset_gleaf_mode(const GInst& inst, const std::string& name,
                                               const CheckArgs& a, int default_size) {
    GleafSuiteConfig cfg;
    cfg.max_size = a.dims >= 0 ? a.dims : default_size;
    cfg.naturality_max_size = std::min(cfg.max_size, 3);
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.max_checks = 60000;
    GleafSuite<GInst> suite(inst, name, cfg);
    return suite.run_all();
}

int cmd_check(const CheckArgs& a) {
    bool want_comp = a.mode == "compository" || a.mode == "both";
    bool want_gleaf = a.mode == "gleaf" || a.mode == "both";
    std::vector<AxiomReport> reports;

    if (a.instance == "nerve") {
        auto C = default_category();
        NerveInstance inst(C);
        if (want_comp) append_reports(reports, run_compository_mode(inst, "nerve", a, 3));
        if (want_gleaf) append_reports(reports, run_delta_gleaf_mode(inst, "nerve", a, 3));
    } else if (a.instance == "spans") {
        auto L = diamond_lattice();
        SpanInstance inst(L);
        if (want_comp) append_reports(reports, run_compository_mode(inst, "spans", a, 2));
        if (want_gleaf) append_reports(reports, run_delta_gleaf_mode(inst, "spans", a, 2));
    } else if (a.instance == "metric") {
        MetricInstance inst(true);
        if (want_comp) append_reports(reports, run_compository_mode(inst, "metric", a, 4));
        if (want_gleaf) {
            MetricGleaf G(true);
            append_reports(reports, run_finset_gleaf_mode(G, "metric", a, 4));
        }
    } else if (a.instance == "probability") {
        DistInstance inst(2);
        if (want_comp) append_reports(reports, run_compository_mode(inst, "probability", a, 3));
        if (want_gleaf) {
            ProbGleaf G(2);
            append_reports(reports, run_finset_gleaf_mode(G, "probability", a, 4));
        }
    } else if (a.instance == "relational") {
        if (a.mode == "compository") {
            std::cerr << "the relational instance is a gleaf only; use --mode gleaf\n";
            return 2;
        }
        RelGleaf G(2);
        append_reports(reports, run_finset_gleaf_mode(G, "relational", a, 3));
    } else if (a.instance == "topology") {
        if (a.mode == "compository") {
            std::cerr << "the topology instance is a gleaf only; use --mode gleaf\n";
            return 2;
        }
        TopGleaf G;
        append_reports(reports, run_finset_gleaf_mode(G, "topology", a, 4));
    } else if (a.instance == "broken") {
        // deliberately faulty fixture for harness sanity checks
        BrokenDistInstance inst;
        append_reports(reports, run_compository_mode(inst, "broken", a, 2));
    } else {
        std::cerr << "unknown instance: " << a.instance << "\n";
        return 2;
    }

    long long total_failures = 0;
    json rep_json = json::array();
    for (const auto& r : reports) {
        total_failures += static_cast<long long>(r.failures.size());
        rep_json.push_back(r.to_json());
    }
    json out = {{"instance", a.instance}, {"mode", a.mode},
                {"samples", a.samples},  {"seed", a.seed},
                {"threads", thread_cap()}, {"reports", rep_json},
                {"total_failures", total_failures}};
    emit(out, a.out);
    return total_failures == 0 ? 0 : 1;
}

struct ComposeArgs {
    std::string instance, a, b, out, category, lattice;
    int k = 0;
};

int cmd_compose(const ComposeArgs& args) {
    json ja = read_json_file(args.a), jb = read_json_file(args.b);
    if (args.instance == "metric") {
        auto A = metric_from_json(ja), B = metric_from_json(jb);
        MetricInstance inst(A.symmetric);
        if (!is_k_composable(inst, A, args.k, B)) {
            std::cerr << "not " << args.k << "-composable: the terminal " << args.k
                      << "-face of A differs from the initial " << args.k << "-face of B\n";
            return 2;
        }
        emit(metric_to_json(metric_compose(A, args.k, B)), args.out);
    } else if (args.instance == "probability") {
        auto A = dist_from_json(ja), B = dist_from_json(jb);
        DistInstance inst(A.noutcomes);
        if (!is_k_composable(inst, A, args.k, B)) {
            std::cerr << "not " << args.k << "-composable: the marginal of A on its last "
                      << args.k + 1 << " variables differs from that of B on its first\n";
            return 2;
        }
        emit(dist_to_json(dist_compose(A, args.k, B)), args.out);
    } else if (args.instance == "nerve") {
        if (args.category.empty()) {
            std::cerr << "--category is required for the nerve instance\n";
            return 2;
        }
        auto C = FinCategory::from_json(read_json_file(args.category));
        auto A = nerve_path_from_json(C, ja), B = nerve_path_from_json(C, jb);
        NerveInstance inst(C);
        if (!is_k_composable(inst, A, args.k, B)) {
            std::cerr << "not " << args.k << "-composable: the paths do not share the "
                      << "required " << args.k << "-face\n";
            return 2;
        }
        emit(nerve_path_to_json(C, nerve_compose(C, A, args.k, B)), args.out);
    } else if (args.instance == "spans") {
        if (args.lattice.empty()) {
            std::cerr << "--lattice is required for the spans instance\n";
            return 2;
        }
        auto L = FinLattice::from_json(read_json_file(args.lattice));
        auto A = span_from_json(L, ja), B = span_from_json(L, jb);
        SpanInstance inst(L);
        if (!is_k_composable(inst, A, args.k, B)) {
            std::cerr << "not " << args.k << "-composable: the spans do not share the "
                      << "required " << args.k << "-face\n";
            return 2;
        }
        emit(span_to_json(L, span_compose(L, A, args.k, B)), args.out);
    } else {
        std::cerr << "compose supports: metric, probability, nerve, spans\n";
        return 2;
    }
    return 0;
}

struct GlueArgs {
    std::string instance, a, b, out, incl_a, incl_b;
    int size_c = 0;
};

int cmd_glue(const GlueArgs& args) {
    json ja = read_json_file(args.a), jb = read_json_file(args.b);
    if (args.instance == "relational") {
        auto A = relation_from_json(ja), B = relation_from_json(jb);
        emit(relation_to_json(natural_join(A, B)), args.out);
        return 0;
    }
    auto ia = parse_ints(args.incl_a), ib = parse_ints(args.incl_b);
    if (args.instance == "metric") {
        auto A = metric_from_json(ja), B = metric_from_json(jb);
        emit(metric_to_json(metric_glue(A, ia, B, ib, args.size_c)), args.out);
    } else if (args.instance == "probability") {
        auto A = dist_from_json(ja), B = dist_from_json(jb);
        emit(dist_to_json(dist_glue(A, ia, B, ib, args.size_c)), args.out);
    } else if (args.instance == "topology") {
        auto A = topology_from_json(ja), B = topology_from_json(jb);
        emit(topology_to_json(top_glue(A, ia, B, ib, args.size_c)), args.out);
    } else {
        std::cerr << "glue supports: metric, probability, topology, relational\n";
        return 2;
    }
    return 0;
}

struct ActArgs {
    std::string instance, in, map, out;
};

int cmd_act(const ActArgs& args) {
    json ji = read_json_file(args.in);
    auto f = parse_ints(args.map);
    if (args.instance == "metric") {
        emit(metric_to_json(metric_restrict(metric_from_json(ji), f)), args.out);
    } else if (args.instance == "probability") {
        emit(dist_to_json(dist_pull(dist_from_json(ji), f)), args.out);
    } else if (args.instance == "topology") {
        emit(topology_to_json(top_act(topology_from_json(ji), f)), args.out);
    } else {
        std::cerr << "act supports: metric, probability, topology\n";
        return 2;
    }
    return 0;
}

json span_horn_counterexample() {
    auto L = diamond_lattice();
    SpanInstance inst(L);
    auto faces = diamond_horn(L);
    json faces_json;
    for (const auto& [i, f] : faces) faces_json[std::to_string(i)] = span_to_json(L, f);
    bool faces_valid = true;
    for (const auto& [i, f] : faces) faces_valid = faces_valid && span_valid(L, f);
    auto full = horn_filler_search(L, 3, faces);
    std::map<int, NSpan> partial{{0, faces.at(0)}, {1, faces.at(1)}};
    auto loose = horn_filler_search(L, 3, partial);
    size_t candidates = span_enumerate(L, 3).size();
    return {{"which", "span-horn"},
            {"lattice", L.to_json()},
            {"faces", faces_json},
            {"verification",
             {{"faces_valid", faces_valid},
              {"three_spans_searched", candidates},
              {"filler_for_faces_0_1_3", full.has_value()},
              {"filler_for_faces_0_1_only", loose.has_value()},
              {"confirmed", faces_valid && !full && !loose}}}};
}

json metric_horn_counterexample() {
    auto horn = find_unfillable_horn(6, 42);
    auto partial = horn.assembled();
    bool fillable = extension_exists(partial);
    json faces = {{"face0", metric_to_json(horn.face0)},
                  {"face1", metric_to_json(horn.face1)},
                  {"face3", metric_to_json(horn.face3)}};
    bool faces_valid = metric_valid(horn.face0) && metric_valid(horn.face1) &&
                       metric_valid(horn.face3);
    return {{"which", "metric-horn"},
            {"faces", faces},
            {"verification",
             {{"faces_valid", faces_valid},
              {"extension_exists", fillable},
              {"confirmed", faces_valid && !fillable}}}};
}

json prob_triple_counterexample() {
    auto pieces = contradictory_triple();
    json pieces_json = json::array();
    Relation joined;
    bool first = true;
    for (const auto& p : pieces) {
        auto support = dist_support(p.dist, p.vars);
        pieces_json.push_back({{"vars", p.vars},
                               {"dist", dist_to_json(p.dist, p.vars)},
                               {"support", relation_to_json(support)}});
        joined = first ? support : join_unchecked(joined, support);
        first = false;
    }
    auto verdict = deterministic_joint_exists(pieces);
    return {{"which", "prob-triple"},
            {"pieces", pieces_json},
            {"verification",
             {{"support_join_size", joined.tuples().size()},
              {"certificate", verdict == Feasibility::No ? "no-joint-exists" : "unexpected"},
              {"confirmed", verdict == Feasibility::No && joined.empty()}}}};
}

json topology_triple_counterexample() {
    auto pieces = triangle_pieces();
    json pieces_json = json::array();
    for (const auto& p : pieces)
        pieces_json.push_back(
            {{"subset", p.subset}, {"topology", topology_to_json(p.tau)}});
    // pairwise compatibility of the subspace topologies on all intersections
    bool pairwise = true;
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            std::vector<int> posI, posJ;
            for (int c = 0; c < 3; ++c) {
                auto ii = std::find(pieces[i].subset.begin(), pieces[i].subset.end(), c);
                auto jj = std::find(pieces[j].subset.begin(), pieces[j].subset.end(), c);
                if (ii != pieces[i].subset.end() && jj != pieces[j].subset.end()) {
                    posI.push_back(static_cast<int>(ii - pieces[i].subset.begin()));
                    posJ.push_back(static_cast<int>(jj - pieces[j].subset.begin()));
                }
            }
            pairwise = pairwise && (top_restrict(pieces[i].tau, posI) ==
                                    top_restrict(pieces[j].tau, posJ));
        }
    size_t total = enumerate_topologies(3).size();
    size_t matching = 0;
    for (const auto& tau : enumerate_topologies(3)) {
        bool ok = true;
        for (const auto& p : pieces) ok = ok && top_restrict(tau, p.subset) == p.tau;
        if (ok) ++matching;
    }
    return {{"which", "topology-triple"},
            {"pieces", pieces_json},
            {"verification",
             {{"pairwise_compatible", pairwise},
              {"topologies_enumerated", total},
              {"matching_extensions", matching},
              {"confirmed", pairwise && total == 29 && matching == 0}}}};
}

int cmd_counterexample(const std::string& which, const std::string& out) {
    json j;
    if (which == "span-horn")
        j = span_horn_counterexample();
    else if (which == "metric-horn")
        j = metric_horn_counterexample();
    else if (which == "prob-triple")
        j = prob_triple_counterexample();
    else if (which == "topology-triple")
        j = topology_triple_counterexample();
    else {
        std::cerr << "unknown counterexample: " << which << "\n";
        return 2;
    }
    emit(j, out);
    return j.at("verification").at("confirmed").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gleafkit: exact checkers for compositories and gleaves"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "run the law suites for an instance");
    check->add_option("--instance", check_args.instance,
                      "nerve, spans, metric, probability, relational, topology")
        ->required();
    check->add_option("--mode", check_args.mode, "compository, gleaf, or both");
    check->add_option("--samples", check_args.samples, "sample budget per law");
    check->add_option("--seed", check_args.seed, "random seed");
    check->add_option("--dims", check_args.dims, "dimension / carrier-size cap");
    check->add_option("--out", check_args.out, "write the JSON report to a file");

    ComposeArgs compose_args;
    auto* compose = app.add_subcommand("compose", "compose two simplices along a shared face");
    compose->add_option("--instance", compose_args.instance, "metric, probability, nerve, spans")
        ->required();
    compose->add_option("--a", compose_args.a, "JSON file for the first simplex")->required();
    compose->add_option("--b", compose_args.b, "JSON file for the second simplex")->required();
    compose->add_option("--k", compose_args.k, "overlap dimension")->required();
    compose->add_option("--category", compose_args.category, "category JSON (nerve only)");
    compose->add_option("--lattice", compose_args.lattice, "lattice JSON (spans only)");
    compose->add_option("--out", compose_args.out, "output file");

    GlueArgs glue_args;
    auto* glue = app.add_subcommand("glue", "glue two sections over a covering pair");
    glue->add_option("--instance", glue_args.instance,
                     "metric, probability, topology, relational")
        ->required();
    glue->add_option("--a", glue_args.a, "JSON file for the first section")->required();
    glue->add_option("--b", glue_args.b, "JSON file for the second section")->required();
    glue->add_option("--incl-a", glue_args.incl_a, "comma-separated carrier indices of A");
    glue->add_option("--incl-b", glue_args.incl_b, "comma-separated carrier indices of B");
    glue->add_option("--size-c", glue_args.size_c, "size of the glued carrier");
    glue->add_option("--out", glue_args.out, "output file");

    ActArgs act_args;
    auto* act = app.add_subcommand("act", "apply a function/map to a section");
    act->add_option("--instance", act_args.instance, "metric, probability, topology")
        ->required();
    act->add_option("--in", act_args.in, "JSON file for the section")->required();
    act->add_option("--map", act_args.map, "comma-separated image indices")->required();
    act->add_option("--out", act_args.out, "output file");

    std::string which, ce_out;
    auto* ce = app.add_subcommand("counterexample", "reproduce a counterexample with proof");
    ce->add_option("--which", which, "span-horn, metric-horn, prob-triple, topology-triple")
        ->required();
    ce->add_option("--out", ce_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, parse errors exit 2
    }

    try {
        if (*check) return cmd_check(check_args);
        if (*compose) return cmd_compose(compose_args);
        if (*glue) return cmd_glue(glue_args);
        if (*act) return cmd_act(act_args);
        if (*ce) return cmd_counterexample(which, ce_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
