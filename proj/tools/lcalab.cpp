#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "lcalab/errors.hpp"
#include "lcalab/experiments.hpp"
#include "lcalab/generator.hpp"
#include "lcalab/graph_io.hpp"
#include "lcalab/lca.hpp"
#include "lcalab/online.hpp"
#include "lcalab/ranking.hpp"
#include "lcalab/rng.hpp"
#include "lcalab/vicinity.hpp"

using namespace lcalab;
using nlohmann::ordered_json;

namespace {

// stdout unless --out was given; failures surface as IoError (exit 3).
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw IoError("cannot open for writing: " + path);
            os_ = &file_;
        } else {
            os_ = &std::cout;
        }
    }
    std::ostream& os() { return *os_; }
    void finish() {
        os_->flush();
        if (!*os_) throw IoError("write failed");
    }

  private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

std::uint64_t parse_hex_seed(const std::string& s) {
    std::string_view v = s;
    if (v.starts_with("0x") || v.starts_with("0X")) v.remove_prefix(2);
    if (v.empty()) throw ParamError("seed: empty hex string");
    std::uint64_t out = 0;
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out, 16);
    if (ec != std::errc() || end != v.data() + v.size())
        throw ParamError("seed: not a hex integer: " + s);
    return out;
}

// Flag beats LCALAB_BUDGET beats the built-in default.
std::uint64_t resolve_budget(std::uint64_t flag_value, bool flag_given) {
    if (flag_given) {
        if (flag_value == 0) throw ParamError("budget must be positive");
        return flag_value;
    }
    if (const char* env = std::getenv("LCALAB_BUDGET")) {
        std::uint64_t v = 0;
        auto [end, ec] = std::from_chars(env, env + std::strlen(env), v, 10);
        if (ec != std::errc() || *end != '\0' || v == 0)
            throw ParamError("LCALAB_BUDGET: not a positive integer");
        return v;
    }
    return 1'000'000;
}

// Average degree rounded up; the stand-in for d when only a file is given.
double effective_degree(const Graph& g) {
    if (g.n() == 0) return 1.0;
    return std::max(1.0, std::ceil(2.0 * static_cast<double>(g.m()) /
                                   static_cast<double>(g.n())));
}

// Same for the implicit line graph: mean adjacent-edge count per edge.
double effective_line_degree(const Graph& g) {
    if (g.m() == 0) return 1.0;
    long double sum_sq = 0;
    for (VertexId v = 0; v < g.n(); ++v) {
        auto deg = static_cast<long double>(g.degree(v));
        sum_sq += deg * deg;
    }
    long double avg = (sum_sq - 2.0L * static_cast<long double>(g.m())) /
                      static_cast<long double>(g.m());
    return std::max(1.0, std::ceil(static_cast<double>(avg)));
}

struct InquirySlot {
    InquiryResult res;
    bool budget_exceeded = false;
};

// Answers ids[i] into slot i. Each worker owns its oracle and level cache, so
// scheduling cannot change any output byte.
template <typename MakeOracle>
std::vector<InquirySlot> run_inquiries(MakeOracle make_oracle, const RankingFunction& rf,
                                       Problem pr, const std::vector<VertexId>& ids,
                                       int method, std::uint64_t budget, unsigned jobs) {
    std::vector<InquirySlot> slots(ids.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        auto oracle = make_oracle();
        CachedRankingOrder ord(rf);
        ExploreOptions opt;
        opt.budget = budget;
        opt.on_budget = OnBudget::raise;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ids.size()) break;
            try {
                slots[i].res = method == 1
                                   ? lca_answer_method1(oracle, ord, pr, ids[i], opt)
                                   : lca_answer_method2(oracle, ord, pr, ids[i], opt);
            } catch (const BudgetError&) {
                slots[i].budget_exceeded = true;
                slots[i].res.vertex = ids[i];
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    unsigned n_threads = std::min<std::size_t>(jobs, ids.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return slots;
}

ordered_json inquiry_json(Problem pr, const InquirySlot& s, bool timing) {
    if (s.budget_exceeded)
        return ordered_json{{"vertex", s.res.vertex}, {"budget_exceeded", true}};
    ordered_json j{{"vertex", s.res.vertex},
                   {"output", value_to_string(pr, s.res.output)},
                   {"t_v", s.res.t_v},
                   {"t_e", s.res.t_e},
                   {"queries", s.res.queries}};
    if (timing) j["time_ns"] = s.res.time_ns;
    j["peak_words"] = s.res.peak_words;
    return j;
}

// ---------- gen ----------

struct GenOpts {
    std::string model;
    std::uint32_t n = 0;
    double d = 0;
    std::uint32_t m = 0;
    std::uint32_t depth = 0;
    std::uint64_t rng_seed = 0;
    std::string out;
};

int cmd_gen(const GenOpts& o) {
    GeneratorSpec spec;
    spec.model = graph_model_from_string(o.model);
    spec.n = o.n;
    spec.d = o.d;
    spec.m = o.m;
    spec.depth = o.depth;
    spec.rng_seed = o.rng_seed;
    Graph g = generate(spec);
    if (o.out.empty()) {
        save_graph(g, std::cout);
        std::cout.flush();
        if (!std::cout) throw IoError("write failed");
    } else {
        save_graph(g, o.out);
    }
    std::cerr << "gen: model=" << o.model << " n=" << g.n() << " m=" << g.m()
              << " max_degree=" << g.max_degree();
    if (!o.out.empty()) std::cerr << " -> " << o.out;
    std::cerr << '\n';
    return 0;
}

// ---------- query / verify shared setup ----------

struct RankedInstance {
    Graph g;
    Problem pr = Problem::mis;
    std::optional<EdgeIndex> idx;  // engaged for matching
    std::uint32_t locations = 0;   // n for vertex problems, m for matching
    std::optional<RankingFunction> rf;  // empty iff locations == 0
};

RankedInstance make_instance(const std::string& graph_path, const std::string& problem,
                             std::uint32_t L_flag, std::uint32_t k_flag,
                             std::uint64_t seed) {
    RankedInstance inst;
    inst.g = load_graph(graph_path);
    inst.pr = problem_from_string(problem);
    double d_eff;
    if (inst.pr == Problem::matching) {
        inst.idx.emplace(inst.g);
        inst.locations = static_cast<std::uint32_t>(inst.idx->m());
        d_eff = effective_line_degree(inst.g);
    } else {
        inst.locations = inst.g.n();
        d_eff = effective_degree(inst.g);
    }
    if (inst.locations == 0) return inst;
    std::uint32_t L = L_flag ? L_flag : default_L(inst.locations, d_eff);
    std::uint32_t k = k_flag ? k_flag : default_k(inst.locations, d_eff);
    inst.rf = RankingFunction::sample(inst.locations, L, k, seed);
    return inst;
}

std::vector<InquirySlot> answer(const RankedInstance& inst, const std::vector<VertexId>& ids,
                                int method, std::uint64_t budget, unsigned jobs) {
    if (inst.pr == Problem::matching)
        return run_inquiries([&]() { return LineGraphOracle(inst.g, *inst.idx); }, *inst.rf,
                             inst.pr, ids, method, budget, jobs);
    return run_inquiries([&]() { return GraphOracle(inst.g); }, *inst.rf, inst.pr, ids,
                         method, budget, jobs);
}

// ---------- query ----------

struct QueryOpts {
    std::string graph;
    std::string problem = "mis";
    int method = 1;
    std::string seed = "0x0";
    std::uint32_t L = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> vertices;
    bool all = false;
    std::uint64_t budget = 0;
    bool budget_given = false;
    bool timing = false;
    unsigned jobs = 1;
    std::string out;
};

int cmd_query(const QueryOpts& o) {
    if (!o.all && o.vertices.empty())
        throw ParamError("query: give --vertex at least once or --all");
    std::uint64_t seed = parse_hex_seed(o.seed);
    RankedInstance inst = make_instance(o.graph, o.problem, o.L, o.k, seed);
    std::uint64_t budget = resolve_budget(o.budget, o.budget_given);

    std::vector<VertexId> ids;
    if (o.all) {
        ids.resize(inst.locations);
        for (std::uint32_t i = 0; i < inst.locations; ++i) ids[i] = i;
    } else {
        ids = o.vertices;
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (VertexId v : ids)
            if (v >= inst.locations)
                throw ParamError("query: location " + std::to_string(v) + " out of range");
    }

    Output out(o.out);
    ordered_json header{{"command", "query"},
                        {"graph", o.graph},
                        {"n", inst.g.n()},
                        {"m", inst.g.m()},
                        {"problem", to_string(inst.pr)},
                        {"method", o.method},
                        {"ranking", inst.rf ? inst.rf->to_json() : ordered_json(nullptr)},
                        {"budget", budget}};
    out.os() << header.dump() << '\n';

    bool any_budget = false;
    if (!ids.empty()) {
        auto slots = answer(inst, ids, o.method, budget, o.jobs);
        for (const auto& s : slots) {
            out.os() << inquiry_json(inst.pr, s, o.timing).dump() << '\n';
            if (s.budget_exceeded) any_budget = true;
        }
    }
    out.finish();
    std::cerr << "query: answered " << ids.size() << " inquiries"
              << (any_budget ? " (some exceeded the budget)" : "") << '\n';
    return any_budget ? 4 : 0;
}

// ---------- verify ----------

struct VerifyOpts {
    std::string graph;
    std::string problem = "mis";
    int method = 1;
    std::string seed = "0x0";
    std::uint32_t L = 0;
    std::uint32_t k = 0;
    std::uint64_t budget = 0;
    bool budget_given = false;
    unsigned jobs = 1;
    std::string assignment_out;
    bool inject_corruption = false;
};

int cmd_verify(const VerifyOpts& o) {
    std::uint64_t seed = parse_hex_seed(o.seed);
    RankedInstance inst = make_instance(o.graph, o.problem, o.L, o.k, seed);
    std::uint64_t budget = resolve_budget(o.budget, o.budget_given);

    std::vector<Value> values(inst.locations, 0);
    if (inst.locations > 0) {
        std::vector<VertexId> ids(inst.locations);
        for (std::uint32_t i = 0; i < inst.locations; ++i) ids[i] = i;
        auto slots = answer(inst, ids, o.method, budget, o.jobs);
        for (std::uint32_t i = 0; i < inst.locations; ++i) {
            if (slots[i].budget_exceeded) throw BudgetError(budget);
            values[i] = slots[i].res.output;
        }
    }
    if (o.inject_corruption && inst.locations > 0)
        values[0] = inst.pr == Problem::coloring ? values[0] + 1 : 1 - values[0];

    std::vector<Value> global;
    if (inst.locations == 0)
        global.assign(inst.locations, 0);
    else if (inst.pr == Problem::matching)
        global = global_online_run_edges(inst.g, *inst.idx, *inst.rf);
    else
        global = global_online_run(inst.g, *inst.rf, inst.pr);

    std::vector<VertexId> mismatches;
    for (std::uint32_t i = 0; i < inst.locations; ++i)
        if (values[i] != global[i]) mismatches.push_back(i);
    VerifyResult feas = verify_assignment(inst.g, inst.pr, values);

    if (!o.assignment_out.empty()) {
        std::ofstream f(o.assignment_out);
        if (!f) throw IoError("cannot open for writing: " + o.assignment_out);
        for (std::uint32_t i = 0; i < inst.locations; ++i)
            f << i << ' ' << value_to_string(inst.pr, values[i]) << '\n';
        f.flush();
        if (!f) throw IoError("write failed: " + o.assignment_out);
    }

    std::cerr << "verify: problem=" << to_string(inst.pr) << " locations="
              << inst.locations << " mismatches=" << mismatches.size()
              << " violations=" << feas.violations.size() << '\n';
    if (!mismatches.empty() || !feas.ok) {
        std::size_t shown = 0;
        for (VertexId v : mismatches) {
            if (shown++ >= 20) {
                std::cerr << "  ...\n";
                break;
            }
            std::cerr << "  mismatch at " << v << ": local "
                      << value_to_string(inst.pr, values[v]) << " vs global "
                      << value_to_string(inst.pr, global[v]) << '\n';
        }
        for (std::size_t i = 0; i < feas.violations.size() && i < 20; ++i)
            std::cerr << "  violation: " << feas.violations[i] << '\n';
        return 5;
    }
    return 0;
}

// ---------- stats ----------

struct StatsOpts {
    std::string graph;
    double d = 0;
    std::uint32_t L = 0;
    std::uint32_t k = 0;
    std::uint32_t seeds = 5;
    std::uint32_t centers = 200;
    std::uint64_t budget = 0;
    bool budget_given = false;
    std::uint64_t rng_seed = experiments::kDefaultMasterSeed;
    std::string out;
};

int cmd_stats(const StatsOpts& o) {
    Graph g = load_graph(o.graph);
    experiments::StatsParams p;
    p.d = o.d > 0 ? o.d : effective_degree(g);
    p.L = o.L;
    p.k = o.k;
    p.seeds = o.seeds;
    p.centers = o.centers;
    p.budget = resolve_budget(o.budget, o.budget_given);
    p.rng_seed = o.rng_seed;

    std::vector<experiments::StatsRecord> records;
    experiments::ExperimentReport rep = experiments::vicinity_stats(g, p, &records);
    std::uint32_t L = rep.params.at("L").get<std::uint32_t>();
    std::uint32_t k = rep.params.at("k").get<std::uint32_t>();

    Output out(o.out);
    for (const auto& r : records) {
        ordered_json line{{"n", g.n()},     {"d", p.d},
                          {"L", L},         {"k", k},
                          {"center", r.center}, {"t_v", r.t_v},
                          {"t_e", r.t_e},   {"queries", r.queries},
                          {"budget_exceeded", r.budget_exceeded}};
        out.os() << line.dump() << '\n';
    }
    out.os() << rep.to_json().dump() << '\n';
    out.finish();
    std::cerr << "stats: inquiries=" << records.size() << " mean_t_v="
              << rep.metrics.at("t_v").at("mean").get<double>() << " max_t_v="
              << rep.metrics.at("t_v").at("max").get<std::uint64_t>() << '\n';
    return 0;
}

// ---------- experiment ----------

struct ExpOpts {
    std::string name;
    std::vector<std::uint32_t> n;
    double d = 0;
    std::uint32_t L = 0;
    std::uint32_t t = 0;
    std::uint32_t k = 0;
    std::uint32_t depth = 0;
    std::uint32_t s = 0;
    std::uint32_t m = 0;
    std::uint32_t graphs = 0;
    std::uint32_t seeds = 0;
    std::uint32_t centers = 0;
    std::uint32_t min_m = 0;
    std::uint64_t trials = 0;
    double threshold = 0;
    std::string model = "gnp";
    std::uint64_t budget = 0;
    bool budget_given = false;
    std::uint64_t rng_seed = experiments::kDefaultMasterSeed;
    std::string out;

    // set by the parser: which flags were actually given
    bool has_d = false, has_depth = false, has_trials = false, has_threshold = false;
};

std::uint32_t integral_d(double d, std::uint32_t fallback, bool given) {
    if (!given) return fallback;
    if (d < 1 || d != std::floor(d)) throw ParamError("experiment: d must be a positive integer");
    return static_cast<std::uint32_t>(d);
}

int cmd_experiment(const ExpOpts& o) {
    experiments::ExperimentReport rep;
    auto first_n = [&](std::uint32_t fallback) {
        return o.n.empty() ? fallback : o.n.front();
    };

    if (o.name == "dominance") {
        rep = experiments::run_dominance(first_n(8), integral_d(o.d, 2, o.has_d));
    } else if (o.name == "legal-paths") {
        experiments::LegalPathParams p;
        if (o.L) p.L = o.L;
        if (o.t) p.t = o.t;
        rep = experiments::run_legal_paths(p);
    } else if (o.name == "tightness") {
        experiments::TightnessParams p;
        p.d = integral_d(o.d, 2, o.has_d);
        if (o.has_depth) p.depth = o.depth; else p.depth = 1;
        if (o.has_trials) p.trials = o.trials;
        p.rng_seed = o.rng_seed;
        rep = experiments::run_tightness(p);
    } else if (o.name == "level-balance") {
        experiments::LevelBalanceParams p;
        p.n = first_n(p.n);
        if (o.has_d) p.d = o.d;
        if (o.L) p.L = o.L;
        if (o.k) p.k = o.k;
        if (o.seeds) p.seeds = o.seeds;
        if (o.min_m) p.min_m = o.min_m;
        p.budget = resolve_budget(o.budget, o.budget_given);
        p.rng_seed = o.rng_seed;
        rep = experiments::run_level_balance(p);
    } else if (o.name == "scaling" || o.name == "moments") {
        experiments::ScalingParams p;
        if (!o.n.empty()) p.n_grid = o.n;
        if (o.has_d) p.d = o.d;
        if (o.graphs) p.graphs = o.graphs;
        if (o.seeds) p.seeds = o.seeds;
        if (o.centers) p.centers = o.centers;
        p.budget = resolve_budget(o.budget, o.budget_given);
        p.rng_seed = o.rng_seed;
        rep = o.name == "scaling" ? experiments::run_scaling(p)
                                  : experiments::run_moments(p);
    } else if (o.name == "exposure") {
        experiments::ExposureParams p;
        p.graph.model = graph_model_from_string(o.model);
        p.graph.n = first_n(4096);
        p.graph.d = o.has_d ? o.d : 3.0;
        p.graph.m = o.m;
        p.graph.depth = o.depth;
        p.graph.rng_seed = derive_seed(o.rng_seed, 0x6e0);
        if (o.s) p.s = o.s;
        if (o.has_trials) p.trials = static_cast<std::uint32_t>(o.trials);
        if (o.has_threshold) p.threshold = o.threshold;
        p.rng_seed = o.rng_seed;
        rep = experiments::run_exposure(p);
    } else {
        throw ParamError("unknown experiment: " + o.name);
    }

    Output out(o.out);
    out.os() << rep.to_json().dump(2) << '\n';
    out.finish();
    std::cerr << "experiment " << rep.name << ": " << (rep.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& note : rep.notes) std::cerr << "  " << note << '\n';
    return rep.pass ? 0 : 6;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local computation answers for greedy rules over ranked arrival orders"};
    app.require_subcommand(1);
    int rc = 0;

    GenOpts gen;
    auto* cg = app.add_subcommand("gen", "generate a graph and write it in text form");
    cg->add_option("--model", gen.model, "gnp | regular | bipartite | tree")->required();
    cg->add_option("--n", gen.n, "vertex count (consumers for bipartite)");
    cg->add_option("--d", gen.d, "degree parameter");
    cg->add_option("--m", gen.m, "producer count (bipartite)");
    cg->add_option("--depth", gen.depth, "tree depth");
    cg->add_option("--rng-seed", gen.rng_seed, "generator randomness");
    cg->add_option("--out", gen.out, "output path (default stdout)");
    cg->callback([&]() { rc = cmd_gen(gen); });

    QueryOpts q;
    auto* cq = app.add_subcommand("query", "answer inquiries locally");
    cq->add_option("--graph", q.graph, "graph file")->required();
    cq->add_option("--problem", q.problem, "mis | matching | coloring");
    cq->add_option("--method", q.method, "1 = full ids, 2 = short labels")
        ->check(CLI::Range(1, 2));
    cq->add_option("--seed", q.seed, "ranking seed, hex");
    cq->add_option("--L", q.L, "level count (default from degree)");
    cq->add_option("--k", q.k, "hash independence parameter (default from degree)");
    cq->add_option("--vertex", q.vertices, "inquiry location (repeatable; edge id for matching)");
    cq->add_flag("--all", q.all, "answer every location");
    auto* qb = cq->add_option("--budget", q.budget, "exploration budget (vertices)");
    cq->add_flag("--timing", q.timing, "include wall-clock time_ns per inquiry");
    cq->add_option("--jobs", q.jobs, "worker threads")->check(CLI::Range(1, 256));
    cq->add_option("--out", q.out, "output path (default stdout)");
    cq->callback([&]() {
        q.budget_given = qb->count() > 0;
        rc = cmd_query(q);
    });

    VerifyOpts vf;
    auto* cv = app.add_subcommand("verify",
                                  "answer all inquiries and check them against the "
                                  "sequential reference");
    cv->add_option("--graph", vf.graph, "graph file")->required();
    cv->add_option("--problem", vf.problem, "mis | matching | coloring");
    cv->add_option("--method", vf.method, "1 | 2")->check(CLI::Range(1, 2));
    cv->add_option("--seed", vf.seed, "ranking seed, hex");
    cv->add_option("--L", vf.L, "level count");
    cv->add_option("--k", vf.k, "hash independence parameter");
    auto* vb = cv->add_option("--budget", vf.budget, "exploration budget");
    cv->add_option("--jobs", vf.jobs, "worker threads")->check(CLI::Range(1, 256));
    cv->add_option("--assignment-out", vf.assignment_out, "write 'id value' lines here");
    cv->add_flag("--inject-corruption", vf.inject_corruption)->group("");
    cv->callback([&]() {
        vf.budget_given = vb->count() > 0;
        rc = cmd_verify(vf);
    });

    StatsOpts st;
    auto* cs = app.add_subcommand("stats", "vicinity size statistics over seeds and centers");
    cs->add_option("--graph", st.graph, "graph file")->required();
    cs->add_option("--d", st.d, "degree label for the records (default: average degree)");
    cs->add_option("--L", st.L, "level count (default from degree)");
    cs->add_option("--k", st.k, "hash independence parameter (default from degree)");
    cs->add_option("--seeds", st.seeds, "ranking seeds to sample");
    cs->add_option("--centers", st.centers, "inquiry centers per seed");
    auto* sb = cs->add_option("--budget", st.budget, "exploration budget");
    cs->add_option("--rng-seed", st.rng_seed, "master seed for seed/center derivation");
    cs->add_option("--out", st.out, "output path (default stdout)");
    cs->callback([&]() {
        st.budget_given = sb->count() > 0;
        rc = cmd_stats(st);
    });

    ExpOpts ex;
    auto* ce = app.add_subcommand("experiment",
                                  "run a named study: scaling | moments | tightness | "
                                  "dominance | legal-paths | level-balance | exposure");
    ce->add_option("name", ex.name, "experiment name")->required();
    ce->add_option("--n", ex.n, "vertex count; repeat to override the grid");
    auto* ed = ce->add_option("--d", ex.d, "degree parameter");
    ce->add_option("--L", ex.L, "level count");
    ce->add_option("--t", ex.t, "path length (legal-paths)");
    ce->add_option("--k", ex.k, "hash independence parameter");
    auto* edep = ce->add_option("--depth", ex.depth, "tree depth (tightness)");
    ce->add_option("--s", ex.s, "exposed set size (exposure)");
    ce->add_option("--m", ex.m, "producer count (exposure on bipartite)");
    auto* etr = ce->add_option("--trials", ex.trials, "trial count");
    ce->add_option("--graphs", ex.graphs, "instances per grid point (scaling, moments)");
    ce->add_option("--seeds", ex.seeds, "seed count (scaling, moments, level-balance)");
    ce->add_option("--centers", ex.centers, "centers per seed (scaling, moments)");
    ce->add_option("--min-m", ex.min_m, "hashed-vertex target (level-balance)");
    auto* eth = ce->add_option("--threshold", ex.threshold, "ratio threshold (exposure)");
    ce->add_option("--model", ex.model, "graph family (exposure)");
    auto* eb = ce->add_option("--budget", ex.budget, "exploration budget");
    ce->add_option("--rng-seed", ex.rng_seed, "master seed");
    ce->add_option("--out", ex.out, "output path (default stdout)");
    ce->callback([&]() {
        ex.has_d = ed->count() > 0;
        ex.has_depth = edep->count() > 0;
        ex.has_trials = etr->count() > 0;
        ex.has_threshold = eth->count() > 0;
        ex.budget_given = eb->count() > 0;
        rc = cmd_experiment(ex);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
