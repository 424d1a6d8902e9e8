#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ydn/bosonization.hpp"
#include "ydn/cache.hpp"
#include "ydn/errors.hpp"
#include "ydn/inputspec.hpp"
#include "ydn/nichols.hpp"
#include "ydn/omega.hpp"
#include "ydn/pairing.hpp"
#include "ydn/reflection.hpp"
#include "ydn/relative.hpp"
#include "ydn/resultdoc.hpp"
#include "ydn/ydmodule.hpp"

using namespace ydn;

namespace {

struct Options {
    std::string input;
    int cutoff = 0;
    int pivot = -1;
    int max_vertices = 64;
    std::string cache_dir;
    std::string emit = "text";
    int threads = 0;
};

int effective_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return (int)std::min(4u, hw ? hw : 1u);
}

// Deterministic fan-out: reports land by job index, so the merged document
// is byte-identical whether or not the jobs actually ran concurrently.
std::vector<CheckReport> run_jobs(std::vector<std::function<CheckReport()>> jobs, int threads) {
    std::vector<CheckReport> out(jobs.size());
    if (threads <= 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::vector<std::future<CheckReport>> futs;
    futs.reserve(jobs.size());
    for (auto& j : jobs) futs.push_back(std::async(std::launch::async, j));
    for (size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
    return out;
}

ojson ivec(const std::vector<int>& v) {
    ojson a = ojson::array();
    for (int x : v) a.push_back(x);
    return a;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

YDTuple tuple_of(const BuiltModules& bm) { return YDTuple{bm.entries}; }

void require_pivot(const Options& opt, int rank) {
    if (opt.pivot < 0 || opt.pivot >= rank)
        throw input_error("pivot " + std::to_string(opt.pivot) + " out of range for a tuple of rank " +
                          std::to_string(rank));
}

ojson entry_summary(const YDModule& M) {
    ojson e;
    e["dim"] = M.dim();
    ojson degs = ojson::array();
    for (int d : M.degree) degs.push_back(M.G->elem_str(d));
    e["degrees"] = degs;
    return e;
}

// Unit columns of the flattened coinvariants in ambient degree one with one
// off-pivot letter; these seed the adjoint orbit sample for the suites.
Mat letter_seed(const CoinvariantModule& K) {
    Mat cols = linalg::zero(K.total_dim(), 0);
    for (int i = 0; i < K.total_dim(); ++i)
        if (K.zdeg(i) == 1 && K.mdeg(i) == 1) {
            cols.conservativeResize(K.total_dim(), cols.cols() + 1);
            cols.col(cols.cols() - 1) = linalg::zero(K.total_dim(), 1);
            cols(i, cols.cols() - 1) = cyc(1);
        }
    return cols;
}

int cmd_dims(const Options& opt, const InputSpec& spec, ResultDocument& doc) {
    TruncationCache cache(opt.cache_dir);
    const std::string key = content_hash_hex(spec);
    std::optional<TruncationSnapshot> snap = cache.load(key, opt.cutoff);
    if (snap) {
        std::cerr << "cache: hit " << cache.path_for(key, opt.cutoff) << "\n";
    } else {
        BuiltModules bm = build_modules(spec);
        NicholsTruncation B(yd_direct_sum(bm.entries), opt.cutoff);
        snap = snapshot_of(B, key);
        if (cache.enabled()) {
            cache.store(*snap);
            std::cerr << "cache: store " << cache.path_for(key, opt.cutoff) << "\n";
        }
    }
    doc.set_result("letters", snap->letters);
    doc.set_result("dims", ivec(snap->dims));
    doc.set_result("complete", snap->complete);
    doc.set_result("top_degree", snap->top_degree);
    ojson md = ojson::array();
    for (int n = 0; n <= snap->cutoff; ++n) {
        ojson deg;
        deg["degree"] = n;
        ojson rows = ojson::array();
        for (const auto& [w, d] : snap->multidegree[n]) {
            ojson r;
            r["weights"] = ivec(w);
            r["dim"] = d;
            rows.push_back(std::move(r));
        }
        deg["components"] = std::move(rows);
        md.push_back(std::move(deg));
    }
    doc.set_result("multidegree", std::move(md));
    return 0;
}

int cmd_pairing_check(const Options& opt, const InputSpec& spec, ResultDocument& doc) {
    BuiltModules bm = build_modules(spec);
    YDModule V = yd_direct_sum(bm.entries);
    NicholsTruncation B(V, opt.cutoff), Bd(yd_dual(V), opt.cutoff);
    std::vector<int> dims;
    for (int n = 0; n <= opt.cutoff; ++n) dims.push_back(B.dim(n));
    doc.set_result("dims", ivec(dims));
    doc.add_report("pairing axioms", pairing_suite(Bd, B));
    return 0;
}

int cmd_bosonization_check(const Options& opt, const InputSpec& spec, ResultDocument& doc) {
    BuiltModules bm = build_modules(spec);
    NicholsTruncation T(yd_direct_sum(bm.entries), opt.cutoff);
    std::vector<int> dims;
    for (int n = 0; n <= opt.cutoff; ++n) dims.push_back(T.dim(n));
    doc.set_result("dims", ivec(dims));
    doc.set_result("group_order", bm.G->order());

    Bosonization A(T, bm.G);
    auto reports = run_jobs({[&] { return hopf_suite(A); },
                             [&] { return vartheta_identity_check(A); }},
                            effective_threads(opt.threads));
    doc.add_report("hopf identities", reports[0]);
    doc.add_report("projection antipode exchange", reports[1]);
    return 0;
}

int cmd_omega_check(const Options& opt, const InputSpec& spec, ResultDocument& doc) {
    BuiltModules bm = build_modules(spec);
    require_pivot(opt, (int)bm.entries.size());

    Bosonization big(NicholsTruncation(yd_direct_sum(bm.entries), opt.cutoff), bm.G);
    Bosonization tgt(NicholsTruncation(bm.entries[opt.pivot], opt.cutoff), bm.G);
    Bosonization tgtdual(NicholsTruncation(yd_dual(bm.entries[opt.pivot]), opt.cutoff), bm.G);
    CoinvariantModule K = coinvariants(big, tgt, opt.pivot);
    OmegaContext ctx = make_omega_context(tgt, tgtdual);
    RelativeYDModule X = rel_from_coinvariants(K);

    std::vector<int> kdims;
    for (int n = 0; n <= opt.cutoff; ++n) kdims.push_back(K.dim(n));
    doc.set_result("coinvariant_dims", ivec(kdims));

    std::vector<const RelativeYDModule*> samples{&X};
    std::vector<RelMorphism> morphs;
    Mat seed = letter_seed(K);
    RelSubmodule W;
    if (seed.cols() > 0) {
        W = rel_submodule(X, adjoint_orbit(X, seed));
        samples.push_back(&W.module);
        morphs.push_back({&W.module, &X, W.inclusion});
    }
    RelativeYDModule T = rel_trivial(tgt);
    samples.push_back(&T);

    BraidedBialgebra B = bialgebra_from_coinvariants(K);
    auto reports = run_jobs({[&] { return omega_object_checks(ctx, X); },
                             [&] { return verify_braided_monoidal(ctx, samples, morphs); },
                             [&] { return braided_bialgebra_suite(B); },
                             [&] { return braided_bialgebra_suite(transport_bialgebra(ctx, B)); }},
                            effective_threads(opt.threads));
    doc.add_report("transport object", reports[0]);
    doc.add_report("braided monoidal coherence", reports[1]);
    doc.add_report("coinvariant bialgebra", reports[2]);
    doc.add_report("transported bialgebra", reports[3]);
    return 0;
}

int cmd_reflect(const Options& opt, const InputSpec& spec, ResultDocument& doc) {
    BuiltModules bm = build_modules(spec);
    require_pivot(opt, (int)bm.entries.size());
    ReflectionDatum rd = reflect(tuple_of(bm), opt.pivot, opt.cutoff);

    doc.set_result("exponents", ivec(rd.exponents));
    doc.set_result("cartan_row", ivec(rd.cartan_row));
    ojson entries = ojson::array();
    for (const YDModule& e : rd.result.entries) entries.push_back(entry_summary(e));
    doc.set_result("entries", std::move(entries));
    ojson ladder = ojson::array();
    for (const LadderEntry& e : rd.ladder.entries) {
        ojson l;
        l["index"] = e.index;
        l["exponent"] = e.exponent;
        l["rung_dims"] = ivec(e.rung_dims);
        ladder.push_back(std::move(l));
    }
    doc.set_result("ladder", std::move(ladder));
    return 0;
}

int cmd_verify_ntn(const Options& opt, const InputSpec& spec, ResultDocument& doc) {
    BuiltModules bm = build_modules(spec);
    require_pivot(opt, (int)bm.entries.size());
    YDTuple M = tuple_of(bm);
    ReflectionDatum rd = reflect(M, opt.pivot, opt.cutoff);
    doc.set_result("exponents", ivec(rd.exponents));
    doc.set_result("cartan_row", ivec(rd.cartan_row));
    doc.add_report("reflection theorems", verify_reflection_theorems(M, opt.pivot, opt.cutoff));
    return 0;
}

int cmd_weyl(const Options& opt, const InputSpec& spec, ResultDocument& doc) {
    BuiltModules bm = build_modules(spec);
    WeylGroupoidGraph g = weyl_groupoid(tuple_of(bm), opt.cutoff, opt.max_vertices);

    doc.set_result("vertex_count", (int)g.vertices.size());
    doc.set_result("edge_count", (int)g.edges.size());
    doc.set_result("complete", g.complete());
    ojson verts = ojson::array();
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        ojson v;
        v["id"] = (int)i;
        ojson entries = ojson::array();
        for (const YDModule& e : g.vertices[i].entries) entries.push_back(entry_summary(e));
        v["entries"] = std::move(entries);
        verts.push_back(std::move(v));
    }
    doc.set_result("vertices", std::move(verts));
    // documented record format: vertex_id, pivot, target_id, cartan_row
    ojson adj = ojson::array();
    for (const WeylEdge& e : g.edges) {
        std::ostringstream os;
        os << e.from << ", " << e.pivot << ", " << e.to << ", " << join_ints(e.cartan_row);
        adj.push_back(os.str());
    }
    doc.set_result("adjacency", std::move(adj));
    ojson open = ojson::array();
    for (const auto& [v, p] : g.open) open.push_back(std::to_string(v) + ", " + std::to_string(p));
    doc.set_result("open", std::move(open));
    ojson unexplored = ojson::array();
    for (const auto& [v, p] : g.unexplored)
        unexplored.push_back(std::to_string(v) + ", " + std::to_string(p));
    doc.set_result("unexplored", std::move(unexplored));

    // reflections the window could not certify leave the closure undecided
    return g.open.empty() ? 0 : 3;
}

int exit_code_for(const std::string& kind) {
    if (kind == "NotDefinedAtCutoff" || kind == "CutoffExceeded") return 3;
    if (kind == "InputError" || kind == "NotAGroup" || kind == "NotAYDModule" ||
        kind == "InvalidProjection")
        return 2;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with truncated Nichols algebras over finite group algebras"};
    app.require_subcommand(1);

    Options opt;
    const char* env_cache = std::getenv("YDNICHOLS_CACHE_DIR");
    if (env_cache) opt.cache_dir = env_cache;

    struct Command {
        const char* name;
        const char* help;
        bool needs_pivot;
        int (*run)(const Options&, const InputSpec&, ResultDocument&);
    };
    const std::vector<Command> commands = {
        {"dims", "Per-degree and per-multidegree dimensions of the truncated algebra", false, cmd_dims},
        {"pairing-check", "Axiom suite for the canonical pairing and its companion", false,
         cmd_pairing_check},
        {"bosonization-check", "Hopf identity suite for the bosonization", false,
         cmd_bosonization_check},
        {"omega-check", "Transport suites for the coinvariants at one pivot", true, cmd_omega_check},
        {"reflect", "Reflection of the tuple at one pivot", true, cmd_reflect},
        {"verify-ntn", "Reflection theorem suite at one pivot", true, cmd_verify_ntn},
        {"weyl", "Closure of the tuple under all defined reflections", false, cmd_weyl},
    };

    for (const Command& c : commands) {
        CLI::App* s = app.add_subcommand(c.name, c.help);
        s->add_option("--input", opt.input, "input document path")->required();
        s->add_option("--cutoff", opt.cutoff, "truncation window")
            ->required()
            ->check(CLI::NonNegativeNumber);
        if (c.needs_pivot)
            s->add_option("--pivot", opt.pivot, "tuple position, zero based")->required();
        if (std::string(c.name) == "weyl")
            s->add_option("--max-vertices", opt.max_vertices, "vertex cap for the closure")
                ->check(CLI::PositiveNumber);
        s->add_option("--cache-dir", opt.cache_dir,
                      "cache directory (default: $YDNICHOLS_CACHE_DIR, unset disables)");
        s->add_option("--emit", opt.emit, "output form")->check(CLI::IsMember({"json", "text"}));
        s->add_option("--threads", opt.threads, "worker threads; 1 disables internal parallelism");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        const Command* cmd = nullptr;
        for (const Command& c : commands)
            if (app.get_subcommands()[0]->get_name() == c.name) cmd = &c;

        InputSpec spec = load_input(opt.input);
        ResultDocument doc(cmd->name, content_hash_hex(spec), opt.cutoff);
        if (cmd->needs_pivot) doc.set_parameter("pivot", opt.pivot);
        if (std::string(cmd->name) == "weyl") doc.set_parameter("max_vertices", opt.max_vertices);

        const int override_code = cmd->run(opt, spec, doc);
        std::cout << (opt.emit == "json" ? doc.to_json() : doc.to_text());
        code = doc.failed() ? 1 : override_code;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 1;
    }
    const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    std::cerr << "elapsed: " << dt.count() << " ms\n";
    return code;
}
