#include "domk/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "domk/catalog.hpp"
#include "domk/colouring.hpp"
#include "domk/constructions.hpp"
#include "domk/graph6.hpp"
#include "domk/json_io.hpp"
#include "domk/model.hpp"
#include "domk/subdivision.hpp"

namespace domk::cli {

void ordered_map(std::size_t count, int workers, const std::function<std::string(std::size_t)>& work,
                 const std::function<void(std::size_t, const std::string&)>& emit) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) emit(i, work(i));
        return;
    }
    std::vector<std::optional<std::string>> results(count);
    std::exception_ptr failure;
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable ready;

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            std::string r;
            try {
                r = work(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                next = count;
            }
            std::lock_guard lock(mu);
            results[i] = std::move(r);
            ready.notify_all();
        }
    };
    std::vector<std::jthread> pool;
    const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    for (std::size_t k = 0; k < n_threads; ++k) pool.emplace_back(worker);

    for (std::size_t i = 0; i < count; ++i) {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return results[i].has_value() || failure; });
        if (failure) break;
        std::string r = std::move(*results[i]);
        results[i].reset();
        lock.unlock();
        emit(i, r);
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int default_workers() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        try {
            int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "k5" is shorthand for complete(5).
Graph named_graph(const std::string& name, const std::vector<int>& params) {
    static const std::regex kComplete("[kK]([0-9]+)");
    std::smatch m;
    if (params.empty() && std::regex_match(name, m, kComplete)) return complete(std::stoi(m[1]));
    return gen(name, params);
}

// Operand spec for --of/--with: "petersen", "k5" or "cycle:5", "complete-bipartite:2,3".
Graph graph_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::replace(name.begin(), name.end(), '_', '-');
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        for (std::string part; std::getline(ss, part, ',');) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != part.size()) throw UsageError("bad parameter '" + part + "' in '" + spec + "'");
            params.push_back(v);
        }
    }
    return named_graph(name, params);
}

Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.order()}, {"edges", edges}};
}

void emit_graph(std::ostream& out, const Graph& g, const std::string& format) {
    if (format == "json") out << graph_json(g).dump() << '\n';
    else out << to_graph6(g) << '\n';
}

struct GenArgs {
    std::string name;
    std::vector<int> params;
    bool enumerate = false;
    std::string of;
    std::string with;
    std::string format = "graph6";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    std::string name = a.name;
    std::replace(name.begin(), name.end(), '_', '-');
    if (name == "split-k5") {
        if (a.enumerate) {
            if (!a.params.empty()) throw UsageError("split-k5 --enumerate takes no parameters");
            for (const Graph& g : enumerate_k5_splits()) emit_graph(out, g, a.format);
            return ok;
        }
        if (a.params.size() != 5) throw UsageError("split-k5 takes five split choices (0..3) or --enumerate");
        SplitSpec spec{};
        std::copy(a.params.begin(), a.params.end(), spec.begin());
        emit_graph(out, split_k5(spec), a.format);
        return ok;
    }
    if (a.enumerate) throw UsageError("--enumerate applies only to split-k5");
    if (name == "one-subdivision") {
        if (a.of.empty() || !a.with.empty() || !a.params.empty())
            throw UsageError("one-subdivision needs --of SPEC only");
        emit_graph(out, one_subdivision(graph_spec(a.of)), a.format);
        return ok;
    }
    if (name == "join") {
        if (a.of.empty() || a.with.empty() || !a.params.empty())
            throw UsageError("join needs --of SPEC and --with SPEC");
        emit_graph(out, join(graph_spec(a.of), graph_spec(a.with)), a.format);
        return ok;
    }
    if (!a.of.empty() || !a.with.empty()) throw UsageError("--of and --with apply only to one-subdivision and join");
    emit_graph(out, named_graph(name, a.params), a.format);
    return ok;
}

OrderedClique parse_clique(const std::string& text) {
    OrderedClique l;
    if (text.empty()) return l;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            l.vertices.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--clique expects v1[,v2], got '" + text + "'");
        }
    }
    if (l.size() > 2) throw UsageError("--clique takes at most two vertices");
    return l;
}

struct FindArgs {
    int t = 5;
    bool standard = false;
    std::string mode = "general";
    std::string clique;
    int workers = 1;
    bool stable = false;
};

int cmd_find_model(const FindArgs& a, std::istream& in, std::ostream& out) {
    const OrderedClique l = parse_clique(a.clique);
    SearchMode mode = SearchMode::general;
    if (a.mode == "singleton" || a.mode == "singleton-reduced") mode = SearchMode::singleton_reduced;
    else if (a.mode != "general") throw UsageError("--mode must be general or singleton");
    if (a.standard && (mode != SearchMode::general || !l.empty()))
        throw UsageError("--standard does not take --mode or --clique");

    const auto lines = read_lines(in);
    std::atomic<bool> any_error{false};
    ordered_map(
        lines.size(), a.workers,
        [&](std::size_t i) {
            const auto start = Clock::now();
            Json rec{{"index", i}, {"graph", lines[i]}};
            try {
                const Graph g = parse_graph6(lines[i]);
                auto m = a.standard ? find_standard_model(g, a.t) : find_dominating_model(g, a.t, l, mode);
                rec["model"] = m ? to_json(*m) : Json(nullptr);
            } catch (const std::exception& e) {
                rec["error"] = e.what();
                any_error = true;
            }
            if (!a.stable) rec["perf"] = {{"ms", millis_since(start)}};
            return rec.dump();
        },
        [&](std::size_t, const std::string& line) { out << line << '\n'; });
    return any_error ? violations : ok;
}

struct TheoremArgs {
    int max_n = 0;
    bool extract = false;
    int workers = 1;
    bool stable = false;
    std::string report;
};

// One graph of the sweep: colour, search, optionally extract.
Json theorem_record(const Graph& g, bool extract) {
    Json rec;
    const int chi = chromatic_number(g);
    rec["chromatic"] = chi;
    rec["four_colourable"] = chi <= 4;
    auto m = g.order() >= 5 ? find_dominating_model(g, 5, {}, SearchMode::singleton_reduced) : std::nullopt;
    rec["has_model"] = m.has_value();
    std::string failure;
    if (chi >= 5 && !m) failure = "5-chromatic graph without a dominating K5-model";
    if (extract && chi >= 5 && m) {
        try {
            const Extraction ex = extract_k5_or_k5hat(g, *m);
            const bool verified = verify_subdivision(g, ex.embedding).empty();
            const bool leaves_ok = ex.subtree_leaves.subset_of(VertexSet::of(ex.attachments));
            const bool dichotomy = (ex.embedding.pattern_name == "K5") == (ex.middle_length() == 0);
            rec["extraction"] = {
                {"pattern", ex.embedding.pattern_name},
                {"middle_length", ex.middle_length()},
                {"verified", verified},
                {"unsubdivided_incident_edges", check_unsubdivided_incident_edges(ex.embedding)},
            };
            if (!verified) failure = "extracted embedding fails verification";
            else if (!leaves_ok) failure = "subtree leaf outside the attachment set";
            else if (!dichotomy) failure = "pattern disagrees with the middle path length";
        } catch (const std::exception& e) {
            failure = std::string("extraction failed: ") + e.what();
        }
    }
    rec["status"] = failure.empty() ? "ok" : "FAILURE";
    if (!failure.empty()) rec["reason"] = failure;
    return rec;
}

int cmd_check_theorem(const TheoremArgs& a, std::istream& in, std::ostream& out) {
    std::vector<std::string> inputs;
    if (a.max_n > 0) {
        if (a.max_n > 7) throw UsageError("--max-n supports at most 7; stream larger catalogs on stdin");
        for (const Graph& g : graph_catalog(a.max_n)) inputs.push_back(to_graph6(g));
    } else {
        inputs = read_lines(in);
    }

    struct Tally {
        long graphs = 0, five_chromatic = 0, with_model = 0, extracted = 0, k5 = 0, k5hat = 0, failures = 0,
             errors = 0;
    } tally;
    std::vector<std::string> failures;
    const auto start = Clock::now();

    ordered_map(
        inputs.size(), a.workers,
        [&](std::size_t i) {
            const auto t0 = Clock::now();
            Json rec{{"index", i}, {"graph", inputs[i]}};
            try {
                const Graph g = parse_graph6(inputs[i]);
                rec["n"] = g.order();
                rec.update(theorem_record(g, a.extract));
            } catch (const std::exception& e) {
                rec["error"] = e.what();
            }
            if (!a.stable) rec["perf"] = {{"ms", millis_since(t0)}};
            return rec.dump();
        },
        [&](std::size_t, const std::string& line) {
            out << line << '\n';
            const Json rec = Json::parse(line);
            if (rec.contains("error")) {
                ++tally.errors;
                return;
            }
            ++tally.graphs;
            if (rec["chromatic"].get<int>() >= 5) ++tally.five_chromatic;
            if (rec["has_model"].get<bool>()) ++tally.with_model;
            if (rec.contains("extraction")) {
                ++tally.extracted;
                (rec["extraction"]["pattern"] == "K5" ? tally.k5 : tally.k5hat)++;
            }
            if (rec["status"] == "FAILURE") {
                ++tally.failures;
                failures.push_back(line);
            }
        });

    Json summary{{"graphs", tally.graphs},       {"five_chromatic", tally.five_chromatic},
                 {"with_model", tally.with_model}, {"failures", tally.failures},
                 {"errors", tally.errors}};
    if (a.extract) summary["extracted"] = {{"total", tally.extracted}, {"K5", tally.k5}, {"K5hat", tally.k5hat}};
    Json line{{"summary", summary}};
    if (!a.stable) line["perf"] = {{"ms", millis_since(start)}, {"workers", a.workers}};
    out << line.dump() << '\n';

    if (!a.report.empty()) {
        std::ofstream rep(a.report);
        if (!rep) throw IoError("cannot write report to " + a.report);
        rep << line.dump() << '\n';
        for (const auto& f : failures) rep << f << '\n';
        if (!rep) throw IoError("writing report to " + a.report + " failed");
    }
    return tally.failures || tally.errors ? violations : ok;
}

struct VerifyArgs {
    std::string kind;
    std::string graph;
    std::string artifact;
    bool standard = false;
};

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
    std::string g6 = a.graph;
    std::string text;
    if (g6.empty()) {
        std::string line;
        while (g6.empty() && std::getline(in, line)) g6 = line;
        if (g6.empty()) throw UsageError("no graph given (use --graph or the first stdin line)");
    }
    if (a.artifact.empty()) {
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(a.artifact);
        if (!f) throw IoError("cannot read " + a.artifact);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }

    const Graph g = parse_graph6(g6);
    Json artifact;
    try {
        artifact = Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("artifact is not JSON: ") + e.what());
    }
    if (artifact.contains("model") && a.kind == "model") artifact = artifact["model"];

    Json violations_out;
    try {
        if (a.kind == "model") {
            const DominatingModel m = model_from_json(artifact);
            violations_out = violations_json(a.standard ? verify_standard_model(g, m) : verify_dominating_model(g, m));
        } else if (a.kind == "colouring") {
            violations_out = violations_json(verify_colouring(g, colouring_from_json(artifact)));
        } else if (a.kind == "subdivision") {
            violations_out = violations_json(verify_subdivision(g, embedding_from_json(artifact)));
        } else {
            throw UsageError("--kind must be model, colouring or subdivision");
        }
    } catch (const GraphError& e) {
        throw UsageError(std::string("artifact does not match --kind ") + a.kind + ": " + e.what());
    }
    const bool good = violations_out.empty();
    out << Json{{"kind", a.kind}, {"ok", good}, {"violations", violations_out}}.dump() << '\n';
    return good ? ok : violations;
}

struct ChromaticArgs {
    int workers = 1;
    bool stable = false;
};

int cmd_chromatic(const ChromaticArgs& a, std::istream& in, std::ostream& out) {
    const auto lines = read_lines(in);
    std::atomic<bool> any_error{false};
    ordered_map(
        lines.size(), a.workers,
        [&](std::size_t i) {
            const auto start = Clock::now();
            Json rec{{"index", i}, {"graph", lines[i]}};
            try {
                rec["chromatic"] = chromatic_number(parse_graph6(lines[i]));
            } catch (const std::exception& e) {
                rec["error"] = e.what();
                any_error = true;
            }
            if (!a.stable) rec["perf"] = {{"ms", millis_since(start)}};
            return rec.dump();
        },
        [&](std::size_t, const std::string& line) { out << line << '\n'; });
    return any_error ? violations : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dominating K_t-models: search, verification and the 5-colouring sweep", "domk"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Emit a named graph");
    gen_cmd->add_option("name", gen_args.name, "Generator name")->required();
    gen_cmd->add_option("params", gen_args.params, "Integer parameters");
    gen_cmd->add_flag("--enumerate", gen_args.enumerate, "split-k5: all splits up to isomorphism");
    gen_cmd->add_option("--of", gen_args.of, "one-subdivision, join: operand (e.g. k5, petersen, cycle:5)");
    gen_cmd->add_option("--with", gen_args.with, "join: second operand");
    gen_cmd->add_option("--format", gen_args.format, "Output format")->check(CLI::IsMember({"graph6", "json"}));

    const int workers = default_workers();

    FindArgs find_args;
    find_args.workers = workers;
    auto* find_cmd = app.add_subcommand("find-model", "Search each graph6 line on stdin for a model");
    find_cmd->add_option("--t", find_args.t, "Model size")->required();
    auto* dom_flag = find_cmd->add_flag("--dominating", "Dominating model (default)");
    find_cmd->add_flag("--standard", find_args.standard, "Standard model (K_t-minor)")->excludes(dom_flag);
    find_cmd->add_option("--mode", find_args.mode, "general or singleton");
    find_cmd->add_option("--clique", find_args.clique, "Ordered clique v1[,v2]");
    find_cmd->add_option("--workers", find_args.workers, "Worker threads")->check(CLI::PositiveNumber);
    find_cmd->add_flag("--stable", find_args.stable, "Omit timing fields");

    TheoremArgs thm_args;
    thm_args.workers = workers;
    auto* thm_cmd = app.add_subcommand("check-theorem", "Check that every 5-chromatic graph has a dominating K5-model");
    thm_cmd->add_option("--max-n", thm_args.max_n, "Enumerate all graphs up to this order (<= 7)")
        ->check(CLI::Range(1, 7));
    thm_cmd->add_flag("--extract", thm_args.extract, "Extract and verify a K5 or K5-hat subdivision");
    thm_cmd->add_option("--workers", thm_args.workers, "Worker threads")->check(CLI::PositiveNumber);
    thm_cmd->add_flag("--stable", thm_args.stable, "Omit timing fields");
    thm_cmd->add_option("--report", thm_args.report, "Write the summary and failures to this file");

    VerifyArgs ver_args;
    auto* ver_cmd = app.add_subcommand("verify", "Check an artifact against a graph");
    ver_cmd->add_option("--kind", ver_args.kind, "model, colouring or subdivision")
        ->required()
        ->check(CLI::IsMember({"model", "colouring", "subdivision"}));
    ver_cmd->add_option("--graph", ver_args.graph, "graph6 string (default: first stdin line)");
    ver_cmd->add_option("--artifact", ver_args.artifact, "JSON file (default: rest of stdin)");
    ver_cmd->add_flag("--standard", ver_args.standard, "Check a model as a standard model");

    ChromaticArgs chr_args;
    chr_args.workers = workers;
    auto* chr_cmd = app.add_subcommand("chromatic", "Chromatic number of each graph6 line on stdin");
    chr_cmd->add_option("--workers", chr_args.workers, "Worker threads")->check(CLI::PositiveNumber);
    chr_cmd->add_flag("--stable", chr_args.stable, "Omit timing fields");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "domk: " << e.what() << '\n';
        return usage;
    }

    int code = usage;
    try {
        if (gen_cmd->parsed()) code = cmd_gen(gen_args, out);
        else if (find_cmd->parsed()) code = cmd_find_model(find_args, in, out);
        else if (thm_cmd->parsed()) code = cmd_check_theorem(thm_args, in, out);
        else if (ver_cmd->parsed()) code = cmd_verify(ver_args, in, out);
        else if (chr_cmd->parsed()) code = cmd_chromatic(chr_args, in, out);
    } catch (const UsageError& e) {
        err << "domk: " << e.what() << '\n';
        return usage;
    } catch (const IoError& e) {
        err << "domk: " << e.what() << '\n';
        return io_failure;
    } catch (const GraphError& e) {
        err << "domk: " << e.what() << '\n';
        return usage;
    } catch (const ModelError& e) {
        err << "domk: " << e.what() << '\n';
        return usage;
    }
    out.flush();
    if (!out) return io_failure;
    return code;
}

}  // namespace domk::cli
