#include "polysieve/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysieve/dimmatch.hpp"
#include "polysieve/edgecolor.hpp"
#include "polysieve/gf.hpp"
#include "polysieve/io.hpp"
#include "polysieve/kpath.hpp"
#include "polysieve/oracle.hpp"
#include "polysieve/selftest.hpp"
#include "polysieve/setpack.hpp"

namespace polysieve {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonFlags {
    std::string input;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> reps;
    std::optional<int> field_bits;
    bool time = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_input = true) {
    if (needs_input)
        cmd->add_option("--input", flags.input, "input file")->required();
    cmd->add_option("--seed", flags.seed, "random seed (default 0)");
    cmd->add_option("--reps", flags.reps, "override the repetition count");
    cmd->add_option("--field-bits", flags.field_bits,
                    "override the field degree (supported: 1,2,3,4,8,16,24,32,48,64)");
    cmd->add_flag("--time", flags.time, "include elapsed_ms in the report (non-reproducible)");
}

DetectOptions detect_options(const CommonFlags& flags) {
    DetectOptions options;
    options.repetitions = flags.reps;
    if (flags.field_bits) {
        make_field(*flags.field_bits);  // validate now for a clean diagnostic
        options.field_bits = flags.field_bits;
    }
    return options;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Report key order is fixed: problem, decision, parameters, repetitions,
// field_bits, seed, label_subsets, then elapsed_ms only under --time.
void emit(std::ostream& out, const std::string& problem, bool decision, ordered_json parameters,
          std::uint64_t repetitions, int field_bits, const CommonFlags& flags,
          std::uint64_t label_subsets, const Timer& timer) {
    ordered_json report;
    report["problem"] = problem;
    report["decision"] = decision ? "yes" : "no";
    report["parameters"] = std::move(parameters);
    report["repetitions"] = repetitions;
    report["field_bits"] = field_bits;
    report["seed"] = flags.seed;
    report["label_subsets"] = label_subsets;
    if (flags.time) report["elapsed_ms"] = timer.elapsed_ms();
    out << report.dump(2) << "\n";
}

SetFamily load_plain_family(const std::string& path) {
    auto parsed = parse_family(read_file(path));
    if (!std::holds_alternative<SetFamily>(parsed))
        throw ParseError("expected a plain family ('n q' header), got a partite one");
    return std::get<SetFamily>(parsed);
}

PartiteFamily load_partite_family(const std::string& path) {
    auto parsed = parse_family(read_file(path));
    if (!std::holds_alternative<PartiteFamily>(parsed))
        throw ParseError("expected a partite family ('q r partite' header)");
    return std::get<PartiteFamily>(parsed);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"randomized algebraic sieves for path, packing, matching and "
                 "edge-coloring detection"};
    app.require_subcommand(1);

    CommonFlags kpath_flags;
    int kpath_k = 0;
    auto* kpath_cmd = app.add_subcommand("kpath", "detect a simple path on k vertices");
    add_common(kpath_cmd, kpath_flags);
    kpath_cmd->add_option("--k", kpath_k, "path length in vertices")->required();

    CommonFlags setpack_flags;
    int setpack_p = 0;
    auto* setpack_cmd =
        app.add_subcommand("setpack", "detect p pairwise disjoint members of a set family");
    add_common(setpack_cmd, setpack_flags);
    setpack_cmd->add_option("--p", setpack_p, "packing size")->required();

    CommonFlags qdmatch_flags;
    int qdmatch_p = 0;
    auto* qdmatch_cmd =
        app.add_subcommand("qdmatch", "detect a p-matching in a q-partite family");
    add_common(qdmatch_cmd, qdmatch_flags);
    qdmatch_cmd->add_option("--p", qdmatch_p, "matching size")->required();

    CommonFlags edgecolor_flags;
    bool edgecolor_general = false;
    auto* edgecolor_cmd =
        app.add_subcommand("edgecolor", "decide max-degree edge-colorability");
    add_common(edgecolor_cmd, edgecolor_flags);
    edgecolor_cmd->add_flag("--general", edgecolor_general,
                            "non-regular variant (matchings instead of perfect matchings)");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference deciders and encoders");
    oracle_cmd->require_subcommand(1);
    CommonFlags oracle_kpath_flags;
    int oracle_kpath_k = 0;
    auto* oracle_kpath = oracle_cmd->add_subcommand("kpath", "exhaustive k-path search");
    oracle_kpath->add_option("--input", oracle_kpath_flags.input, "graph file")->required();
    oracle_kpath->add_option("--k", oracle_kpath_k, "path length")->required();
    CommonFlags oracle_setpack_flags;
    int oracle_setpack_p = 0;
    auto* oracle_setpack = oracle_cmd->add_subcommand("setpack", "exhaustive packing search");
    oracle_setpack->add_option("--input", oracle_setpack_flags.input, "family file")->required();
    oracle_setpack->add_option("--p", oracle_setpack_p, "packing size")->required();
    CommonFlags oracle_qdmatch_flags;
    int oracle_qdmatch_p = 0;
    auto* oracle_qdmatch = oracle_cmd->add_subcommand("qdmatch", "exhaustive matching search");
    oracle_qdmatch->add_option("--input", oracle_qdmatch_flags.input, "family file")->required();
    oracle_qdmatch->add_option("--p", oracle_qdmatch_p, "matching size")->required();
    CommonFlags oracle_edgecolor_flags;
    auto* oracle_edgecolor =
        oracle_cmd->add_subcommand("edgecolor", "backtracking chromatic index");
    oracle_edgecolor->add_option("--input", oracle_edgecolor_flags.input, "graph file")
        ->required();
    CommonFlags encode_flags;
    std::string encode_mode;
    auto* oracle_encode =
        oracle_cmd->add_subcommand("encode", "emit a packing family derived from a graph");
    oracle_encode->add_option("--input", encode_flags.input, "graph file")->required();
    oracle_encode
        ->add_option("--mode", encode_mode,
                     "vertex-triangle | edge-triangle | vertex-p3")
        ->required();

    CommonFlags selftest_flags;
    auto* selftest_cmd =
        app.add_subcommand("selftest", "oracle-equivalence sweep over every module");
    selftest_cmd->add_option("--seed", selftest_flags.seed, "random seed (default 0)");

    std::vector<std::string> argv_storage;
    argv_storage.push_back("polysieve");
    for (const auto& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*kpath_cmd) {
            Timer timer;
            Graph g = parse_graph(read_file(kpath_flags.input));
            if (kpath_k < 1) throw ParseError("--k must be positive");
            KPathResult r = detect_k_path(g, kpath_k, kpath_flags.seed,
                                          detect_options(kpath_flags));
            emit(out, "kpath", r.found,
                 ordered_json{{"k", kpath_k}, {"k1", r.k1}, {"l2", r.l2}},
                 r.repetitions_executed, r.field_bits, kpath_flags, r.label_subsets, timer);
        } else if (*setpack_cmd) {
            Timer timer;
            SetFamily family = load_plain_family(setpack_flags.input);
            if (setpack_p < 1) throw ParseError("--p must be positive");
            SetPackResult r = detect_set_packing(family, setpack_p, setpack_flags.seed,
                                                 detect_options(setpack_flags));
            emit(out, "setpack", r.found,
                 ordered_json{{"p", setpack_p},
                              {"q", family.member_size()},
                              {"n", family.ground_size()},
                              {"p0", r.p0},
                              {"p1", r.p1},
                              {"p2", r.p2},
                              {"n1", r.n1}},
                 r.repetitions_executed, r.field_bits, setpack_flags, r.label_subsets, timer);
        } else if (*qdmatch_cmd) {
            Timer timer;
            PartiteFamily family = load_partite_family(qdmatch_flags.input);
            if (qdmatch_p < 1) throw ParseError("--p must be positive");
            QdimResult r = detect_qdim_packing(family, qdmatch_p, qdmatch_flags.seed,
                                               detect_options(qdmatch_flags));
            emit(out, "qdmatch", r.found,
                 ordered_json{{"p", qdmatch_p},
                              {"q", family.dimensions()},
                              {"r", family.part_size()}},
                 r.repetitions_executed, r.field_bits, qdmatch_flags, r.label_subsets, timer);
        } else if (*edgecolor_cmd) {
            Timer timer;
            Graph g = parse_graph(read_file(edgecolor_flags.input));
            EdgeColorResult r;
            ordered_json params;
            if (edgecolor_general) {
                r = detect_edge_coloring_general(g, edgecolor_flags.seed,
                                                 detect_options(edgecolor_flags));
                params = ordered_json{{"delta", r.colors}, {"n", g.vertex_count()}};
            } else {
                r = detect_edge_coloring(g, edgecolor_flags.seed,
                                         detect_options(edgecolor_flags));
                params = ordered_json{{"d", r.colors}, {"n", g.vertex_count()}};
            }
            emit(out, edgecolor_general ? "edgecolor-general" : "edgecolor", r.found,
                 std::move(params), r.repetitions_executed, r.field_bits, edgecolor_flags,
                 r.label_subsets, timer);
        } else if (*oracle_cmd) {
            ordered_json report;
            if (*oracle_kpath) {
                Graph g = parse_graph(read_file(oracle_kpath_flags.input));
                bool found = oracle::has_k_path_bf(g, oracle_kpath_k);
                report = ordered_json{{"problem", "oracle-kpath"},
                                      {"decision", found ? "yes" : "no"},
                                      {"parameters", ordered_json{{"k", oracle_kpath_k}}}};
            } else if (*oracle_setpack) {
                SetFamily family = load_plain_family(oracle_setpack_flags.input);
                bool found = oracle::has_p_packing_bf(family, oracle_setpack_p);
                report = ordered_json{{"problem", "oracle-setpack"},
                                      {"decision", found ? "yes" : "no"},
                                      {"parameters", ordered_json{{"p", oracle_setpack_p}}}};
            } else if (*oracle_qdmatch) {
                PartiteFamily family = load_partite_family(oracle_qdmatch_flags.input);
                bool found = oracle::has_qdim_packing_bf(family, oracle_qdmatch_p);
                report = ordered_json{{"problem", "oracle-qdmatch"},
                                      {"decision", found ? "yes" : "no"},
                                      {"parameters", ordered_json{{"p", oracle_qdmatch_p}}}};
            } else if (*oracle_edgecolor) {
                Graph g = parse_graph(read_file(oracle_edgecolor_flags.input));
                int chi = oracle::edge_chromatic_bf(g);
                bool class1 = chi == static_cast<int>(g.max_degree());
                report = ordered_json{
                    {"problem", "oracle-edgecolor"},
                    {"decision", class1 ? "yes" : "no"},
                    {"parameters", ordered_json{{"chromatic_index", chi},
                                                {"delta", g.max_degree()}}}};
            } else if (*oracle_encode) {
                Graph g = parse_graph(read_file(encode_flags.input));
                PackingEncoding mode;
                if (encode_mode == "vertex-triangle") {
                    mode = PackingEncoding::vertex_triangle;
                } else if (encode_mode == "edge-triangle") {
                    mode = PackingEncoding::edge_triangle;
                } else if (encode_mode == "vertex-p3") {
                    mode = PackingEncoding::vertex_p3;
                } else {
                    throw ParseError("unknown encode mode '" + encode_mode + "'");
                }
                out << format_family(encode_graph_packing(g, mode));
                return 0;
            }
            out << report.dump(2) << "\n";
        } else if (*selftest_cmd) {
            SelfTestReport r = run_selftest(selftest_flags.seed);
            for (const auto& f : r.failures) err << "selftest failure: " << f << "\n";
            ordered_json report{{"problem", "selftest"},
                                {"decision", r.failed == 0 ? "yes" : "no"},
                                {"passed", r.passed},
                                {"failed", r.failed}};
            out << report.dump(2) << "\n";
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace polysieve
