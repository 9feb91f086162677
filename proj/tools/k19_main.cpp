// k19: build and verify the 1280-word distance-5 code of length 19 and the
// kissing configuration it spans, emitting machine-checkable certificates.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k19/claims.hpp"
#include "k19/pipeline.hpp"

namespace {

using k19::Certificate;
using k19::Json;
using k19::PipelineOptions;
using k19::PipelineResult;
using k19::Stage;

struct GlobalOpts {
    std::string json_dir;
    int threads = 1;
};

void write_cert_files(const std::string& dir, const std::vector<Certificate>& certs) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    for (const Certificate& c : certs) {
        const std::filesystem::path path = std::filesystem::path(dir) / (c.claim + ".json");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << c.to_json().dump(2) << '\n';
    }
}

int report(const GlobalOpts& g, const std::vector<Certificate>& certs,
           std::ostream& os = std::cout) {
    std::size_t width = 0;
    for (const Certificate& c : certs) width = std::max(width, c.claim.size());
    std::size_t passed = 0;
    for (const Certificate& c : certs) {
        os << c.claim << std::string(width - c.claim.size() + 2, ' ')
           << (c.pass ? "pass" : "FAIL") << '\n';
        if (c.pass)
            ++passed;
        else
            os << "  witness: " << c.witness.dump() << '\n';
    }
    os << passed << "/" << certs.size() << " claims passed\n";
    write_cert_files(g.json_dir, certs);
    return passed == certs.size() ? 0 : 1;
}

std::vector<Certificate> owned_certs(const PipelineResult& res, Stage st) {
    std::vector<Certificate> out;
    for (const std::string& claim : k19::stage_claims(st))
        if (const Certificate* c = res.find(claim)) out.push_back(*c);
    return out;
}

PipelineResult run_until(Stage st, const GlobalOpts& g,
                         const std::optional<std::string>& base = {}) {
    PipelineOptions opts;
    opts.threads = g.threads;
    opts.base_points_file = base;
    return k19::run_pipeline_until(st, k19::GeneratorSet::golden(), opts);
}

int cmd_stage(Stage st, const GlobalOpts& g) {
    PipelineResult res = run_until(st, g);
    return report(g, owned_certs(res, st));
}

int cmd_table1(const GlobalOpts& g) {
    PipelineResult res = run_until(Stage::table1, g);
    if (res.artifacts.table) {
        const char* labels[] = {"s1+M", "s2+M", "s3+M", "s4+M", "s5+M"};
        int i = 0;
        for (const k19::CosetCell& cell : res.artifacts.table->cells) {
            std::cout << labels[std::min(i++, 4)] << ":";
            for (const k19::Word& w : cell.words) std::cout << ' ' << w.render();
            std::cout << '\n';
        }
    }
    return report(g, owned_certs(res, Stage::table1));
}

int cmd_clebsch(const GlobalOpts& g) {
    PipelineResult res = run_until(Stage::clebsch, g);
    if (res.artifacts.clebsch) {
        for (int u = 0; u < 16; ++u) {
            std::string row(16, '0');
            for (int v = 0; v < 16; ++v)
                if (u != v && res.artifacts.clebsch->adjacent(u, v)) row[v] = '1';
            std::cout << row << '\n';
        }
    }
    return report(g, owned_certs(res, Stage::clebsch));
}

Json coclique_json(const k19::CocliqueResult& r, const std::vector<std::string>& labels) {
    Json j;
    j["size"] = r.size;
    Json members = Json::array();
    for (int v : r.members)
        if (labels.empty())
            members.push_back(v);
        else
            members.push_back(labels[v]);
    j["members"] = members;
    j["optimality"] = r.optimality == k19::Optimality::proven ? "proven" : "heuristic";
    j["node_count"] = r.node_count;
    return j;
}

int cmd_cocliques(const GlobalOpts& g, const std::string& graph, bool exact, bool cold,
                  std::uint64_t seed, std::uint64_t budget) {
    if (graph == "clebsch") {
        PipelineResult res = run_until(Stage::cocliques, g);
        if (res.artifacts.clebsch_max)
            std::cout << coclique_json(*res.artifacts.clebsch_max, {}).dump(2) << '\n';
        return report(g, owned_certs(res, Stage::cocliques));
    }
    if (graph != "gamma-d") {
        std::cerr << "unknown graph '" << graph << "' (expected clebsch or gamma-d)\n";
        return 2;
    }
    if (exact) {
        std::cerr << "--exact is only available for the 16-vertex clebsch graph\n";
        return 2;
    }
    // Exploratory heuristic on the 4096-vertex difference graph.
    PipelineResult res = run_until(Stage::build_code, g);
    if (!res.all_pass()) {
        report(g, res.certificates, std::cerr);
        return 1;
    }
    const k19::LinearCode& D = res.artifacts.D;
    k19::BinaryGraph gamma = k19::build_difference_graph(D, res.artifacts.S);
    std::vector<k19::Word> words = k19::enumerate_span(D);
    std::vector<std::string> labels;
    labels.reserve(words.size());
    for (const k19::Word& w : words) labels.push_back(w.render());

    std::vector<int> warm;
    if (!cold) {
        // Seed the search from the structured code: its words are pairwise
        // non-adjacent, so the heuristic can only match or beat 1280.
        std::set<std::uint32_t> in_a;
        for (const k19::Word& w : res.artifacts.A->words) in_a.insert(w.bits());
        for (std::size_t i = 0; i < words.size(); ++i)
            if (in_a.count(words[i].bits())) warm.push_back(static_cast<int>(i));
    }
    k19::CocliqueResult r = k19::heuristic_coclique(gamma, seed, budget, warm);
    std::cout << coclique_json(r, labels).dump(2) << '\n';
    return 0;
}

int cmd_build_code(const GlobalOpts& g, const std::string& out_path) {
    PipelineResult res = run_until(Stage::check_distance, g);
    if (res.artifacts.A) {
        std::ostringstream buf;
        k19::write_code_file(buf, *res.artifacts.A, res.artifacts.dist);
        if (out_path.empty()) {
            std::cout << buf.str();
            return report(g, owned_certs(res, Stage::build_code), std::cerr);
        }
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << '\n';
            return 2;
        }
        out << buf.str();
    }
    return report(g, owned_certs(res, Stage::build_code));
}

int cmd_check_distance(const GlobalOpts& g, const std::string& input, int min_distance,
                       int length_hint) {
    if (input.empty()) {
        PipelineResult res = run_until(Stage::check_distance, g);
        return report(g, owned_certs(res, Stage::check_distance));
    }
    std::ifstream in(input);
    if (!in) {
        std::cerr << "error: cannot open " << input << '\n';
        return 2;
    }
    std::optional<int> hint;
    if (length_hint > 0) hint = length_hint;
    k19::NonlinearCode code = k19::read_code_file(in, hint);
    k19::DistanceResult dist = k19::min_distance(code, g.threads);
    Certificate c;
    c.claim = "external.min_distance";
    c.pass = dist.distance >= min_distance;
    c.metrics["words"] = code.words.size();
    c.metrics["length"] = code.length;
    c.metrics["min_distance"] = dist.distance;
    c.metrics["required"] = min_distance;
    c.metrics["minimal_pair"] = Json::array({dist.a.render(), dist.b.render()});
    c.metrics["digest"] = code.digest();
    if (!c.pass)
        c.witness = Json{{"min_distance", dist.distance},
                         {"minimal_pair", Json::array({dist.a.render(), dist.b.render()})}};
    return report(g, {c});
}

int cmd_emit_vectors(const GlobalOpts& g, const std::string& code_path,
                     const std::string& out_path) {
    std::string text;
    std::vector<Certificate> certs;
    if (code_path.empty()) {
        PipelineResult res = run_until(Stage::emit_vectors, g);
        text = res.artifacts.emitted_vectors;
        certs = owned_certs(res, Stage::emit_vectors);
    } else {
        std::ifstream in(code_path);
        if (!in) {
            std::cerr << "error: cannot open " << code_path << '\n';
            return 2;
        }
        k19::NonlinearCode code = k19::read_code_file(in);
        std::ostringstream buf;
        k19::emit_vectors(buf, code);
        text = buf.str();
    }
    if (out_path.empty()) {
        std::cout << text;
        return certs.empty() ? 0 : report(g, certs, std::cerr);
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << '\n';
        return 2;
    }
    out << text;
    return certs.empty() ? 0 : report(g, certs);
}

int cmd_verify_config(const GlobalOpts& g, const std::string& points_path,
                      const std::string& base_path) {
    std::optional<std::string> base;
    if (!base_path.empty()) base = base_path;
    if (points_path.empty()) {
        PipelineResult res = run_until(Stage::verify_config, g, base);
        return report(g, owned_certs(res, Stage::verify_config));
    }
    std::vector<k19::RationalPoint> points = k19::ingest_points_file(points_path);
    std::size_t own = points.size();
    if (base) {
        std::vector<k19::RationalPoint> all = k19::ingest_points_file(*base);
        all.insert(all.end(), points.begin(), points.end());
        points = std::move(all);
    }
    Certificate c = k19::verify_configuration(points, g.threads);
    c.claim = "external.configuration";
    c.metrics["supplied_points"] = own;
    return report(g, {c});
}

int cmd_run_all(const GlobalOpts& g, const std::string& base_path) {
    std::optional<std::string> base;
    if (!base_path.empty()) base = base_path;
    PipelineResult res = run_until(Stage::verify_config, g, base);
    return report(g, res.certificates);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "build and verify a 1280-word minimum-distance-5 binary code of length 19\n"
        "inside a 5-punctured extended Golay code, plus the kissing vectors it spans"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--json", g.json_dir, "write one JSON certificate file per claim into DIR")
        ->option_text("DIR");
    app.add_option("--threads", g.threads, "worker threads for pairwise scans")
        ->check(CLI::Range(1, 256))
        ->option_text("N");

    app.add_subcommand("verify-golay",
                       "check the extended generator matrix: rank, self-duality, weight "
                       "spectrum, puncturing");
    app.add_subcommand("table1", "classify the 21 low-weight words by coset");
    app.add_subcommand("clebsch", "verify the quotient graph is the Clebsch graph");

    auto* cocliques = app.add_subcommand("cocliques", "independent-set search");
    std::string graph = "clebsch";
    bool exact = false, cold = false;
    std::uint64_t seed = 1, budget = 50000;
    cocliques->add_option("--graph", graph, "clebsch (default) or gamma-d")
        ->check(CLI::IsMember({"clebsch", "gamma-d"}));
    cocliques->add_flag("--exact", exact, "exact branch-and-bound (clebsch only)");
    cocliques->add_flag("--cold", cold, "start gamma-d search from scratch instead of the code");
    cocliques->add_option("--seed", seed, "heuristic RNG seed")->option_text("N");
    cocliques->add_option("--budget", budget, "heuristic move budget")->option_text("N");

    auto* build_code = app.add_subcommand("build-code", "construct the 1280-word code");
    std::string code_out;
    build_code->add_option("--out", code_out, "write the code file here instead of stdout")
        ->option_text("FILE");

    auto* check_distance =
        app.add_subcommand("check-distance", "exact minimum distance of a code");
    std::string dist_input;
    int min_required = 5, length_hint = 0;
    check_distance->add_option("--input", dist_input, "code file to check (default: built-in)")
        ->option_text("FILE");
    check_distance->add_option("--min", min_required, "required minimum distance (default 5)")
        ->option_text("D");
    check_distance->add_option("--length", length_hint, "word length for bare support sets")
        ->option_text("N");

    auto* emit = app.add_subcommand("emit-vectors", "write the kissing vectors as a point file");
    std::string emit_code, emit_out;
    emit->add_option("--code", emit_code, "code file to emit (default: built-in)")
        ->option_text("FILE");
    emit->add_option("--out", emit_out, "write the point file here instead of stdout")
        ->option_text("FILE");

    auto* verify_config = app.add_subcommand("verify-config", "verify a kissing configuration");
    std::string points_path, base_path;
    verify_config->add_option("--points", points_path, "point file (default: built-in vectors)")
        ->option_text("FILE");
    verify_config->add_option("--base", base_path, "pre-verified base configuration to merge")
        ->option_text("FILE");

    auto* run = app.add_subcommand("run", "run the whole pipeline");
    bool all = false;
    run->add_flag("--all", all, "verify every claim")->required();
    std::string run_base;
    run->add_option("--base", run_base, "base configuration for the final count")
        ->option_text("FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("verify-golay")) return cmd_stage(Stage::verify_golay, g);
        if (app.got_subcommand("table1")) return cmd_table1(g);
        if (app.got_subcommand("clebsch")) return cmd_clebsch(g);
        if (app.got_subcommand("cocliques"))
            return cmd_cocliques(g, graph, exact, cold, seed, budget);
        if (app.got_subcommand("build-code")) return cmd_build_code(g, code_out);
        if (app.got_subcommand("check-distance"))
            return cmd_check_distance(g, dist_input, min_required, length_hint);
        if (app.got_subcommand("emit-vectors")) return cmd_emit_vectors(g, emit_code, emit_out);
        if (app.got_subcommand("verify-config"))
            return cmd_verify_config(g, points_path, base_path);
        if (app.got_subcommand("run")) return cmd_run_all(g, run_base);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
