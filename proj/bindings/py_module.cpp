// Python bindings: the pipeline, the code constructors, and the exact
// verification entry points, with certificates surfaced as plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "k19/claims.hpp"
#include "k19/pipeline.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const k19::Json& j) {
    switch (j.type()) {
        case k19::Json::value_t::null: return py::none();
        case k19::Json::value_t::boolean: return py::bool_(j.get<bool>());
        case k19::Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case k19::Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case k19::Json::value_t::number_float: return py::float_(j.get<double>());
        case k19::Json::value_t::string: return py::str(j.get<std::string>());
        case k19::Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case k19::Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items())
                out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

py::dict cert_to_py(const k19::Certificate& c) {
    return py::dict(json_to_py(c.to_json()));
}

k19::PipelineOptions make_options(int threads, const std::optional<std::string>& base) {
    k19::PipelineOptions opts;
    opts.threads = threads;
    opts.base_points_file = base;
    return opts;
}

py::dict run_pipeline_py(int threads, const std::optional<std::string>& base) {
    k19::PipelineResult res =
        k19::run_pipeline(k19::GeneratorSet::golden(), make_options(threads, base));
    py::list certs;
    for (const k19::Certificate& c : res.certificates) certs.append(cert_to_py(c));
    py::dict out;
    out["certificates"] = certs;
    out["all_pass"] = res.all_pass();
    return out;
}

k19::NonlinearCode code_from_words(const std::vector<std::string>& words, int length) {
    std::vector<k19::Word> ws;
    ws.reserve(words.size());
    for (const std::string& text : words) ws.push_back(k19::Word::parse(text, length));
    return k19::NonlinearCode::from_words(length, std::move(ws));
}

std::vector<std::string> build_code_py() {
    k19::PipelineResult res = k19::run_pipeline_until(
        k19::Stage::build_code, k19::GeneratorSet::golden(), {});
    if (!res.artifacts.A) throw std::runtime_error("code construction failed");
    std::vector<std::string> out;
    out.reserve(res.artifacts.A->words.size());
    for (const k19::Word& w : res.artifacts.A->words) out.push_back(w.render());
    return out;
}

py::dict min_distance_py(const std::vector<std::string>& words, int length, int threads) {
    k19::NonlinearCode code = code_from_words(words, length);
    k19::DistanceResult d = k19::min_distance(code, threads);
    py::dict out;
    out["distance"] = d.distance;
    out["pair"] = py::make_tuple(d.a.render(), d.b.render());
    return out;
}

std::string emit_vectors_py() {
    k19::PipelineResult res = k19::run_pipeline_until(
        k19::Stage::emit_vectors, k19::GeneratorSet::golden(), {});
    if (res.artifacts.emitted_vectors.empty())
        throw std::runtime_error("vector emission failed");
    return res.artifacts.emitted_vectors;
}

py::dict verify_configuration_py(const std::string& point_text, int threads) {
    std::istringstream in(point_text);
    std::vector<k19::RationalPoint> points = k19::ingest_points(in);
    return cert_to_py(k19::verify_configuration(points, threads));
}

py::dict max_coclique_clebsch_py() {
    k19::BinaryGraph g = k19::build_clebsch(k19::claims::sigma());
    k19::CocliqueResult r = k19::max_coclique_exact(g);
    py::dict out;
    out["size"] = r.size;
    out["members"] = r.members;
    out["optimality"] = r.optimality == k19::Optimality::proven ? "proven" : "heuristic";
    out["node_count"] = r.node_count;
    return out;
}

py::dict table1_py() {
    py::dict out;
    for (const k19::claims::Table1Row& row : k19::claims::table1()) {
        py::list words;
        for (const k19::Word& w : row.words) words.append(w.render());
        out[py::str(row.label)] = words;
    }
    return out;
}

py::dict word_info_py(const std::string& text, int length) {
    k19::Word w = k19::Word::parse(text, length);
    py::dict out;
    out["render"] = w.render();
    out["bitstring"] = w.bitstring();
    out["weight"] = w.weight();
    out["support"] = w.support();
    return out;
}

std::string word_add_py(const std::string& a, const std::string& b, int length) {
    return k19::add(k19::Word::parse(a, length), k19::Word::parse(b, length)).render();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "1280-word distance-5 code of length 19 and its kissing vectors";

    m.def("run_pipeline", &run_pipeline_py, py::arg("threads") = 1,
          py::arg("base_points_file") = std::optional<std::string>{},
          "Run every verification stage; returns {'certificates': [...], 'all_pass': bool}");
    m.def("build_code", &build_code_py,
          "Construct the 1280-word code; returns canonical word renders");
    m.def("min_distance", &min_distance_py, py::arg("words"), py::arg("length") = 19,
          py::arg("threads") = 1,
          "Exact minimum Hamming distance of a word list; returns {'distance', 'pair'}");
    m.def("emit_vectors", &emit_vectors_py,
          "Kissing vectors of the built code in point-file text form");
    m.def("verify_configuration", &verify_configuration_py, py::arg("point_text"),
          py::arg("threads") = 1,
          "Exact equal-norm and half-norm-inner-product check of a point file");
    m.def("max_coclique_clebsch", &max_coclique_clebsch_py,
          "Exact maximum independent set of the Clebsch graph");
    m.def("table1", &table1_py, "The five-coset classification of the 21 low-weight words");
    m.def("word_info", &word_info_py, py::arg("text"), py::arg("length") = 19,
          "Parse a word (support set or bitstring) and describe it");
    m.def("word_add", &word_add_py, py::arg("a"), py::arg("b"), py::arg("length") = 19,
          "GF(2) sum of two words in canonical support form");
    m.attr("GOLDEN_CHECKSUM") = k19::kGoldenChecksum;
    m.attr("CODE_SIZE") = k19::claims::kSizeA;
    m.attr("TOTAL_POINTS") = k19::claims::kTotalPoints;
}
