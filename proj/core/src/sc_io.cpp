#include "sr/sc_io.hpp"

#include "sr/error.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace sr {

namespace {

using Json = nlohmann::json; // std::map-backed: keys serialize sorted

[[noreturn]] void parse_fail(const std::string& source, int line, int col,
                             const std::string& message) {
    fail(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + message);
}

struct Token {
    std::string text;
    int col = 0; // 1-based column of the first character
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break; // comment until end of line
        std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start),
                       static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_number(const Token& tok, const std::string& source, int line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok.text, &used);
    } catch (const std::exception&) {
        parse_fail(source, line, tok.col, "expected an integer, got '" + tok.text + "'");
    }
    if (used != tok.text.size())
        parse_fail(source, line, tok.col, "expected an integer, got '" + tok.text + "'");
    return value;
}

Json complex_to_json(const SimplicialComplex& dl) {
    Json j;
    j["n"] = dl.vertex_count();
    Json facets = Json::array();
    for (VSet fc : dl.facets()) facets.push_back(vs::vertices(fc));
    j["facets"] = facets;
    return j;
}

Json betti_to_json_obj(const BettiTable& table) {
    Json j;
    j["schema_version"] = 1;
    j["field"] = table.field.str();
    j["n"] = table.n;
    Json entries = Json::array();
    for (const auto& [ij, v] : table.entries) {
        Json e;
        e["i"] = ij.first;
        e["j"] = ij.second;
        e["value"] = v;
        entries.push_back(e);
    }
    j["entries"] = entries;
    j["pdim"] = table.projective_dimension();
    j["regularity"] = regularity(table);
    return j;
}

std::string dump(const Json& j) { return j.dump(2); }

} // namespace

SimplicialComplex parse_sc(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool header_seen = false;
    long long n = 0;
    std::vector<std::vector<int>> facets;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::vector<Token> toks = tokenize(raw);
        if (toks.empty()) continue;
        if (!header_seen) {
            if (toks[0].text != "vertices")
                parse_fail(source_name, line_no, toks[0].col,
                           "expected 'vertices <n>' as the first declaration");
            if (toks.size() != 2)
                parse_fail(source_name, line_no, toks[0].col,
                           "'vertices' takes exactly one number");
            n = parse_number(toks[1], source_name, line_no);
            if (n < 0 || n > 64)
                parse_fail(source_name, line_no, toks[1].col,
                           "vertex count must be between 0 and 64");
            header_seen = true;
            continue;
        }
        std::vector<int> facet;
        for (const Token& tok : toks) {
            long long v = parse_number(tok, source_name, line_no);
            if (v < 0 || v >= n)
                parse_fail(source_name, line_no, tok.col,
                           "vertex index " + tok.text + " out of range [0, " +
                               std::to_string(n) + ")");
            facet.push_back(static_cast<int>(v));
        }
        facets.push_back(facet);
    }
    if (!header_seen)
        parse_fail(source_name, line_no == 0 ? 1 : line_no, 1,
                   "missing 'vertices <n>' declaration");
    return SimplicialComplex::from_vertex_lists(static_cast<int>(n), facets);
}

SimplicialComplex load_sc(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::ParseError, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sc(buf.str(), path);
}

std::string to_sc(const SimplicialComplex& dl) {
    std::ostringstream out;
    out << "vertices " << dl.vertex_count() << "\n";
    for (VSet fc : dl.facets()) {
        bool first = true;
        for (int v : vs::vertices(fc)) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

void save_sc(const SimplicialComplex& dl, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        fail(ErrorCode::ParseError, path + ": cannot open file for writing");
    out << to_sc(dl);
    if (!out)
        fail(ErrorCode::ParseError, path + ": write failed");
}

std::string rat_to_string(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

std::string report_to_json(const PropertyReport& report) {
    Json j;
    j["schema_version"] = 1;
    j["field"] = report.field.str();
    j["n"] = report.n;
    j["d"] = report.d;
    j["c"] = report.c;
    if (report.q.has_value())
        j["q"] = *report.q;
    else
        j["q"] = nullptr;
    j["pure"] = report.pure;
    j["fVector"] = report.fvec.counts;
    j["hVector"] = report.hvec.coeffs;
    j["e"] = report.e;
    j["depth"] = report.depth_;
    j["cohenMacaulay"] = report.cm;
    j["buchsbaum"] = report.buchsbaum;
    j["dFull"] = report.d_full;
    j["qLinear"] = report.q_linear;
    j["h"] = report.h;
    if (report.i_inv.has_value())
        j["iInvariant"] = *report.i_inv;
    else
        j["iInvariant"] = nullptr;
    j["aInvariant"] = report.a_inv;
    if (report.h_bound_.has_value())
        j["hBound"] = rat_to_string(*report.h_bound_);
    else
        j["hBound"] = nullptr;
    j["minMultTypeQ"] = report.min_mult_type_q;
    j["maxHomology"] = report.max_homology;
    j["betti"] = betti_to_json_obj(report.betti);
    return dump(j);
}

std::string betti_to_json(const BettiTable& table) {
    return dump(betti_to_json_obj(table));
}

std::string homology_to_json(const HomologyProfile& profile) {
    Json j;
    j["schema_version"] = 1;
    j["field"] = profile.field.str();
    j["dim"] = profile.dim;
    Json dims = Json::array();
    for (int p = -1; p <= profile.dim; ++p) {
        Json e;
        e["p"] = p;
        e["value"] = profile.at(p);
        dims.push_back(e);
    }
    j["dims"] = dims;
    return dump(j);
}

std::string graded_dims_to_json(const GradedDims& dims) {
    Json j;
    j["schema_version"] = 1;
    j["field"] = dims.field.str();
    j["index"] = dims.index;
    j["lo"] = dims.lo;
    Json degrees = Json::array();
    for (int deg = dims.lo; deg <= 0; ++deg) {
        Json e;
        e["degree"] = deg;
        e["value"] = dims.at(deg);
        degrees.push_back(e);
    }
    j["degrees"] = degrees;
    return dump(j);
}

std::string cover_to_json(const CoverResult& result) {
    Json j;
    j["schema_version"] = 1;
    j["attempts"] = result.attempts;
    j["seed"] = result.seed;
    Json added = Json::array();
    for (VSet fc : result.added_facets) added.push_back(vs::vertices(fc));
    j["addedFacets"] = added;
    j["cover"] = complex_to_json(result.cover);
    return dump(j);
}

std::string outcome_to_json(const RealizationOutcome& outcome) {
    Json j;
    j["schema_version"] = 1;
    j["c"] = outcome.c;
    j["d"] = outcome.d;
    j["q"] = outcome.q;
    j["h"] = outcome.h;
    j["status"] = realization_status_name(outcome.status);
    j["method"] = realization_method_name(outcome.method);
    j["note"] = outcome.note;
    if (outcome.witness.has_value())
        j["witness"] = complex_to_json(*outcome.witness);
    else
        j["witness"] = nullptr;
    return dump(j);
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vec_str(const std::vector<long long>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i];
    }
    out << ")";
    return out.str();
}

} // namespace

std::string report_to_text(const PropertyReport& report) {
    std::ostringstream out;
    out << "field: " << report.field.str() << "\n";
    out << "n: " << report.n << "  d: " << report.d << "  c: " << report.c
        << "  indeg: ";
    if (report.q.has_value())
        out << *report.q;
    else
        out << "infinity";
    out << "\n";
    out << "f-vector: " << vec_str(report.fvec.counts) << "\n";
    out << "h-vector: " << vec_str(report.hvec.coeffs) << "\n";
    out << "multiplicity: " << report.e << "  depth: " << report.depth_
        << "  a-invariant: " << report.a_inv << "\n";
    out << "pure: " << yes_no(report.pure)
        << "  Cohen-Macaulay: " << yes_no(report.cm)
        << "  Buchsbaum: " << yes_no(report.buchsbaum)
        << "  d-full: " << yes_no(report.d_full) << "\n";
    out << "q-linear resolution: " << yes_no(report.q_linear)
        << "  h: " << report.h;
    if (report.h_bound_.has_value())
        out << "  h-bound: " << rat_to_string(*report.h_bound_);
    out << "\n";
    if (report.i_inv.has_value())
        out << "I-invariant: " << *report.i_inv << "\n";
    out << "minimal multiplicity: " << yes_no(report.min_mult_type_q)
        << "  maximal homology: " << yes_no(report.max_homology) << "\n";
    out << "projective dimension: " << report.betti.projective_dimension()
        << "  regularity: " << regularity(report.betti) << "\n";
    for (const auto& [ij, v] : report.betti.entries)
        out << "  beta(" << ij.first << ", " << ij.second << ") = " << v << "\n";
    return out.str();
}

} // namespace sr
