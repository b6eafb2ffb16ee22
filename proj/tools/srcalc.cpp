// srcalc — command-line front end for the Stanley-Reisner invariant library.
//
// Subcommands: props, betti, homology, dual, gen, cover, sandwich, explore,
// verify. Global flags: --field q|gf:<p>, --seed, --max-n, --json|--text.
// Exit codes: 0 success, 1 a verify bundle found a counterexample, 2 usage
// or computation error (stable error code printed on stderr).

#include "sr/complex.hpp"
#include "sr/corpus.hpp"
#include "sr/cover.hpp"
#include "sr/error.hpp"
#include "sr/families.hpp"
#include "sr/field.hpp"
#include "sr/hochster.hpp"
#include "sr/homology.hpp"
#include "sr/ring_props.hpp"
#include "sr/sc_io.hpp"
#include "sr/vset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::json;

struct GlobalConfig {
    std::string field_text = "q";
    std::uint64_t seed = 0;
    int max_n = 16;
    bool text = false;

    sr::FieldSpec field() const { return sr::FieldSpec::parse(field_text); }
};

void emit(const std::string& payload) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
}

sr::SimplicialComplex load_capped(const std::string& path, int max_n) {
    sr::SimplicialComplex dl = sr::load_sc(path);
    if (dl.vertex_count() > max_n)
        sr::fail(sr::ErrorCode::SizeCapExceeded,
                 path + ": " + std::to_string(dl.vertex_count()) +
                     " vertices exceeds --max-n " + std::to_string(max_n));
    return dl;
}

json complex_json(const sr::SimplicialComplex& dl) {
    json facets = json::array();
    for (sr::VSet fct : dl.facets()) {
        json verts = json::array();
        for (int v : sr::vs::vertices(fct)) verts.push_back(v);
        facets.push_back(verts);
    }
    return json{{"schema_version", 1}, {"n", dl.vertex_count()}, {"facets", facets}};
}

// ---------------------------------------------------------------------------
// plain subcommands
// ---------------------------------------------------------------------------

int run_props(const GlobalConfig& cfg, const std::string& file) {
    sr::SimplicialComplex dl = load_capped(file, cfg.max_n);
    sr::PropertyReport rep = sr::make_property_report(dl, cfg.field(), cfg.max_n);
    emit(cfg.text ? sr::report_to_text(rep) : sr::report_to_json(rep));
    return 0;
}

int run_betti(const GlobalConfig& cfg, const std::string& file) {
    sr::SimplicialComplex dl = load_capped(file, cfg.max_n);
    sr::BettiTable table = sr::betti_table(dl, cfg.field(), cfg.max_n);
    if (!cfg.text) {
        emit(sr::betti_to_json(table));
        return 0;
    }
    std::ostringstream out;
    out << "field " << table.field.str() << "\n";
    out << "n " << table.n << "\n";
    out << "pdim " << table.projective_dimension() << "\n";
    out << "regularity " << sr::regularity(table) << "\n";
    for (const auto& [ij, value] : table.entries)
        out << "beta " << ij.first << " " << ij.second << " " << value << "\n";
    emit(out.str());
    return 0;
}

int run_homology(const GlobalConfig& cfg, const std::string& file) {
    sr::SimplicialComplex dl = load_capped(file, cfg.max_n);
    sr::HomologyProfile profile = sr::reduced_homology(dl, cfg.field());
    if (!cfg.text) {
        emit(sr::homology_to_json(profile));
        return 0;
    }
    std::ostringstream out;
    out << "field " << profile.field.str() << "\n";
    out << "dim " << profile.dim << "\n";
    for (int p = -1; p <= profile.dim; ++p)
        out << "H~" << p << " " << profile.at(p) << "\n";
    emit(out.str());
    return 0;
}

int run_dual(const GlobalConfig& cfg, const std::string& file,
             const std::string& out_path) {
    sr::SimplicialComplex dl = load_capped(file, cfg.max_n);
    sr::SimplicialComplex dual = sr::alexander_dual(dl);
    if (!out_path.empty()) sr::save_sc(dual, out_path);
    emit(cfg.text ? sr::to_sc(dual) : complex_json(dual).dump(2));
    return 0;
}

int run_gen(const GlobalConfig& cfg, const std::string& family,
            const std::vector<long long>& params, const std::string& out_path) {
    sr::SimplicialComplex dl = sr::make_family(family, params);
    if (dl.vertex_count() > cfg.max_n)
        sr::fail(sr::ErrorCode::SizeCapExceeded,
                 family + ": " + std::to_string(dl.vertex_count()) +
                     " vertices exceeds --max-n " + std::to_string(cfg.max_n));
    if (!out_path.empty()) sr::save_sc(dl, out_path);
    if (cfg.text) {
        emit(sr::to_sc(dl));
    } else {
        json j = complex_json(dl);
        j["family"] = family;
        j["params"] = params;
        emit(j.dump(2));
    }
    return 0;
}

int run_cover(const GlobalConfig& cfg, const std::string& file,
              const std::string& out_path) {
    sr::SimplicialComplex dl = load_capped(file, cfg.max_n);
    sr::CoverResult result = sr::cm_cover(dl, cfg.field(), cfg.seed);
    if (!out_path.empty()) sr::save_sc(result.cover, out_path);
    if (!cfg.text) {
        emit(sr::cover_to_json(result));
        return 0;
    }
    std::ostringstream out;
    out << "# attempts " << result.attempts << "\n";
    for (sr::VSet fct : result.added_facets) {
        out << "# added";
        for (int v : sr::vs::vertices(fct)) out << " " << v;
        out << "\n";
    }
    out << sr::to_sc(result.cover);
    emit(out.str());
    return 0;
}

int run_sandwich(const GlobalConfig& cfg, const std::string& lower_file,
                 const std::string& upper_file, long long target,
                 const std::string& out_path) {
    sr::SimplicialComplex lower = load_capped(lower_file, cfg.max_n);
    sr::SimplicialComplex upper = load_capped(upper_file, cfg.max_n);
    sr::SimplicialComplex mid =
        sr::sandwich_family(lower, upper, target, cfg.field(), cfg.seed);
    if (!out_path.empty()) sr::save_sc(mid, out_path);
    emit(cfg.text ? sr::to_sc(mid) : complex_json(mid).dump(2));
    return 0;
}

int run_explore(const GlobalConfig& cfg, int c, int d, int q, long long h,
                const std::string& out_path) {
    if (c + d > cfg.max_n)
        sr::fail(sr::ErrorCode::SizeCapExceeded,
                 "c + d = " + std::to_string(c + d) + " exceeds --max-n " +
                     std::to_string(cfg.max_n));
    sr::RealizationOutcome outcome = sr::realize(c, d, q, h, cfg.field(), cfg.seed);
    if (!out_path.empty()) {
        if (outcome.witness)
            sr::save_sc(*outcome.witness, out_path);
        else
            std::cerr << "no witness produced; " << out_path << " not written\n";
    }
    if (!cfg.text) {
        emit(sr::outcome_to_json(outcome));
        return 0;
    }
    std::ostringstream out;
    out << "status " << sr::realization_status_name(outcome.status) << "\n";
    out << "method " << sr::realization_method_name(outcome.method) << "\n";
    out << "c " << outcome.c << " d " << outcome.d << " q " << outcome.q << " h "
        << outcome.h << "\n";
    if (!outcome.note.empty()) out << "note " << outcome.note << "\n";
    if (outcome.witness) out << sr::to_sc(*outcome.witness);
    emit(out.str());
    return 0;
}

// ---------------------------------------------------------------------------
// verify bundles
// ---------------------------------------------------------------------------

struct BundleReport {
    explicit BundleReport(std::string name) : bundle(std::move(name)) {}

    std::string bundle;
    int assertions = 0;
    std::vector<std::string> failures;
    // offending complexes, printed as .sc on failure
    std::vector<std::pair<std::string, std::string>> offenders;

    void expect(bool ok, const std::string& message,
                const sr::SimplicialComplex* offender = nullptr,
                const std::string& name = "") {
        ++assertions;
        if (ok) return;
        failures.push_back(message);
        if (offender) offenders.emplace_back(name, sr::to_sc(*offender));
    }
};

// h-vector of a Buchsbaum q-linear complex matches the closed form, and the
// homology contribution h stays within the rational upper bound.
BundleReport bundle_thm26(const sr::FieldSpec& f) {
    BundleReport br("thm2.6");
    for (const sr::CorpusEntry& entry : sr::standard_corpus()) {
        sr::PropertyReport rep = sr::make_property_report(entry.complex, f);
        if (!(rep.buchsbaum && rep.q_linear && rep.q && rep.h_bound_)) continue;
        sr::HVector predicted =
            sr::predicted_h_vector(rep.c, rep.d, *rep.q, rep.h);
        br.expect(rep.hvec.coeffs == predicted.coeffs,
                  entry.name + ": h-vector differs from the closed form",
                  &entry.complex, entry.name);
        br.expect(rep.h >= 0 && sr::Rat(rep.h) <= *rep.h_bound_,
                  entry.name + ": h outside [0, h_bound]", &entry.complex,
                  entry.name);
    }
    br.expect(br.assertions > 0, "no Buchsbaum q-linear corpus instance found");
    return br;
}

// the seven minimal-multiplicity conditions agree on every eligible instance
BundleReport bundle_thm45(const sr::FieldSpec& f) {
    BundleReport br("thm4.5");
    std::vector<sr::CorpusEntry> corpus = sr::equivalence_corpus(f);
    br.expect(corpus.size() >= 12, "equivalence corpus smaller than 12");
    for (const sr::CorpusEntry& entry : corpus) {
        sr::MinMultEquivalence eq = sr::check_min_mult_equivalence(entry.complex, f);
        br.expect(eq.consistent, entry.name + ": seven-way equivalence split",
                  &entry.complex, entry.name);
    }
    return br;
}

// sandwich construction: Buchsbaum + d-linear is preserved between a complex
// and its Cohen-Macaulay cover, and h drops by one per added facet
BundleReport bundle_thm56(const sr::FieldSpec& f, std::uint64_t seed) {
    BundleReport br("thm5.6");
    const std::pair<const char*, sr::SimplicialComplex> bases[] = {
        {"hibi-cycle-3", sr::hibi_cycle(3)},
        {"hanano-6", sr::hanano(6)},
    };
    for (const auto& [name, base] : bases) {
        sr::PropertyReport rep0 = sr::make_property_report(base, f);
        sr::CoverResult cov = sr::cm_cover(base, f, seed);
        br.expect(static_cast<long long>(cov.added_facets.size()) == rep0.h,
                  std::string(name) + ": cover added-facet count != h",
                  &cov.cover, name);
        br.expect(sr::multiplicity(cov.cover) ==
                      sr::binomial(rep0.n - 1, rep0.d - 1),
                  std::string(name) + ": cover multiplicity != C(n-1, d-1)",
                  &cov.cover, name);
        for (long long j = 0; j <= rep0.h; ++j) {
            sr::SimplicialComplex mid =
                sr::sandwich_family(base, cov.cover, rep0.e + j, f, seed + j);
            sr::PropertyReport rep = sr::make_property_report(mid, f);
            std::string tag = std::string(name) + " + " + std::to_string(j);
            br.expect(rep.buchsbaum && rep.q_linear && rep.q &&
                          *rep.q == rep.d,
                      tag + ": sandwich not Buchsbaum d-linear", &mid, tag);
            br.expect(rep.e == rep0.e + j, tag + ": facet count != target",
                      &mid, tag);
            br.expect(rep.h == rep0.h - j, tag + ": h did not drop by one per facet",
                      &mid, tag);
        }
    }
    return br;
}

// realization sweep: for dim 3 and codim c = 1..4, every h up to the bound is
// realized by a verified witness and the first h beyond it is infeasible
BundleReport bundle_thm58(const sr::FieldSpec& f, std::uint64_t seed) {
    BundleReport br("thm5.8");
    for (int c = 1; c <= 4; ++c) {
        long long cap = sr::rat_floor(sr::h_bound(c, 3, 3));
        for (long long h = 0; h <= cap; ++h) {
            std::string tag = "c=" + std::to_string(c) + " h=" + std::to_string(h);
            sr::RealizationOutcome out = sr::realize(c, 3, 3, h, f, seed);
            br.expect(out.status == sr::RealizationStatus::Realized &&
                          out.witness.has_value(),
                      tag + ": not realized");
            if (!out.witness) continue;
            sr::PropertyReport rep = sr::make_property_report(*out.witness, f);
            br.expect(rep.d == 3 && rep.c == c && rep.buchsbaum && rep.q_linear &&
                          rep.q && *rep.q == 3 && rep.h == h,
                      tag + ": witness fails the property recheck",
                      &*out.witness, tag);
        }
        sr::RealizationOutcome beyond = sr::realize(c, 3, 3, cap + 1, f, seed);
        br.expect(beyond.status == sr::RealizationStatus::InfeasibleByBound,
                  "c=" + std::to_string(c) + " h=" + std::to_string(cap + 1) +
                      ": expected InfeasibleByBound");
    }
    return br;
}

// projective-plane / Moebius-band characteristic split, and the cover
// verifier accepting the plane only away from characteristic 2
BundleReport bundle_ex57(const sr::FieldSpec& f) {
    BundleReport br("ex5.7");
    sr::SimplicialComplex plane = sr::rp2();
    sr::SimplicialComplex band = sr::moebius();
    bool char2 = !f.is_rationals() && f.modulus == 2;

    sr::PropertyReport prep = sr::make_property_report(plane, f);
    if (char2) {
        br.expect(prep.buchsbaum && !prep.cm,
                  "rp2: expected Buchsbaum non-Cohen-Macaulay", &plane, "rp2");
        br.expect(sr::regularity(prep.betti) == 3 && !prep.q_linear,
                  "rp2: expected regularity 3, non-linear", &plane, "rp2");
        br.expect(!sr::hibi_criterion(plane, f),
                  "rp2: sufficient criterion should reject", &plane, "rp2");
    } else {
        br.expect(prep.cm && prep.q_linear && sr::regularity(prep.betti) == 2,
                  "rp2: expected Cohen-Macaulay 3-linear of regularity 2",
                  &plane, "rp2");
    }

    sr::PropertyReport brep = sr::make_property_report(band, f);
    br.expect(brep.buchsbaum && brep.q_linear && brep.q && *brep.q == 3 &&
                  brep.h == 1,
              "moebius: expected Buchsbaum 3-linear with h = 1", &band,
              "moebius");
    br.expect(brep.hvec.coeffs == std::vector<long long>({1, 3, 6, -1}),
              "moebius: h-vector != (1, 3, 6, -1)", &band, "moebius");
    br.expect(sr::is_valid_cm_cover(band, plane, f) == !char2,
              "moebius -> rp2: cover verdict wrong for this characteristic",
              &plane, "rp2");
    return br;
}

// the pinwheel family: quoted h-vectors, and the multiplicity split between
// minimal multiplicity and maximal homology by residue of n mod 3
BundleReport bundle_lemma411(const sr::FieldSpec& f) {
    BundleReport br("lemma4.11");
    for (int n = 5; n <= 9; ++n) {
        sr::SimplicialComplex dl = sr::hanano(n);
        sr::PropertyReport rep = sr::make_property_report(dl, f);
        std::string tag = "hanano(" + std::to_string(n) + ")";
        br.expect(rep.d == 3 && rep.buchsbaum && rep.q_linear && rep.q &&
                      *rep.q == 3,
                  tag + ": expected Buchsbaum 3-linear of dimension 3", &dl, tag);
        sr::HVector predicted = sr::predicted_h_vector(rep.c, 3, 3, rep.h);
        br.expect(rep.hvec.coeffs == predicted.coeffs,
                  tag + ": h-vector differs from the closed form", &dl, tag);
        if (n % 3 == 1) {
            br.expect(rep.e == static_cast<long long>(n - 1) * (n - 1) / 3,
                      tag + ": e != (n-1)^2/3", &dl, tag);
            br.expect(rep.max_homology && !rep.min_mult_type_q,
                      tag + ": expected maximal homology, not minimal multiplicity",
                      &dl, tag);
        } else {
            br.expect(rep.e == static_cast<long long>(n) * (n - 2) / 3,
                      tag + ": e != n(n-2)/3", &dl, tag);
            br.expect(rep.min_mult_type_q,
                      tag + ": expected minimal multiplicity of type 3", &dl, tag);
        }
    }
    return br;
}

// alternating Betti identity: sum_i (-1)^i beta_{i,j} t^j = h(t) (1-t)^c
BundleReport bundle_rmk29(const sr::FieldSpec& f) {
    BundleReport br("rmk2.9");
    for (const sr::CorpusEntry& entry : sr::standard_corpus()) {
        sr::BettiTable table = sr::betti_table(entry.complex, f);
        std::vector<long long> hv = sr::h_vector(entry.complex).coeffs;
        int c = entry.complex.vertex_count() - entry.complex.krull_dim();
        std::size_t width = hv.size() + static_cast<std::size_t>(c) + 2;
        std::vector<long long> lhs(width, 0), rhs(width, 0);
        lhs[0] = 1; // beta_{0,0}
        for (const auto& [ij, value] : table.entries)
            lhs[ij.second] += (ij.first % 2 == 0) ? value : -value;
        for (std::size_t k = 0; k < hv.size(); ++k)
            for (int s = 0; s <= c; ++s)
                rhs[k + s] += hv[k] * ((s % 2 == 0) ? 1 : -1) * sr::binomial(c, s);
        br.expect(lhs == rhs, entry.name + ": alternating Betti identity fails",
                  &entry.complex, entry.name);
    }
    return br;
}

int run_verify(const GlobalConfig& cfg, const std::string& bundle) {
    sr::FieldSpec f = cfg.field();
    std::vector<BundleReport> reports;
    auto want = [&](const char* name) { return bundle == name || bundle == "all"; };
    if (want("thm2.6")) reports.push_back(bundle_thm26(f));
    if (want("thm4.5")) reports.push_back(bundle_thm45(f));
    if (want("thm5.6")) reports.push_back(bundle_thm56(f, cfg.seed));
    if (want("thm5.8")) reports.push_back(bundle_thm58(f, cfg.seed));
    if (want("ex5.7")) reports.push_back(bundle_ex57(f));
    if (want("lemma4.11")) reports.push_back(bundle_lemma411(f));
    if (want("rmk2.9")) reports.push_back(bundle_rmk29(f));

    bool all_passed = true;
    if (!cfg.text) {
        json out = json::array();
        for (const BundleReport& br : reports) {
            json failures = json::array();
            for (const std::string& msg : br.failures) failures.push_back(msg);
            json offenders = json::array();
            for (const auto& [name, sc] : br.offenders)
                offenders.push_back(json{{"name", name}, {"sc", sc}});
            out.push_back(json{{"schema_version", 1},
                               {"bundle", br.bundle},
                               {"field", f.str()},
                               {"assertions", br.assertions},
                               {"passed", br.failures.empty()},
                               {"failures", failures},
                               {"offenders", offenders}});
            all_passed = all_passed && br.failures.empty();
        }
        emit(out.dump(2));
    } else {
        std::ostringstream out;
        for (const BundleReport& br : reports) {
            if (br.failures.empty()) {
                out << br.bundle << ": PASS (" << br.assertions << " assertions, field "
                    << f.str() << ")\n";
                continue;
            }
            all_passed = false;
            out << br.bundle << ": FAIL (" << br.failures.size() << " of "
                << br.assertions << " assertions, field " << f.str() << ")\n";
            for (const std::string& msg : br.failures) out << "  " << msg << "\n";
            for (const auto& [name, sc] : br.offenders)
                out << "# offender " << name << "\n" << sc;
        }
        emit(out.str());
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    GlobalConfig cfg;
    CLI::App app{"Stanley-Reisner ring invariants of simplicial complexes"};
    app.require_subcommand(1);

    app.add_option("--field", cfg.field_text,
                   "coefficient field: q (rationals) or gf:<p> for a prime p")
        ->default_val("q");
    app.add_option("--seed", cfg.seed, "random seed for cover/sandwich/explore")
        ->default_val(0);
    app.add_option("--max-n", cfg.max_n, "largest vertex count accepted")
        ->default_val(16);
    auto* json_flag = app.add_flag("--json", "machine-readable JSON output (default)");
    auto* text_flag = app.add_flag("--text", cfg.text, "human-readable text output");
    text_flag->excludes(json_flag);

    int exit_code = 0;

    std::string props_file;
    auto* props = app.add_subcommand("props", "full property report of a complex");
    props->add_option("file", props_file, ".sc input file")->required();
    props->callback([&] { exit_code = run_props(cfg, props_file); });

    std::string betti_file;
    auto* betti = app.add_subcommand("betti", "graded Betti table");
    betti->add_option("file", betti_file, ".sc input file")->required();
    betti->callback([&] { exit_code = run_betti(cfg, betti_file); });

    std::string hom_file;
    auto* hom = app.add_subcommand("homology", "reduced homology dimensions");
    hom->add_option("file", hom_file, ".sc input file")->required();
    hom->callback([&] { exit_code = run_homology(cfg, hom_file); });

    std::string dual_file, dual_out;
    auto* dual = app.add_subcommand("dual", "Alexander dual complex");
    dual->add_option("file", dual_file, ".sc input file")->required();
    dual->add_option("--out", dual_out, "write the dual as .sc to this path");
    dual->callback([&] { exit_code = run_dual(cfg, dual_file, dual_out); });

    std::string gen_family, gen_out;
    std::vector<long long> gen_params;
    std::string family_doc = "family name:";
    for (const sr::FamilyInfo& info : sr::family_list())
        family_doc += " " + info.name;
    auto* gen = app.add_subcommand("gen", "generate a named example family");
    gen->add_option("family", gen_family, family_doc)->required();
    gen->add_option("params", gen_params, "integer family parameters");
    gen->add_option("--out", gen_out, "write the complex as .sc to this path");
    gen->callback(
        [&] { exit_code = run_gen(cfg, gen_family, gen_params, gen_out); });

    std::string cover_file, cover_out;
    auto* cover = app.add_subcommand("cover", "Cohen-Macaulay cover of a complex");
    cover->add_option("file", cover_file, ".sc input file")->required();
    cover->add_option("--out", cover_out, "write the cover as .sc to this path");
    cover->callback([&] { exit_code = run_cover(cfg, cover_file, cover_out); });

    std::string sw_lower, sw_upper, sw_out;
    long long sw_target = 0;
    auto* sandwich = app.add_subcommand(
        "sandwich", "complex between a lower complex and an upper cover");
    sandwich->add_option("lower", sw_lower, ".sc lower complex")->required();
    sandwich->add_option("upper", sw_upper, ".sc upper complex")->required();
    sandwich->add_option("target", sw_target, "facet count of the result")
        ->required();
    sandwich->add_option("--out", sw_out, "write the result as .sc to this path");
    sandwich->callback([&] {
        exit_code = run_sandwich(cfg, sw_lower, sw_upper, sw_target, sw_out);
    });

    int ex_c = 0, ex_d = 0, ex_q = 0;
    long long ex_h = 0;
    std::string ex_out;
    auto* explore = app.add_subcommand(
        "explore", "realize (codim, dim, indeg, homology) = (c, d, q, h)");
    explore->add_option("codim", ex_c, "codimension c")->required();
    explore->add_option("dim", ex_d, "Krull dimension d")->required();
    explore->add_option("indeg", ex_q, "initial degree q")->required();
    explore->add_option("homology", ex_h, "homology dimension h")->required();
    explore->add_option("--out", ex_out, "write the witness as .sc to this path");
    explore->callback(
        [&] { exit_code = run_explore(cfg, ex_c, ex_d, ex_q, ex_h, ex_out); });

    std::string verify_bundle;
    auto* verify = app.add_subcommand("verify", "run a named verification bundle");
    verify
        ->add_option("bundle", verify_bundle,
                     "one of thm2.6 thm4.5 thm5.6 thm5.8 ex5.7 lemma4.11 "
                     "rmk2.9 all")
        ->required()
        ->check(CLI::IsMember({"thm2.6", "thm4.5", "thm5.6", "thm5.8", "ex5.7",
                               "lemma4.11", "rmk2.9", "all"}));
    verify->callback([&] { exit_code = run_verify(cfg, verify_bundle); });

    // global flags are accepted after the subcommand as well
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const sr::Error& e) {
        std::cerr << "error " << sr::error_code_name(e.code()) << ": " << e.what()
                  << "\n";
        return 2;
    }
    return exit_code;
}
