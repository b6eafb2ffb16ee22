#include "sr/corpus.hpp"

#include "sr/cover.hpp"
#include "sr/families.hpp"
#include "sr/ring_props.hpp"

namespace sr {

namespace {

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&](const std::string& name, SimplicialComplex c) {
        out.push_back({name, std::move(c)});
    };
    add("hibi-cycle-3", hibi_cycle(3));
    add("hibi-cycle-4", hibi_cycle(4));
    add("hibi-cycle-5", hibi_cycle(5));
    add("hanano-6", hanano(6));
    add("hanano-7", hanano(7));
    add("hanano-8", hanano(8));
    add("hanano-9", hanano(9));
    add("terai-5", terai_complex(5));
    add("terai-6", terai_complex(6));
    add("terai-8", terai_complex(8));
    add("rp2", rp2());
    add("moebius", moebius());
    add("cyclic-dual-3-2", cyclic_dual(3, 2));
    add("cyclic-dual-4-3", cyclic_dual(4, 3));
    add("cyclic-dual-4-4", cyclic_dual(4, 4));
    add("cyclic-dual-5-4", cyclic_dual(5, 4));
    add("pentagon", cyclic_boundary(5, 2));
    add("bruns-hibi-6", bruns_hibi(6));
    add("bruns-hibi-dual-6", bruns_hibi_dual(6));
    add("max-embdim-cm-3-3", max_embdim_cm(3, 3));
    add("disjoint-union-3-3-1", disjoint_union_q2(3, 3, 1));
    add("disjoint-union-4-2-1", disjoint_union_q2(4, 2, 1));
    add("skeleton-6-3", skeleton_complex(6, 3));
    add("simplex-4", SimplicialComplex::from_facets(4, {vs::full(4)}));
    add("two-points", SimplicialComplex::from_facets(
                          2, {vs::unit(0), vs::unit(1)}));
    // a sandwich intermediate: hanano(6) plus one facet of its cover,
    // dropping the top homology from 2 to 1 while staying Buchsbaum 3-linear
    {
        CoverResult cover = cm_cover(hanano(6), FieldSpec::rationals(), 1);
        SimplicialComplex mid = sandwich_family(
            hanano(6), cover.cover, multiplicity(hanano(6)) + 1,
            FieldSpec::rationals(), 1);
        add("hanano-6-plus-one", mid);
    }
    return out;
}

} // namespace

const std::vector<CorpusEntry>& standard_corpus() {
    static const std::vector<CorpusEntry> corpus = build_corpus();
    return corpus;
}

std::vector<CorpusEntry> equivalence_corpus(const FieldSpec& f) {
    std::vector<CorpusEntry> out;
    for (const CorpusEntry& entry : standard_corpus()) {
        const SimplicialComplex& dl = entry.complex;
        if (dl.is_void() || dl.is_irrelevant()) continue;
        int d = dl.krull_dim();
        int c = dl.vertex_count() - d;
        auto q = indeg(dl);
        if (c < 2 || !q.has_value() || *q < 2 || *q > d) continue;
        if (!is_buchsbaum(dl, f)) continue;
        out.push_back(entry);
    }
    return out;
}

std::vector<CorpusEntry> dualizable_corpus() {
    std::vector<CorpusEntry> out;
    for (const CorpusEntry& entry : standard_corpus()) {
        const SimplicialComplex& dl = entry.complex;
        if (dl.is_void() || dl.is_irrelevant()) continue;
        int c = dl.vertex_count() - dl.krull_dim();
        auto q = indeg(dl);
        if (c >= 2 && q.has_value() && *q >= 2) out.push_back(entry);
    }
    return out;
}

} // namespace sr
