#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "wzw/autoeq.hpp"
#include "wzw/group_structure.hpp"
#include "wzw/simple_current.hpp"
#include "wzw/special.hpp"

namespace wzw {

// The permutation generators the paper actually constructs per family.
inline std::vector<std::vector<int>> constructed_generators(const FusionRing& ring,
                                                            const TwistTable& tt) {
    std::vector<std::vector<int>> gens{perm_identity(ring.n)};
    const AlgebraSpec& spec = ring.spec;
    switch (spec.family) {
        case Family::A: {
            int g = designated_current(ring);
            for (int a : valid_a_set(spec)) gens.push_back(simple_current_perm(ring, tt, g, a));
            gens.push_back(charge_conjugation(ring));
            break;
        }
        case Family::B: {
            if (spec.level == 2) {
                // X-swap plus the equivariantization-realized Galois maps
                gens.push_back(simple_current_perm(ring, tt, designated_current(ring), 1));
                SoLevel2 so = so_level2_presentation(spec.rank);
                int m = 2 * spec.rank + 1;
                for (int nu = 1; nu < m; ++nu) {
                    if (std::gcd(nu, m) != 1) continue;
                    long long sq = static_cast<long long>(nu) * nu % m;
                    if (sq != 1 % m && sq != (m - 1) % m) continue;  // n^2 = +-1 only
                    auto pres = so_level2_galois(so.presentation, spec.rank, nu);
                    std::vector<int> pi(ring.n);
                    for (int p = 0; p < so.presentation.n; ++p) pi[so.to_kw[p]] = so.to_kw[pres[p]];
                    require_ring_automorphism(ring, pi, "transported Galois map");
                    gens.push_back(pi);
                }
            } else {
                gens.push_back(simple_current_perm(ring, tt, designated_current(ring), 1));
            }
            break;
        }
        case Family::C: {
            for (int a : valid_a_set(spec))
                gens.push_back(simple_current_perm(ring, tt, designated_current(ring), a));
            if (spec.rank == spec.level && spec.rank >= 2)
                gens.push_back(sp_levelrank_transpose(ring).perm);
            break;
        }
        case Family::G2: {
            if (spec.level == 4) gens.push_back(g2_exceptional_perm(ring));
            break;
        }
    }
    return gens;
}

struct VerificationRow {
    AlgebraSpec spec;
    long long fuseq_enumerated = 0;
    long long fuseq_closed = 0;
    long long constructed = 0;
    long long constructed_braided = 0;
    long long predicted_tenaut = 0;
    long long predicted_braut = 0;
    bool expected_gap = false;  // FusEq strictly above TenAut in a known class
    bool pass = false;
    std::string note;

    std::string verdict() const { return pass ? (expected_gap ? "PASS (EXPECTED-GAP)" : "PASS") : "FAIL"; }
};

struct VerifyArtifacts {
    FusionRing ring;
    TwistTable twists;
    PermGroup fuseq;
    PermGroup constructed;
    PermGroup constructed_braided;
};

inline VerificationRow verify_spec(const AlgebraSpec& spec, VerifyArtifacts* arts = nullptr) {
    VerificationRow row;
    row.spec = spec;
    FusionRing ring = build_ring(spec);
    TwistTable tt = twist_table(ring);

    PermGroup fuseq = enumerate_fusion_autos(ring);
    row.fuseq_enumerated = static_cast<long long>(fuseq.order());
    row.fuseq_closed = fuseq_closed_form(spec);

    PermGroup constructed = perm_closure(ring.n, constructed_generators(ring, tt));
    PermGroup braided = twist_preserving_subgroup(constructed, tt);
    row.constructed = static_cast<long long>(constructed.order());
    row.constructed_braided = static_cast<long long>(braided.order());

    TheoremPrediction pred = theorem_order(spec);
    row.predicted_tenaut = pred.tenaut;
    row.predicted_braut = pred.braut;

    for (const auto& p : constructed.elems)
        if (!fuseq.contains(p)) {
            row.pass = false;
            row.note = "constructed group not inside FusEq";
            if (arts) *arts = {std::move(ring), std::move(tt), std::move(fuseq), std::move(constructed), std::move(braided)};
            return row;
        }

    row.pass = row.constructed == row.predicted_tenaut &&
               row.constructed_braided == row.predicted_braut &&
               row.fuseq_enumerated == row.fuseq_closed;
    if (row.fuseq_enumerated > row.constructed) {
        bool known = (spec.family == Family::B && spec.level == 2) ||
                     (spec.family == Family::G2 && spec.level == 3);
        if (known) {
            row.expected_gap = true;
            row.note = "FusEq exceeds TenAut (non-realizable ring automorphisms)";
        } else {
            row.pass = false;
            row.note = "unexpected FusEq/TenAut gap";
        }
    }
    if (arts) *arts = {std::move(ring), std::move(tt), std::move(fuseq), std::move(constructed), std::move(braided)};
    return row;
}

struct GridBounds {
    int max_rank = 5;
    int max_level = 6;
    int g2_max_level = 8;
    bool only_family = false;
    Family family = Family::A;
};

inline std::vector<AlgebraSpec> grid_specs(const GridBounds& b) {
    std::vector<AlgebraSpec> out;
    auto want = [&](Family f) { return !b.only_family || b.family == f; };
    if (want(Family::A))
        for (int r = 1; r <= b.max_rank; ++r)
            for (int k = 1; k <= b.max_level; ++k) out.push_back({Family::A, r, k});
    for (Family f : {Family::B, Family::C})
        if (want(f))
            for (int r = 2; r <= b.max_rank; ++r)
                for (int k = 1; k <= b.max_level; ++k) out.push_back({f, r, k});
    if (want(Family::G2))
        for (int k = 1; k <= b.g2_max_level; ++k) out.push_back({Family::G2, 2, k});
    return out;
}

struct GridReport {
    std::vector<VerificationRow> rows;
    int passed = 0;
    int failed = 0;
    int expected_gaps = 0;

    bool all_pass() const { return failed == 0; }
};

inline GridReport verify_grid(const GridBounds& bounds) {
    GridReport rep;
    for (const auto& spec : grid_specs(bounds)) {
        VerificationRow row = verify_spec(spec);
        if (row.pass) ++rep.passed;
        else ++rep.failed;
        if (row.expected_gap) ++rep.expected_gaps;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace wzw
