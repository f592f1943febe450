#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "wzw/autoeq.hpp"
#include "wzw/group_structure.hpp"
#include "wzw/modular.hpp"
#include "wzw/theorem_check.hpp"

namespace wzw {

using json = nlohmann::json;

inline std::string weight_csv(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

inline json spec_json(const AlgebraSpec& spec) {
    return json{{"family", family_name(spec.family)}, {"rank", spec.rank}, {"level", spec.level}};
}

// One line per nonzero N_{a,b}^c.
inline std::string ring_dump_tsv(const FusionRing& ring) {
    std::ostringstream os;
    os << "a\tb\tc\tN\n";
    for (int a = 0; a < ring.n; ++a)
        for (int b = a; b < ring.n; ++b)
            for (auto [c, m] : ring.channels(a, b)) {
                if (ring.has_spec)
                    os << weight_csv(ring.basis[a]) << '\t' << weight_csv(ring.basis[b]) << '\t'
                       << weight_csv(ring.basis[c]) << '\t' << m << '\n';
                else
                    os << ring.names[a] << '\t' << ring.names[b] << '\t' << ring.names[c] << '\t'
                       << m << '\n';
            }
    return os.str();
}

inline json ring_dump_json(const FusionRing& ring) {
    json out;
    if (ring.has_spec) out["spec"] = spec_json(ring.spec);
    out["rank"] = ring.n;
    out["unit"] = ring.unit;
    json basis = json::array();
    for (int i = 0; i < ring.n; ++i) {
        if (ring.has_spec) basis.push_back(ring.basis[i]);
        else basis.push_back(ring.names[i]);
    }
    out["basis"] = basis;
    out["dual"] = ring.dual;
    json fusion = json::array();
    for (int a = 0; a < ring.n; ++a)
        for (int b = a; b < ring.n; ++b)
            for (auto [c, m] : ring.channels(a, b))
                fusion.push_back(json{{"a", a}, {"b", b}, {"c", c}, {"N", m}});
    out["fusion"] = fusion;
    return out;
}

inline json modular_dump_json(const FusionRing& ring, const TwistTable& tt,
                              const std::vector<double>& qdims) {
    json out;
    out["spec"] = spec_json(ring.spec);
    json basis = json::array(), twists = json::array(), dims = json::array();
    for (int i = 0; i < ring.n; ++i) {
        basis.push_back(ring.basis[i]);
        twists.push_back(tt.of(i).str());
        std::ostringstream d;
        d.precision(15);
        d << qdims[i];
        dims.push_back(d.str());
    }
    out["basis"] = basis;
    out["twists"] = twists;
    out["qdims"] = dims;
    return out;
}

inline json group_json(const PermGroup& g, const std::vector<std::string>& labels) {
    json out;
    out["order"] = g.order();
    AbelianInvariants inv = abelian_invariants(g.cayley());
    out["abelian"] = inv.abelian;
    if (inv.abelian) out["invariant_factors"] = inv.factors;
    else out["center"] = inv.center;
    json elems = json::array();
    for (const auto& p : g.elems) elems.push_back(cycle_notation(p, labels));
    out["elements"] = elems;
    return out;
}

inline json row_json(const VerificationRow& row) {
    return json{{"spec", spec_json(row.spec)},
                {"fuseq_enumerated", row.fuseq_enumerated},
                {"fuseq_closed_form", row.fuseq_closed},
                {"constructed", row.constructed},
                {"constructed_braided", row.constructed_braided},
                {"predicted_tenaut", row.predicted_tenaut},
                {"predicted_braut", row.predicted_braut},
                {"expected_gap", row.expected_gap},
                {"verdict", row.verdict()},
                {"note", row.note}};
}

inline std::string row_text(const VerificationRow& row) {
    std::ostringstream os;
    os << row.spec.str() << ": FusEq " << row.fuseq_enumerated << "/" << row.fuseq_closed
       << "  TenAut " << row.constructed << "/" << row.predicted_tenaut << "  BrAut "
       << row.constructed_braided << "/" << row.predicted_braut << "  " << row.verdict();
    if (!row.note.empty()) os << "  [" << row.note << "]";
    return os.str();
}

}  // namespace wzw
