#include "kschur/json_io.hpp"

namespace kschur {

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const TPoly& p) { return json(p.coeffs()); }

namespace {

json chain_json(const std::vector<Core>& chain) {
    json out = json::array();
    for (const Core& c : chain) out.push_back(to_json(c.shape()));
    return out;
}

json strip_json(const std::vector<Core>& chain, const std::vector<int>& marks) {
    json out;
    out["chain"] = chain_json(chain);
    out["marks"] = json(marks);
    return out;
}

}  // namespace

json to_json(const WeakStrip& s) { return strip_json(s.chain, s.rightmost_cols); }

json to_json(const StrongStrip& s) { return strip_json(s.chain, s.contents); }

json to_json(const BottomStrongStrip& s) { return strip_json(s.chain, s.contents); }

json tableau_json(const std::vector<std::vector<int>>& rows) {
    json out;
    out["rows"] = json(rows);
    return out;
}

json tableau_json(const std::vector<std::vector<int>>& rows, int k) {
    json out = tableau_json(rows);
    json residues = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            row.push_back(residue_of(static_cast<int>(j) - static_cast<int>(i),
                                     k + 1));
        residues.push_back(std::move(row));
    }
    out["residues"] = std::move(residues);
    return out;
}

json to_json(const Abc& a) {
    json out;
    out["k"] = a.k;
    out["alpha"] = json(a.alpha);
    out["inner"] = to_json(a.inner().shape());
    json rows = json::array();
    for (const auto& row : a.grid) {
        json r = json::array();
        for (int v : row) {
            if (v == 0)
                r.push_back(nullptr);
            else
                r.push_back(v);
        }
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    json ribbons = json::array();
    for (const AbcRibbon& r : a.ribbons) {
        json rib;
        rib["letter"] = r.letter;
        rib["size"] = r.size;
        rib["head"] = json::array({r.head.row, r.head.col});
        rib["mark"] = r.mark;
        ribbons.push_back(std::move(rib));
    }
    out["ribbons"] = std::move(ribbons);
    json chains = json::array();
    for (const BottomStrongStrip& s : a.steps) chains.push_back(to_json(s));
    out["chains"] = std::move(chains);
    return out;
}

json to_json(const SymFunc& f) {
    json out;
    out["degree"] = f.degree();
    if (f.k_truncated()) out["k"] = *f.k_truncated();
    json terms = json::array();
    for (const auto& [mu, c] : f.terms()) {
        json term;
        term["m"] = to_json(mu);
        term["coeff"] = to_json(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

json to_json(const TransitionMatrix& m) {
    json out;
    out["k"] = m.k;
    out["degree"] = m.degree;
    json index = json::array();
    for (const Core& c : m.index) index.push_back(to_json(c.shape()));
    out["index"] = std::move(index);
    json bounded = json::array();
    for (const Partition& p : m.bounded) bounded.push_back(to_json(p));
    out["bounded"] = std::move(bounded);
    json entries = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const TPoly& p : row) r.push_back(to_json(p));
        entries.push_back(std::move(r));
    }
    out["entries"] = std::move(entries);
    return out;
}

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

}  // namespace kschur
