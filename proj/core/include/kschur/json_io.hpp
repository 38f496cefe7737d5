#pragma once

#include <nlohmann/json.hpp>

#include "kschur/abc.hpp"
#include "kschur/core.hpp"
#include "kschur/order.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tableaux.hpp"

namespace kschur {

// All emitters build ordered_json so repeated runs serialize byte-identically.
using json = nlohmann::ordered_json;

json to_json(const Partition& p);  // [6,4,3,1,1,1], largest part first
json to_json(const TPoly& p);      // coefficient list, constant term first

// {"chain": [[...], ...], "marks": [...]}
json to_json(const WeakStrip& s);
json to_json(const StrongStrip& s);
json to_json(const BottomStrongStrip& s);

// {"rows": [[...], ...]}, bottom row first; optionally adds "residues"
json tableau_json(const std::vector<std::vector<int>>& rows);
json tableau_json(const std::vector<std::vector<int>>& rows, int k);

json to_json(const Abc& a);
json to_json(const SymFunc& f);
json to_json(const TransitionMatrix& m);

Partition partition_from_json(const json& j);

}  // namespace kschur
