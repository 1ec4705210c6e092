#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "permuto/correlators.hpp"
#include "permuto/fan.hpp"
#include "permuto/homology.hpp"
#include "permuto/partition.hpp"
#include "permuto/report.hpp"
#include "permuto/ring.hpp"

namespace permuto {

// Wire formats:
//   partition        [[1,2],[3]]
//   good element     [ {"tau": [[..]..], "coeff": "p/q"}, ... ]
//   module element   { "mu_terms": [ {"tau": .., "coeff": ..}, ... ] }
//   fan              { "B": [..], "cones": [ {"tau": .., "generators": [[..]..]} ] }
//   raw monomial     { "B": [..], "factors": [ [[..],[..]], ... ] }
//   correlator family{ "dimF": d, "indices": [{"label":a,"parity":0|1}..],
//                      "max_points": N, "top": [{"seq":[..], "matrix":[["p/q"..]..]}] }
//   series           { "dimF": d, "indices": [..], "order": N,
//                      "terms": [{"exponents":[..], "matrix":[[..]..]}] }

ordered_json partition_to_json(const OrderedSetPartition& tau);
OrderedSetPartition partition_from_json(const nlohmann::json& j);
TwoPartition two_partition_from_json(const nlohmann::json& j);

ordered_json good_element_to_json(const GoodElement& e);
GoodElement good_element_from_json(const nlohmann::json& j, const LabelSet& B);

ordered_json module_element_to_json(const ModuleElement& e);
ModuleElement module_element_from_json(const nlohmann::json& j, const LabelSet& B);

ordered_json fan_to_json(const LabelSet& B);

RawMonomial raw_monomial_from_json(const nlohmann::json& j, LabelSet* B_out);

ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

ordered_json index_set_to_json(const SuperIndexSet& I);
SuperIndexSet index_set_from_json(const nlohmann::json& j);

ordered_json family_to_json(const TopCorrelatorFamily& top);
TopCorrelatorFamily family_from_json(const nlohmann::json& j);

ordered_json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

// Canonical dump: two-space indent, stable key order, trailing newline.
std::string dump_canonical(const ordered_json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const ordered_json& j);

}  // namespace permuto
