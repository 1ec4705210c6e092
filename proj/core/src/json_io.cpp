#include "permuto/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace permuto {

ordered_json partition_to_json(const OrderedSetPartition& tau) {
    ordered_json j = ordered_json::array();
    for (const auto& b : tau.blocks()) j.push_back(b);
    return j;
}

OrderedSetPartition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected array of arrays");
    std::vector<Block> blocks;
    for (const auto& jb : j) {
        if (!jb.is_array()) throw std::invalid_argument("partition: expected array of arrays");
        blocks.push_back(jb.get<Block>());
    }
    return OrderedSetPartition(std::move(blocks));
}

TwoPartition two_partition_from_json(const nlohmann::json& j) {
    return TwoPartition(partition_from_json(j));
}

ordered_json good_element_to_json(const GoodElement& e) {
    ordered_json j = ordered_json::array();
    for (const auto& [tau, c] : e.terms()) {
        ordered_json term;
        term["tau"] = partition_to_json(tau);
        term["coeff"] = rat_to_string(c);
        j.push_back(std::move(term));
    }
    return j;
}

GoodElement good_element_from_json(const nlohmann::json& j, const LabelSet& B) {
    GoodElement e(B);
    for (const auto& term : j)
        e.add(partition_from_json(term.at("tau")), rat_from_string(term.at("coeff").get<std::string>()));
    return e;
}

ordered_json module_element_to_json(const ModuleElement& e) {
    ordered_json j;
    ordered_json terms = ordered_json::array();
    for (const auto& [tau, c] : e.terms()) {
        ordered_json term;
        term["tau"] = partition_to_json(tau);
        term["coeff"] = rat_to_string(c);
        terms.push_back(std::move(term));
    }
    j["mu_terms"] = std::move(terms);
    return j;
}

ModuleElement module_element_from_json(const nlohmann::json& j, const LabelSet& B) {
    ModuleElement e(B);
    for (const auto& term : j.at("mu_terms"))
        e.add(partition_from_json(term.at("tau")), rat_from_string(term.at("coeff").get<std::string>()));
    return e;
}

ordered_json fan_to_json(const LabelSet& B) {
    ordered_json j;
    j["B"] = B.labels();
    ordered_json cones = ordered_json::array();
    for (const auto& tau : enumerate_partitions(B)) {
        const Cone cone = cone_of(tau);
        ordered_json jc;
        jc["tau"] = partition_to_json(tau);
        ordered_json gens = ordered_json::array();
        for (const auto& g : cone.generators) gens.push_back(g.values());
        jc["generators"] = std::move(gens);
        cones.push_back(std::move(jc));
    }
    j["cones"] = std::move(cones);
    return j;
}

RawMonomial raw_monomial_from_json(const nlohmann::json& j, LabelSet* B_out) {
    const LabelSet B(j.at("B").get<std::vector<int>>());
    RawMonomial factors;
    for (const auto& jf : j.at("factors")) factors.push_back(two_partition_from_json(jf));
    for (const auto& f : factors)
        if (f.label_set() != B)
            throw std::invalid_argument("raw monomial: factor not a 2-partition of B");
    if (B_out) *B_out = B;
    return factors;
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected nonempty array");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& jr = j.at(static_cast<std::size_t>(r));
        if (static_cast<int>(jr.size()) != cols) throw std::invalid_argument("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) {
            const auto& cell = jr.at(static_cast<std::size_t>(c));
            m.at(r, c) = cell.is_string() ? rat_from_string(cell.get<std::string>())
                                          : Rat(cell.get<long long>());
        }
    }
    return m;
}

ordered_json index_set_to_json(const SuperIndexSet& I) {
    ordered_json j = ordered_json::array();
    for (int k = 0; k < I.size(); ++k) {
        ordered_json e;
        e["label"] = I.labels()[static_cast<std::size_t>(k)];
        e["parity"] = I.parities()[static_cast<std::size_t>(k)];
        j.push_back(std::move(e));
    }
    return j;
}

SuperIndexSet index_set_from_json(const nlohmann::json& j) {
    std::vector<int> labels, parities;
    for (const auto& e : j) {
        labels.push_back(e.at("label").get<int>());
        parities.push_back(e.at("parity").get<int>());
    }
    return SuperIndexSet(std::move(labels), std::move(parities));
}

ordered_json family_to_json(const TopCorrelatorFamily& top) {
    ordered_json j;
    j["dimF"] = top.dim();
    j["indices"] = index_set_to_json(top.index_set());
    j["max_points"] = top.max_points();
    ordered_json entries = ordered_json::array();
    for (const auto& [seq, m] : top.entries()) {
        ordered_json e;
        e["seq"] = seq;
        e["matrix"] = matrix_to_json(m);
        entries.push_back(std::move(e));
    }
    j["top"] = std::move(entries);
    return j;
}

TopCorrelatorFamily family_from_json(const nlohmann::json& j) {
    const int dim = j.at("dimF").get<int>();
    SuperIndexSet I = index_set_from_json(j.at("indices"));
    int max_points = 0;
    if (j.contains("max_points")) {
        max_points = j.at("max_points").get<int>();
    } else {
        for (const auto& e : j.at("top"))
            max_points = std::max(max_points, static_cast<int>(e.at("seq").size()));
        if (max_points == 0) max_points = 1;
    }
    TopCorrelatorFamily top(std::move(I), dim, max_points);
    for (const auto& e : j.at("top"))
        top.set(e.at("seq").get<std::vector<int>>(), matrix_from_json(e.at("matrix")));
    return top;
}

ordered_json series_to_json(const TruncatedSeries& s) {
    ordered_json j;
    j["dimF"] = s.dim();
    j["indices"] = index_set_to_json(s.index_set());
    j["order"] = s.order();
    ordered_json terms = ordered_json::array();
    for (const auto& [exps, m] : s.terms()) {
        ordered_json t;
        t["exponents"] = exps;
        t["matrix"] = matrix_to_json(m);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    TruncatedSeries s(index_set_from_json(j.at("indices")), j.at("dimF").get<int>(),
                      j.at("order").get<int>());
    for (const auto& t : j.at("terms"))
        s.add_term(t.at("exponents").get<std::vector<int>>(), matrix_from_json(t.at("matrix")));
    return s;
}

std::string dump_canonical(const ordered_json& j) { return j.dump(2) + "\n"; }

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << dump_canonical(j);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace permuto
