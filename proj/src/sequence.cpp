#include "dmatch/sequence.hpp"

#include <nlohmann/json.hpp>

namespace dmatch {

using ordered_json = nlohmann::ordered_json;

void SequenceSpec::validate() const {
    if (betas.empty()) throw InvalidSequenceError("sequence must be non-empty");
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (betas[i] < 1) throw InvalidSequenceError("betas must be positive");
        if (i > 0 && betas[i] > betas[i - 1])
            throw InvalidSequenceError("sequence must be non-increasing");
    }
    if (betas.back() < k())
        throw InvalidSequenceError("last beta must be at least k");
}

std::string write_sequence_spec_json(const SequenceSpec& spec) {
    ordered_json j;
    j["betas"] = spec.betas;
    return j.dump() + "\n";
}

SequenceSpec read_sequence_spec_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("sequence json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("betas"))
        throw ParseError("sequence json: expected object with 'betas'");
    SequenceSpec spec;
    for (const auto& b : j.at("betas")) spec.betas.push_back(b.get<int>());
    spec.validate();
    return spec;
}

Graph construct_sequence_graph(const SequenceSpec& spec) {
    spec.validate();
    const int k = spec.k();
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> labels;
    std::vector<std::vector<int>> e_comp(k);  // e_comp[i] = the K2 for E_{i+1}
    std::vector<int> joinable;                // everything except E components

    auto add_clique = [&](int size, const std::string& label) {
        std::vector<int> fresh;
        for (int t = 0; t < size; ++t) {
            labels[n] = label;
            fresh.push_back(n++);
        }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = a + 1; b < fresh.size(); ++b)
                edges.emplace_back(fresh[a], fresh[b]);
        return fresh;
    };

    for (int i = 1; i < k; ++i) {
        std::string label = "E:" + std::to_string(i);
        labels[n] = label;
        labels[n + 1] = label;
        edges.emplace_back(n, n + 1);
        e_comp[i] = {n, n + 1};
        n += 2;
    }
    auto base = add_clique(2 * (spec.betas[k - 1] - (k - 1)),
                           "stage:" + std::to_string(k));
    joinable.insert(joinable.end(), base.begin(), base.end());

    for (int i = k - 1; i >= 1; --i) {
        int size = 2 * (spec.betas[i - 1] - spec.betas[i]);
        if (size == 0) continue;
        auto clique = add_clique(size, "stage:" + std::to_string(i));
        // join to G_{i+1} minus E_1..E_{i-1}: E_i..E_{k-1} are included
        std::vector<int> targets = joinable;
        for (int l = i; l < k; ++l)
            targets.insert(targets.end(), e_comp[l].begin(), e_comp[l].end());
        for (int c : clique)
            for (int t : targets) edges.emplace_back(c, t);
        joinable.insert(joinable.end(), clique.begin(), clique.end());
    }

    Graph g(n, edges);
    for (const auto& [v, l] : labels) g.set_label(v, l);
    return g;
}

bool verify_sequence_graph(const Graph& g, const SequenceSpec& spec, Budget& budget) {
    spec.validate();
    for (int i = 1; i <= spec.k(); ++i)
        if (c_disconnected_matching_number(g, i, budget) != spec.betas[i - 1])
            return false;
    return true;
}

bool verify_sequence_graph(const Graph& g, const SequenceSpec& spec) {
    Budget b;
    return verify_sequence_graph(g, spec, b);
}

}  // namespace dmatch
