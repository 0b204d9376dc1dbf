#include "harborth/report.hpp"

#include <sstream>

namespace harborth {

namespace {

nlohmann::ordered_json set_to_json(const ElementSet& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::uint32_t m : s.indices()) {
        arr.push_back(s.group().coords_of(m));
    }
    return arr;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

}  // namespace

std::string coords_list(const ElementSet& s) {
    std::ostringstream out;
    bool first = true;
    for (std::uint32_t m : s.indices()) {
        if (!first) out << ' ';
        first = false;
        const auto coords = s.group().coords_of(m);
        out << '(';
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out << ',';
            out << coords[i];
        }
        out << ')';
    }
    return out.str();
}

nlohmann::ordered_json to_json(const ExactResult& r) {
    nlohmann::ordered_json j;
    j["group"] = r.group.literal();
    j["k"] = r.k;
    j["max_free_size"] = r.max_free_size;
    j["harborth"] = r.harborth;
    j["exhausted"] = r.exhausted;
    j["nodes_explored"] = r.nodes_explored;
    return j;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["group"] = r.group.literal();
    j["k"] = r.k;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    if (r.exact) {
        j["exact"] = *r.exact;
    } else {
        j["exact"] = nullptr;
    }
    nlohmann::ordered_json prov = nlohmann::ordered_json::array();
    for (const auto& p : r.provenance) {
        prov.push_back({{"source", p.source}, {"kind", to_string(p.kind)}, {"value", p.value}});
    }
    j["provenance"] = prov;
    if (r.witness) j["witness"] = set_to_json(*r.witness);
    return j;
}

nlohmann::ordered_json to_json(const ConstructionResult& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["group"] = r.group.literal();
    j["k"] = r.k;
    j["claimed_size"] = r.claimed_size;
    j["implied_lower_bound"] = r.implied_lower_bound;
    j["verified"] = r.verified;
    j["set"] = set_to_json(r.set);
    return j;
}

std::string to_text(const ExactResult& r) {
    std::ostringstream out;
    out << "group: " << r.group.literal() << '\n'
        << "k: " << r.k << '\n'
        << "max_free_size: " << r.max_free_size << '\n'
        << "harborth: " << r.harborth << '\n'
        << "exhausted: " << (r.exhausted ? "true" : "false") << '\n'
        << "nodes_explored: " << r.nodes_explored << '\n'
        << "witness: " << coords_list(r.witness) << '\n';
    return out.str();
}

std::string to_text(const BoundReport& r) {
    std::ostringstream out;
    out << "group: " << r.group.literal() << '\n' << "k: " << r.k << '\n';
    if (r.exact) {
        out << "exact: " << *r.exact << '\n';
    } else {
        out << "lower: " << r.lower << '\n' << "upper: " << r.upper << '\n';
    }
    out << "provenance:" << '\n';
    for (const auto& p : r.provenance) {
        out << "  " << p.source << " (" << to_string(p.kind) << "): " << p.value << '\n';
    }
    if (r.witness) out << "witness: " << coords_list(*r.witness) << '\n';
    return out.str();
}

std::string to_text(const ConstructionResult& r) {
    std::ostringstream out;
    out << "name: " << r.name << '\n'
        << "group: " << r.group.literal() << '\n'
        << "k: " << r.k << '\n'
        << "claimed_size: " << r.claimed_size << '\n'
        << "implied_lower_bound: " << r.implied_lower_bound << '\n'
        << "verified: " << (r.verified ? "true" : "false") << '\n'
        << "set: " << coords_list(r.set) << '\n';
    return out.str();
}

std::string to_csv(const ExactResult& r) {
    std::ostringstream out;
    out << "group,k,max_free_size,harborth,exhausted,nodes_explored\n"
        << csv_quote(r.group.literal()) << ',' << r.k << ',' << r.max_free_size << ','
        << r.harborth << ',' << (r.exhausted ? "true" : "false") << ',' << r.nodes_explored
        << '\n';
    return out.str();
}

std::string to_csv(const BoundReport& r) {
    std::ostringstream out;
    out << "group,k,lower,upper,exact,provenance\n"
        << csv_quote(r.group.literal()) << ',' << r.k << ',' << r.lower << ',' << r.upper << ',';
    if (r.exact) out << *r.exact;
    out << ',';
    std::string prov;
    for (const auto& p : r.provenance) {
        if (!prov.empty()) prov += ';';
        prov += p.source + ":" + to_string(p.kind) + ":" + std::to_string(p.value);
    }
    out << csv_quote(prov) << '\n';
    return out.str();
}

std::string to_csv(const ConstructionResult& r) {
    std::ostringstream out;
    out << "name,group,k,claimed_size,implied_lower_bound,verified\n"
        << r.name << ',' << csv_quote(r.group.literal()) << ',' << r.k << ',' << r.claimed_size
        << ',' << r.implied_lower_bound << ',' << (r.verified ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace harborth
