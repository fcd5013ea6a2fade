#include "cobord/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "cobord/error.hpp"

namespace cobord {

using json = nlohmann::ordered_json;

std::string poly_to_json(const Poly& p)
{
    json ring;
    ring["base"] = p.ring()->base() == Base::integers ? "integers" : "rationals";
    ring["generators"] = json::array();
    for (const auto& g : p.ring()->generators())
        ring["generators"].push_back({{"name", g.name}, {"grade", g.grade}});

    json out;
    out["ring"] = std::move(ring);
    out["variables"] = p.vars()->names();
    out["cap"] = p.cap();
    out["terms"] = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exps"] = e;
        json coeff = json::array();
        // coefficient entries sorted by generator-name monomial key
        std::vector<std::pair<std::string, json>> entries;
        for (const auto& [m, r] : c.terms()) {
            std::vector<std::pair<std::string, int>> named;
            for (auto [idx, exp] : mono_unpack(m))
                named.emplace_back(p.ring()->generators()[static_cast<size_t>(idx)].name, exp);
            std::sort(named.begin(), named.end());
            json mono = json::object();
            std::string key;
            for (const auto& [name, exp] : named) {
                mono[name] = exp;
                key += name + "^" + std::to_string(exp) + ";";
            }
            json entry;
            entry["mono"] = std::move(mono);
            entry["num"] = r.get_num().get_str();
            entry["den"] = r.get_den().get_str();
            entries.emplace_back(std::move(key), std::move(entry));
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [k, v] : entries)
            coeff.push_back(std::move(v));
        term["coeff"] = std::move(coeff);
        out["terms"].push_back(std::move(term));
    }
    return out.dump();
}

Poly poly_from_json(const std::string& text)
{
    json in;
    try {
        in = json::parse(text);
    } catch (const std::exception& e) {
        throw error(std::string("bad JSON: ") + e.what());
    }
    require(in.contains("ring") && in.contains("variables") && in.contains("cap") &&
                in.contains("terms"),
            "missing polynomial fields");

    RingSpec rs;
    rs.base = in["ring"]["base"] == "integers" ? Base::integers : Base::rationals;
    for (const auto& g : in["ring"]["generators"])
        rs.generators.push_back({g["name"].get<std::string>(), g["grade"].get<int>()});
    const RingPtr ring = Ring::make(std::move(rs));

    const VarsPtr vars = VarSet::make(in["variables"].get<std::vector<std::string>>());
    const int cap = in["cap"].get<int>();

    Poly p = Poly::zero(ring, vars, cap);
    for (const auto& term : in["terms"]) {
        Expo e = term["exps"].get<Expo>();
        std::vector<std::pair<GenMono, Rat>> cterms;
        for (const auto& entry : term["coeff"]) {
            std::vector<std::pair<int, int>> factors;
            for (const auto& [name, exp] : entry["mono"].items()) {
                const int idx = ring->generator_index(name);
                require(idx >= 0, "unknown generator: " + name);
                factors.emplace_back(idx, exp.get<int>());
            }
            cterms.emplace_back(mono_pack(factors),
                                rat_from_strings(entry["num"].get<std::string>(),
                                                 entry["den"].get<std::string>()));
        }
        p = p + Poly::monomial(ring, vars, cap, std::move(e),
                               Coeff::from_terms(ring, std::move(cterms)));
    }
    return p;
}

} // namespace cobord
