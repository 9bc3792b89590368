#include "admis/query.hpp"

#include <algorithm>
#include <sstream>

namespace admis {

IntPoly parse_poly_desc(const std::string& csv) {
    std::vector<Int> desc;
    std::string tok;
    std::istringstream in(csv);
    int position = 0;
    while (std::getline(in, tok, ',')) {
        ++position;
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty())
            throw Error(ErrorCode::ParseError,
                        "empty polynomial coefficient at position " + std::to_string(position));
        try {
            desc.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw Error(ErrorCode::ParseError, "bad polynomial coefficient at position " +
                                                   std::to_string(position) + ": " + tok);
        }
    }
    if (desc.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
    std::vector<Int> asc(desc.rbegin(), desc.rend());
    return IntPoly(std::move(asc));
}

std::vector<Int> poly_to_desc(const IntPoly& f) {
    std::vector<Int> desc(f.coeffs().rbegin(), f.coeffs().rend());
    if (desc.empty()) desc.emplace_back(0);
    return desc;
}

std::vector<std::vector<int>> parse_cycles(const std::string& s) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    while (pos < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
            continue;
        }
        if (s[pos] != '(')
            throw Error(ErrorCode::ParseError,
                        "expected '(' at offset " + std::to_string(pos) + " in cycle notation");
        size_t close = s.find(')', pos);
        if (close == std::string::npos)
            throw Error(ErrorCode::ParseError, "unterminated cycle in " + s);
        std::string inner = s.substr(pos + 1, close - pos - 1);
        for (auto& c : inner)
            if (c == ',') c = ' ';
        std::istringstream in(inner);
        std::vector<int> cycle;
        int v;
        while (in >> v) {
            if (v < 1) throw Error(ErrorCode::ParseError, "cycle points are 1-based");
            cycle.push_back(v);
        }
        if (!cycle.empty()) cycles.push_back(cycle);
        pos = close + 1;
    }
    if (cycles.empty()) throw Error(ErrorCode::ParseError, "no cycles in " + s);
    return cycles;
}

std::vector<int> cycles_to_images(const std::vector<std::vector<int>>& cycles, int points) {
    std::vector<int> img(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) img[static_cast<size_t>(i)] = i;
    for (const auto& cycle : cycles) {
        for (size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k] - 1;
            int to = cycle[(k + 1) % cycle.size()] - 1;
            if (from >= points || to >= points)
                throw Error(ErrorCode::ParseError, "cycle point out of range");
            img[static_cast<size_t>(from)] = to;
        }
    }
    return img;
}

Json metacyclic_spec(const std::string& csv) {
    std::vector<long> vals;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        try {
            vals.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad metacyclic parameter: " + tok);
        }
    }
    if (vals.size() != 4)
        throw Error(ErrorCode::ParseError, "metacyclic spec needs e,f,i,q");
    return Json{{"metacyclic", Json{{"e", vals[0]}, {"f", vals[1]}, {"i", vals[2]}, {"q", vals[3]}}}};
}

Json permutation_spec(const std::vector<std::string>& gens) {
    Json list = Json::array();
    for (const auto& g : gens) {
        Json cyc = Json::array();
        for (const auto& cycle : parse_cycles(g)) cyc.push_back(cycle);
        list.push_back(cyc);
    }
    return Json{{"permutations", list}};
}

Json product_spec(const std::string& spec) {
    Json parts = Json::array();
    std::string comp;
    std::istringstream in(spec);
    while (std::getline(in, comp, ';')) {
        if (comp.rfind("perm:", 0) == 0) {
            std::vector<std::string> gens;
            std::string body = comp.substr(5);
            std::string g;
            std::istringstream gin(body);
            while (std::getline(gin, g, '|')) gens.push_back(g);
            parts.push_back(permutation_spec(gens));
        } else if (comp.rfind("metacyclic:", 0) == 0) {
            parts.push_back(metacyclic_spec(comp.substr(11)));
        } else {
            throw Error(ErrorCode::ParseError, "product component must be perm:... or metacyclic:...");
        }
    }
    if (parts.empty()) throw Error(ErrorCode::ParseError, "empty product spec");
    return Json{{"product", parts}};
}

FiniteGroup group_from_json(const Json& spec, long order_budget) {
    if (spec.contains("metacyclic")) {
        const Json& m = spec["metacyclic"];
        MetacyclicPresentation pres{m.at("e"), m.at("f"), m.at("i"), m.at("q")};
        return FiniteGroup::from_metacyclic(pres, order_budget);
    }
    if (spec.contains("permutations")) {
        std::vector<std::vector<std::vector<int>>> gens;
        int points = 1;
        for (const Json& g : spec["permutations"]) {
            std::vector<std::vector<int>> cycles;
            for (const Json& c : g) {
                cycles.push_back(c.get<std::vector<int>>());
                for (int v : cycles.back()) points = std::max(points, v);
            }
            gens.push_back(cycles);
        }
        std::vector<std::vector<int>> images;
        for (const auto& cycles : gens) images.push_back(cycles_to_images(cycles, points));
        if (images.empty()) return FiniteGroup::trivial();
        return FiniteGroup::from_permutations(images, order_budget);
    }
    if (spec.contains("product")) {
        FiniteGroup acc = FiniteGroup::trivial();
        for (const Json& part : spec["product"])
            acc = FiniteGroup::direct_product(acc, group_from_json(part, order_budget), order_budget);
        return acc;
    }
    throw Error(ErrorCode::ParseError, "group spec needs metacyclic, permutations, or product");
}

Json QuerySpec::to_json() const {
    Json field = Json::array();
    for (const Int& c : field_coeffs_desc) field.push_back(c.get_str());
    return Json{{"schema", 1},
                {"field", field},
                {"group", group},
                {"mode", mode == DecisionMode::Tame ? "tame" : "admissible"}};
}

QuerySpec QuerySpec::from_json(const Json& j) {
    QuerySpec q;
    for (const Json& c : j.at("field")) {
        if (c.is_string())
            q.field_coeffs_desc.emplace_back(c.get<std::string>());
        else
            q.field_coeffs_desc.emplace_back(c.get<long>());
    }
    q.group = j.at("group");
    std::string mode = j.at("mode");
    if (mode == "tame")
        q.mode = DecisionMode::Tame;
    else if (mode == "admissible")
        q.mode = DecisionMode::Admissible;
    else
        throw Error(ErrorCode::ParseError, "mode must be admissible or tame");
    return q;
}

NumberField QuerySpec::build_field() const {
    std::vector<Int> asc(field_coeffs_desc.rbegin(), field_coeffs_desc.rend());
    return NumberField::make(IntPoly(std::move(asc)));
}

FiniteGroup QuerySpec::build_group(long order_budget) const {
    return group_from_json(group, order_budget);
}

} // namespace admis
