#include "latmut/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace latmut {

using nlohmann::json;

std::string poset_to_json(const Poset& p) {
    json j;
    j["n"] = p.size();
    json covers = json::array();
    for (auto [x, y] : p.covers()) covers.push_back({x, y});
    j["covers"] = covers;
    if (p.has_labels()) j["labels"] = p.labels();
    return j.dump() + "\n";
}

Poset poset_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("poset JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
            throw ParseError("poset JSON needs fields \"n\" and \"covers\"");
        auto n = j.at("n").get<long long>();
        if (n < 0) throw ParseError("poset JSON: negative n");
        Relation rel;
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) throw ParseError("poset JSON: cover must be a pair");
            auto x = c[0].get<long long>();
            auto y = c[1].get<long long>();
            if (x < 0 || y < 0) throw ParseError("poset JSON: negative index");
            rel.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return poset_from_covers(static_cast<std::size_t>(n), rel, std::move(labels));
    } catch (const json::exception& e) {
        throw ParseError(std::string("poset JSON: ") + e.what());
    }
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string poset_to_dot(const Poset& p, const std::string& name) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n";
    for (Elem x = 0; x < p.size(); ++x)
        os << "  n" << x << " [label=\"" << dot_escape(p.label(x)) << "\"];\n";
    auto h = heights(p);
    std::map<std::size_t, std::vector<Elem>> by_height;
    for (Elem x = 0; x < p.size(); ++x) by_height[h[x]].push_back(x);
    for (const auto& [level, xs] : by_height) {
        os << "  { rank=same;";
        for (Elem x : xs) os << " n" << x << ";";
        os << " }\n";
    }
    for (auto [x, y] : p.covers()) os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace latmut
