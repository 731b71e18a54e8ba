#include "girthlab/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace girthlab {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": " + why);
}

bool parse_int(const std::string& token, long& value) {
    if (token.empty())
        return false;
    std::size_t pos = 0;
    try {
        value = std::stol(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

} // namespace

Digraph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_n = false;
    long n = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (fields >> extra)
            parse_fail(line_no, "trailing token '" + extra + "'");
        if (!have_n) {
            long value;
            if (a != "n" || !parse_int(b, value) || value < 0)
                parse_fail(line_no, "expected header 'n <N>'");
            n = value;
            have_n = true;
            continue;
        }
        long u, v;
        if (!parse_int(a, u) || !parse_int(b, v))
            parse_fail(line_no, "expected edge '<u> <v>'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(line_no, "vertex out of range [0," + std::to_string(n) + ")");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_n)
        throw Error(ErrorCode::ParseError, "missing 'n <N>' header");
    return Digraph::from_edge_list(static_cast<int>(n), edges);
}

Digraph parse_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

void serialize_edge_list(const Digraph& d, std::ostream& out) {
    out << "n " << d.n() << "\n";
    for (const auto& [u, v] : d.edges())
        out << u << " " << v << "\n";
}

std::string serialize_edge_list_string(const Digraph& d) {
    std::ostringstream out;
    serialize_edge_list(d, out);
    return out.str();
}

std::string to_json_string(const Digraph& d) {
    nlohmann::json j;
    j["n"] = d.n();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : d.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Digraph parse_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw Error(ErrorCode::ParseError, "missing integer field 'n'");
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw Error(ErrorCode::ParseError, "edge entries must be [u,v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Digraph::from_edge_list(j["n"].get<int>(), edges);
}

} // namespace girthlab
