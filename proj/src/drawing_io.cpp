#include <array>
#include <sstream>

#include "oneplanar/drawing.hpp"

namespace onep {

namespace {

std::string id_to_string(int id, int n) {
    if (id < n) return std::to_string(id);
    return "x" + std::to_string(id - n);
}

int parse_id(const std::string& token, int n, int dummies) {
    try {
        if (!token.empty() && token[0] == 'x') {
            int i = std::stoi(token.substr(1));
            if (i < 0 || i >= dummies) fail(ErrorCode::parse, "dummy identifier out of range: " + token);
            return n + i;
        }
        int v = std::stoi(token);
        if (v < 0 || v >= n) fail(ErrorCode::parse, "vertex identifier out of range: " + token);
        return v;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::parse, "bad identifier: " + token);
    } catch (const std::out_of_range&) {
        fail(ErrorCode::parse, "bad identifier: " + token);
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

struct ParsedDrawingFile {
    int version = 1;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 4>> crossings;
    std::vector<std::pair<int, std::vector<int>>> rotations; // (planarization id, identifiers)
};

ParsedDrawingFile parse_drawing_file(const std::string& text) {
    ParsedDrawingFile out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false, have_n = false, have_edges = false;
    std::vector<std::vector<int>> raw_rotations;

    // count crossings first so dummy identifiers can be range-checked
    {
        std::istringstream pre(text);
        std::string l;
        int count = 0;
        while (std::getline(pre, l))
            if (l.rfind("cross", 0) == 0) ++count;
        out.crossings.reserve(static_cast<std::size_t>(count));
    }
    int cross_total = 0;
    {
        std::istringstream pre(text);
        std::string l;
        while (std::getline(pre, l))
            if (l.rfind("cross ", 0) == 0) ++cross_total;
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto toks = tokens_of(line);
        if (!have_header) {
            if (toks.size() == 2 && (toks[0] == "1drawing" || toks[0] == "2drawing") && toks[1] == "v1") {
                out.version = toks[0][0] - '0';
                have_header = true;
                continue;
            }
            fail(ErrorCode::parse, "line 1: expected '1drawing v1' header");
        }
        if (toks[0] == "n") {
            if (toks.size() != 2) fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": bad n line");
            out.n = std::stoi(toks[1]);
            if (out.n < 0 || out.n > Graph::max_vertices)
                fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": n out of range");
            have_n = true;
        } else if (toks[0] == "edges") {
            if (!have_n || (toks.size() - 1) % 2 != 0)
                fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": bad edges line");
            for (std::size_t i = 1; i + 1 < toks.size() + 1 && i + 1 <= toks.size(); i += 2) {
                int u = parse_id(toks[i], out.n, 0);
                int v = parse_id(toks[i + 1], out.n, 0);
                if (u == v) fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": self-loop");
                out.edges.emplace_back(u, v);
            }
            have_edges = true;
        } else if (toks[0] == "cross") {
            if (!have_edges || toks.size() != 5)
                fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": bad cross line");
            std::array<int, 4> c;
            for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = parse_id(toks[static_cast<std::size_t>(i + 1)], out.n, 0);
            out.crossings.push_back(c);
        } else if (toks[0] == "rot") {
            if (toks.size() < 2 || toks[1].empty() || toks[1].back() != ':')
                fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": bad rot line");
            std::string vert = toks[1].substr(0, toks[1].size() - 1);
            int pv = parse_id(vert, out.n, cross_total);
            std::vector<int> ids;
            for (std::size_t i = 2; i < toks.size(); ++i) ids.push_back(parse_id(toks[i], out.n, cross_total));
            out.rotations.emplace_back(pv, std::move(ids));
        } else {
            fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_header) fail(ErrorCode::parse, "empty drawing file");
    if (!have_n) fail(ErrorCode::parse, "missing n line");

    int pcount = out.n + static_cast<int>(out.crossings.size());
    std::vector<char> seen(static_cast<std::size_t>(pcount), 0);
    for (auto& [pv, ids] : out.rotations) {
        if (seen[static_cast<std::size_t>(pv)]) fail(ErrorCode::parse, "duplicate rot line");
        seen[static_cast<std::size_t>(pv)] = 1;
    }
    for (char s : seen)
        if (!s) fail(ErrorCode::parse, "missing rot line");
    return out;
}

} // namespace

std::string OneDrawing::to_text() const {
    int n = graph_.vertex_count();
    std::ostringstream out;
    out << "1drawing v1\n";
    out << "n " << n << "\n";
    out << "edges";
    for (auto [u, v] : edges_) out << ' ' << u << ' ' << v;
    out << "\n";
    for (auto [e1, e2] : cross_) {
        out << "cross " << edges_[e1].first << ' ' << edges_[e1].second << ' ' << edges_[e2].first << ' '
            << edges_[e2].second << "\n";
    }
    for (int pv = 0; pv < plan_.vertex_count(); ++pv) {
        std::vector<int> ids;
        for (int d : plan_.rotation(pv)) ids.push_back(plan_.dart_target(d));
        // canonical cyclic start: smallest identifier, earliest occurrence
        if (!ids.empty()) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < ids.size(); ++i)
                if (ids[i] < ids[best]) best = i;
            std::rotate(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(best), ids.end());
        }
        out << "rot " << id_to_string(pv, n) << ":";
        for (int id : ids) out << ' ' << id_to_string(id, n);
        out << "\n";
    }
    return out.str();
}

OneDrawing OneDrawing::from_text(const std::string& text) {
    auto parsed = parse_drawing_file(text);
    if (parsed.version != 1) fail(ErrorCode::parse, "not a 1drawing file");

    Graph g(parsed.n);
    for (auto [u, v] : parsed.edges) {
        if (g.has_edge(u, v)) fail(ErrorCode::parse, "duplicate edge");
        g.add_edge(u, v);
    }

    std::vector<EdgePair> crossings;
    for (auto& c : parsed.crossings) crossings.push_back({{c[0], c[1]}, {c[2], c[3]}});

    std::vector<std::vector<int>> rotations(static_cast<std::size_t>(parsed.n + static_cast<int>(crossings.size())));
    for (auto& [pv, ids] : parsed.rotations) rotations[static_cast<std::size_t>(pv)] = ids;

    return build(g, crossings, rotations);
}

ValidationResult syntax_check_drawing(const std::string& text) {
    try {
        parse_drawing_file(text);
        return {true, ""};
    } catch (const Error& e) {
        return {false, e.what()};
    }
}

} // namespace onep
