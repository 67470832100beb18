#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcx {

// Unordered vertex pair, stored with a <= b. Self-loops (a == b) are legal
// values; whether they are zero in the complex is decided elsewhere.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}

    bool loop() const { return a == b; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public GraphError {
public:
    ParseError(const std::string& what, std::size_t pos)
        : GraphError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Finite connected multigraph with vertex labels 1..v. Edge labels are the
// 1-based positions in `edges`; the edge-label order carries the orientation
// of R^{edges}.
struct LabelledGraph {
    int v = 0;
    std::vector<Edge> edges;

    int e() const { return static_cast<int>(edges.size()); }
    int degree_k() const { return e() - v; }
    int excess() const { return 2 * e() - 3 * v; }

    std::vector<int> valences() const {
        std::vector<int> val(static_cast<std::size_t>(v) + 1, 0);
        for (const Edge& ed : edges) {
            val[static_cast<std::size_t>(ed.a)] += 1;
            val[static_cast<std::size_t>(ed.b)] += 1;
        }
        return val;
    }

    bool has_loop() const {
        return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.loop(); });
    }

    bool has_parallel_pair() const {
        std::vector<Edge> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    }

    bool simple() const { return !has_loop() && !has_parallel_pair(); }

    bool connected() const {
        if (v <= 0) return false;
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(v) + 1);
        for (const Edge& ed : edges) {
            if (ed.loop()) continue;
            adj[static_cast<std::size_t>(ed.a)].push_back(ed.b);
            adj[static_cast<std::size_t>(ed.b)].push_back(ed.a);
        }
        std::vector<bool> seen(static_cast<std::size_t>(v) + 1, false);
        std::vector<int> stack = {1};
        seen[1] = true;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == v;
    }

    // Complex membership: no isolated vertices, connected, valence >= 3.
    void validate() const {
        if (v < 1) throw GraphError("graph must have at least one vertex");
        for (const Edge& ed : edges)
            if (ed.a < 1 || ed.b > v) throw GraphError("vertex index out of range");
        auto val = valences();
        for (int u = 1; u <= v; ++u) {
            if (val[static_cast<std::size_t>(u)] == 0)
                throw GraphError("isolated vertex " + std::to_string(u));
            if (val[static_cast<std::size_t>(u)] < 3)
                throw GraphError("vertex " + std::to_string(u) + " has valence < 3");
        }
        if (!connected()) throw GraphError("graph is disconnected");
    }

    std::string format() const {
        std::ostringstream os;
        os << "v=" << v << "; e=";
        for (const Edge& ed : edges) os << '(' << ed.a << ',' << ed.b << ')';
        return os.str();
    }

    friend auto operator<=>(const LabelledGraph&, const LabelledGraph&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const LabelledGraph& g) {
    return os << g.format();
}

namespace detail {

class TextCursor {
public:
    explicit TextCursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
    }

    int read_int(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(std::string("expected integer ") + what, pos_);
        return std::stoi(text_.substr(start, pos_ - start));
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char take() {
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        return text_[pos_++];
    }

    std::size_t pos() const { return pos_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// {"v": int, "edges": [[a,b],...]} -- a tiny hand parser so the core library
// stays dependency-free; the CLI uses nlohmann/json for everything else.
inline LabelledGraph parse_graph_json(const std::string& text) {
    TextCursor cur(text);
    cur.expect('{', "to open object");
    std::optional<int> v;
    std::optional<std::vector<Edge>> edges;
    while (true) {
        cur.expect('"', "to open key");
        std::string key;
        for (char c = cur.take(); c != '"'; c = cur.take()) key += c;
        cur.expect(':', "after key");
        if (key == "v") {
            v = cur.read_int("for \"v\"");
        } else if (key == "edges") {
            cur.expect('[', "to open edge list");
            std::vector<Edge> list;
            if (!cur.eat(']')) {
                do {
                    cur.expect('[', "to open edge pair");
                    int a = cur.read_int("edge endpoint");
                    cur.expect(',', "between endpoints");
                    int b = cur.read_int("edge endpoint");
                    cur.expect(']', "to close edge pair");
                    list.emplace_back(a, b);
                } while (cur.eat(','));
                cur.expect(']', "to close edge list");
            }
            edges = std::move(list);
        } else {
            throw ParseError("unknown key \"" + key + "\"", cur.pos());
        }
        if (!cur.eat(',')) break;
    }
    cur.expect('}', "to close object");
    if (!cur.at_end()) throw ParseError("trailing input", cur.pos());
    if (!v || !edges) throw ParseError("missing \"v\" or \"edges\"", cur.pos());
    LabelledGraph g{*v, std::move(*edges)};
    return g;
}

} // namespace detail

// Text format: v=<int>; e=(a,b)(c,d)...   (JSON object form also accepted)
inline LabelledGraph parse_graph(const std::string& text) {
    {
        std::size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == '{') {
            LabelledGraph g = detail::parse_graph_json(text);
            g.validate();
            return g;
        }
    }
    detail::TextCursor cur(text);
    cur.expect('v', "at start");
    cur.expect('=', "after v");
    LabelledGraph g;
    g.v = cur.read_int("vertex count");
    cur.expect(';', "after vertex count");
    cur.expect('e', "before edge list");
    cur.expect('=', "after e");
    while (!cur.at_end()) {
        cur.expect('(', "to open edge");
        int a = cur.read_int("edge endpoint");
        cur.expect(',', "between endpoints");
        int b = cur.read_int("edge endpoint");
        cur.expect(')', "to close edge");
        g.edges.emplace_back(a, b);
    }
    if (g.edges.empty()) throw ParseError("empty edge list", cur.pos());
    g.validate();
    return g;
}

} // namespace gcx
