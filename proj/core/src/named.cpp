#include "edgemap/named.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "edgemap/graph6.hpp"

namespace edgemap {

namespace {

void need_params(const NamedGraphSpec& s, size_t count, const char* what) {
    if (s.params.size() != count)
        throw std::invalid_argument(std::string(what) + ": wrong parameter count");
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph path(int n) {
    if (n < 1)
        throw std::invalid_argument("P_n needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v)
        es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

Graph cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("C_n needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v)
        es.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, es);
}

Graph double_star(int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("double star needs non-negative leaf counts");
    std::vector<std::pair<int, int>> es;
    es.emplace_back(0, 1);
    for (int i = 0; i < a; ++i)
        es.emplace_back(0, 2 + i);
    for (int i = 0; i < b; ++i)
        es.emplace_back(1, 2 + a + i);
    return Graph::from_edges(2 + a + b, es);
}

Graph d_leaf(int l, int k, int lp) {
    if (l < 0 || lp < 0 || k < 1)
        throw std::invalid_argument("D_{l,k,l'} needs l,l' >= 0 and k >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        es.emplace_back(i, i + 1); // path u=0 .. v=k
    int next = k + 1;
    for (int i = 0; i < l; ++i)
        es.emplace_back(0, next++);
    for (int i = 0; i < l; ++i)
        es.emplace_back(k, next++);
    for (int w = 1; w < k; ++w)
        for (int i = 0; i < lp; ++i)
            es.emplace_back(w, next++);
    return Graph::from_edges(next, es);
}

Graph circulant(const std::vector<int>& params) {
    if (params.size() < 2)
        throw std::invalid_argument("circulant needs order and at least one step");
    int n = params[0];
    if (n < 3)
        throw std::invalid_argument("circulant needs n >= 3");
    std::vector<std::pair<int, int>> es;
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (size_t i = 1; i < params.size(); ++i) {
        int s = params[i];
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("circulant step out of range");
        if (used[static_cast<size_t>(s)])
            throw std::invalid_argument("duplicate circulant step");
        used[static_cast<size_t>(s)] = true;
        for (int v = 0; v < n; ++v) {
            int w = (v + s) % n;
            es.emplace_back(std::min(v, w), std::max(v, w));
        }
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph::from_edges(n, es);
}

} // namespace

Graph build_named(const NamedGraphSpec& spec) {
    switch (spec.kind) {
    case GraphKind::Complete:
        need_params(spec, 1, "K_n");
        return complete(spec.params[0]);
    case GraphKind::Empty:
        need_params(spec, 1, "E_n");
        return Graph(spec.params[0]);
    case GraphKind::Path:
        need_params(spec, 1, "P_n");
        return path(spec.params[0]);
    case GraphKind::Cycle:
        need_params(spec, 1, "C_n");
        return cycle(spec.params[0]);
    case GraphKind::CompleteBipartite: {
        need_params(spec, 2, "K_{a,b}");
        int a = spec.params[0], b = spec.params[1];
        if (a < 0 || b < 0)
            throw std::invalid_argument("K_{a,b} needs non-negative parts");
        return join(Graph(a), Graph(b));
    }
    case GraphKind::Star: {
        need_params(spec, 1, "K_{1,r}");
        int r = spec.params[0];
        if (r < 0)
            throw std::invalid_argument("star needs r >= 0");
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i <= r; ++i)
            es.emplace_back(0, i);
        return Graph::from_edges(r + 1, es);
    }
    case GraphKind::DoubleStar:
        need_params(spec, 2, "D_{a,b}");
        return double_star(spec.params[0], spec.params[1]);
    case GraphKind::Matching: {
        need_params(spec, 1, "tK_2");
        int t = spec.params[0];
        if (t < 0)
            throw std::invalid_argument("matching needs t >= 0");
        return k_copies(path(2), t);
    }
    case GraphKind::CyclePlus: {
        need_params(spec, 1, "C_k^+");
        int k = spec.params[0];
        return cycle(k).padded(k + 1).with_edge(0, k);
    }
    case GraphKind::BGraph: {
        need_params(spec, 1, "B_k");
        int k = spec.params[0];
        return d_leaf(2, k, 0);
    }
    case GraphKind::W4Minus:
        need_params(spec, 0, "W4^-");
        return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
    case GraphKind::C4PlusPlus:
        need_params(spec, 0, "C4^{++}");
        return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}});
    case GraphKind::H1: {
        need_params(spec, 0, "H1");
        Graph g = complete(6);
        g = g.without_edge(g.edge_index(0, 1));
        g = g.without_edge(g.edge_index(1, 2));
        return g;
    }
    case GraphKind::H2: {
        need_params(spec, 0, "H2");
        Graph g = complete(6);
        g = g.without_edge(g.edge_index(0, 1));
        g = g.without_edge(g.edge_index(2, 3));
        return g;
    }
    case GraphKind::Split: {
        need_params(spec, 2, "split graph");
        int a = spec.params[0], b = spec.params[1];
        if (a < 0 || b < 0)
            throw std::invalid_argument("split graph needs non-negative parts");
        return join(complete(a), Graph(b));
    }
    case GraphKind::DLeaf:
        need_params(spec, 3, "D_{l,k,l'}");
        return d_leaf(spec.params[0], spec.params[1], spec.params[2]);
    case GraphKind::Circulant:
        if (spec.params.size() < 2)
            throw std::invalid_argument("circulant needs order and steps");
        return circulant(spec.params);
    }
    throw std::invalid_argument("unknown graph kind");
}

std::string NamedGraphSpec::to_string() const {
    auto join_params = [&](const char* name) {
        std::ostringstream os;
        os << name;
        for (size_t i = 0; i < params.size(); ++i)
            os << (i == 0 ? ":" : ",") << params[i];
        return os.str();
    };
    switch (kind) {
    case GraphKind::Complete: return join_params("K");
    case GraphKind::Empty: return join_params("E");
    case GraphKind::Path: return join_params("P");
    case GraphKind::Cycle: return join_params("C");
    case GraphKind::CompleteBipartite: return join_params("Kab");
    case GraphKind::Star: return join_params("star");
    case GraphKind::DoubleStar: return join_params("dstar");
    case GraphKind::Matching: return join_params("M");
    case GraphKind::CyclePlus: return join_params("Ckplus");
    case GraphKind::BGraph: return join_params("B");
    case GraphKind::W4Minus: return "W4minus";
    case GraphKind::C4PlusPlus: return "C4pp";
    case GraphKind::H1: return "H1";
    case GraphKind::H2: return "H2";
    case GraphKind::Split: return join_params("split");
    case GraphKind::DLeaf: return join_params("D");
    case GraphKind::Circulant: return join_params("circ");
    }
    return "?";
}

namespace {

std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, sep)) {
        if (tok.empty())
            throw std::invalid_argument("empty parameter in graph spec");
        size_t used = 0;
        int val = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad integer in graph spec: " + tok);
        out.push_back(val);
    }
    if (out.empty())
        throw std::invalid_argument("missing parameters in graph spec");
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

NamedGraphSpec parse_named_spec(const std::string& input) {
    std::string s = input;
    // colon form
    if (auto c = s.find(':'); c != std::string::npos) {
        std::string name = lower(s.substr(0, c));
        std::vector<int> params = parse_int_list(s.substr(c + 1), ',');
        if (name == "k") return {GraphKind::Complete, params};
        if (name == "e") return {GraphKind::Empty, params};
        if (name == "p") return {GraphKind::Path, params};
        if (name == "c") return {GraphKind::Cycle, params};
        if (name == "kab") return {GraphKind::CompleteBipartite, params};
        if (name == "star") return {GraphKind::Star, params};
        if (name == "dstar") return {GraphKind::DoubleStar, params};
        if (name == "m") return {GraphKind::Matching, params};
        if (name == "ckplus") return {GraphKind::CyclePlus, params};
        if (name == "b") return {GraphKind::BGraph, params};
        if (name == "split") return {GraphKind::Split, params};
        if (name == "d") return {GraphKind::DLeaf, params};
        if (name == "circ") return {GraphKind::Circulant, params};
        throw std::invalid_argument("unknown graph spec: " + input);
    }
    std::string low = lower(s);
    if (low == "w4minus" || low == "w4-") return {GraphKind::W4Minus, {}};
    if (low == "c4pp" || low == "c4++") return {GraphKind::C4PlusPlus, {}};
    if (low == "h1") return {GraphKind::H1, {}};
    if (low == "h2") return {GraphKind::H2, {}};
    // compact forms
    if (s.size() >= 3 && (s.compare(s.size() - 2, 2, "K2") == 0) && all_digits(s.substr(0, s.size() - 2)))
        return {GraphKind::Matching, {std::stoi(s.substr(0, s.size() - 2))}};
    if (low == "k2") return {GraphKind::Matching, {1}};
    if (s.size() >= 3 && (s[0] == 'K' || s[0] == 'k') && s.compare(1, 2, "1,") == 0 && all_digits(s.substr(3)))
        return {GraphKind::Star, {std::stoi(s.substr(3))}};
    if (low.rfind("ckplus", 0) == 0 && all_digits(s.substr(6)))
        return {GraphKind::CyclePlus, {std::stoi(s.substr(6))}};
    if (low.rfind("kb", 0) == 0) {
        auto dash = s.find('-');
        if (dash != std::string::npos && all_digits(s.substr(2, dash - 2)) && all_digits(s.substr(dash + 1)))
            return {GraphKind::CompleteBipartite,
                    {std::stoi(s.substr(2, dash - 2)), std::stoi(s.substr(dash + 1))}};
    }
    if (s.size() >= 2 && !all_digits(s)) {
        char head = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        std::string rest = s.substr(1);
        if (head == 'D') {
            auto dash = rest.find('-');
            if (dash != std::string::npos && all_digits(rest.substr(0, dash)) && all_digits(rest.substr(dash + 1)))
                return {GraphKind::DoubleStar,
                        {std::stoi(rest.substr(0, dash)), std::stoi(rest.substr(dash + 1))}};
        }
        if (all_digits(rest)) {
            int v = std::stoi(rest);
            switch (head) {
            case 'K': return {GraphKind::Complete, {v}};
            case 'E': return {GraphKind::Empty, {v}};
            case 'P': return {GraphKind::Path, {v}};
            case 'C': return {GraphKind::Cycle, {v}};
            case 'S': return {GraphKind::Star, {v}};
            case 'B': return {GraphKind::BGraph, {v}};
            default: break;
            }
        }
    }
    throw std::invalid_argument("unknown graph spec: " + input);
}

Graph parse_graph_spec(const std::string& s) {
    if (s.rfind("g6:", 0) == 0)
        return from_graph6(s.substr(3));
    if (s.rfind(">>graph6<<", 0) == 0)
        return from_graph6(s);
    return build_named(parse_named_spec(s));
}

} // namespace edgemap
