#include "cheeger_lab/io.hpp"

#include "cheeger_lab/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace cheeger_lab {

namespace {

using nlohmann::json;

Rat parse_weight_json(const json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number_float()) {
        // route through the decimal text so 0.25 stays exact
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return parse_rational(os.str());
    }
    throw ParseError(what + " must be a number or a rational string");
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok) throw ParseError("unknown field '" + it.key() + "' in " + where);
    }
}

}  // namespace

GraphDoc parse_graph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be a JSON object");
    reject_unknown(doc, {"vertices", "edges"}, "top level");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("missing 'vertices' array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("missing 'edges' array");

    std::vector<std::int64_t> ids;
    std::map<std::int64_t, Rat> mu_by_id;
    bool any_mu = false, all_mu = true;
    for (const json& v : doc["vertices"]) {
        if (!v.is_object()) throw ParseError("vertex entries must be objects");
        reject_unknown(v, {"id", "mu"}, "vertex");
        if (!v.contains("id") || !v["id"].is_number_integer())
            throw ParseError("vertex requires an integer 'id'");
        const std::int64_t id = v["id"].get<std::int64_t>();
        if (mu_by_id.count(id) || std::count(ids.begin(), ids.end(), id))
            throw ParseError("duplicate vertex id " + std::to_string(id));
        ids.push_back(id);
        if (v.contains("mu")) {
            any_mu = true;
            Rat m = parse_weight_json(v["mu"], "mu");
            if (m <= 0) throw ParseError("mu must be positive at vertex " + std::to_string(id));
            mu_by_id.emplace(id, std::move(m));
        } else {
            all_mu = false;
        }
    }
    if (any_mu && !all_mu) throw ParseError("either all vertices carry 'mu' or none do");
    if (ids.empty()) throw ParseError("graph needs at least one vertex");

    std::sort(ids.begin(), ids.end());
    std::map<std::int64_t, int> dense;
    for (std::size_t i = 0; i < ids.size(); ++i) dense[ids[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const json& e : doc["edges"]) {
        if (!e.is_object()) throw ParseError("edge entries must be objects");
        reject_unknown(e, {"u", "v", "w"}, "edge");
        for (const char* f : {"u", "v", "w"})
            if (!e.contains(f)) throw ParseError(std::string("edge missing field '") + f + "'");
        if (!e["u"].is_number_integer() || !e["v"].is_number_integer())
            throw ParseError("edge endpoints must be integer vertex ids");
        const std::int64_t u = e["u"].get<std::int64_t>(), v = e["v"].get<std::int64_t>();
        if (!dense.count(u) || !dense.count(v))
            throw ParseError("edge references unknown vertex id");
        edges.push_back({dense[u], dense[v], parse_weight_json(e["w"], "w")});
    }

    const int n = static_cast<int>(ids.size());
    std::vector<Rat> mu;
    if (any_mu) {
        for (std::int64_t id : ids) mu.push_back(mu_by_id.at(id));
    } else {
        mu = default_mu(n, edges);
    }
    return GraphDoc{WeightedGraph(n, std::move(mu), std::move(edges)), ids, any_mu};
}

GraphDoc parse_graph_tsv(const std::string& text) {
    std::vector<std::tuple<std::int64_t, std::int64_t, Rat>> raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string us, vs, ws;
        if (!std::getline(ls, us, '\t') || !std::getline(ls, vs, '\t') || !std::getline(ls, ws))
            throw ParseError("line " + std::to_string(lineno) + ": expected u<TAB>v<TAB>w");
        try {
            raw.emplace_back(std::stoll(us), std::stoll(vs), parse_rational(ws));
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError("line " + std::to_string(lineno) + ": malformed vertex id");
        }
    }
    if (raw.empty()) throw ParseError("TSV edge list is empty");
    std::vector<std::int64_t> ids;
    for (auto& [u, v, w] : raw) {
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::map<std::int64_t, int> dense;
    for (std::size_t i = 0; i < ids.size(); ++i) dense[ids[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto& [u, v, w] : raw) edges.push_back({dense[u], dense[v], std::move(w)});
    const int n = static_cast<int>(ids.size());
    std::vector<Rat> mu = default_mu(n, edges);
    return GraphDoc{WeightedGraph(n, std::move(mu), std::move(edges)), ids, false};
}

GraphDoc parse_graph_text(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_graph_json(text) : parse_graph_tsv(text);
    }
    throw ParseError("empty input");
}

GraphDoc parse_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_graph_text(os.str());
}

std::string emit_graph_json(const GraphDoc& doc) {
    json out;
    out["vertices"] = json::array();
    const WeightedGraph& g = doc.graph;
    for (int v = 0; v < g.n(); ++v) {
        json jv;
        jv["id"] = doc.external_ids[v];
        if (doc.mu_explicit) jv["mu"] = to_fraction_string(g.mu()[v]);
        out["vertices"].push_back(jv);
    }
    out["edges"] = json::array();
    for (const Edge& e : g.edges()) {
        json je;
        je["u"] = doc.external_ids[e.u];
        je["v"] = doc.external_ids[e.v];
        je["w"] = to_fraction_string(e.w);
        out["edges"].push_back(je);
    }
    return out.dump(2) + "\n";
}

std::string emit_graph_tsv(const GraphDoc& doc) {
    std::ostringstream os;
    for (const Edge& e : doc.graph.edges())
        os << doc.external_ids[e.u] << '\t' << doc.external_ids[e.v] << '\t'
           << to_fraction_string(e.w) << '\n';
    return os.str();
}

Fingerprint fingerprint(const WeightedGraph& g) {
    std::ostringstream os;
    os << g.n() << ';';
    for (int v = 0; v < g.n(); ++v) os << to_fraction_string(g.mu()[v]) << ',';
    os << ';';
    std::vector<std::string> es;
    for (const Edge& e : g.edges()) {
        auto [a, b] = std::minmax(e.u, e.v);
        es.push_back(std::to_string(a) + '-' + std::to_string(b) + ':' +
                     to_fraction_string(e.w));
    }
    std::sort(es.begin(), es.end());
    for (const std::string& s : es) os << s << ',';
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : os.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return Fingerprint{g.n(), static_cast<int>(g.edges().size()), g.betti_number(), h};
}

bool graphs_equal(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n() != b.n() || a.edges().size() != b.edges().size()) return false;
    if (a.mu() != b.mu()) return false;
    auto canon = [](const WeightedGraph& g) {
        std::vector<std::tuple<int, int, Rat>> es;
        for (const Edge& e : g.edges()) {
            auto [x, y] = std::minmax(e.u, e.v);
            es.emplace_back(x, y, e.w);
        }
        std::sort(es.begin(), es.end());
        return es;
    };
    return canon(a) == canon(b);
}

}  // namespace cheeger_lab
