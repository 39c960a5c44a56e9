#include "bestreply/instance.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>

#include "json.hpp"

#include "bestreply/rng.hpp"

namespace bestreply {

namespace {

using ordered_json = nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj,
                         std::initializer_list<const char*> allowed, const char* ctx) {
    for (const auto& item : obj.items()) {
        const std::string& key = item.key();
        if (std::none_of(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }))
            throw ValidationError("unknown key \"" + key + "\" in " + ctx);
    }
}

const ordered_json& require_key(const ordered_json& obj, const char* key, const char* ctx) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError(std::string("missing key \"") + key + "\" in " + ctx);
    return *it;
}

std::string get_string(const ordered_json& v, const char* what) {
    if (!v.is_string()) throw ValidationError(std::string(what) + " must be a string");
    return v.get<std::string>();
}

double get_number(const ordered_json& v, const char* what) {
    if (!v.is_number()) throw ValidationError(std::string(what) + " must be a number");
    return v.get<double>();
}

PolyCost parse_coeffs(const ordered_json& v, const char* ctx) {
    if (!v.is_array()) throw ValidationError(std::string("coeffs in ") + ctx + " must be an array");
    PolyCost c;
    for (const auto& e : v) c.coeffs.push_back(get_number(e, "coefficient"));
    return c;
}

double parse_weight(const ordered_json& obj) {
    auto it = obj.find("weight");
    return it == obj.end() ? 1.0 : get_number(*it, "weight");
}

} // namespace

bool Instance::unweighted() const {
    return std::all_of(requests.begin(), requests.end(),
                       [](const Request& r) { return r.weight == 1.0; });
}

int Instance::max_degree() const {
    int d = 0;
    for (const auto& [id, cost] : resources) d = std::max(d, cost.degree());
    return d;
}

void Instance::validate() const {
    for (const auto& [id, cost] : resources) {
        if (id.empty()) throw ValidationError("empty resource id");
        if (static_cast<int>(cost.coeffs.size()) > kMaxDegree + 1)
            throw ValidationError("degree above " + std::to_string(kMaxDegree) +
                                  " for resource \"" + id + "\"");
        for (double a : cost.coeffs) {
            if (!std::isfinite(a))
                throw ValidationError("non-finite coefficient for resource \"" + id + "\"");
            if (a < 0.0)
                throw ValidationError("negative coefficient for resource \"" + id + "\"");
        }
    }

    for (const Request& req : requests) {
        if (!std::isfinite(req.weight) || req.weight <= 0.0)
            throw ValidationError("request weight must be a positive finite number");
    }

    if (mode == Mode::Explicit) {
        if (!nodes.empty() || !edges.empty())
            throw ValidationError("explicit instance cannot carry nodes or edges");
        for (const Request& req : requests) {
            if (!req.source.empty() || !req.target.empty())
                throw ValidationError("explicit request cannot carry source/target");
            if (req.allocations.empty())
                throw ValidationError("request with empty allocation list");
            for (const auto& alloc : req.allocations) {
                if (alloc.empty()) throw ValidationError("empty allocation");
                std::set<std::string> seen;
                for (const std::string& r : alloc) {
                    if (!resources.count(r))
                        throw ValidationError("allocation references unknown resource \"" + r + "\"");
                    if (!seen.insert(r).second)
                        throw ValidationError("duplicate resource \"" + r + "\" in one allocation");
                }
            }
        }
        return;
    }

    // network mode
    if (nodes.empty()) throw ValidationError("network instance needs at least one node");
    std::set<std::string> node_set;
    for (const std::string& n : nodes) {
        if (n.empty()) throw ValidationError("empty node id");
        if (!node_set.insert(n).second)
            throw ValidationError("duplicate node id \"" + n + "\"");
    }

    std::map<std::string, const PolyCost*> edge_ids;
    std::map<std::string, std::vector<std::string>> adj; // node -> successor nodes
    for (const NetworkEdge& e : edges) {
        if (e.id.empty()) throw ValidationError("empty edge id");
        if (!edge_ids.emplace(e.id, &e.cost).second)
            throw ValidationError("duplicate edge id \"" + e.id + "\"");
        if (!node_set.count(e.from))
            throw ValidationError("edge \"" + e.id + "\" leaves unknown node \"" + e.from + "\"");
        if (!node_set.count(e.to))
            throw ValidationError("edge \"" + e.id + "\" enters unknown node \"" + e.to + "\"");
        adj[e.from].push_back(e.to);
    }

    if (resources.size() != edge_ids.size())
        throw ValidationError("resources must mirror edges in network mode");
    for (const auto& [id, cost] : resources) {
        auto it = edge_ids.find(id);
        if (it == edge_ids.end() || !(*it->second == cost))
            throw ValidationError("resources must mirror edges in network mode");
    }

    for (const Request& req : requests) {
        if (!req.allocations.empty())
            throw ValidationError("network request cannot carry an allocation list");
        if (!node_set.count(req.source))
            throw ValidationError("unknown source node \"" + req.source + "\"");
        if (!node_set.count(req.target))
            throw ValidationError("unknown target node \"" + req.target + "\"");
        if (req.source == req.target)
            throw ValidationError("request source equals target");
        // reachability: BFS over the successor map
        std::set<std::string> seen{req.source};
        std::deque<std::string> frontier{req.source};
        bool found = false;
        while (!frontier.empty() && !found) {
            std::string u = frontier.front();
            frontier.pop_front();
            for (const std::string& v : adj[u]) {
                if (v == req.target) { found = true; break; }
                if (seen.insert(v).second) frontier.push_back(v);
            }
        }
        if (!found)
            throw ValidationError("no path from \"" + req.source + "\" to \"" + req.target + "\"");
    }
}

void sync_network_resources(Instance& inst) {
    inst.resources.clear();
    for (const NetworkEdge& e : inst.edges) inst.resources[e.id] = e.cost;
}

Instance parse_instance(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what()); // message carries line/column position
    }
    if (!j.is_object()) throw ValidationError("top level must be an object");

    Instance inst;
    const std::string mode = get_string(require_key(j, "mode", "document"), "mode");
    if (mode == "explicit")
        inst.mode = Mode::Explicit;
    else if (mode == "network")
        inst.mode = Mode::Network;
    else
        throw ValidationError("mode must be \"explicit\" or \"network\"");

    if (inst.mode == Mode::Explicit) {
        reject_unknown_keys(j, {"mode", "resources", "requests"}, "document");
        for (const auto& r : require_key(j, "resources", "document")) {
            if (!r.is_object()) throw ValidationError("resource entries must be objects");
            reject_unknown_keys(r, {"id", "coeffs"}, "resource");
            std::string id = get_string(require_key(r, "id", "resource"), "id");
            if (!inst.resources.emplace(id, parse_coeffs(require_key(r, "coeffs", "resource"),
                                                         "resource"))
                     .second)
                throw ValidationError("duplicate resource id \"" + id + "\"");
        }
        for (const auto& q : require_key(j, "requests", "document")) {
            if (!q.is_object()) throw ValidationError("request entries must be objects");
            reject_unknown_keys(q, {"weight", "allocations"}, "request");
            Request req;
            req.weight = parse_weight(q);
            const auto& allocs = require_key(q, "allocations", "request");
            if (!allocs.is_array()) throw ValidationError("allocations must be an array");
            for (const auto& a : allocs) {
                if (!a.is_array()) throw ValidationError("each allocation must be an array");
                std::vector<std::string> ids;
                for (const auto& s : a) ids.push_back(get_string(s, "resource reference"));
                req.allocations.push_back(std::move(ids));
            }
            inst.requests.push_back(std::move(req));
        }
    } else {
        reject_unknown_keys(j, {"mode", "nodes", "edges", "requests"}, "document");
        for (const auto& n : require_key(j, "nodes", "document"))
            inst.nodes.push_back(get_string(n, "node id"));
        for (const auto& e : require_key(j, "edges", "document")) {
            if (!e.is_object()) throw ValidationError("edge entries must be objects");
            reject_unknown_keys(e, {"id", "from", "to", "coeffs"}, "edge");
            NetworkEdge edge;
            edge.id = get_string(require_key(e, "id", "edge"), "id");
            edge.from = get_string(require_key(e, "from", "edge"), "from");
            edge.to = get_string(require_key(e, "to", "edge"), "to");
            edge.cost = parse_coeffs(require_key(e, "coeffs", "edge"), "edge");
            inst.edges.push_back(std::move(edge));
        }
        for (const auto& q : require_key(j, "requests", "document")) {
            if (!q.is_object()) throw ValidationError("request entries must be objects");
            reject_unknown_keys(q, {"weight", "source", "target"}, "request");
            Request req;
            req.weight = parse_weight(q);
            req.source = get_string(require_key(q, "source", "request"), "source");
            req.target = get_string(require_key(q, "target", "request"), "target");
            inst.requests.push_back(std::move(req));
        }
        sync_network_resources(inst);
    }

    inst.validate();
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    ordered_json j;
    if (inst.mode == Mode::Explicit) {
        j["mode"] = "explicit";
        auto& res = j["resources"] = ordered_json::array();
        for (const auto& [id, cost] : inst.resources)
            res.push_back({{"id", id}, {"coeffs", cost.coeffs}});
        auto& reqs = j["requests"] = ordered_json::array();
        for (const Request& r : inst.requests)
            reqs.push_back({{"weight", r.weight}, {"allocations", r.allocations}});
    } else {
        j["mode"] = "network";
        j["nodes"] = inst.nodes;
        auto& edges = j["edges"] = ordered_json::array();
        for (const NetworkEdge& e : inst.edges)
            edges.push_back(
                {{"id", e.id}, {"from", e.from}, {"to", e.to}, {"coeffs", e.cost.coeffs}});
        auto& reqs = j["requests"] = ordered_json::array();
        for (const Request& r : inst.requests)
            reqs.push_back({{"weight", r.weight}, {"source", r.source}, {"target", r.target}});
    }
    return j.dump(2) + "\n";
}

namespace {

std::string padded_id(char prefix, int i, int count) {
    int width = 1;
    for (int n = count; n >= 10; n /= 10) ++width;
    std::string digits = std::to_string(i);
    return prefix + std::string(width - digits.size(), '0') + digits;
}

PolyCost random_cost(Rng& rng, int max_degree) {
    PolyCost c;
    const int deg = static_cast<int>(rng.below(max_degree + 1));
    for (int k = 0; k <= deg; ++k) c.coeffs.push_back(rng.real01());
    return c;
}

double random_weight(Rng& rng, bool weighted) {
    return weighted ? 0.25 + 1.75 * rng.real01() : 1.0;
}

} // namespace

Instance generate_random(const GenerateParams& p) {
    if (p.num_resources < 1 || p.num_requests < 1 || p.max_allocations < 1 ||
        p.max_degree < 0)
        throw std::domain_error("generate_random: counts must be >= 1, max_degree >= 0");

    Rng rng(p.seed);
    Instance inst;
    inst.mode = p.mode;

    if (p.mode == Mode::Explicit) {
        std::vector<std::string> ids;
        for (int i = 1; i <= p.num_resources; ++i) {
            ids.push_back(padded_id('r', i, p.num_resources));
            inst.resources[ids.back()] = random_cost(rng, p.max_degree);
        }
        const int max_set = std::min(p.num_resources, 4);
        for (int i = 0; i < p.num_requests; ++i) {
            Request req;
            req.weight = random_weight(rng, p.weighted);
            const int n_alloc = 1 + static_cast<int>(rng.below(p.max_allocations));
            for (int a = 0; a < n_alloc; ++a) {
                // distinct resources via partial Fisher-Yates, then sorted
                std::vector<std::string> pool = ids;
                const int size = 1 + static_cast<int>(rng.below(max_set));
                std::vector<std::string> alloc;
                for (int k = 0; k < size; ++k) {
                    const auto j = k + rng.below(pool.size() - k);
                    std::swap(pool[k], pool[j]);
                    alloc.push_back(pool[k]);
                }
                std::sort(alloc.begin(), alloc.end());
                req.allocations.push_back(std::move(alloc));
            }
            inst.requests.push_back(std::move(req));
        }
    } else {
        const int n = std::max(p.num_resources, 2); // nodes; need a real arc
        for (int i = 1; i <= n; ++i) inst.nodes.push_back(padded_id('v', i, n));
        // forward backbone guarantees reachability, extra forward edges add
        // alternative routes; the graph is a DAG by construction
        int edge_no = 0;
        const int extra = n;
        auto add_edge = [&](int from, int to) {
            NetworkEdge e;
            e.id = padded_id('e', ++edge_no, n - 1 + extra);
            e.from = inst.nodes[from];
            e.to = inst.nodes[to];
            e.cost = random_cost(rng, p.max_degree);
            inst.edges.push_back(std::move(e));
        };
        for (int i = 0; i + 1 < n; ++i) add_edge(i, i + 1);
        for (int k = 0; k < extra; ++k) {
            const int from = static_cast<int>(rng.below(n - 1));
            const int to = from + 1 + static_cast<int>(rng.below(n - 1 - from));
            add_edge(from, to);
        }
        for (int i = 0; i < p.num_requests; ++i) {
            Request req;
            req.weight = random_weight(rng, p.weighted);
            const int s = static_cast<int>(rng.below(n - 1));
            const int t = s + 1 + static_cast<int>(rng.below(n - 1 - s));
            req.source = inst.nodes[s];
            req.target = inst.nodes[t];
            inst.requests.push_back(std::move(req));
        }
        sync_network_resources(inst);
    }

    inst.validate();
    return inst;
}

} // namespace bestreply
