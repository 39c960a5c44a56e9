#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bestreply/polycost.hpp"

namespace bestreply {

// JSON syntax problems (message carries the byte position reported by the
// JSON parser).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Semantic problems: unknown keys, dangling ids, negative coefficients, ...
// The message names the violated constraint.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Explicit, Network };

struct Request {
    double weight = 1.0;
    // Explicit mode: list of candidate resource sets, first-in-list order is
    // meaningful (tie-break policy, enumeration order).
    std::vector<std::vector<std::string>> allocations;
    // Network mode.
    std::string source;
    std::string target;

    bool operator==(const Request&) const = default;
};

struct NetworkEdge {
    std::string id;
    std::string from;
    std::string to;
    PolyCost cost;

    bool operator==(const NetworkEdge&) const = default;
};

// Maximum polynomial degree accepted by the parser; direct binary64
// arithmetic stays in range for everything the toolkit evaluates up to here.
inline constexpr int kMaxDegree = 50;

struct Instance {
    Mode mode = Mode::Explicit;
    // Resource id -> cost. In network mode this mirrors the edges (edge ids
    // are the resource ids), so loads and total cost work uniformly.
    std::map<std::string, PolyCost> resources;
    std::vector<Request> requests;
    // Network mode only.
    std::vector<std::string> nodes;
    std::vector<NetworkEdge> edges;

    bool unweighted() const;
    int max_degree() const; // max over resources, 0 for an empty instance
    void validate() const;  // throws ValidationError

    bool operator==(const Instance&) const = default;
};

// Rebuild the resources map from the edge list (network instances keep the
// two in sync so loads and costs work uniformly across modes).
void sync_network_resources(Instance& inst);

Instance parse_instance(const std::string& text);

// Canonical JSON serialization; parse_instance(serialize_instance(i)) is the
// identity, and serialization itself is byte-deterministic.
std::string serialize_instance(const Instance& inst);

struct GenerateParams {
    Mode mode = Mode::Explicit;
    int num_resources = 4; // network mode: number of nodes
    int num_requests = 4;
    int max_degree = 2;
    int max_allocations = 2;
    bool weighted = false;
    std::uint64_t seed = 1;
};

Instance generate_random(const GenerateParams& p);

} // namespace bestreply
