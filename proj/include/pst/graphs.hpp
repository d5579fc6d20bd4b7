#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pst/rng.hpp"

namespace pst {

struct DiGraph {
    int n = 0;
    std::vector<std::vector<int>> adj; // out-edges, sorted after finalize()
    int source = 0;
    int target = 0;

    void add_edge(int u, int v);
    void finalize(); // sort adjacency lists; required before has_edge
    bool has_edge(int u, int v) const;
    size_t edge_count() const;
};

struct Chain {
    std::vector<int> nodes; // non-empty
};

// Abstract cost counters: edge_checks counts membership tests, visited_edges
// counts traversal work, depth is the modeled parallel depth.
struct WorkCounters {
    uint64_t edge_checks = 0;
    uint64_t visited_edges = 0;
    uint64_t depth = 0;
};

struct VerifyResult {
    bool ok = false;
    int failing_index = -1; // first i with (v_i, v_{i+1}) not an edge
    WorkCounters work;
};

// True iff the chain starts at source, ends at target and every consecutive
// pair is an edge. The k membership tests are independent (modeled depth 1).
VerifyResult verify_chain(const DiGraph& g, const Chain& chain);

struct PathResult {
    std::optional<Chain> chain; // a shortest source->target chain
    WorkCounters work;          // visited_edges = edges relaxed by the search
};

PathResult find_path(const DiGraph& g);

enum class NodeKind : uint8_t { and_node, or_node };

struct AndOrGraph {
    DiGraph g; // edges point dependency -> dependent (u reachable helps v)
    std::vector<NodeKind> kinds;
    std::vector<int> seeds;
};

// Least-fixpoint marking: a seed is reachable; an or-node becomes reachable
// when any predecessor is; an and-node when all predecessors are. A node
// without predecessors is reachable only as a seed. Returns the marking of
// g.target.
bool andor_reachable(const AndOrGraph& g);

// Full marking vector, exposed for oracle comparisons.
std::vector<bool> andor_marking(const AndOrGraph& g);

struct HornClause {
    std::optional<int> head;  // the positive literal, if any
    std::vector<int> body;    // negated variables
};

struct HornFormula {
    int num_vars = 0;
    std::vector<HornClause> clauses;
    int query = 0; // variable whose derivability is asked

    void validate() const; // Horn property and variable ranges
};

struct HornResult {
    AndOrGraph graph;
    bool derivable; // query variable follows from facts via rules
};

// Standard derivability encoding: one or-node per variable, one and-node per
// rule (edges body vars -> rule node -> head var); facts become seeds and
// the query variable is the target.
HornResult horn_to_andor(const HornFormula& formula);

// Erdos-Renyi over a fixed topological order (u -> v only for u < v), so the
// result is a DAG. source = 0, target = n-1.
DiGraph random_dag(int n, double density, Rng& rng);

struct AsymmetryRow {
    int n = 0;
    size_t edges = 0;
    int instances = 0;
    int solvable = 0;
    double mean_verify_work = 0.0;   // edge membership tests per found path
    double mean_generate_work = 0.0; // visited edges per search
    double mean_path_len = 0.0;
};

// For each size: random graphs, search cost vs verification cost of the found
// chain. Illustrates the cost gap; proves nothing about circuit classes.
std::vector<AsymmetryRow> asymmetry_report(const std::vector<int>& sizes, double density,
                                           int instances_per_size, uint64_t seed);
void save_asymmetry_csv(const std::vector<AsymmetryRow>& rows, const std::string& path);

// Text format: "n m" line, m lines "u v", then optional directive lines
// "st <source> <target>", "labels <a|o per node>", "seeds <ids...>".
struct GraphFile {
    DiGraph g;
    std::optional<std::vector<NodeKind>> kinds;
    std::optional<std::vector<int>> seeds;
};

GraphFile load_graph_file(const std::string& path);
void save_graph_file(const GraphFile& gf, const std::string& path);

// DIMACS-like: "p horn <vars> <clauses>", clause lines of signed 1-based
// literals ending with 0, "q <var>" for the query. Validates the Horn
// property on load.
HornFormula load_horn_file(const std::string& path);
void save_horn_file(const HornFormula& f, const std::string& path);

} // namespace pst
