#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lart {

/// A node copy in a specific layer; the atomic clustering element.
struct NodeLayer {
    int node = 0;
    int layer = 0;

    friend bool operator==(const NodeLayer&, const NodeLayer&) = default;
};

/// Error raised when an input file cannot be parsed. Carries the 1-based
/// line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// An L-layered multiplex: N nodes shared by all layers, each layer an
/// undirected unweighted graph over node indices 0..N-1.
///
/// Immutable after construction. Node-layer pairs map to flat indices
/// layer-major: (node i, layer k) -> k*N + i.
class Multiplex {
public:
    Multiplex(int num_nodes, int num_layers);

    int num_nodes() const { return num_nodes_; }
    int num_layers() const { return num_layers_; }
    int size() const { return num_nodes_ * num_layers_; }

    int flat_index(int node, int layer) const { return layer * num_nodes_ + node; }
    NodeLayer from_flat(int x) const { return {x % num_nodes_, x / num_nodes_}; }

    /// Inserts the undirected edge {u,v} into `layer`. Rejects self-loops,
    /// out-of-range endpoints, and duplicates.
    void add_edge(int layer, int u, int v);

    bool has_edge(int layer, int u, int v) const;

    /// Sorted neighbor list of `node` in `layer`.
    const std::vector<int>& neighbors(int node, int layer) const;

    int degree(int node, int layer) const { return static_cast<int>(neighbors(node, layer).size()); }

    /// Edges of one layer as canonical (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges(int layer) const;

    std::size_t num_edges() const;

    friend bool operator==(const Multiplex&, const Multiplex&) = default;

private:
    void check_node(int v) const;
    void check_layer(int k) const;

    int num_nodes_;
    int num_layers_;
    // adj_[layer][node] = sorted neighbor list
    std::vector<std::vector<std::vector<int>>> adj_;
};

/// Number of neighbors node i has in common between layers k and l.
/// Symmetric in (k,l); bounded by min(deg_k(i), deg_l(i)).
int interlayer_weight(const Multiplex& m, int node, int layer_k, int layer_l);

/// Reads the multiplex text format:
///   layers=<L> nodes=<N>
///   <layer> <u> <v>
/// `#`-prefixed lines are comments. Throws ParseError on malformed input.
Multiplex read_multiplex(const std::string& path);
Multiplex read_multiplex_stream(std::istream& in);

/// Writes the same format, edges canonical (u < v), layers in order.
void write_multiplex(const Multiplex& m, const std::string& path);
void write_multiplex_stream(const Multiplex& m, std::ostream& out);

}  // namespace lart
