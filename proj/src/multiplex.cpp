#include "lart/multiplex.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lart {

Multiplex::Multiplex(int num_nodes, int num_layers)
    : num_nodes_(num_nodes), num_layers_(num_layers) {
    if (num_nodes < 1) throw std::invalid_argument("num_nodes must be >= 1");
    if (num_layers < 1) throw std::invalid_argument("num_layers must be >= 1");
    adj_.assign(num_layers_, std::vector<std::vector<int>>(num_nodes_));
}

void Multiplex::check_node(int v) const {
    if (v < 0 || v >= num_nodes_)
        throw std::invalid_argument("node index " + std::to_string(v) + " out of range [0," +
                                    std::to_string(num_nodes_) + ")");
}

void Multiplex::check_layer(int k) const {
    if (k < 0 || k >= num_layers_)
        throw std::invalid_argument("layer index " + std::to_string(k) + " out of range [0," +
                                    std::to_string(num_layers_) + ")");
}

void Multiplex::add_edge(int layer, int u, int v) {
    check_layer(layer);
    check_node(u);
    check_node(v);
    if (u == v) throw std::invalid_argument("self-loop (" + std::to_string(u) + ") rejected");
    auto& nu = adj_[layer][u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") in layer " + std::to_string(layer));
    nu.insert(it, v);
    auto& nv = adj_[layer][v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

bool Multiplex::has_edge(int layer, int u, int v) const {
    check_layer(layer);
    check_node(u);
    check_node(v);
    const auto& nu = adj_[layer][u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Multiplex::neighbors(int node, int layer) const {
    check_layer(layer);
    check_node(node);
    return adj_[layer][node];
}

std::vector<std::pair<int, int>> Multiplex::edges(int layer) const {
    check_layer(layer);
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_nodes_; ++u)
        for (int v : adj_[layer][u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::size_t Multiplex::num_edges() const {
    std::size_t total = 0;
    for (int k = 0; k < num_layers_; ++k)
        for (int u = 0; u < num_nodes_; ++u) total += adj_[k][u].size();
    return total / 2;
}

int interlayer_weight(const Multiplex& m, int node, int layer_k, int layer_l) {
    if (layer_k == layer_l) throw std::invalid_argument("interlayer_weight requires k != l");
    const auto& a = m.neighbors(node, layer_k);
    const auto& b = m.neighbors(node, layer_l);
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

Multiplex read_multiplex_stream(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, l = -1;
    // header
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hs(line);
        std::string layers_tok, nodes_tok;
        hs >> layers_tok >> nodes_tok;
        if (layers_tok.rfind("layers=", 0) != 0 || nodes_tok.rfind("nodes=", 0) != 0)
            throw ParseError("expected header 'layers=<L> nodes=<N>'", lineno);
        try {
            l = std::stoi(layers_tok.substr(7));
            n = std::stoi(nodes_tok.substr(6));
        } catch (const std::exception&) {
            throw ParseError("malformed header counts", lineno);
        }
        break;
    }
    if (n < 1 || l < 1) throw ParseError("missing or invalid header", lineno);

    Multiplex m(n, l);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream es(line);
        int layer, u, v;
        if (!(es >> layer >> u >> v)) throw ParseError("malformed edge line", lineno);
        std::string rest;
        if (es >> rest) throw ParseError("trailing tokens on edge line", lineno);
        try {
            m.add_edge(layer, u, v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return m;
}

Multiplex read_multiplex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_multiplex_stream(in);
}

void write_multiplex_stream(const Multiplex& m, std::ostream& out) {
    out << "layers=" << m.num_layers() << " nodes=" << m.num_nodes() << "\n";
    for (int k = 0; k < m.num_layers(); ++k)
        for (auto [u, v] : m.edges(k)) out << k << " " << u << " " << v << "\n";
}

void write_multiplex(const Multiplex& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_multiplex_stream(m, out);
}

}  // namespace lart
