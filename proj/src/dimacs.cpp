#include "kcx/dimacs.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace kcx {

Graph read_dimacs(std::istream& in) {
    std::string line;
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("dimacs line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string kind;
        if (!(fields >> kind) || kind == "c")
            continue;
        if (kind == "p") {
            std::string format;
            if (n >= 0)
                fail("duplicate problem line");
            if (!(fields >> format >> n >> m) || (format != "edge" && format != "col") || n < 0 || m < 0)
                fail("malformed problem line");
        } else if (kind == "e") {
            long long u = 0;
            long long v = 0;
            if (n < 0)
                fail("edge before problem line");
            if (!(fields >> u >> v))
                fail("malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                fail("vertex id out of range");
            if (u == v)
                fail("self-loop");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            fail("unknown line type '" + kind + "'");
        }
    }
    if (n < 0)
        throw ParseError("dimacs: missing problem line");
    Graph g = Graph::with_order(static_cast<int>(n), edges);
    if (static_cast<long long>(g.size()) != m)
        throw ParseError("dimacs: header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(g.size()) + " distinct");
    return g;
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
    if (!g.has_dense_ids())
        throw std::invalid_argument("write_dimacs: vertex ids must be 0..n-1");
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line))
            out << "c " << line << '\n';
    }
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g, const std::string& comment) {
    std::ostringstream out;
    write_dimacs(out, g, comment);
    return out.str();
}

std::string graph_digest(const Graph& g) {
    std::ostringstream canonical;
    canonical << "graph " << g.order() << ' ' << g.size() << '\n';
    for (Vertex v : g.vertices())
        canonical << "v " << v << '\n';
    for (auto [u, v] : g.edges())
        canonical << "e " << u << ' ' << v << '\n';
    return sha256_hex(canonical.str());
}

std::string sha256_hex(const std::string& text) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256_hex: digest failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

}  // namespace kcx
