#include "hz/graph6.hpp"

#include <fstream>
#include <stdexcept>

namespace hz {

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int group = 0;
        for (size_t j = 0; j < 6; ++j) {
            group <<= 1;
            if (i + j < bits.size() && bits[i + j]) group |= 1;
        }
        out.push_back(static_cast<char>(group + 63));
    }
}

}  // namespace

std::string to_graph6(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for this encoder");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

SimpleGraph from_graph6(std::string_view line) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > line.size()) throw std::invalid_argument("graph6: truncated input");
    };
    auto byte = [&](size_t i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return static_cast<int>(c - 63);
    };

    need(1);
    long n;
    if (line[pos] == '~') {
        need(2);
        if (line[pos + 1] == '~') {
            need(8);
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | byte(pos + 2 + i);
            pos += 8;
        } else {
            need(4);
            n = (static_cast<long>(byte(pos + 1)) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
            pos += 4;
        }
    } else {
        n = byte(pos);
        pos += 1;
    }
    if (n < 0 || n > 100000) throw std::invalid_argument("graph6: implausible vertex count");

    const long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    need(nbytes);

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    pos += nbytes;
    if (pos != line.size()) throw std::invalid_argument("graph6: trailing bytes");
    return SimpleGraph(static_cast<int>(n), edges);
}

std::vector<SimpleGraph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<SimpleGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        out.push_back(from_graph6(line));
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<SimpleGraph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace hz
