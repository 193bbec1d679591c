#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cubic/graph.hpp"

// graph6 / sparse6 text codecs, bit-exact per the published format
// specification (nauty's formats.txt). One record per line; sparse6 records
// start with ':'. Optional ">>graph6<<" / ">>sparse6<<" headers are accepted
// on input and never emitted.

namespace cubic {

struct parse_error : error {
    size_t offset;  // byte offset into the record
    parse_error(const std::string& msg, size_t at)
        : error(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

namespace detail6 {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

class BitReader {
public:
    BitReader(std::string_view data, size_t base_offset)
        : data_(data), base_(base_offset) {}

    // Number of whole bits remaining.
    size_t remaining() const { return data_.size() * 6 - pos_; }

    int take(int nbits) {
        int out = 0;
        for (int i = 0; i < nbits; ++i) {
            size_t byte = pos_ / 6;
            int bit = 5 - static_cast<int>(pos_ % 6);
            int c = static_cast<unsigned char>(data_[byte]) - kBias;
            if (c < 0 || c > 63) throw parse_error("byte out of graph6 range", base_ + byte);
            out = (out << 1) | ((c >> bit) & 1);
            ++pos_;
        }
        return out;
    }

private:
    std::string_view data_;
    size_t base_;
    size_t pos_ = 0;
};

class BitWriter {
public:
    void put(int value, int nbits) {
        for (int i = nbits - 1; i >= 0; --i) bits_.push_back((value >> i) & 1);
    }
    void pad_with_ones() {
        while (bits_.size() % 6 != 0) bits_.push_back(1);
    }
    void append_to(std::string& out) const {
        for (size_t i = 0; i < bits_.size(); i += 6) {
            int v = 0;
            for (size_t j = i; j < i + 6; ++j) v = (v << 1) | bits_[j];
            out.push_back(static_cast<char>(v + kBias));
        }
    }
    size_t bit_count() const { return bits_.size(); }

private:
    std::vector<char> bits_;
};

// Decodes N(n); advances `at`.
inline int decode_order(std::string_view s, size_t& at) {
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw parse_error("record truncated in order field", i);
        int c = static_cast<unsigned char>(s[i]);
        if (c < kBias || c > kMaxByte) throw parse_error("byte out of graph6 range", i);
        return c - kBias;
    };
    int b0 = byte(at);
    if (b0 < 63) {
        at += 1;
        return b0;
    }
    if (byte(at + 1) == 63)
        throw parse_error("graph order beyond supported range", at);  // '~~' form, > 258047
    int n = (byte(at + 1) << 12) | (byte(at + 2) << 6) | byte(at + 3);
    at += 4;
    if (n < 63) throw parse_error("non-canonical order encoding", at - 4);
    return n;
}

inline void encode_order(std::string& out, int n) {
    if (n < 0) throw error("serialize: negative order");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw error("serialize: order beyond supported range");
    }
}

inline std::string_view strip_header(std::string_view text, const char* header) {
    std::string_view h(header);
    if (text.substr(0, h.size()) == h) text.remove_prefix(h.size());
    return text;
}

inline std::string_view strip_line_end(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

inline int bits_for(int n) {
    int k = 1;
    while ((1 << k) < n) ++k;  // smallest k with 2^k >= n, i.e. bits to hold n-1
    return k;
}

}  // namespace detail6

inline Graph parse_graph6(std::string_view text) {
    using namespace detail6;
    text = strip_line_end(strip_header(text, ">>graph6<<"));
    if (text.empty()) throw parse_error("empty graph6 record", 0);
    if (text[0] == ':') throw parse_error("sparse6 record where graph6 expected", 0);
    size_t at = 0;
    int n = decode_order(text, at);
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (text.size() - at < nbytes) throw parse_error("record truncated", text.size());
    if (text.size() - at > nbytes) throw parse_error("trailing garbage after record", at + nbytes);
    BitReader bits(text.substr(at), at);
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.take(1)) g.add_edge(i, j);
    return g;
}

inline std::string serialize_graph6(const Graph& g) {
    using namespace detail6;
    std::string out;
    int n = g.vertex_count();
    encode_order(out, n);
    BitWriter bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.put(g.has_edge(i, j) ? 1 : 0, 1);
    while (bits.bit_count() % 6 != 0) bits.put(0, 1);
    bits.append_to(out);
    return out;
}

inline MultiGraph parse_sparse6(std::string_view text) {
    using namespace detail6;
    text = strip_line_end(strip_header(text, ">>sparse6<<"));
    if (text.empty()) throw parse_error("empty sparse6 record", 0);
    if (text[0] != ':') throw parse_error("sparse6 record must start with ':'", 0);
    size_t at = 1;
    int n = decode_order(text, at);
    for (size_t i = at; i < text.size(); ++i) {
        int c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > kMaxByte) throw parse_error("byte out of sparse6 range", i);
    }
    MultiGraph g(n);
    if (n == 0) {
        if (at != text.size()) throw parse_error("trailing garbage after record", at);
        return g;
    }
    int k = bits_for(n);
    BitReader bits(text.substr(at), at);
    long long v = 0;
    while (bits.remaining() >= static_cast<size_t>(k) + 1) {
        int b = bits.take(1);
        int x = bits.take(k);
        if (b) ++v;
        if (x >= n || v >= n) break;
        if (x > v) {
            v = x;
        } else if (x == v) {
            throw parse_error("loop at vertex " + std::to_string(x) + ": loops unsupported", at);
        } else {
            g.add_edge(x, static_cast<int>(v));
        }
    }
    return g;
}

inline std::string serialize_sparse6(const MultiGraph& g) {
    using namespace detail6;
    std::string out(":");
    int n = g.vertex_count();
    encode_order(out, n);
    if (n == 0) return out;
    int k = bits_for(n);
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.v, a.u) < std::pair(b.v, b.u);
    });
    BitWriter bits;
    int curv = 0;
    for (const Edge& e : edges) {  // e.u <= e.v
        if (e.v == curv) {
            bits.put(0, 1);
            bits.put(e.u, k);
        } else if (e.v == curv + 1) {
            curv += 1;
            bits.put(1, 1);
            bits.put(e.u, k);
        } else {
            curv = e.v;
            bits.put(1, 1);
            bits.put(e.v, k);
            bits.put(0, 1);
            bits.put(e.u, k);
        }
    }
    // When n = 2^k the all-ones padding could decode as one more edge entry;
    // the format spec calls for a single 0 bit first in that case.
    size_t pad = (6 - bits.bit_count() % 6) % 6;
    if (k < 6 && n == (1 << k) && pad >= static_cast<size_t>(k) && curv < n - 1) bits.put(0, 1);
    bits.pad_with_ones();
    bits.append_to(out);
    return out;
}

/// Parses a newline-delimited multi-record file; graph6 records only.
inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = detail6::strip_line_end(line);
        if (sv.empty()) continue;
        try {
            out.push_back(parse_graph6(sv));
        } catch (const parse_error& e) {
            throw error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline std::vector<MultiGraph> read_sparse6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::vector<MultiGraph> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = detail6::strip_line_end(line);
        if (sv.empty()) continue;
        try {
            out.push_back(parse_sparse6(sv));
        } catch (const parse_error& e) {
            throw error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace cubic
