#include "formats.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace pocfmt {

namespace {

std::vector<std::string> split_ws(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct LineParser {
    std::istringstream in;
    std::string name;
    int lineno = 0;

    LineParser(const std::string &text, std::string file) : in(text), name(std::move(file)) {}

    [[noreturn]] void fail(const std::string &msg) const {
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + msg);
    }

    // next data line as tokens; empty vector at end of input
    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::vector<std::string> toks = split_ws(line);
            if (toks.empty() || toks[0][0] == '#') continue;
            return toks;
        }
        return {};
    }

    int64_t integer(const std::string &tok, const std::string &what) const {
        try {
            return parse_int(tok, what);
        } catch (const std::runtime_error &e) {
            fail(e.what());
        }
    }
};

}  // namespace

int64_t parse_int(const std::string &tok, const std::string &what) {
    int64_t value = 0;
    const char *first = tok.data();
    const char *last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || tok.empty())
        throw std::runtime_error(what + " is not an integer: \"" + tok + "\"");
    return value;
}

PointsFile parse_points(const std::string &text, const std::string &name) {
    LineParser lp(text, name);
    std::vector<std::string> toks = lp.next();
    if (toks.empty()) lp.fail("missing header \"d n\"");
    if (toks.size() != 2) lp.fail("header must be \"d n\"");
    int64_t d = lp.integer(toks[0], "dimension");
    int64_t n = lp.integer(toks[1], "point count");
    if (d < 1 || d > 1'000'000) lp.fail("dimension out of range");
    if (n < 0) lp.fail("point count must be >= 0");

    PointsFile pf;
    pf.dim = static_cast<int32_t>(d);
    std::set<std::string> seen;
    for (int64_t i = 0; i < n; ++i) {
        toks = lp.next();
        if (toks.empty()) lp.fail("expected " + std::to_string(n) + " points, found " +
                                  std::to_string(i));
        if (static_cast<int64_t>(toks.size()) != 1 + d) lp.fail("expected \"label c1 .. cd\"");
        if (!seen.insert(toks[0]).second) lp.fail("duplicate label \"" + toks[0] + "\"");
        pf.labels.push_back(toks[0]);
        for (int64_t a = 1; a <= d; ++a)
            pf.coords.push_back(lp.integer(toks[static_cast<size_t>(a)], "coordinate"));
    }
    toks = lp.next();
    if (!toks.empty()) lp.fail("trailing data after the declared points");
    return pf;
}

std::string points_to_text(const PointsFile &pf) {
    std::ostringstream out;
    out << pf.dim << ' ' << pf.count() << '\n';
    for (int64_t i = 0; i < pf.count(); ++i) {
        out << pf.labels[static_cast<size_t>(i)];
        for (int32_t a = 0; a < pf.dim; ++a) out << ' ' << pf.coords[i * pf.dim + a];
        out << '\n';
    }
    return out.str();
}

GraphFile parse_graph(const std::string &text, const std::string &name) {
    LineParser lp(text, name);
    std::vector<std::string> toks = lp.next();
    if (toks.empty()) lp.fail("missing header \"n m\"");
    if (toks.size() != 2) lp.fail("header must be \"n m\"");
    int64_t n = lp.integer(toks[0], "vertex count");
    int64_t m = lp.integer(toks[1], "edge count");
    if (n < 1 || n > 1'000'000) lp.fail("vertex count out of range");
    if (m < 0) lp.fail("edge count must be >= 0");

    GraphFile gf;
    gf.n = static_cast<int32_t>(n);
    toks = lp.next();

    std::unordered_map<std::string, int32_t> index;
    if (!toks.empty() && toks[0] == "labels:") {
        if (static_cast<int64_t>(toks.size()) != 1 + n)
            lp.fail("labels: line must name all " + std::to_string(n) + " vertices");
        for (int64_t i = 1; i <= n; ++i) {
            const std::string &l = toks[static_cast<size_t>(i)];
            if (!index.emplace(l, static_cast<int32_t>(i - 1)).second)
                lp.fail("duplicate label \"" + l + "\"");
            gf.labels.push_back(l);
        }
        toks = lp.next();
    }

    auto endpoint = [&](const std::string &tok) -> int32_t {
        if (!gf.labels.empty()) {
            auto it = index.find(tok);
            if (it == index.end()) lp.fail("unknown vertex label \"" + tok + "\"");
            return it->second;
        }
        int64_t v = lp.integer(tok, "vertex index");
        if (v < 0 || v >= n) lp.fail("vertex index out of range: " + tok);
        return static_cast<int32_t>(v);
    };

    for (int64_t e = 0; e < m; ++e) {
        if (toks.empty()) lp.fail("expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(e));
        if (toks.size() != 2) lp.fail("edge line must be \"u v\"");
        int32_t u = endpoint(toks[0]);
        int32_t v = endpoint(toks[1]);
        if (u == v) lp.fail("loop edge at \"" + toks[0] + "\"");
        gf.edges.emplace_back(u, v);
        toks = lp.next();
    }
    if (!toks.empty()) lp.fail("trailing data after the declared edges");
    return gf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read " + path);
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + path);
}

std::uint64_t fnv1a64(const std::string &bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_string(const std::string &bytes) {
    static const char *hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out = "fnv1a64:";
    for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xf];
    return out;
}

}  // namespace pocfmt
