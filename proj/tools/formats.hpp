#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Text formats of the command line tool.
//
// Points file: '#' lines and blank lines are skipped; the first data line is
// the header "d n"; each of the next n lines is "label c1 .. cd" with a
// whitespace-free label and integer coordinates. Labels must be distinct.
//
// Graph file: same comment rules; header "n m"; an optional next data line
// "labels: l0 l1 .. l{n-1}" names the vertices; then m lines "u v". Endpoints
// are labels when a labels line is present, 0-based indices otherwise.

namespace pocfmt {

struct PointsFile {
    int32_t dim = 0;
    std::vector<std::string> labels;
    std::vector<int64_t> coords;  // row-major, labels.size() rows of dim

    int64_t count() const { return static_cast<int64_t>(labels.size()); }
};

// throws std::runtime_error "<name>:<line>: reason" on malformed input
PointsFile parse_points(const std::string &text, const std::string &name);
std::string points_to_text(const PointsFile &pf);

struct GraphFile {
    int32_t n = 0;
    std::vector<std::string> labels;  // empty when the file names none
    std::vector<std::pair<int32_t, int32_t>> edges;
};

GraphFile parse_graph(const std::string &text, const std::string &name);

// strict whole-token integer parse; `what` names the token in the error
int64_t parse_int(const std::string &tok, const std::string &what);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

std::uint64_t fnv1a64(const std::string &bytes);
std::string digest_string(const std::string &bytes);  // "fnv1a64:" + 16 hex digits

}  // namespace pocfmt
