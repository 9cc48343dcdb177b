#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace poc {

using Coord = std::int64_t;

// A point of Z^d. Axis indices are 1-based in every public interface.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Coord> coords) : c_(std::move(coords)) {}

    int dim() const { return static_cast<int>(c_.size()); }

    Coord operator[](int axis) const;  // 1-based; range-checked

    const std::vector<Coord> &coords() const { return c_; }

    bool operator==(const Point &o) const { return c_ == o.c_; }
    bool operator!=(const Point &o) const { return c_ != o.c_; }
    // lexicographic; only for use as a container key
    bool operator<(const Point &o) const { return c_ < o.c_; }

    std::string to_string() const;  // "(1, 2, 5)"

private:
    std::vector<Coord> c_;
};

// A nonempty-or-empty subset of the axis set {1, ..., d}, d <= 63.
class IndexSet {
public:
    IndexSet() : universe_(0), mask_(0) {}
    IndexSet(int universe, std::uint64_t mask);
    static IndexSet from_members(int universe, const std::vector<int> &members);

    int universe() const { return universe_; }
    std::uint64_t mask() const { return mask_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool full() const;
    bool contains(int axis) const;  // 1-based
    IndexSet complement() const;
    std::vector<int> members() const;  // ascending, 1-based

    bool operator==(const IndexSet &o) const;
    bool operator!=(const IndexSet &o) const { return !(*this == o); }
    // ascending member-list lexicographic: {1} < {1,2} < {1,3} < {2}
    bool operator<(const IndexSet &o) const;

    std::string to_string() const;  // "{1,3}"

private:
    int universe_;
    std::uint64_t mask_;
};

// An order type of an incomparable pair: an unordered partition {S, ~S} of
// {1..d} into two nonempty parts. Stored canonically as the part containing
// axis 1, so equality and ordering are partition-level.
class OrderType {
public:
    OrderType() = default;
    explicit OrderType(const IndexSet &part);  // either part; canonicalized

    const IndexSet &low_part() const { return part_; }  // the part containing axis 1
    IndexSet high_part() const { return part_.complement(); }
    int universe() const { return part_.universe(); }
    // the partition's part of the requested size, if unique; errors otherwise
    IndexSet part_of_size(int s) const;
    int min_part_size() const;
    bool has_part_of_size(int s) const;

    bool operator==(const OrderType &o) const { return part_ == o.part_; }
    bool operator!=(const OrderType &o) const { return part_ != o.part_; }
    bool operator<(const OrderType &o) const { return part_ < o.part_; }

    std::string to_string() const;  // "{{1,2},{3}}"

private:
    IndexSet part_;
};

// u <= v on every axis of the (matching-dimension) points
bool precedes(const Point &u, const Point &v);
// u < v on every axis
bool precedes_strict(const Point &u, const Point &v);
// u <= v on every axis in `axes`; errors on empty axes or universe mismatch
bool precedes_on(const Point &u, const Point &v, const IndexSet &axes);
bool comparable(const Point &u, const Point &v);
// coordinatewise minimum
Point min_point(const Point &u, const Point &v);

// All order types of the pair {u, v}: partitions {S, ~S} with u <=_S v and
// v <=_~S u (in either role). Errors if u, v are comparable (the pair has a
// type only when incomparable) or d < 2. Sorted ascending.
std::vector<OrderType> order_types(const Point &u, const Point &v);

// Number of candidate order types in dimension d: 2^(d-1) - 1. d in [2, 63].
std::uint64_t count_possible_order_types(int d);

// Every order type of dimension d, sorted ascending. d in [2, 20] (the list
// is exponential in d).
std::vector<OrderType> enumerate_order_types(int d);

// Order types shared by all three pairs of {x1, x2, x3}; sorted ascending.
// Errors if any pair is comparable.
std::vector<OrderType> common_order_types(const Point &x1, const Point &x2, const Point &x3);

// Permutation (1-based positions into the argument list) arranging the three
// points into a chain under <=_part ascending and <=_complement descending.
// Scans the six permutations in lexicographic order and returns the first
// that satisfies both chains, so ties resolve deterministically.
// Preconditions: pairwise incomparable, and the partition {part, ~part} is a
// common order type of all three pairs.
std::array<int, 3> sort_by_part(const Point &x1, const Point &x2, const Point &x3,
                                const IndexSet &part);

// sort_by_part with the canonical (axis-1) part of t.
std::array<int, 3> sort_by_common_type(const Point &x1, const Point &x2, const Point &x3,
                                       const OrderType &t);

}  // namespace poc
