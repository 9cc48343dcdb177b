#include "geometry.hpp"

#include <algorithm>
#include <bit>

namespace poc {

Coord Point::operator[](int axis) const {
    require(axis >= 1 && axis <= dim(), Errc::invalid_argument, "axis ", axis,
            " out of range for dimension ", dim());
    return c_[static_cast<size_t>(axis - 1)];
}

std::string Point::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(c_[i]);
    }
    out += ")";
    return out;
}

IndexSet::IndexSet(int universe, std::uint64_t mask) : universe_(universe), mask_(mask) {
    require(universe >= 0 && universe <= 63, Errc::invalid_argument, "axis universe ", universe,
            " outside [0, 63]");
    require(universe == 63 || (mask >> universe) == 0, Errc::invalid_argument,
            "mask has bits outside the ", universe, "-axis universe");
}

IndexSet IndexSet::from_members(int universe, const std::vector<int> &members) {
    std::uint64_t mask = 0;
    for (int a : members) {
        require(a >= 1 && a <= universe, Errc::invalid_argument, "axis ", a,
                " out of range for universe ", universe);
        mask |= 1ull << (a - 1);
    }
    return IndexSet(universe, mask);
}

int IndexSet::size() const { return std::popcount(mask_); }

bool IndexSet::full() const { return universe_ > 0 && size() == universe_; }

bool IndexSet::contains(int axis) const {
    return axis >= 1 && axis <= universe_ && (mask_ >> (axis - 1)) & 1;
}

IndexSet IndexSet::complement() const {
    std::uint64_t all = (universe_ == 63) ? ~0ull >> 1 : (1ull << universe_) - 1;
    return IndexSet(universe_, all & ~mask_);
}

std::vector<int> IndexSet::members() const {
    std::vector<int> out;
    for (int a = 1; a <= universe_; ++a)
        if (contains(a)) out.push_back(a);
    return out;
}

bool IndexSet::operator==(const IndexSet &o) const {
    return universe_ == o.universe_ && mask_ == o.mask_;
}

bool IndexSet::operator<(const IndexSet &o) const {
    if (universe_ != o.universe_) return universe_ < o.universe_;
    // ascending member lists compare lexicographically; {} sorts first
    return members() < o.members();
}

std::string IndexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int a : members()) {
        if (!first) out += ",";
        out += std::to_string(a);
        first = false;
    }
    out += "}";
    return out;
}

OrderType::OrderType(const IndexSet &part) {
    require(part.universe() >= 2, Errc::invalid_argument,
            "an order type needs at least 2 axes, got ", part.universe());
    require(!part.empty() && !part.full(), Errc::invalid_argument,
            "an order type's parts must both be nonempty; got part ", part.to_string(),
            " of universe ", part.universe());
    part_ = part.contains(1) ? part : part.complement();
}

IndexSet OrderType::part_of_size(int s) const {
    IndexSet other = high_part();
    bool lo = part_.size() == s, hi = other.size() == s;
    require(lo || hi, Errc::invalid_argument, "type ", to_string(), " has no part of size ", s);
    require(!(lo && hi), Errc::invalid_argument, "type ", to_string(),
            " has two parts of size ", s, "; the choice is ambiguous");
    return lo ? part_ : other;
}

int OrderType::min_part_size() const { return std::min(part_.size(), high_part().size()); }

bool OrderType::has_part_of_size(int s) const {
    return part_.size() == s || high_part().size() == s;
}

std::string OrderType::to_string() const {
    return "{" + part_.to_string() + "," + high_part().to_string() + "}";
}

static void check_same_dim(const Point &u, const Point &v) {
    require(u.dim() == v.dim(), Errc::invalid_argument, "dimension mismatch: ", u.dim(), " vs ",
            v.dim());
    require(u.dim() >= 1, Errc::invalid_argument, "points must have dimension >= 1");
}

bool precedes(const Point &u, const Point &v) {
    check_same_dim(u, v);
    for (int a = 0; a < u.dim(); ++a)
        if (u.coords()[a] > v.coords()[a]) return false;
    return true;
}

bool precedes_strict(const Point &u, const Point &v) {
    check_same_dim(u, v);
    for (int a = 0; a < u.dim(); ++a)
        if (u.coords()[a] >= v.coords()[a]) return false;
    return true;
}

bool precedes_on(const Point &u, const Point &v, const IndexSet &axes) {
    check_same_dim(u, v);
    require(!axes.empty(), Errc::invalid_argument, "precedes_on needs a nonempty axis set");
    require(axes.universe() == u.dim(), Errc::invalid_argument, "axis universe ",
            axes.universe(), " does not match dimension ", u.dim());
    for (int a = 1; a <= u.dim(); ++a)
        if (axes.contains(a) && u[a] > v[a]) return false;
    return true;
}

bool comparable(const Point &u, const Point &v) { return precedes(u, v) || precedes(v, u); }

Point min_point(const Point &u, const Point &v) {
    check_same_dim(u, v);
    std::vector<Coord> c(static_cast<size_t>(u.dim()));
    for (int a = 0; a < u.dim(); ++a) c[a] = std::min(u.coords()[a], v.coords()[a]);
    return Point(std::move(c));
}

std::vector<OrderType> order_types(const Point &u, const Point &v) {
    check_same_dim(u, v);
    require(u.dim() >= 2 && u.dim() <= 20, Errc::invalid_argument,
            "order-type enumeration supports dimension in [2, 20], got ", u.dim());
    require(!comparable(u, v), Errc::precondition, "points ", u.to_string(), " and ",
            v.to_string(), " are comparable; only incomparable pairs have an order type");
    int d = u.dim();
    std::vector<OrderType> out;
    // enumerate the part containing axis 1 (canonical), excluding the full set
    std::uint64_t all = (1ull << d) - 1;
    for (std::uint64_t m = 1; m < all; m += 2) {  // bit 0 set, never full
        IndexSet part(d, m);
        if (precedes_on(u, v, part) && precedes_on(v, u, part.complement()))
            out.emplace_back(part);
        else if (precedes_on(v, u, part) && precedes_on(u, v, part.complement()))
            out.emplace_back(part);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_possible_order_types(int d) {
    require(d >= 2 && d <= 63, Errc::invalid_argument,
            "order-type count is defined for dimension in [2, 63], got ", d);
    return (1ull << (d - 1)) - 1;
}

std::vector<OrderType> enumerate_order_types(int d) {
    require(d >= 2 && d <= 20, Errc::invalid_argument,
            "order-type enumeration supports dimension in [2, 20], got ", d);
    std::vector<OrderType> out;
    std::uint64_t all = (1ull << d) - 1;
    for (std::uint64_t m = 1; m < all; m += 2) out.emplace_back(IndexSet(d, m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrderType> common_order_types(const Point &x1, const Point &x2, const Point &x3) {
    auto t12 = order_types(x1, x2);
    auto t13 = order_types(x1, x3);
    auto t23 = order_types(x2, x3);
    std::vector<OrderType> tmp, out;
    std::set_intersection(t12.begin(), t12.end(), t13.begin(), t13.end(),
                          std::back_inserter(tmp));
    std::set_intersection(tmp.begin(), tmp.end(), t23.begin(), t23.end(),
                          std::back_inserter(out));
    return out;
}

std::array<int, 3> sort_by_part(const Point &x1, const Point &x2, const Point &x3,
                                const IndexSet &part) {
    const Point *pts[3] = {&x1, &x2, &x3};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            require(!comparable(*pts[i], *pts[j]), Errc::precondition, "points ",
                    pts[i]->to_string(), " and ", pts[j]->to_string(),
                    " are comparable; sort_by_part needs pairwise incomparable points");
    OrderType t{part};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto ts = order_types(*pts[i], *pts[j]);
            require(std::find(ts.begin(), ts.end(), t) != ts.end(), Errc::precondition,
                    "pair ", pts[i]->to_string(), ", ", pts[j]->to_string(),
                    " does not have the order type ", t.to_string());
        }
    IndexSet co = part.complement();
    static const std::array<std::array<int, 3>, 6> perms = {
        {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
    for (const auto &p : perms) {
        const Point &a = *pts[p[0] - 1], &b = *pts[p[1] - 1], &c = *pts[p[2] - 1];
        bool asc = precedes_on(a, b, part) && precedes_on(b, c, part);
        bool desc = precedes_on(b, a, co) && precedes_on(c, b, co);
        if (asc && desc) return p;
    }
    // a common order type forces such an arrangement; reaching here is a bug
    fail(Errc::internal, "no arrangement satisfies the common type ", t.to_string());
}

std::array<int, 3> sort_by_common_type(const Point &x1, const Point &x2, const Point &x3,
                                       const OrderType &t) {
    return sort_by_part(x1, x2, x3, t.low_part());
}

}  // namespace poc
