#pragma once

// Finite abelian groups given as explicit products of cyclic factors,
// and their elements as coordinate vectors reduced mod the factor orders.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpp {

// An element of a torsion group: one residue per cyclic factor.
// Comparison is lexicographic, which fixes the enumeration order used
// everywhere (reports, orbit listings, tie-breaking).
struct TorsionElement {
    std::vector<int> coords;

    auto operator<=>(const TorsionElement&) const = default;

    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }

    std::string to_string() const {
        if (coords.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(coords[i]);
        }
        return s;
    }
};

// Product of cyclic groups Z/n1 x ... x Z/nr, each order >= 2.
// The empty product is the trivial group. Orders are taken as given;
// no invariant-factor normalization is applied.
class TorsionGroup {
  public:
    TorsionGroup() = default;

    explicit TorsionGroup(std::vector<int> orders) : orders_(std::move(orders)) {
        for (int n : orders_)
            if (n < 2) throw std::invalid_argument("cyclic factor order must be >= 2");
    }

    static TorsionGroup trivial() { return TorsionGroup{}; }

    static TorsionGroup elementary_two(int rank) {
        if (rank < 0) throw std::invalid_argument("negative rank");
        return TorsionGroup(std::vector<int>(static_cast<std::size_t>(rank), 2));
    }

    const std::vector<int>& orders() const { return orders_; }
    int rank() const { return static_cast<int>(orders_.size()); }

    long long size() const {
        long long n = 1;
        for (int o : orders_) n *= o;
        return n;
    }

    long long exponent() const {
        long long e = 1;
        for (int o : orders_) e = std::lcm<long long>(e, o);
        return e;
    }

    bool is_elementary_two() const {
        for (int o : orders_)
            if (o != 2) return false;
        return true;
    }

    TorsionElement zero() const {
        return TorsionElement{std::vector<int>(orders_.size(), 0)};
    }

    // Builds an element from arbitrary integer coordinates, reducing each
    // one into [0, order).
    TorsionElement element(const std::vector<long long>& coords) const {
        if (coords.size() != orders_.size())
            throw std::invalid_argument("coordinate count does not match group rank");
        TorsionElement e;
        e.coords.resize(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            e.coords[i] = reduce(coords[i], orders_[i]);
        return e;
    }

    bool contains(const TorsionElement& e) const {
        if (e.coords.size() != orders_.size()) return false;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            if (e.coords[i] < 0 || e.coords[i] >= orders_[i]) return false;
        return true;
    }

    TorsionElement add(const TorsionElement& a, const TorsionElement& b) const {
        require(a);
        require(b);
        TorsionElement r;
        r.coords.resize(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            r.coords[i] = (a.coords[i] + b.coords[i]) % orders_[i];
        return r;
    }

    TorsionElement neg(const TorsionElement& a) const {
        require(a);
        TorsionElement r;
        r.coords.resize(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            r.coords[i] = (orders_[i] - a.coords[i]) % orders_[i];
        return r;
    }

    TorsionElement sub(const TorsionElement& a, const TorsionElement& b) const {
        return add(a, neg(b));
    }

    TorsionElement scale(long long n, const TorsionElement& a) const {
        require(a);
        TorsionElement r;
        r.coords.resize(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            r.coords[i] = reduce(n * a.coords[i], orders_[i]);
        return r;
    }

    // All elements in lexicographic coordinate order; the zero element is
    // always first.
    std::vector<TorsionElement> elements() const {
        std::vector<TorsionElement> out;
        out.reserve(static_cast<std::size_t>(size()));
        TorsionElement cur = zero();
        while (true) {
            out.push_back(cur);
            int i = rank() - 1;
            while (i >= 0) {
                if (++cur.coords[static_cast<std::size_t>(i)] < orders_[static_cast<std::size_t>(i)]) break;
                cur.coords[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
        return out;
    }

    bool operator==(const TorsionGroup&) const = default;

    std::string to_string() const {
        if (orders_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += " x ";
            s += "Z/" + std::to_string(orders_[i]);
        }
        return s;
    }

  private:
    static int reduce(long long v, int order) {
        long long r = v % order;
        if (r < 0) r += order;
        return static_cast<int>(r);
    }

    void require(const TorsionElement& e) const {
        if (!contains(e))
            throw std::invalid_argument("torsion element does not belong to this group");
    }

    std::vector<int> orders_;
};

}  // namespace fpp
