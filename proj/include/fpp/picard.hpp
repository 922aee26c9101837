#pragma once

// The Picard group of a fake projective plane: Z*L1 (+) torsion, with L1 an
// ample generator of the torsion-free part. A class is stored as its degree
// (the coefficient of L1) together with a torsion element of H_1(X;Z).
//
// Basis convention: on a plane with Aut = G21 the basis is chosen so that the
// unique G21-equivariant cubic root O_X(1) is (1, 0); hence K_X = (3, 0).
// For other planes the torsion part of K_X is configuration data.

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpp/torsion.hpp"

namespace fpp {

// A line-bundle class (degree, torsion). Two classes are numerically
// equivalent iff their degrees agree; linearly equivalent iff equal.
// Ordering is (degree, torsion) lexicographic.
struct LineBundleClass {
    int degree = 0;
    TorsionElement torsion;

    auto operator<=>(const LineBundleClass&) const = default;

    bool numerically_equivalent(const LineBundleClass& other) const {
        return degree == other.degree;
    }

    std::string to_string() const {
        return "(" + std::to_string(degree) + ";" + torsion.to_string() + ")";
    }
};

inline LineBundleClass add(const TorsionGroup& g, const LineBundleClass& a,
                           const LineBundleClass& b) {
    if (!g.contains(a.torsion) || !g.contains(b.torsion))
        throw std::invalid_argument("line bundle classes live in different torsion groups");
    return {a.degree + b.degree, g.add(a.torsion, b.torsion)};
}

inline LineBundleClass sub(const TorsionGroup& g, const LineBundleClass& a,
                           const LineBundleClass& b) {
    if (!g.contains(a.torsion) || !g.contains(b.torsion))
        throw std::invalid_argument("line bundle classes live in different torsion groups");
    return {a.degree - b.degree, g.sub(a.torsion, b.torsion)};
}

inline LineBundleClass scale(const TorsionGroup& g, long long n, const LineBundleClass& a) {
    if (!g.contains(a.torsion))
        throw std::invalid_argument("line bundle class does not belong to this torsion group");
    return {static_cast<int>(n) * a.degree, g.scale(n, a.torsion)};
}

// Picard rank one with L1 ample: a class is ample iff its degree is >= 1.
inline bool is_ample(const LineBundleClass& c) { return c.degree >= 1; }

enum class AutLabel { G21, Other, Trivial };

inline std::string to_string(AutLabel a) {
    switch (a) {
        case AutLabel::G21: return "G21";
        case AutLabel::Other: return "other";
        case AutLabel::Trivial: return "trivial";
    }
    return "?";
}

inline AutLabel aut_label_from_string(const std::string& s) {
    if (s == "G21") return AutLabel::G21;
    if (s == "other") return AutLabel::Other;
    if (s == "trivial") return AutLabel::Trivial;
    throw std::invalid_argument("unknown automorphism label: " + s);
}

// A fake projective plane: K^2 = 9, c2 = 3, p_g = q = 0 are definitional,
// and K_X is numerically 3*L1. The torsion group is H_1(X;Z).
class FakePlane {
  public:
    static constexpr int k_squared = 9;
    static constexpr int c2 = 3;
    static constexpr int pg = 0;
    static constexpr int q = 0;

    FakePlane(std::string id, TorsionGroup torsion, AutLabel aut,
              TorsionElement canonical_torsion)
        : id_(std::move(id)),
          torsion_(std::move(torsion)),
          aut_(aut),
          canonical_torsion_(std::move(canonical_torsion)) {
        if (!torsion_.contains(canonical_torsion_))
            throw std::invalid_argument("canonical torsion part is not an element of H1");
        if (aut_ == AutLabel::G21) {
            const int r = torsion_.rank();
            if (!torsion_.is_elementary_two() || (r != 3 && r != 4 && r != 6))
                throw std::invalid_argument(
                    "a G21 plane has H1 = (Z/2)^r with r in {3,4,6}");
            if (!canonical_torsion_.is_zero())
                throw std::invalid_argument(
                    "in the distinguished basis of a G21 plane, K = (3;0)");
        }
    }

    const std::string& id() const { return id_; }
    const TorsionGroup& torsion() const { return torsion_; }
    AutLabel aut() const { return aut_; }

    // K_X = (3, tK): degree 3 always; torsion part zero on G21 planes.
    LineBundleClass canonical() const { return {3, canonical_torsion_}; }
    LineBundleClass structure_sheaf() const { return {0, torsion_.zero()}; }

    LineBundleClass cls(int degree, const TorsionElement& t) const {
        if (!torsion_.contains(t))
            throw std::invalid_argument("torsion element does not belong to this plane");
        return {degree, t};
    }

    bool operator==(const FakePlane&) const = default;

  private:
    std::string id_;
    TorsionGroup torsion_;
    AutLabel aut_;
    TorsionElement canonical_torsion_;
};

// All torsion classes of the plane, zero first, lexicographic.
inline std::vector<TorsionElement> enumerate_torsion(const FakePlane& plane) {
    return plane.torsion().elements();
}

// Numerical cubic roots of K_X: exactly the degree-1 classes, one per
// torsion element (3L' == K numerically for every ample generator L').
inline std::vector<LineBundleClass> numerical_cubic_roots(const FakePlane& plane) {
    std::vector<LineBundleClass> out;
    for (auto& t : enumerate_torsion(plane)) out.push_back({1, t});
    return out;
}

// Built-in plane registry. The three planes with Aut = G21 are keyed by the
// rank of H_1(X;Z) = (Z/2)^r as classified by Cartwright-Steger; "generic"
// is a configurable stand-in for any other plane (H1 is config data, default
// Z/2, and the torsion part of K is config data as well).
inline const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = {"b3", "b4", "b6", "generic"};
    return ids;
}

inline FakePlane registry_plane(const std::string& id) {
    auto g21 = [](const std::string& name, int rank) {
        TorsionGroup g = TorsionGroup::elementary_two(rank);
        return FakePlane(name, g, AutLabel::G21, g.zero());
    };
    if (id == "b3") return g21("b3", 3);
    if (id == "b4") return g21("b4", 4);
    if (id == "b6") return g21("b6", 6);
    if (id == "generic") {
        TorsionGroup g({2});
        return FakePlane("generic", g, AutLabel::Trivial, g.zero());
    }
    throw std::invalid_argument("unknown plane id: " + id);
}

}  // namespace fpp
