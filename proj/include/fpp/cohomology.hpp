#pragma once

// Interval-valued inference engine for line-bundle cohomology on a fake
// projective plane. Facts are intervals for (h0, h1, h2) per class; rules
// shrink intervals until a fixpoint (or a contradiction) is reached.
//
// Rule set, fired in this order, classes in (degree, torsion) order:
//   R-axiom   injected facts
//   R-surface q(X) = 0 and p_g(X) = 0 (definitional for a fake plane)
//   R-neg     deg < 0, or deg = 0 with nontrivial torsion  =>  h0 = 0
//   R-chi     h0 - h1 + h2 = chi(L) = 1 + k(k-3)/2, as a propagator
//   R-serre   h^i(L) = h^{2-i}(K - L)
//   R-kodaira deg(L - K) >= 1  =>  h1(L) = h2(L) = 0
//   R-mult    h0(A+B) >= h0(A) + h0(B) - 1 when both sides have sections,
//             applied forward and contrapositively; the self-pair A+A gives
//             the unconditional bound h0(A) <= floor((h0(2A).hi + 1) / 2).
//
// The working set is the closure of the targets under Serre duals (K - L),
// K-differences (L - K) and doubling (L + L), restricted to a degree window
// ([-6, 6] by default) so that saturation runs over a finite set.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpp/derivation.hpp"
#include "fpp/interval.hpp"
#include "fpp/picard.hpp"

namespace fpp {

// chi of a class of degree k; independent of the torsion part.
inline int chi_of_degree(int k) { return 1 + k * (k - 3) / 2; }

inline int chi(const FakePlane&, const LineBundleClass& l) {
    return chi_of_degree(l.degree);
}

// Intersection number on the rank-one lattice: (aL1).(bL1) = ab.
inline int intersection(const LineBundleClass& l, const LineBundleClass& m) {
    return l.degree * m.degree;
}

// A statement "h_index(cls) lies in bound".
struct Fact {
    LineBundleClass cls;
    int index = 0;
    DimInterval bound;

    std::string to_string() const {
        return "h" + std::to_string(index) + cls.to_string() +
               (bound.is_exact() ? " = " + std::to_string(bound.lo)
                                 : " in " + bound.to_string());
    }

    bool operator==(const Fact&) const = default;
};

struct Axiom {
    std::string id;
    Fact fact;
    std::string citation;
};

struct CohomologyRow {
    std::array<DimInterval, 3> h;
    int chi = 0;
};

class CohomologyTable {
  public:
    using Rows = std::map<LineBundleClass, CohomologyRow>;

    const Rows& rows() const { return rows_; }
    Rows& rows() { return rows_; }

    const CohomologyRow* find(const LineBundleClass& cls) const {
        auto it = rows_.find(cls);
        return it == rows_.end() ? nullptr : &it->second;
    }

    // A row is chi-consistent when representatives a - b + c = chi exist
    // inside the three intervals.
    static bool chi_consistent(const CohomologyRow& r) {
        const auto& h = r.h;
        long long lo = static_cast<long long>(h[0].lo) + h[2].lo -
                       (h[1].has_upper() ? h[1].hi : DimInterval::unbounded);
        bool lo_ok = !h[1].has_upper() || lo <= r.chi;
        long long hi_parts = 0;
        bool bounded = h[0].has_upper() && h[2].has_upper();
        if (bounded) hi_parts = static_cast<long long>(h[0].hi) + h[2].hi - h[1].lo;
        bool hi_ok = !bounded || hi_parts >= r.chi;
        return lo_ok && hi_ok;
    }

    bool operator==(const CohomologyTable&) const = default;

  private:
    Rows rows_;
};

struct InferOptions {
    int degree_min = -6;
    int degree_max = 6;
    int max_passes = 200;
};

struct Contradiction {
    std::string rule;
    Fact existing;
    Fact attempted;
    std::vector<std::string> inputs;

    std::string to_string() const {
        return "contradiction in " + rule + ": " + existing.to_string() +
               " clashes with " + attempted.to_string();
    }
};

struct InferResult {
    CohomologyTable table;
    Derivation derivation;
    std::optional<Contradiction> contradiction;

    bool consistent() const { return !contradiction.has_value(); }
};

// Thrown when a caller requires a consistent axiom set and does not get one.
struct axiom_inconsistency_error : std::runtime_error {
    explicit axiom_inconsistency_error(const std::string& what)
        : std::runtime_error(what) {}
};

namespace detail {

inline std::string fact_str(const LineBundleClass& cls, int idx, const DimInterval& iv) {
    return Fact{cls, idx, iv}.to_string();
}

class Saturator {
  public:
    Saturator(const FakePlane& plane, InferOptions opts)
        : plane_(plane), opts_(opts), group_(plane.torsion()) {}

    InferResult run(const std::vector<Axiom>& axioms,
                    const std::vector<LineBundleClass>& targets) {
        build_closure(axioms, targets);
        seed_axioms(axioms);
        seed_surface_constants();
        saturate();
        InferResult out;
        out.derivation = std::move(deriv_);
        out.contradiction = contra_;
        for (auto& [cls, h] : table_)
            out.table.rows()[cls] = CohomologyRow{h, chi_of_degree(cls.degree)};
        return out;
    }

  private:
    using Tri = std::array<DimInterval, 3>;

    void add_class(const LineBundleClass& cls) {
        if (cls.degree < opts_.degree_min || cls.degree > opts_.degree_max) return;
        table_.emplace(cls, Tri{DimInterval::any(), DimInterval::any(), DimInterval::any()});
    }

    void build_closure(const std::vector<Axiom>& axioms,
                       const std::vector<LineBundleClass>& targets) {
        add_class(plane_.structure_sheaf());
        add_class(plane_.canonical());
        for (auto& t : targets) add_class(normalize(t));
        for (auto& a : axioms) add_class(normalize(a.fact.cls));
        // Close under K - L, L - K and L + L inside the degree window.
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<LineBundleClass> current;
            current.reserve(table_.size());
            for (auto& [cls, _] : table_) current.push_back(cls);
            const auto before = table_.size();
            const LineBundleClass k = plane_.canonical();
            for (auto& cls : current) {
                add_class(sub(group_, k, cls));
                add_class(sub(group_, cls, k));
                add_class(add(group_, cls, cls));
            }
            grew = table_.size() != before;
        }
    }

    LineBundleClass normalize(const LineBundleClass& cls) const {
        if (!group_.contains(cls.torsion))
            throw std::invalid_argument("class torsion does not belong to the plane: " +
                                        cls.to_string());
        return cls;
    }

    void seed_axioms(const std::vector<Axiom>& axioms) {
        for (auto& a : axioms) {
            if (a.fact.index < 0 || a.fact.index > 2)
                throw std::invalid_argument("axiom index out of range for " + a.id);
            deriv_.use_axiom(a.id, a.citation);
            if (contra_) continue;
            tighten(normalize(a.fact.cls), a.fact.index, a.fact.bound, "R-axiom",
                    {"axiom " + a.id + ": " + a.fact.to_string()});
        }
    }

    void seed_surface_constants() {
        if (contra_) return;
        tighten(plane_.structure_sheaf(), 1, DimInterval::exactly(FakePlane::q),
                "R-surface", {"q(X) = 0"});
        if (contra_) return;
        tighten(plane_.canonical(), 0, DimInterval::exactly(FakePlane::pg),
                "R-surface", {"p_g(X) = 0"});
    }

    void saturate() {
        int pass = 0;
        while (!contra_) {
            bool changed = false;
            changed |= pass_neg();
            changed |= pass_chi();
            changed |= pass_serre();
            changed |= pass_kodaira();
            changed |= pass_mult();
            if (!changed) break;
            if (++pass > opts_.max_passes)
                throw std::logic_error("cohomology saturation did not reach a fixpoint");
        }
    }

    bool pass_neg() {
        bool changed = false;
        for (auto& [cls, h] : table_) {
            if (contra_) break;
            if (cls.degree < 0) {
                changed |= tighten(cls, 0, DimInterval::exactly(0), "R-neg",
                                   {"deg " + cls.to_string() + " < 0"});
            } else if (cls.degree == 0 && !cls.torsion.is_zero()) {
                changed |= tighten(cls, 0, DimInterval::exactly(0), "R-neg",
                                   {cls.to_string() + " is numerically trivial with nonzero torsion"});
            }
        }
        return changed;
    }

    bool pass_chi() {
        bool changed = false;
        for (auto& [cls, h] : table_) {
            if (contra_) break;
            const int c = chi_of_degree(cls.degree);
            const Tri cur = h;
            const std::string chi_in = "chi" + cls.to_string() + " = " + std::to_string(c);

            // h0 = chi + h1 - h2
            DimInterval b0{cur[2].has_upper() ? std::max(0, c + cur[1].lo - cur[2].hi) : 0,
                           cur[1].has_upper() ? hi_add_const(cur[1].hi, c - cur[2].lo)
                                              : DimInterval::unbounded};
            changed |= tighten(cls, 0, b0, "R-chi",
                               {chi_in, fact_str(cls, 1, cur[1]), fact_str(cls, 2, cur[2])});
            if (contra_) break;
            // h1 = h0 + h2 - chi
            DimInterval b1{std::max(0, cur[0].lo + cur[2].lo - c),
                           hi_add_const(hi_add(cur[0].hi, cur[2].hi), -c)};
            changed |= tighten(cls, 1, b1, "R-chi",
                               {chi_in, fact_str(cls, 0, cur[0]), fact_str(cls, 2, cur[2])});
            if (contra_) break;
            // h2 = chi - h0 + h1
            DimInterval b2{cur[0].has_upper() ? std::max(0, c - cur[0].hi + cur[1].lo) : 0,
                           cur[1].has_upper() ? hi_add_const(cur[1].hi, c - cur[0].lo)
                                              : DimInterval::unbounded};
            changed |= tighten(cls, 2, b2, "R-chi",
                               {chi_in, fact_str(cls, 0, cur[0]), fact_str(cls, 1, cur[1])});
        }
        return changed;
    }

    bool pass_serre() {
        bool changed = false;
        const LineBundleClass k = plane_.canonical();
        for (auto& [cls, h] : table_) {
            if (contra_) break;
            const LineBundleClass dual = sub(group_, k, cls);
            auto it = table_.find(dual);
            if (it == table_.end()) continue;
            for (int i = 0; i < 3 && !contra_; ++i) {
                changed |= tighten(cls, i, it->second[static_cast<std::size_t>(2 - i)],
                                   "R-serre",
                                   {fact_str(dual, 2 - i, it->second[static_cast<std::size_t>(2 - i)])});
            }
        }
        return changed;
    }

    bool pass_kodaira() {
        bool changed = false;
        for (auto& [cls, h] : table_) {
            if (contra_) break;
            if (cls.degree - 3 < 1) continue;
            const std::string why =
                "deg(L-K) = " + std::to_string(cls.degree - 3) + " >= 1, L-K ample";
            changed |= tighten(cls, 1, DimInterval::exactly(0), "R-kodaira", {why});
            if (contra_) break;
            changed |= tighten(cls, 2, DimInterval::exactly(0), "R-kodaira", {why});
        }
        return changed;
    }

    bool pass_mult() {
        bool changed = false;
        for (auto a = table_.begin(); a != table_.end() && !contra_; ++a) {
            for (auto b = a; b != table_.end() && !contra_; ++b) {
                const LineBundleClass sum = add(group_, a->first, b->first);
                auto s = table_.find(sum);
                if (s == table_.end()) continue;
                const DimInterval ha = a->second[0];
                const DimInterval hb = b->second[0];
                const DimInterval hs = s->second[0];
                // Forward: both factors have sections.
                if (ha.lo >= 1 && hb.lo >= 1) {
                    changed |= tighten(sum, 0, DimInterval::at_least(ha.lo + hb.lo - 1),
                                       "R-mult",
                                       {fact_str(a->first, 0, ha), fact_str(b->first, 0, hb)});
                    if (contra_) break;
                }
                if (a == b) {
                    // Self pair: h0(A) = n >= 1 forces h0(2A) >= 2n - 1, so
                    // n <= (h0(2A).hi + 1) / 2; n = 0 satisfies it trivially.
                    if (hs.has_upper()) {
                        changed |= tighten(a->first, 0, DimInterval::at_most((hs.hi + 1) / 2),
                                           "R-mult",
                                           {fact_str(sum, 0, hs),
                                            "doubling " + a->first.to_string()});
                    }
                } else {
                    if (hb.lo >= 1 && hs.has_upper()) {
                        changed |= tighten(a->first, 0,
                                           DimInterval::at_most(std::max(0, hs.hi + 1 - hb.lo)),
                                           "R-mult",
                                           {fact_str(sum, 0, hs), fact_str(b->first, 0, hb)});
                        if (contra_) break;
                    }
                    if (ha.lo >= 1 && hs.has_upper()) {
                        changed |= tighten(b->first, 0,
                                           DimInterval::at_most(std::max(0, hs.hi + 1 - ha.lo)),
                                           "R-mult",
                                           {fact_str(sum, 0, hs), fact_str(a->first, 0, ha)});
                    }
                }
            }
        }
        return changed;
    }

    bool tighten(const LineBundleClass& cls, int idx, const DimInterval& bound,
                 const std::string& rule, std::vector<std::string> inputs) {
        auto it = table_.find(cls);
        if (it == table_.end()) return false;
        DimInterval& cur = it->second[static_cast<std::size_t>(idx)];
        const DimInterval next = meet(cur, bound);
        if (next == cur) return false;
        if (next.is_empty()) {
            contra_ = Contradiction{rule, Fact{cls, idx, cur}, Fact{cls, idx, bound}, inputs};
            deriv_.add_step(rule, std::move(inputs), contra_->to_string());
            return true;
        }
        deriv_.add_step(rule, std::move(inputs), fact_str(cls, idx, next));
        cur = next;
        return true;
    }

    const FakePlane& plane_;
    InferOptions opts_;
    const TorsionGroup& group_;
    std::map<LineBundleClass, Tri> table_;
    Derivation deriv_;
    std::optional<Contradiction> contra_;
};

}  // namespace detail

// Runs the rule set to a fixpoint over the closure of `targets`. The result
// carries the table, the derivation trace, and a contradiction if the axioms
// were inconsistent.
inline InferResult infer(const FakePlane& plane, const std::vector<Axiom>& axioms,
                         const std::vector<LineBundleClass>& targets,
                         InferOptions opts = {}) {
    return detail::Saturator(plane, opts).run(axioms, targets);
}

struct RefutationResult {
    bool refuted = false;
    Derivation derivation;
    std::string note;
};

// Proof by contradiction: adds `hypothesis` to the axioms and reports success
// iff saturation now fails. Requires the axioms alone to be consistent.
inline RefutationResult refute(const FakePlane& plane, const std::vector<Axiom>& axioms,
                               const Fact& hypothesis, InferOptions opts = {}) {
    InferResult base = infer(plane, axioms, {hypothesis.cls}, opts);
    if (!base.consistent())
        throw axiom_inconsistency_error("axioms are inconsistent before the hypothesis: " +
                                        base.contradiction->to_string());

    std::vector<Axiom> with = axioms;
    with.push_back({"hypothesis", hypothesis, "assumed for contradiction"});
    InferResult run = infer(plane, with, {hypothesis.cls}, opts);

    RefutationResult out;
    out.derivation = run.derivation;
    if (run.consistent()) {
        out.refuted = false;
        out.note = "not refutable at current rule strength";
        return out;
    }
    out.refuted = true;
    std::string negation;
    const DimInterval b = hypothesis.bound;
    if (b.is_exact())
        negation = "h" + std::to_string(hypothesis.index) + hypothesis.cls.to_string() +
                   " != " + std::to_string(b.lo);
    else if (!b.has_upper())
        negation = Fact{hypothesis.cls, hypothesis.index, DimInterval::at_most(b.lo - 1)}.to_string();
    else
        negation = Fact{hypothesis.cls, hypothesis.index, DimInterval::at_least(b.hi + 1)}.to_string();
    out.derivation.add_step("R-refute",
                            {"hypothesis " + hypothesis.to_string(),
                             run.contradiction->to_string()},
                            negation);
    out.note = negation;
    return out;
}

// Turns every row of a table into exact/interval axioms; used to feed an
// inference result back into the engine.
inline std::vector<Axiom> axioms_from_table(const CohomologyTable& table,
                                            const std::string& id_prefix = "table") {
    std::vector<Axiom> out;
    for (auto& [cls, row] : table.rows())
        for (int i = 0; i < 3; ++i) {
            const DimInterval& iv = row.h[static_cast<std::size_t>(i)];
            if (iv == DimInterval::any()) continue;
            out.push_back({id_prefix + ":" + Fact{cls, i, iv}.to_string(),
                           Fact{cls, i, iv}, "previously derived"});
        }
    return out;
}

// Citation strings for the built-in rules, used by report rendering.
inline std::string rule_citation(const std::string& rule) {
    if (rule == "R-axiom") return "injected fact";
    if (rule == "R-surface") return "definitional invariants of a fake projective plane";
    if (rule == "R-neg")
        return "no sections in negative degrees; a numerically trivial effective divisor is zero";
    if (rule == "R-chi") return "Riemann-Roch: h0 - h1 + h2 = 1 + k(k-3)/2";
    if (rule == "R-serre") return "Serre duality: h^i(L) = h^{2-i}(K - L)";
    if (rule == "R-kodaira") return "Kodaira vanishing for K + ample";
    if (rule == "R-mult")
        return "superadditivity of sections (Kollar, Rational Curves, Lemma 15.6.2)";
    if (rule == "R-refute") return "discharge of a hypothesis by contradiction";
    return "";
}

}  // namespace fpp
