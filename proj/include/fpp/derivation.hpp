#pragma once

// Derivations: ordered lists of rule applications plus the axioms they
// consumed. Steps reference facts by their rendered form; the order of the
// list is the DAG order (every input of a step was produced earlier or is a
// leaf). Derivations are the audit-trail payload of every report.

#include <algorithm>
#include <string>
#include <vector>

namespace fpp {

struct DerivationStep {
    std::string rule;
    std::vector<std::string> inputs;
    std::string output;

    bool operator==(const DerivationStep&) const = default;
};

struct AxiomUse {
    std::string id;
    std::string citation;

    bool operator==(const AxiomUse&) const = default;
};

class Derivation {
  public:
    void add_step(std::string rule, std::vector<std::string> inputs, std::string output) {
        steps_.push_back({std::move(rule), std::move(inputs), std::move(output)});
    }

    void use_axiom(const std::string& id, const std::string& citation) {
        for (auto& a : axioms_)
            if (a.id == id) return;
        axioms_.push_back({id, citation});
    }

    // Appends another derivation's steps and merges its axiom set.
    void merge(const Derivation& other) {
        steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
        for (auto& a : other.axioms_) use_axiom(a.id, a.citation);
    }

    const std::vector<DerivationStep>& steps() const { return steps_; }

    // Consumed axioms, sorted by id for stable reporting.
    std::vector<AxiomUse> axioms() const {
        std::vector<AxiomUse> out = axioms_;
        std::sort(out.begin(), out.end(),
                  [](const AxiomUse& a, const AxiomUse& b) { return a.id < b.id; });
        return out;
    }

    bool contains_rule(const std::string& rule) const {
        for (auto& s : steps_)
            if (s.rule == rule) return true;
        return false;
    }

    // True if some step's output (or any input) contains the given text.
    bool mentions(const std::string& text) const {
        for (auto& s : steps_) {
            if (s.output.find(text) != std::string::npos) return true;
            for (auto& in : s.inputs)
                if (in.find(text) != std::string::npos) return true;
        }
        return false;
    }

    bool operator==(const Derivation&) const = default;

  private:
    std::vector<DerivationStep> steps_;
    std::vector<AxiomUse> axioms_;
};

}  // namespace fpp
