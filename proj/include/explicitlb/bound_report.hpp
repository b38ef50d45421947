#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace explicitlb {

// One displayed term of a bound, with its provenance tag (the equation
// label it comes from) so reports stay auditable.
struct BoundTerm {
    std::string name;
    std::string tag;
    double value = 0.0;
};

// Structured evaluation of one inequality: inputs, per-term values, the
// assembled total, and optional observed comparison with slack.
struct BoundReport {
    std::string what;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<BoundTerm> terms;
    double total = 0.0;
    std::optional<double> comparison;
    double slack = 0.0;
    std::string validity_note;
    std::vector<std::string> flags;

    void set_comparison(double observed) {
        comparison = observed;
        slack = total - observed;
    }
    double term(const std::string& name) const {
        for (auto& t : terms)
            if (t.name == name) return t.value;
        return 0.0;
    }
};

}  // namespace explicitlb
