#ifndef QTLIFT_AXIOMS_HPP
#define QTLIFT_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qtlift/polynomial.hpp"

namespace qtlift {

/// One axiom with its exact residual elements; passes iff all of them are zero.
struct AxiomResidual {
    std::string name;
    std::vector<TruncatedElement> residuals;

    bool passed() const;
    std::size_t nonzero_terms() const;
};

struct AxiomReport {
    std::vector<AxiomResidual> axioms;

    void add(std::string name, TruncatedElement residual);
    void add(std::string name, std::vector<TruncatedElement> residuals);
    bool passed() const;
    const AxiomResidual* find(const std::string& name) const;
    std::optional<std::string> first_failure() const;
};

} // namespace qtlift

#endif
