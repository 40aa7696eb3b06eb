#include "qtlift/axioms.hpp"

#include <algorithm>

namespace qtlift {

bool AxiomResidual::passed() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const TruncatedElement& r) { return r.is_zero(); });
}

std::size_t AxiomResidual::nonzero_terms() const {
    std::size_t n = 0;
    for (const auto& r : residuals) n += r.size();
    return n;
}

void AxiomReport::add(std::string name, TruncatedElement residual) {
    axioms.push_back({std::move(name), {std::move(residual)}});
}

void AxiomReport::add(std::string name, std::vector<TruncatedElement> residuals) {
    axioms.push_back({std::move(name), std::move(residuals)});
}

bool AxiomReport::passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResidual& a) { return a.passed(); });
}

const AxiomResidual* AxiomReport::find(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name) return &a;
    return nullptr;
}

std::optional<std::string> AxiomReport::first_failure() const {
    for (const auto& a : axioms)
        if (!a.passed()) return a.name;
    return std::nullopt;
}

} // namespace qtlift
