#include "qtlift/cohochschild.hpp"

#include <map>
#include <random>
#include <sstream>

#include "qtlift/errors.hpp"
#include "qtlift/formalgroup.hpp"

namespace qtlift {

namespace {

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Monomial on `legs` legs built from per-leg parts.
Monomial assemble(const std::vector<Monomial>& parts, int dim) {
    Monomial m;
    for (std::size_t l = 0; l < parts.size(); ++l) m = m * parts[l].shifted(static_cast<int>(l) * dim);
    return m;
}

// Dense matrix whose columns are the given elements, plus the row labels.
struct Assembled {
    linalg::Matrix matrix;
    std::map<Monomial, std::size_t> rows;
};

Assembled assemble_columns(const std::vector<TruncatedElement>& cols, const TruncatedElement* target) {
    Assembled a;
    auto note = [&](const TruncatedElement& f) {
        for (const auto& [m, c] : f.terms()) a.rows.try_emplace(m, 0);
    };
    for (const auto& c : cols) note(c);
    if (target) note(*target);
    std::size_t i = 0;
    for (auto& [m, idx] : a.rows) idx = i++;
    a.matrix = linalg::Matrix(a.rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [m, c] : cols[j].terms()) a.matrix(a.rows.at(m), j) = c;
    return a;
}

std::vector<Rational> as_vector(const Assembled& a, const TruncatedElement& f) {
    std::vector<Rational> v(a.rows.size());
    for (const auto& [m, c] : f.terms()) v[a.rows.at(m)] = c;
    return v;
}

// Solves (d on `leg`) s = target, where the unknown s is two-leg and target three-leg,
// block by block on the monomial of the untouched leg.
TruncatedElement solve_leg(const TruncatedElement& target, int leg, int n, const linalg::SolveOptions& opts) {
    const int d = target.dim();
    const int other = leg == 0 ? 2 : 0;     // leg of the target that is not split
    const int other_out = leg == 0 ? 1 : 0;  // where it sits in the unknown
    std::map<Monomial, TruncatedElement> blocks;
    for (const auto& [m, c] : target.terms()) {
        auto [it, ins] = blocks.try_emplace(leg_part(m, d, other), d, 3, target.cap());
        it->second.add_term(m, c);
    }
    TruncatedElement s(d, 2, target.cap());
    for (const auto& [key, block] : blocks) {
        const int free_degree = n - key.degree();
        std::vector<Monomial> unknowns;
        std::vector<TruncatedElement> cols;
        for (const Monomial& u : monomial_basis(d, free_degree, free_degree)) {
            std::vector<Monomial> parts(2);
            parts[static_cast<std::size_t>(other_out)] = key;
            parts[static_cast<std::size_t>(1 - other_out)] = u;
            const Monomial mono = assemble(parts, d);
            unknowns.push_back(mono);
            cols.push_back(d_on_leg(TruncatedElement::monomial(d, 2, target.cap(), mono), leg));
        }
        const Assembled a = assemble_columns(cols, &block);
        const linalg::Solution sol = linalg::solve(a.matrix, as_vector(a, block), opts);
        if (!sol.consistent) throw InternalError("co-Hochschild system is inconsistent although its conditions hold");
        for (std::size_t j = 0; j < unknowns.size(); ++j) s.add_term(unknowns[j], sol.x[j]);
    }
    return s;
}

// Random element of g (x) S^{n-1} (leg == 0) or S^{n-1} (x) g (leg == 1).
TruncatedElement random_kernel(int d, int n, int cap, int leg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    TruncatedElement k(d, 2, cap);
    for (const Monomial& big : monomial_basis(d, n - 1, n - 1))
        for (int i = 0; i < d; ++i) {
            std::vector<Monomial> parts(2);
            parts[static_cast<std::size_t>(leg)] = Monomial::variable(i);
            parts[static_cast<std::size_t>(1 - leg)] = big;
            k.add_term(assemble(parts, d), coeff(rng));
        }
    return k;
}

} // namespace

TruncatedElement d_on_leg(const TruncatedElement& f, int leg) {
    const int d = f.dim(), k = f.legs();
    if (leg < 0 || leg >= k) throw PreconditionError("leg out of range");
    TruncatedElement out(d, k + 1, f.cap());
    for (const auto& [m, c] : f.terms()) {
        std::vector<Monomial> parts;
        for (int l = 0; l < k; ++l) {
            if (l == leg) {
                parts.emplace_back();
                parts.emplace_back();
            } else {
                parts.push_back(leg_part(m, d, l));
            }
        }
        const Monomial a = leg_part(m, d, leg);
        if (a.degree() == 0) {
            out.add_term(assemble(parts, d), -c);  // d(1) = 1(x)1 - 2 (1(x)1)
            continue;
        }
        // proper nonzero sub-multi-indices b < a
        std::vector<int> b(static_cast<std::size_t>(d), 0);
        while (true) {
            int v = 0;
            while (v < d && b[static_cast<std::size_t>(v)] == a.exponent(v)) b[static_cast<std::size_t>(v++)] = 0;
            if (v == d) break;
            ++b[static_cast<std::size_t>(v)];
            int deg = 0;
            for (int x : b) deg += x;
            if (deg == a.degree()) continue;
            Monomial lo, hi;
            mpz_class w = 1;
            for (int i = 0; i < d; ++i) {
                lo.set_exponent(i, b[static_cast<std::size_t>(i)]);
                hi.set_exponent(i, a.exponent(i) - b[static_cast<std::size_t>(i)]);
                w *= binomial(a.exponent(i), b[static_cast<std::size_t>(i)]);
            }
            parts[static_cast<std::size_t>(leg)] = lo;
            parts[static_cast<std::size_t>(leg) + 1] = hi;
            out.add_term(assemble(parts, d), c * Rational(w));
        }
    }
    return out;
}

TruncatedElement cohochschild_d(const TruncatedElement& f) {
    if (f.legs() != 1) throw PreconditionError("cohochschild_d expects a single-leg element");
    if (sgn(f.constant_term()) != 0) throw PreconditionError("cohochschild_d expects zero constant term");
    return d_on_leg(f, 0);
}

TruncatedElement d2(const TruncatedElement& f) {
    if (f.legs() != 2) throw PreconditionError("d2 expects a two-leg element");
    return d_on_leg(f, 0) - d_on_leg(f, 1);
}

CohomologyDims cohomology_check(int dim, int n) {
    if (dim <= 0 || n < 1) throw PreconditionError("cohomology_check needs dim > 0 and n >= 1");
    CohomologyDims out;
    // d and d2 preserve the multidegree, so ranks split over exponent vectors w
    for (const Monomial& w : monomial_basis(dim, n, n)) {
        const TruncatedElement xw = TruncatedElement::monomial(dim, 1, n, w);
        const std::size_t rank_d = xw.is_zero() || d_on_leg(xw, 0).is_zero() ? 0 : 1;
        out.h0 += 1 - rank_d;

        std::vector<TruncatedElement> cols;
        for (const Monomial& lo : monomial_basis(dim, 1, n - 1)) {
            bool below = true;
            for (int i = 0; i < dim; ++i) below = below && lo.exponent(i) <= w.exponent(i);
            if (!below) continue;
            Monomial hi;
            for (int i = 0; i < dim; ++i) hi.set_exponent(i, w.exponent(i) - lo.exponent(i));
            cols.push_back(d2(TruncatedElement::monomial(dim, 2, n, assemble({lo, hi}, dim))));
        }
        if (cols.empty()) continue;
        const std::size_t rank_d2 = linalg::rank(assemble_columns(cols, nullptr).matrix);
        out.h1 += cols.size() - rank_d2 - rank_d;
    }
    return out;
}

CohomologyDims cohomology_check(const Tensor3& bracket, int n) {
    for (const Rational& x : jacobi_residual(bracket))
        if (sgn(x) != 0) throw ValidationError("bracket violates the Jacobi identity");
    return cohomology_check(bracket.dim(), n);
}

bool CocycleResiduals::passed() const { return !first_failure().has_value(); }

std::optional<std::string> CocycleResiduals::first_failure() const {
    for (const auto& [name, r] : entries)
        if (!r.is_zero()) return name;
    return std::nullopt;
}

std::string CocycleResiduals::summary() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, r] : entries) {
        if (r.is_zero()) continue;
        os << (first ? "" : "; ") << name << ": " << r.size() << " nonzero terms";
        first = false;
    }
    return first ? "all residuals zero" : os.str();
}

CocycleResiduals cocycle_conditions(const TruncatedElement& alpha, const TruncatedElement& beta) {
    if (alpha.legs() != 3 || beta.legs() != 3) throw PreconditionError("defects must be three-leg elements");
    CocycleResiduals r;
    r.entries.emplace_back("conds1", d_on_leg(alpha, 2) - d_on_leg(beta, 0));
    r.entries.emplace_back("conds2_alpha", d_on_leg(alpha, 0) - d_on_leg(alpha, 1));
    r.entries.emplace_back("conds2_beta", d_on_leg(beta, 1) - d_on_leg(beta, 2));
    r.entries.emplace_back("conds3_alpha", alpha - permute_legs(alpha, {1, 0, 2}));
    r.entries.emplace_back("conds3_beta", beta - permute_legs(beta, {0, 2, 1}));
    for (int l = 0; l < 3; ++l) {
        r.entries.emplace_back("counit_alpha_" + std::to_string(l + 1), counit_on_leg(alpha, l));
        r.entries.emplace_back("counit_beta_" + std::to_string(l + 1), counit_on_leg(beta, l));
    }
    return r;
}

bool counits_vanish(const TruncatedElement& f) {
    for (int l = 0; l < f.legs(); ++l)
        if (!counit_on_leg(f, l).is_zero()) return false;
    return true;
}

bool is_homogeneous(const TruncatedElement& f, int n) {
    return f.is_zero() || (f.filtration_degree() == n && f.top_degree() == n);
}

SigmaSolution solve_sigma_detailed(const TruncatedElement& alpha, const TruncatedElement& beta, int n,
                                   const SigmaOptions& opts) {
    if (n < 3) throw PreconditionError("solve_sigma requires degree n >= 3");
    if (alpha.legs() != 3 || beta.legs() != 3 || alpha.dim() != beta.dim())
        throw PreconditionError("defects must be three-leg elements over the same space");
    if (!is_homogeneous(alpha, n) || !is_homogeneous(beta, n))
        throw PreconditionError("defects must be homogeneous of degree n");
    const CocycleResiduals conds = cocycle_conditions(alpha, beta);
    if (!conds.passed())
        throw CocycleConditionError("defects violate the cocycle conditions (" + *conds.first_failure() + ")",
                                    conds.summary());

    const int d = alpha.dim();
    const int cap = std::max(alpha.cap(), n);
    SigmaSolution s;
    s.sigma_prime = solve_leg(-alpha, 0, n, opts.solver).truncated(cap);
    s.sigma_double_prime = solve_leg(-beta, 1, n, opts.solver).truncated(cap);
    if (opts.kernel_seed) {
        std::mt19937_64 rng(*opts.kernel_seed);
        s.sigma_prime += random_kernel(d, n, cap, 0, rng);
        s.sigma_double_prime += random_kernel(d, n, cap, 1, rng);
    }

    const TruncatedElement diff = s.sigma_prime - s.sigma_double_prime;
    s.sigma_prime_0 = TruncatedElement(d, 2, cap);
    s.sigma_double_prime_0 = TruncatedElement(d, 2, cap);
    for (const auto& [m, c] : diff.terms()) {
        if (leg_part(m, d, 0).degree() == 1)
            s.sigma_prime_0.add_term(m, c);
        else if (leg_part(m, d, 1).degree() == 1)
            s.sigma_double_prime_0.add_term(m, c);
        else
            throw InternalError("sigma' - sigma'' has a component outside g(x)S + S(x)g");
    }
    s.sigma = s.sigma_prime - s.sigma_prime_0;

    if (!(d_on_leg(s.sigma, 0) + alpha).is_zero() || !(d_on_leg(s.sigma, 1) + beta).is_zero())
        throw InternalError("recombined sigma does not solve the coboundary equations");
    if (!counits_vanish(s.sigma)) throw InternalError("sigma has nonvanishing counits");
    return s;
}

} // namespace qtlift
