#include "qtlift/pipeline.hpp"

#include <sstream>

#include "qtlift/braiding.hpp"
#include "qtlift/errors.hpp"
#include "qtlift/io.hpp"
#include "qtlift/liftengine.hpp"

namespace qtlift {

using nlohmann::json;

std::set<std::string> parse_emit_list(const std::string& text) {
    static const std::set<std::string> known{"lift", "braiding", "report", "audit"};
    std::set<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!known.count(item)) throw InputError("unknown emit target '" + item + "'");
        out.insert(item);
    }
    if (out.empty()) throw InputError("emit list is empty");
    return out;
}

namespace {

json error_json(const std::string& stage, const std::string& kind, const std::string& message) {
    return {{"stage", stage}, {"kind", kind}, {"message", message}};
}

bool run_checks(const JobConfig& cfg, const LieBialgebra& lb, json& out, json& report) {
    ContextOptions copts;
    copts.unchecked_dual = cfg.skip_validation;
    const AlgebraContext ctx(lb, cfg.degree, copts);
    report["context"] = {{"coproduct_cross_check_degree", ctx.cross_checked_degree()}};

    const LiftState state = construct_lift_state(ctx, {}, false);
    json conds = json::array();
    for (const auto& step : state.audit)
        conds.push_back({{"n", step.n}, {"passed", step.conditions.passed()}, {"residuals", report_to_json(step.conditions)}});
    report["cocycle_conditions"] = conds;

    const AxiomReport lift_rep = check_lift_axioms(ctx, state.rho);
    report["lift_axioms"] = report_to_json(lift_rep);
    const TruncatedElement psi = qt_defect(ctx, state.rho);
    report["qt_defect"] = {{"passed", psi.is_zero()}, {"nonzero_terms", psi.size()}};

    const BraidingOperator br = braiding_from_lift(ctx, state.rho);
    const AxiomReport br_rep = check_braiding_axioms(ctx, br);
    report["braiding_axioms"] = report_to_json(br_rep);

    const auto wx = wx_second_order(lb);
    int mismatches = 0;
    for (int i = 0; i < lb.dim(); ++i)
        for (int j = 0; j < lb.dim(); ++j)
            if (!(wx[static_cast<std::size_t>(i * lb.dim() + j)] == mixed_block(br, i, j))) ++mismatches;
    report["wx_agreement"] = {{"passed", mismatches == 0}, {"pairs", lb.dim() * lb.dim()}, {"mismatches", mismatches}};

    bool ok = lift_rep.passed() && psi.is_zero() && br_rep.passed() && mismatches == 0;
    if (cfg.seed_check) {
        LiftOptions opts;
        opts.section_seed = *cfg.seed_check;
        opts.keep_audit = false;
        const TruncatedElement other = construct_lift_state(ctx, opts, false).rho;
        const bool same = other == state.rho;
        report["seed_check"] = {{"seed", *cfg.seed_check}, {"passed", same}};
        ok = ok && same;
    }

    if (cfg.emit.count("lift")) out["lift"] = element_to_json(state.rho);
    if (cfg.emit.count("braiding")) {
        json cols = json::array();
        for (const auto& [m, img] : br.op.columns())
            cols.push_back({{"basis", m.exponents(2 * lb.dim())}, {"image", element_to_json(img)}});
        out["braiding"] = cols;
    }
    if (cfg.emit.count("audit")) {
        json audit = json::array();
        for (const auto& step : state.audit)
            audit.push_back({{"n", step.n},
                             {"alpha", element_to_json(step.alpha)},
                             {"beta", element_to_json(step.beta)},
                             {"sigma", element_to_json(step.sigma)}});
        out["audit"] = audit;
    }
    return ok;
}

} // namespace

JobResult run_job(const JobConfig& cfg) {
    JobResult res;
    json& out = res.output;
    json report = json::object();
    out["degree"] = cfg.degree;
    std::string stage = "parse";
    try {
        if (cfg.degree < 3) throw InputError("truncation degree must be at least 3");
        if (cfg.emit.empty()) throw InputError("emit list is empty");
        const LieBialgebra lb = parse_input(cfg.input_text);
        out["input"] = serialize_input(lb);

        stage = "validation";
        const ValidationReport val = validate_quasitriangular(lb);
        report["validation"] = report_to_json(val);
        report["validation_skipped"] = cfg.skip_validation;
        if (!cfg.skip_validation && !val.passed()) {
            std::string failed;
            for (const auto& c : val.checks)
                if (!c.passed()) failed += (failed.empty() ? "" : ", ") + c.name;
            out["error"] = error_json(stage, "axiom_failure", "validation gate failed: " + failed);
            res.exit_code = kExitAxiomFailure;
        } else {
            stage = "construction";
            const bool ok = run_checks(cfg, lb, out, report);
            report["passed"] = ok;
            if (!ok) {
                out["error"] = error_json("verification", "axiom_failure", "one or more checks have nonzero residuals");
                res.exit_code = kExitAxiomFailure;
            }
        }
    } catch (const InputError& e) {
        out["error"] = error_json(stage, "input_error", e.what());
        res.exit_code = kExitInputError;
    } catch (const ValidationError& e) {
        out["error"] = error_json(stage, "axiom_failure", e.what());
        res.exit_code = kExitAxiomFailure;
    } catch (const CocycleConditionError& e) {
        out["error"] = error_json(stage, "cocycle_condition", e.what());
        out["error"]["residual"] = e.residual();
        res.exit_code = kExitInternal;
    } catch (const std::exception& e) {
        out["error"] = error_json(stage, "internal_error", e.what());
        res.exit_code = kExitInternal;
    }
    if (cfg.emit.count("report")) out["report"] = report;
    return res;
}

} // namespace qtlift
