#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qtlift/errors.hpp"
#include "qtlift/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Lift a classical r-matrix to the dual formal Poisson group and verify the braiding."};
    std::string input;
    std::string emit = "lift,report";
    std::string out_path;
    qtlift::JobConfig cfg;
    std::uint64_t seed = 0;
    app.add_option("input", input, "Lie bialgebra document (JSON)")->required();
    app.add_option("--degree,-N", cfg.degree, "truncation degree N (>= 3)")->default_val(4);
    app.add_option("--emit", emit, "comma-separated subset of lift,braiding,report,audit")->default_val(emit);
    app.add_flag("--skip-validation", cfg.skip_validation, "do not stop at the validation gate");
    app.add_option("--out", out_path, "write the result document here instead of stdout");
    auto* seed_opt = app.add_option("--seed-check", seed, "rerun with a perturbed lift section using this seed");
    CLI11_PARSE(app, argc, argv);

    try {
        cfg.emit = qtlift::parse_emit_list(emit);
    } catch (const qtlift::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qtlift::kExitInputError;
    }
    if (*seed_opt) cfg.seed_check = seed;

    std::ifstream in(input);
    if (!in) {
        std::cerr << "error: cannot read " << input << '\n';
        return qtlift::kExitInputError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    cfg.input_text = buf.str();

    const qtlift::JobResult res = qtlift::run_job(cfg);
    const std::string text = res.output.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return qtlift::kExitInputError;
        }
        out << text;
    }
    if (res.output.contains("error")) std::cerr << "error: " << res.output["error"]["message"].get<std::string>() << '\n';
    return res.exit_code;
}
