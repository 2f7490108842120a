// Command-line surface: transforms, gauges, the verification suite, the
// worked-example reproduction, numerical-range dumps and shift experiments.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lmt/classify.hpp"
#include "lmt/errors.hpp"
#include "lmt/gauges.hpp"
#include "lmt/linalg.hpp"
#include "lmt/matrix_io.hpp"
#include "lmt/shifts.hpp"
#include "lmt/transforms.hpp"
#include "lmt/verify.hpp"

namespace {

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw lmt::FormatError("cannot open output file: " + outPath);
    out << text << '\n';
}

int run_transform(const std::string& matrixPath, const std::string& kind,
                  const lmt::TransformParams& params, const std::string& outPath) {
    const lmt::ComplexMatrix t = lmt::read_matrix_file(matrixPath);
    lmt::ComplexMatrix result;
    if (kind == "duggal") {
        result = lmt::duggal(t);
    } else if (kind == "aluthge") {
        result = lmt::aluthge(t);
    } else if (kind == "mean") {
        result = lmt::mean_transform(t);
    } else if (kind == "lambda-mean") {
        result = lmt::iterate_lambda_mean(t, params.lambda, params.iterations);
    } else if (kind == "generalized") {
        result = lmt::generalized_mean(t, params.t);
    } else {
        std::cerr << "unknown transform kind: " << kind << '\n';
        return 2;
    }
    emit(lmt::matrix_to_json(result), outPath);
    return 0;
}

int run_gauges(const std::string& matrixPath, double tol, const std::string& outPath) {
    const lmt::ComplexMatrix t = lmt::read_matrix_file(matrixPath);
    const lmt::GaugeBracket radius = lmt::numerical_radius(t, tol, 1 << 20);
    const lmt::Interval r = lmt::spectral_radius_bracket(t);
    const lmt::ComplexMatrix td = lmt::duggal(t);

    nlohmann::ordered_json j;
    j["dim"] = t.dim();
    j["operatorNorm"] = lmt::operator_norm(t);
    j["duggalNorm"] = lmt::operator_norm(td);
    j["spectralRadius"] = {{"lo", r.lo}, {"hi", r.hi}};
    j["numericalRadius"] = {{"lo", radius.lo},
                            {"hi", radius.hi},
                            {"evaluations", radius.evaluations},
                            {"method", lmt::method_name(radius.method)}};
    const lmt::ClassReport rep = lmt::classify(t);
    j["classify"] = {{"normal", rep.normal},
                     {"quasinormal", rep.quasinormal},
                     {"hyponormal", rep.hyponormal},
                     {"partialIsometry", rep.partialIsometry},
                     {"isometry", rep.isometry},
                     {"unitary", rep.unitary},
                     {"residuals",
                      {{"normal", rep.normalResidual},
                       {"quasinormal", rep.quasinormalResidual},
                       {"hyponormal", rep.hyponormalResidual},
                       {"partialIsometry", rep.partialIsometryResidual},
                       {"isometry", rep.isometryResidual},
                       {"unitary", rep.unitaryResidual}}},
                     {"tol", rep.tol}};
    emit(j.dump(2), outPath);
    return 0;
}

int run_verify(int corpus, std::uint64_t seed, const std::vector<double>& lambdaGrid,
               int maxDim, int threads, bool timing, const std::string& outPath) {
    lmt::VerifyOptions opts;
    if (!lambdaGrid.empty()) opts.lambdaGrid = lambdaGrid;
    opts.threads = threads;
    const auto specs = lmt::make_corpus(corpus, seed, 2, maxDim);
    lmt::VerifyReport rep = lmt::verify_suite(specs, opts);
    rep.seed = seed;
    emit(lmt::report_to_json(rep, timing), outPath);
    if (!rep.all_pass()) {
        std::cerr << "verify: FAILED checks present\n";
        return 1;
    }
    return 0;
}

int run_paper_examples(bool timing, const std::string& outPath) {
    const lmt::VerifyReport rep = lmt::paper_examples();
    emit(lmt::report_to_json(rep, timing), outPath);
    if (!rep.all_pass()) {
        std::cerr << "paper-examples: FAILED checks present\n";
        return 1;
    }
    return 0;
}

int run_range(const std::string& matrixPath, int points, const std::string& outPath) {
    const lmt::ComplexMatrix t = lmt::read_matrix_file(matrixPath);
    const std::vector<lmt::RangePoint> pts = lmt::range_boundary(t, points);
    std::ostringstream csv;
    csv << "theta,re,im,support\n";
    csv << std::setprecision(17);
    for (const lmt::RangePoint& p : pts)
        csv << p.theta << ',' << p.value.real() << ',' << p.value.imag() << ','
            << p.support << '\n';
    if (outPath.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(outPath);
        if (!out) throw lmt::FormatError("cannot open output file: " + outPath);
        out << csv.str();
    }
    return 0;
}

int run_shift_lab(const std::string& ruleName, double param, double lambda, int maxIter,
                  int window, const std::string& outPath) {
    const lmt::WeightRule rule = lmt::WeightRule::from_name(ruleName, param);
    const lmt::ConvergenceReport rep =
        lmt::convergence_experiment(rule, lambda, maxIter, window);
    std::ostringstream csv;
    csv << "mIter,windowError\n";
    csv << std::setprecision(17);
    for (std::size_t i = 0; i < rep.iteration.size(); ++i)
        csv << rep.iteration[i] << ',' << rep.windowError[i] << '\n';
    if (outPath.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(outPath);
        if (!out) throw lmt::FormatError("cannot open output file: " + outPath);
        out << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda-mean operator transform toolkit"};
    app.require_subcommand(1);

    std::string matrixPath, outPath, kind = "lambda-mean", ruleName = "harmonic";
    double lambda = 0.5, tParam = 0.25, tol = 1e-6, param = 0.5;
    int iterations = 1, points = 64, corpus = 64, maxDim = 8, maxIter = 60, window = 8,
        threads = 0;
    std::uint64_t seed = 42;
    std::vector<double> lambdaGrid;
    bool timing = false;

    CLI::App* transform = app.add_subcommand("transform", "apply an operator transform");
    transform->add_option("matrix", matrixPath, "matrix JSON file")->required();
    transform->add_option("--lambda", lambda, "lambda in [0,1]");
    transform->add_option("--kind", kind, "duggal|aluthge|mean|lambda-mean|generalized");
    transform->add_option("--t", tParam, "exponent for the generalized mean");
    transform->add_option("--iterations", iterations, "iteration count for lambda-mean");
    transform->add_option("--out", outPath, "output file (stdout when omitted)");

    CLI::App* gauges = app.add_subcommand("gauges", "norm/radius gauges of a matrix");
    gauges->add_option("matrix", matrixPath, "matrix JSON file")->required();
    gauges->add_option("--tol", tol, "radius bracket tolerance");
    gauges->add_option("--out", outPath, "output file");

    CLI::App* verify = app.add_subcommand("verify", "run the randomized verification suite");
    verify->add_option("--corpus", corpus, "number of operators");
    verify->add_option("--seed", seed, "base seed");
    verify->add_option("--lambda-grid", lambdaGrid, "lambda grid values");
    verify->add_option("--max-dim", maxDim, "largest operator dimension");
    verify->add_option("--threads", threads, "worker threads (0 = auto)");
    verify->add_flag("--timing", timing, "include elapsed time in the report");
    verify->add_option("--out", outPath, "report file");

    CLI::App* examples = app.add_subcommand("paper-examples", "reproduce the worked examples");
    examples->add_flag("--timing", timing, "include elapsed time in the report");
    examples->add_option("--out", outPath, "report file");

    CLI::App* range = app.add_subcommand("range", "dump numerical-range boundary points");
    range->add_option("matrix", matrixPath, "matrix JSON file")->required();
    range->add_option("--points", points, "number of boundary points");
    range->add_option("--out", outPath, "CSV output file");

    CLI::App* shiftLab = app.add_subcommand("shift-lab", "iterated shift-weight experiment");
    shiftLab->add_option("--rule", ruleName, "harmonic|geometric|saturating|constant");
    shiftLab->add_option("--param", param, "rule parameter (ratio or constant)");
    shiftLab->add_option("--lambda", lambda, "lambda in [0,1)");
    shiftLab->add_option("--max-iter", maxIter, "largest iteration count");
    shiftLab->add_option("--window", window, "index window size");
    shiftLab->add_option("--out", outPath, "CSV output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform->parsed())
            return run_transform(matrixPath, kind, {lambda, tParam, iterations}, outPath);
        if (gauges->parsed()) return run_gauges(matrixPath, tol, outPath);
        if (verify->parsed())
            return run_verify(corpus, seed, lambdaGrid, maxDim, threads, timing, outPath);
        if (examples->parsed()) return run_paper_examples(timing, outPath);
        if (range->parsed()) return run_range(matrixPath, points, outPath);
        if (shiftLab->parsed())
            return run_shift_lab(ruleName, param, lambda, maxIter, window, outPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
