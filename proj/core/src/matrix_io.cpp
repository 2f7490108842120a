#include "lmt/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lmt/errors.hpp"

namespace lmt {

ComplexMatrix read_matrix(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("matrix parse: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw FormatError("matrix parse: expected object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 1)
        throw FormatError("matrix parse: \"n\" must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != n * n)
        throw FormatError("matrix parse: entries must hold n*n [re, im] pairs (square only)");

    ComplexMatrix m(n);
    for (std::size_t k = 0; k < n * n; ++k) {
        const auto& e = entries[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw FormatError("matrix parse: entry " + std::to_string(k) +
                              " is not an [re, im] pair");
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw FormatError("matrix parse: non-finite entry at index " + std::to_string(k));
        m.data()[k] = Complex(re, im);
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << matrix_to_json(m);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open output file: " + path);
    write_matrix(out, m);
    out << '\n';
}

std::string matrix_to_json(const ComplexMatrix& m) {
    nlohmann::ordered_json j;
    j["n"] = m.dim();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const Complex& z : m.data()) entries.push_back({z.real(), z.imag()});
    j["entries"] = entries;
    return j.dump();
}

}  // namespace lmt
