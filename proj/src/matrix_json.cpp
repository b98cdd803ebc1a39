#include "tripotent/matrix_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tripotent {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void append_plane(std::ostringstream& os, const ComplexMatrix& a, bool real_part) {
    os << '[';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ',';
            const Complex& z = a(i, j);
            os << format_double(real_part ? z.real() : z.imag());
        }
        os << ']';
    }
    os << ']';
}

} // namespace

std::string matrix_to_json(const ComplexMatrix& a) {
    std::ostringstream os;
    os << "{\"rows\":" << a.rows() << ",\"cols\":" << a.cols() << ",\"re\":";
    append_plane(os, a, true);
    os << ",\"im\":";
    append_plane(os, a, false);
    os << '}';
    return os.str();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("matrix JSON parse failure: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("re") || !j.contains("im")) {
        throw InvalidInputError("matrix JSON must have rows, cols, re, im fields");
    }
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
        throw InvalidInputError("rows and cols must be nonnegative integers");
    }
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();

    auto read_plane = [&](const char* key) {
        const nlohmann::json& plane = j[key];
        if (!plane.is_array() || plane.size() != rows) {
            throw InvalidInputError(std::string(key) + " must be an array of length rows");
        }
        std::vector<double> values;
        values.reserve(rows * cols);
        for (const auto& row : plane) {
            if (!row.is_array() || row.size() != cols) {
                throw InvalidInputError(std::string(key) + " rows must have length cols");
            }
            for (const auto& v : row) {
                if (!v.is_number()) {
                    throw InvalidInputError(std::string(key) + " entries must be numbers");
                }
                values.push_back(v.get<double>());
            }
        }
        return values;
    };

    const std::vector<double> re = read_plane("re");
    const std::vector<double> im = read_plane("im");
    std::vector<Complex> entries(rows * cols);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] = Complex(re[i], im[i]);
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(buf.str());
}

} // namespace tripotent
