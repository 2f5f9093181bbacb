#include "hadamard6/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hadamard6/errors.hpp"

namespace hadamard6 {

namespace {

bool blank(const std::string& line) {
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::vector<double> parse_row(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::vector<double> vals;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            if (!std::isfinite(v))
                throw Error(ErrorKind::ParseError,
                            "non-finite value on line " + std::to_string(lineno));
            vals.push_back(v);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError,
                        "bad float '" + tok + "' on line " + std::to_string(lineno));
        }
    }
    return vals;
}

}  // namespace

Mat6 read_mat6(std::istream& in) {
    Mat6 m;
    std::string line;
    int lineno = 0;
    int row = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (row == 0 && (blank(line) || line[0] == '#')) continue;  // preamble only
        if (row >= 6) {
            if (blank(line)) continue;  // trailing whitespace is fine
            throw Error(ErrorKind::ParseError, "extra content after 6 data lines");
        }
        std::vector<double> vals = parse_row(line, lineno);
        if (vals.size() != 12)
            throw Error(ErrorKind::ParseError, "expected 12 floats on line " +
                                                   std::to_string(lineno) + ", got " +
                                                   std::to_string(vals.size()));
        for (int c = 0; c < 6; ++c)
            m(row, c) = Complex(vals[static_cast<std::size_t>(2 * c)],
                                vals[static_cast<std::size_t>(2 * c + 1)]);
        ++row;
    }
    if (row != 6)
        throw Error(ErrorKind::ParseError,
                    "expected 6 data lines, got " + std::to_string(row));
    return m;
}

Mat6 read_mat6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    return read_mat6(in);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_mat6(std::ostream& out, const Mat6& m, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) {
            if (c) out << ' ';
            out << format_double(m(r, c).real()) << ' ' << format_double(m(r, c).imag());
        }
        out << '\n';
    }
}

void write_mat6_file(const std::string& path, const Mat6& m,
                     const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot open '" + path + "' for writing");
    write_mat6(out, m, comments);
    out.flush();
    if (!out) throw Error(ErrorKind::ParseError, "write failed for '" + path + "'");
}

}  // namespace hadamard6
