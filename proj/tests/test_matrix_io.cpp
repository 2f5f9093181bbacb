#include <doctest.h>

#include <random>
#include <sstream>

#include "hadamard6/errors.hpp"
#include "hadamard6/matrix_io.hpp"
#include "test_helpers.hpp"

using namespace hadamard6;

TEST_CASE("round trip is bit exact") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat6 m = h6test::random_mat6(rng);
        std::stringstream ss;
        write_mat6(ss, m, {"trial matrix"});
        const Mat6 back = read_mat6(ss);
        CHECK(back == m);
    }
}

TEST_CASE("comment and blank lines before data are skipped") {
    std::stringstream ss;
    ss << "# a comment\n\n# another\n";
    Mat6 m;
    for (int i = 0; i < 36; ++i) m.e[i] = Complex(i, -i);
    write_mat6(ss, m);
    CHECK(read_mat6(ss) == m);
}

TEST_CASE("malformed files are rejected") {
    auto expect_parse_error = [](const std::string& text) {
        std::stringstream ss(text);
        try {
            read_mat6(ss);
            FAIL_CHECK("expected ParseError for: " << text.substr(0, 40));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    };

    const std::string row12 = "1 0 1 0 1 0 1 0 1 0 1 0\n";
    std::string eleven;
    for (int i = 0; i < 5; ++i) eleven += row12;
    eleven += "1 0 1 0 1 0 1 0 1 0 1\n";  // 11 floats
    expect_parse_error(eleven);

    std::string five_rows;
    for (int i = 0; i < 5; ++i) five_rows += row12;
    expect_parse_error(five_rows);

    std::string extra_row;
    for (int i = 0; i < 7; ++i) extra_row += row12;
    expect_parse_error(extra_row);

    std::string bad_token;
    for (int i = 0; i < 5; ++i) bad_token += row12;
    bad_token += "1 0 1 0 1 0 1 0 1 0 1 oops\n";
    expect_parse_error(bad_token);

    std::string non_finite;
    for (int i = 0; i < 5; ++i) non_finite += row12;
    non_finite += "1 0 1 0 1 0 1 0 1 0 1 nan\n";
    expect_parse_error(non_finite);

    expect_parse_error("");
}

TEST_CASE("missing file reports ParseError") {
    try {
        read_mat6_file("/nonexistent/definitely/not/here.mat");
        FAIL_CHECK("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}
