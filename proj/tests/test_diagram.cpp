#include <doctest.h>

#include "multiseg/diagram.hpp"
#include "multiseg/speh.hpp"

using namespace multiseg;

TEST_CASE("text rendering") {
    Multisegment a = parse_multisegment("[0,1]+[1,2]");
    std::string out = render_text(a);
    // one row per segment, rows in canonical order, dots at exponents
    CHECK(out.find('*') != std::string::npos);
    auto first_row = out.substr(0, out.find('\n'));
    auto rest = out.substr(out.find('\n') + 1);
    auto second_row = rest.substr(0, rest.find('\n'));
    // second row's first dot is offset right of the first row's
    CHECK(second_row.find('*') > first_row.find('*'));
    // deterministic
    CHECK(render_text(a) == out);
}

TEST_CASE("speh parallelogram") {
    std::string out = render_text(speh_multisegment(SpehParams(0, 1, 2, 3)));
    int rows_with_dots = 0;
    std::size_t pos = 0;
    for (std::size_t nl = out.find('\n'); nl != std::string::npos; nl = out.find('\n', pos)) {
        if (out.substr(pos, nl - pos).find('*') != std::string::npos) ++rows_with_dots;
        pos = nl + 1;
    }
    CHECK(rows_with_dots == 3);
}

TEST_CASE("svg rendering") {
    std::string svg = render_svg(parse_multisegment("[0,1]"));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("multi-line rendering labels the groups") {
    Multisegment mixed = parse_multisegment("[0,1];[2,3]@mu");
    std::string out = render_text(mixed);
    CHECK(out.find("rho") != std::string::npos);
    CHECK(out.find("mu") != std::string::npos);
}
