#include <doctest.h>

#include "eolab/format.hpp"

using namespace eolab;

TEST_CASE("young diagrams") {
    CHECK(young_diagram(Partition{3, 1}) == "###\n#\n");
    CHECK(young_diagram(Partition()) == "(empty)\n");
    CHECK(young_diagram(Overpartition(Partition{3, 3, 2}, {3})) == "###~\n###\n##\n");
}

TEST_CASE("class tables in every format") {
    const IntTable t = class_count_table(eo_table(8));
    const std::string csv = render_table(t, OutputFormat::Csv);
    CHECK(csv.rfind("n,c0,c2\n", 0) == 0);
    CHECK(csv.find("6,2,2\n") != std::string::npos);
    CHECK(csv.find("8,4,1\n") != std::string::npos);

    const std::string json = render_table(class_count_table(eo_table(2)), OutputFormat::Json);
    CHECK(json == "{\"rows\":[{\"n\":0,\"c0\":1,\"c2\":0},{\"n\":1,\"c0\":0,\"c2\":0},"
                  "{\"n\":2,\"c0\":1,\"c2\":1}]}\n");

    const std::string text = render_table(class_count_table(eo_table(2)), OutputFormat::Text);
    CHECK(text == "n  c0  c2\n0   1   0\n1   0   0\n2   1   1\n");
}

TEST_CASE("tables round-trip byte for byte") {
    const std::vector<IntTable> tables{class_count_table(eo_table(20)),
                                       class_count_table(eobar_table(12)),
                                       crank_table(crank_distribution(12)),
                                       crank_table(crank_distribution(1))};
    for (const IntTable& t : tables) {
        for (OutputFormat f : {OutputFormat::Text, OutputFormat::Csv, OutputFormat::Json}) {
            const std::string out = render_table(t, f);
            const IntTable back = parse_table(out, f);
            if (!t.rows.empty() || f != OutputFormat::Json) {
                CHECK(back == t);
            }
            CHECK(render_table(back, f) == out);
        }
    }
}

TEST_CASE("crank table") {
    const IntTable t = crank_table(crank_distribution(8));
    CHECK(t.columns == std::vector<std::string>{"eoc", "count"});
    CHECK(t.rows.front() == std::vector<long long>{8, 1});
    CHECK(t.rows.back() == std::vector<long long>{-8, 1});
}

TEST_CASE("malformed tables") {
    CHECK_THROWS_AS(parse_table("n,c0\n1,x\n", OutputFormat::Csv), ParameterError);
    CHECK_THROWS_AS(parse_table("n,c0\n1\n", OutputFormat::Csv), ParameterError);
    CHECK_THROWS_AS(parse_table("{\"cols\":[]}", OutputFormat::Json), ParameterError);
    CHECK_THROWS_AS(parse_table("not json", OutputFormat::Json), ParameterError);
    CHECK_THROWS_AS(parse_output_format("xml"), ParameterError);
}

TEST_CASE("report rendering") {
    VerificationReport r;
    r.name = "demo";
    r.order = 4;
    r.params = {{"r", 1}};
    r.checks = {"a vs b"};
    CHECK(render_report(r).rfind("PASS demo r=1 (order 4)\n", 0) == 0);
    r.mismatch = ReportMismatch{"a vs b", 3, -1, 2, 5};
    r.witnesses = {"(3)"};
    const std::string out = render_report(r);
    CHECK(out.rfind("FAIL demo", 0) == 0);
    CHECK(out.find("left 2, right 5") != std::string::npos);
    CHECK(out.find("    (3)\n") != std::string::npos);
    CHECK(report_to_json({r}).find("\"passed\": false") != std::string::npos);
}

TEST_CASE("trace rendering") {
    BijectionTrace trace;
    phi_forward(Partition{2}, Partition{2, 2}, 0, &trace);
    const std::string out = render_trace(trace);
    CHECK(out.find("== CASE3") != std::string::npos);
    CHECK(out.find("nu = (3,3)\n  ###\n  ###\n") != std::string::npos);
}
