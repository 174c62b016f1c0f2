#include "whf/error.hpp"
#include "whf/io.hpp"
#include "whf/reports.hpp"

#include <doctest.h>

#include <filesystem>

using namespace whf;

TEST_SUITE("io") {

TEST_CASE("doubles round-trip through text")
{
    for (double v : {0.0, -0.0, 1.0 / 3.0, 1e-300, -2.5e17, 6.02214076e23})
        CHECK(parse_double(format_double(v)) == v);
    CHECK(format_double(kInfinity) == "inf");
    CHECK(std::isinf(parse_double("-inf")));
    CHECK_THROWS_AS(parse_double("1.0x"), Error);
    CHECK_THROWS_AS(parse_double(""), Error);
}

TEST_CASE("complex parsing")
{
    CHECK(parse_complex("1.5,-2") == cplx{1.5, -2.0});
    CHECK(parse_complex(" 3 ") == cplx{3.0, 0.0});
    CHECK(parse_complex(format_complex(cplx{0.1, 1.0 / 7.0})) == cplx{0.1, 1.0 / 7.0});
    CHECK_THROWS_AS(parse_complex("1,2,3"), Error);
}

TEST_CASE("atomic writes replace the target")
{
    auto dir = std::filesystem::temp_directory_path() / "whf_io_test";
    std::filesystem::create_directories(dir);
    std::string path = (dir / "out.txt").string();
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    CHECK(read_file(path) == "second\n");
    int entries = 0;
    for (auto& e : std::filesystem::directory_iterator(dir))
        entries += e.is_regular_file();
    CHECK(entries == 1);
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(read_file((dir / "missing").string()), Error);
}

TEST_CASE("reports serialise deterministically")
{
    FredholmReport r = fredholm_report(RationalSymbol::r_power(2), 2.0);
    std::string a = dump(to_json(r)), b = dump(to_json(fredholm_report(RationalSymbol::r_power(2), 2.0)));
    CHECK(a == b);
    Json j = Json::parse(a);
    CHECK(j["index"] == -2);
    CHECK(j["invertibility"] == "left-only");
    FredholmReport bad = fredholm_report(PCSymbol::power_at_infinity(0.5), 2.0);
    CHECK(to_json(bad)["index"].is_null());
}

}
