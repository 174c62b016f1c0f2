#include "whf/io.hpp"

#include "whf/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace whf {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_complex(cplx z)
{
    return format_double(z.real()) + "," + format_double(z.imag());
}

double parse_double(std::string_view s)
{
    s = trim(s);
    if (s == "inf" || s == "+inf")
        return INFINITY;
    if (s == "-inf")
        return -INFINITY;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
        fail(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
    return v;
}

cplx parse_complex(std::string_view s)
{
    auto parts = split(trim(s), ',');
    if (parts.size() == 1)
        return {parse_double(parts[0]), 0.0};
    if (parts.size() != 2)
        fail(ErrorCode::ParseError, "bad complex '" + std::string(s) + "', expected re,im");
    return {parse_double(parts[0]), parse_double(parts[1])};
}

std::string_view trim(std::string_view s)
{
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
    fs::path tmp = dir / ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out)
            fail(ErrorCode::IoError, "write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        fail(ErrorCode::IoError, "rename to '" + path + "' failed: " + ec.message());
    }
}

} // namespace whf
