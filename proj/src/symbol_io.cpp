#include "whf/symbol_io.hpp"

#include "whf/error.hpp"
#include "whf/io.hpp"

#include <filesystem>
#include <map>
#include <sstream>

namespace whf {

PCSymbol as_pc(const Symbol& s)
{
    if (auto g = std::get_if<RationalSymbol>(&s))
        return PCSymbol::from_base(*g);
    return std::get<PCSymbol>(s);
}

cplx eval_symbol(const Symbol& s, double x)
{
    if (auto g = std::get_if<RationalSymbol>(&s))
        return g->eval_real(x);
    return std::get<PCSymbol>(s).eval(x);
}

namespace {

using Fields = std::multimap<std::string, std::string>;

std::vector<cplx> parse_list(std::string_view v)
{
    std::vector<cplx> out;
    std::istringstream in{std::string(v)};
    std::string tok;
    while (in >> tok)
        out.push_back(parse_complex(tok));
    return out;
}

std::string list_text(const std::vector<cplx>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            s += ' ';
        s += format_complex(v[k]);
    }
    return s;
}

const std::string& single(const Fields& f, const std::string& key)
{
    auto n = f.count(key);
    if (n == 0)
        fail(ErrorCode::ParseError, "missing key '" + key + "'");
    if (n > 1)
        fail(ErrorCode::ParseError, "duplicate key '" + key + "'");
    return f.find(key)->second;
}

std::string optional_single(const Fields& f, const std::string& key, const std::string& fallback)
{
    return f.count(key) ? single(f, key) : fallback;
}

RationalSymbol rational_from(const Fields& f)
{
    return RationalSymbol(parse_list(optional_single(f, "zeros", "")),
                          parse_list(optional_single(f, "poles", "")),
                          parse_complex(single(f, "scale")));
}

void write_rational(std::ostringstream& out, const RationalSymbol& g)
{
    out << "scale = " << format_complex(g.scale()) << '\n';
    out << "zeros = " << list_text(g.zeros()) << '\n';
    out << "poles = " << list_text(g.poles()) << '\n';
}

void check_keys(const Fields& f, std::initializer_list<const char*> allowed)
{
    for (const auto& [k, v] : f) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || k == a;
        if (!ok)
            fail(ErrorCode::ParseError, "unexpected key '" + k + "'");
    }
}

} // namespace

Symbol parse_symbol(std::string_view text)
{
    Fields f;
    for (std::string_view line : split(text, '\n')) {
        auto hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorCode::ParseError, "expected key = value: '" + std::string(line) + "'");
        f.emplace(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
    }

    const std::string kind = single(f, "kind");
    if (kind == "rational") {
        check_keys(f, {"kind", "scale", "zeros", "poles"});
        return rational_from(f);
    }
    if (kind != "pc")
        fail(ErrorCode::ParseError, "unknown kind '" + kind + "'");

    const std::string base = single(f, "base");
    PCBase b;
    if (base == "rational") {
        check_keys(f, {"kind", "base", "scale", "zeros", "poles", "jump"});
        b = rational_from(f);
    } else if (base == "sign") {
        check_keys(f, {"kind", "base", "a", "b", "jump"});
        b = SignForm{parse_complex(single(f, "a")), parse_complex(single(f, "b"))};
    } else if (base == "tanh") {
        check_keys(f, {"kind", "base", "a", "b", "power", "jump"});
        double p = parse_double(optional_single(f, "power", "1"));
        b = TanhForm{parse_complex(single(f, "a")), parse_complex(single(f, "b")), static_cast<int>(p)};
    } else if (base == "power") {
        check_keys(f, {"kind", "base", "scale", "alpha", "cut", "jump"});
        b = PowerForm{parse_complex(optional_single(f, "scale", "1,0")), parse_complex(single(f, "alpha")),
                      parse_double(optional_single(f, "cut", "inf"))};
    } else if (base == "table") {
        check_keys(f, {"kind", "base", "node", "jump"});
        SampledTable t;
        auto [lo, hi] = f.equal_range("node");
        for (auto it = lo; it != hi; ++it) {
            std::istringstream in(it->second);
            std::string xs, vs, extra;
            if (!(in >> xs >> vs) || (in >> extra))
                fail(ErrorCode::ParseError, "node expects '<x> <re,im>'");
            t.x.push_back(parse_double(xs));
            t.values.push_back(parse_complex(vs));
        }
        b = std::move(t);
    } else {
        fail(ErrorCode::ParseError, "unknown base '" + base + "'");
    }

    std::vector<JumpPoint> jumps;
    auto [lo, hi] = f.equal_range("jump");
    for (auto it = lo; it != hi; ++it) {
        std::istringstream in(it->second);
        std::string loc, l, r, extra;
        if (!(in >> loc >> l >> r) || (in >> extra))
            fail(ErrorCode::ParseError, "jump expects '<location> <left> <right>'");
        jumps.push_back({parse_double(loc), parse_complex(l), parse_complex(r)});
    }
    try {
        return PCSymbol(std::move(b), std::move(jumps));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidArgument)
            fail(ErrorCode::ParseError, e.what());
        throw;
    }
}

std::string serialize_symbol(const Symbol& s)
{
    std::ostringstream out;
    if (auto g = std::get_if<RationalSymbol>(&s)) {
        out << "kind = rational\n";
        write_rational(out, *g);
        return out.str();
    }
    const PCSymbol& pc = std::get<PCSymbol>(s);
    out << "kind = pc\n";
    const PCBase& b = pc.base();
    if (auto g = std::get_if<RationalSymbol>(&b)) {
        out << "base = rational\n";
        write_rational(out, *g);
    } else if (auto f = std::get_if<SignForm>(&b)) {
        out << "base = sign\na = " << format_complex(f->a) << "\nb = " << format_complex(f->b) << '\n';
    } else if (auto f = std::get_if<TanhForm>(&b)) {
        out << "base = tanh\na = " << format_complex(f->a) << "\nb = " << format_complex(f->b)
            << "\npower = " << f->power << '\n';
    } else if (auto f = std::get_if<PowerForm>(&b)) {
        out << "base = power\nscale = " << format_complex(f->scale) << "\nalpha = " << format_complex(f->alpha)
            << "\ncut = " << format_double(f->cut) << '\n';
    } else {
        const auto& t = std::get<SampledTable>(b);
        out << "base = table\n";
        for (std::size_t k = 0; k < t.x.size(); ++k)
            out << "node = " << format_double(t.x[k]) << ' ' << format_complex(t.values[k]) << '\n';
    }
    for (const JumpPoint& j : pc.jumps())
        out << "jump = " << format_double(j.location) << ' ' << format_complex(j.left) << ' '
            << format_complex(j.right) << '\n';
    return out.str();
}

Symbol load_symbol(const std::string& spec)
{
    if (std::filesystem::is_regular_file(spec))
        return parse_symbol(read_file(spec));
    auto colon = spec.find(':');
    if (spec.rfind("r^", 0) == 0) {
        double k = parse_double(spec.substr(2));
        if (k != static_cast<int>(k))
            fail(ErrorCode::ParseError, "r^K needs an integer K");
        return RationalSymbol::r_power(static_cast<int>(k));
    }
    if (colon != std::string::npos) {
        std::string head = spec.substr(0, colon);
        cplx v = parse_complex(spec.substr(colon + 1));
        if (head == "sign")
            return PCSymbol::sign_symbol(v);
        if (head == "tanh")
            return PCSymbol::tanh_symbol(v);
        if (head == "power")
            return PCSymbol::power_at_infinity(v);
    }
    fail(ErrorCode::ParseError, "'" + spec + "' is neither a symbol file nor a known shorthand");
}

} // namespace whf
