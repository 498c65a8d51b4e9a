#include "object_spec.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <optional>

namespace vercat::cli {

SpecError::SpecError(const std::string& text, std::size_t position, const std::string& message)
    : std::invalid_argument(fmt::format("{} at position {}", message, position)), position_(position)
{
    pretty_ = fmt::format("{} at position {}\n  {}\n  {}^", message, position, text, std::string(position, ' '));
}

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool done()
    {
        skip();
        return i_ >= s_.size();
    }
    char peek()
    {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    std::size_t pos()
    {
        skip();
        return i_;
    }
    void advance() { ++i_; }

    std::uint64_t number()
    {
        skip();
        const std::size_t start = i_;
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > 1'000'000'000)
                fail(start, "number too large");
            v = v * 10 + std::uint64_t(s_[i_] - '0');
            ++i_;
        }
        if (i_ == start)
            fail(start, "expected a number");
        return v;
    }

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const { throw SpecError(s_, at, msg); }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

std::string describe(const std::string& allowed)
{
    std::string out;
    for (char c : allowed) {
        if (!out.empty())
            out += " or ";
        out += c == 'L' ? "'L<k>'" : fmt::format("'{}'", c);
    }
    return out;
}

} // namespace

namespace {

SpecTerm parse_term(Lexer& lx, const std::string& allowed)
{
    SpecTerm t;
    t.position = lx.pos();
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        const std::size_t at = lx.pos();
        const auto n = lx.number();
        if (lx.peek() == '*') {
            lx.advance();
            t.count = n;
        } else if (n == 1 && allowed.find('1') != std::string::npos) {
            return t;
        } else {
            lx.fail(at, n == 1 ? "unit not allowed here" : "expected '*' after a multiplicity");
        }
    }
    const std::size_t at = lx.pos();
    const char c = lx.peek();
    if (c == '\0' || allowed.find(c) == std::string::npos)
        lx.fail(at, "expected " + describe(allowed));
    lx.advance();
    t.atom = c;
    if (c == 'L') {
        if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
            lx.fail(lx.pos(), "expected an index after 'L'");
        t.index = lx.number();
    }
    return t;
}

} // namespace

std::vector<SpecTerm> parse_terms(const std::string& text, const std::string& allowed)
{
    Lexer lx(text);
    if (lx.done())
        lx.fail(0, "empty object spec");
    std::vector<SpecTerm> out;
    for (;;) {
        out.push_back(parse_term(lx, allowed));
        if (lx.done())
            return out;
        if (lx.peek() != '+')
            lx.fail(lx.pos(), "expected '+'");
        lx.advance();
        if (lx.done())
            lx.fail(text.size(), "expected a term after '+'");
    }
}

ver::VerObject parse_ver_object(const std::string& text, std::uint64_t p)
{
    if (text.find_first_not_of(" \t") != std::string::npos && text.find_first_not_of(" \t0") == std::string::npos)
        return ver::VerObject::zero(p);
    std::vector<std::uint64_t> mult(p - 1, 0);
    for (const auto& t : parse_terms(text, "1L")) {
        const std::uint64_t k = t.atom == '1' ? 1 : t.index;
        if (k < 1 || k >= p)
            throw SpecError(text, t.position, fmt::format("L{} is not a simple object of Ver_{}", k, p));
        mult[k - 1] += t.count;
    }
    return ver::VerObject(p, mult);
}

svec2::DModule parse_dmodule(const std::string& text)
{
    std::optional<svec2::DModule> out;
    for (const auto& t : parse_terms(text, "1W"))
        for (std::uint64_t c = 0; c < t.count; ++c) {
            auto piece = t.atom == 'W' ? svec2::w_module() : svec2::trivial(1);
            out = out ? svec2::direct_sum(*out, piece) : piece;
        }
    if (!out)
        throw SpecError(text, 0, "module has dimension zero");
    return *out;
}

std::vector<std::size_t> parse_basis_names(const std::string& text, const svec2::DModule& ambient)
{
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos)
            end = text.size();
        std::string name = text.substr(start, end - start);
        std::size_t lead = name.find_first_not_of(" \t");
        name.erase(0, lead == std::string::npos ? name.size() : lead);
        name.erase(name.find_last_not_of(" \t") + 1);
        const auto& names = ambient.names();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw SpecError(text, start, fmt::format("'{}' is not a basis vector of the ambient module", name));
        out.push_back(std::size_t(it - names.begin()));
        start = end + 1;
    }
    return out;
}

} // namespace vercat::cli
