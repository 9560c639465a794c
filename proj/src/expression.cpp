#include "legspec/expression.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>

namespace legspec
{

namespace
{

using Node = std::function<Complex(Real)>;

class Parser
{
public:
    explicit Parser(const std::string& text) : m_text(text) {}

    Node parse()
    {
        Node out = expression();
        skip_space();
        if (m_pos != m_text.size())
            fail("unexpected character");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("expression: " + what + " at position " + std::to_string(m_pos) + " in \"" + m_text +
                         "\"");
    }

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos])))
            ++m_pos;
    }

    bool accept(char c)
    {
        skip_space();
        if (m_pos < m_text.size() && m_text[m_pos] == c)
        {
            ++m_pos;
            return true;
        }
        return false;
    }

    Node expression()
    {
        Node lhs = term();
        while (true)
        {
            if (accept('+'))
            {
                Node rhs = term();
                lhs = [lhs, rhs](Real t) { return lhs(t) + rhs(t); };
            }
            else if (accept('-'))
            {
                Node rhs = term();
                lhs = [lhs, rhs](Real t) { return lhs(t) - rhs(t); };
            }
            else
                return lhs;
        }
    }

    Node term()
    {
        Node lhs = unary();
        while (true)
        {
            if (accept('*'))
            {
                Node rhs = unary();
                lhs = [lhs, rhs](Real t) { return lhs(t) * rhs(t); };
            }
            else if (accept('/'))
            {
                Node rhs = unary();
                lhs = [lhs, rhs](Real t) { return lhs(t) / rhs(t); };
            }
            else
                return lhs;
        }
    }

    Node unary()
    {
        if (accept('-'))
        {
            Node inner = unary();
            return [inner](Real t) { return -inner(t); };
        }
        if (accept('+'))
            return unary();
        return power();
    }

    // Right associative; binds tighter than unary minus on its left (-t^2 = -(t^2)).
    Node power()
    {
        Node base = primary();
        if (accept('^'))
        {
            Node exponent = unary();
            return [base, exponent](Real t) {
                const Complex e = exponent(t);
                if (e.imag() == 0.0 && e.real() == std::round(e.real()) && std::abs(e.real()) <= 64)
                {
                    const int n = static_cast<int>(e.real());
                    Complex acc(1.0), b = base(t);
                    for (int k = 0; k < std::abs(n); ++k)
                        acc *= b;
                    return n >= 0 ? acc : 1.0 / acc;
                }
                return std::pow(base(t), e);
            };
        }
        return base;
    }

    Node primary()
    {
        skip_space();
        if (m_pos >= m_text.size())
            fail("unexpected end of input");
        const char c = m_text[m_pos];
        if (accept('('))
        {
            Node inner = expression();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return identifier();
        fail("unexpected character");
    }

    Node number()
    {
        const char* begin = m_text.c_str() + m_pos;
        char* end = nullptr;
        const Real value = std::strtod(begin, &end);
        if (end == begin)
            fail("malformed number");
        m_pos += static_cast<std::size_t>(end - begin);
        return [value](Real) { return Complex(value); };
    }

    Node identifier()
    {
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isalnum(static_cast<unsigned char>(m_text[m_pos])))
            ++m_pos;
        const std::string name = m_text.substr(start, m_pos - start);
        if (name == "t")
            return [](Real t) { return Complex(t); };
        if (name == "i")
            return [](Real) { return Complex(0.0, 1.0); };
        if (name == "pi")
            return [](Real) { return Complex(std::numbers::pi); };
        if (name == "e")
            return [](Real) { return Complex(std::numbers::e); };

        using Fn = Complex (*)(const Complex&);
        static const std::map<std::string, Fn> functions = {
            {"sin", [](const Complex& z) { return std::sin(z); }},
            {"cos", [](const Complex& z) { return std::cos(z); }},
            {"tan", [](const Complex& z) { return std::tan(z); }},
            {"exp", [](const Complex& z) { return std::exp(z); }},
            {"log", [](const Complex& z) { return std::log(z); }},
            {"sqrt", [](const Complex& z) { return std::sqrt(z); }},
            {"sinh", [](const Complex& z) { return std::sinh(z); }},
            {"cosh", [](const Complex& z) { return std::cosh(z); }},
            {"abs", [](const Complex& z) { return Complex(std::abs(z)); }},
        };
        const auto it = functions.find(name);
        if (it == functions.end())
        {
            m_pos = start;
            fail("unknown identifier '" + name + "'");
        }
        if (!accept('('))
            fail("expected '(' after " + name);
        Node arg = expression();
        if (!accept(')'))
            fail("expected ')'");
        const Fn fn = it->second;
        return [fn, arg](Real t) { return fn(arg(t)); };
    }

    const std::string& m_text;
    std::size_t m_pos = 0;
};

} // namespace

ScalarFunction parse_expression(const std::string& text)
{
    return Parser(text).parse();
}

} // namespace legspec
