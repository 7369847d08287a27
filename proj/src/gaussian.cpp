#include "instanton/gaussian.hpp"

#include <cctype>

namespace inst {

GQ& GQ::operator+=(const GQ& o)
{
    re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
}

GQ& GQ::operator-=(const GQ& o)
{
    re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
}

GQ& GQ::operator*=(const GQ& o)
{
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GQ GQ::inverse() const
{
    if (is_zero()) throw std::domain_error("GQ: division by zero");
    if (sgn(im) == 0) return GQ(mpq_class(1) / re);
    mpq_class n = re * re + im * im;
    return GQ(re / n, -im / n);
}

GQ& GQ::operator/=(const GQ& o)
{
    if (o.is_zero()) throw std::domain_error("GQ: division by zero");
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re /= o.re;
        return *this;
    }
    return *this *= o.inverse();
}

GQ GQ::pow(long n) const
{
    if (n < 0) return inverse().pow(-n);
    GQ result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string GQ::str() const
{
    if (sgn(im) == 0) return re.get_str();
    std::string s = re.get_str();
    if (sgn(im) > 0) s += "+";
    return s + im.get_str() + "*i";
}

static mpq_class parse_rational(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("GQ::parse: empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("GQ::parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("GQ::parse: zero denominator");
    q.canonicalize();
    return q;
}

GQ GQ::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
        std::string body = s.substr(0, s.size() - 2);
        // split at the last sign that is not leading
        size_t pos = std::string::npos;
        for (size_t k = body.size(); k-- > 1;)
            if (body[k] == '+' || body[k] == '-') {
                pos = k;
                break;
            }
        if (pos == std::string::npos) return GQ(mpq_class(0), parse_rational(body));
        std::string r = body.substr(0, pos);
        std::string i = body.substr(body[pos] == '+' ? pos + 1 : pos);
        return GQ(parse_rational(r), parse_rational(i));
    }
    return GQ(parse_rational(s));
}

int cmp(const GQ& a, const GQ& b)
{
    int c = ::cmp(a.re, b.re);
    if (c != 0) return c < 0 ? -1 : 1;
    c = ::cmp(a.im, b.im);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace inst
