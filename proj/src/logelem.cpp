#include "instanton/logelem.hpp"

#include <sstream>

namespace inst {

LogElem LogElem::term(int pi_deg, int l_deg, const TLaurent& c)
{
    LogElem r;
    r.terms_.emplace(Key{pi_deg, l_deg}, c);
    return r;
}

TLaurent LogElem::coeff(int pi_deg, int l_deg) const
{
    auto it = terms_.find({pi_deg, l_deg});
    return it == terms_.end() ? TLaurent() : it->second;
}

LogElem& LogElem::operator+=(const LogElem& o)
{
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) terms_.emplace(k, c);
        else it->second += c;
    }
    return *this;
}

LogElem LogElem::operator-() const
{
    LogElem r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LogElem& LogElem::operator-=(const LogElem& o) { return *this += -o; }

LogElem LogElem::scaled(const TLaurent& c) const
{
    LogElem r;
    for (const auto& [k, x] : terms_) r.terms_.emplace(k, x * c);
    return r;
}

LogElem LogElem::truncated(int floor) const
{
    LogElem r;
    for (const auto& [k, x] : terms_) r.terms_.emplace(k, x.truncated(floor));
    return r;
}

int LogElem::max_pi_degree() const
{
    int m = -1;
    for (const auto& [k, x] : terms_)
        if (!x.is_zero()) m = std::max(m, k.first);
    return m;
}

bool LogElem::is_zero() const
{
    for (const auto& [k, x] : terms_)
        if (!x.is_zero()) return false;
    return true;
}

std::string LogElem::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, x] : terms_) {
        if (x.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "Pi^" << k.first << "*L^" << k.second << "*[" << x.str() << "]";
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace inst
