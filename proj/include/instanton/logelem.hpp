#pragma once

#include "instanton/tlaurent.hpp"

#include <map>
#include <string>
#include <utility>

namespace inst {

// Polynomial in two commuting symbols Pi (= pi*sqrt(-1)) and L (a logarithm
// such as log(t/Lambda) or log(2a/Lambda)) with TLaurent coefficients.
// Keys are (Pi-degree, L-degree).
class LogElem {
public:
    using Key = std::pair<int, int>;

    LogElem() = default;
    static LogElem term(int pi_deg, int l_deg, const TLaurent& c);

    const std::map<Key, TLaurent>& terms() const { return terms_; }
    TLaurent coeff(int pi_deg, int l_deg) const;
    // Coefficient that may be missing: returns an exact zero.
    bool has(int pi_deg, int l_deg) const { return terms_.count({pi_deg, l_deg}) != 0; }

    LogElem& operator+=(const LogElem& o);
    LogElem& operator-=(const LogElem& o);
    friend LogElem operator+(LogElem a, const LogElem& b) { return a += b; }
    friend LogElem operator-(LogElem a, const LogElem& b) { return a -= b; }
    LogElem operator-() const;
    LogElem scaled(const TLaurent& c) const;
    LogElem truncated(int floor) const;
    int max_pi_degree() const;
    bool is_zero() const;

    std::string str() const;

private:
    std::map<Key, TLaurent> terms_;
};

}  // namespace inst
