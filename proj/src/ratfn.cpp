#include "instanton/ratfn.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

namespace inst {

namespace {

bool maybe_divisible(const MPoly& p, const MPoly& L)
{
    // L is monic linear with lead variable v: L = v + R, R free of v.
    int v = -1;
    for (int k = kNumVars - 1; k >= 0; --k)
        if (L.degree(k) > 0) {
            v = k;
            break;
        }
    if (v < 0) return false;
    std::array<std::uint64_t, kNumVars> pt{1000003, 2000029, 3000073, 4000037};
    std::uint64_t prime = modp_prime();
    pt[v] = 0;
    auto r = eval_mod_p(L, pt);
    if (!r) return true;
    pt[v] = (prime - *r) % prime;
    auto val = eval_mod_p(p, pt);
    return !val || *val == 0;
}

// Merge atoms with multiplicities, combining by max or by sum.
std::vector<RatFn::Atom> merge_atoms(const std::vector<RatFn::Atom>& a, const std::vector<RatFn::Atom>& b, bool use_max)
{
    std::vector<RatFn::Atom> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && poly_less(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || poly_less(b[j].first, a[i].first)) {
            out.push_back(b[j++]);
        } else {
            out.push_back({a[i].first, use_max ? std::max(a[i].second, b[j].second) : a[i].second + b[j].second});
            ++i;
            ++j;
        }
    }
    return out;
}

int multiplicity(const std::vector<RatFn::Atom>& atoms, const MPoly& L)
{
    auto it = std::lower_bound(atoms.begin(), atoms.end(), L,
                               [](const RatFn::Atom& x, const MPoly& y) { return poly_less(x.first, y); });
    if (it != atoms.end() && it->first == L) return it->second;
    return 0;
}

MPoly product_tree(std::vector<MPoly> fs)
{
    if (fs.empty()) return MPoly(1);
    while (fs.size() > 1) {
        std::vector<MPoly> next;
        for (size_t k = 0; k + 1 < fs.size(); k += 2) next.push_back(fs[k] * fs[k + 1]);
        if (fs.size() % 2) next.push_back(std::move(fs.back()));
        fs = std::move(next);
    }
    return fs.front();
}

// prod over D of L^(D - own)
MPoly atom_cofactor(const std::vector<RatFn::Atom>& D, const std::vector<RatFn::Atom>& own)
{
    std::vector<MPoly> fs;
    for (const auto& [L, k] : D) {
        int e = k - multiplicity(own, L);
        for (int r = 0; r < e; ++r) fs.push_back(L);
    }
    return product_tree(std::move(fs));
}

}  // namespace

int cancel_linear(MPoly& p, const MPoly& L, int max)
{
    int count = 0;
    while (count < max && !p.is_zero()) {
        if (!maybe_divisible(p, L)) break;
        auto q = divide_exact(p, L);
        if (!q) break;
        p = std::move(*q);
        ++count;
    }
    return count;
}

void RatFn::add_factor(const MPoly& f, int mult)
{
    if (f.is_zero()) throw std::domain_error("RatFn: zero denominator factor");
    if (f.is_constant()) {
        num_ *= f.lead_coeff().pow(-mult);
        return;
    }
    if (f.total_degree() == 1) {
        GQ c = f.lead_coeff();
        MPoly L = f * c.inverse();
        num_ *= c.pow(-mult);
        std::vector<Atom> one{{L, mult}};
        atoms_ = merge_atoms(atoms_, one, false);
        return;
    }
    // Pull out monomial factors (single variables are linear atoms).
    Mono common = f.terms().front().m;
    for (const auto& t : f.terms()) {
        Mono m = 0;
        for (int v = 0; v < kNumVars; ++v) {
            int e = std::min(mono::exp(common, v), mono::exp(t.m, v));
            m += (Mono(e) << (mono::kBits * v)) + (Mono(e) << mono::kDegShift);
        }
        common = m;
    }
    MPoly g = f;
    if (common != 0) {
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono::exp(common, v);
            if (e) add_factor(MPoly::var(v), e * mult);
        }
        std::vector<Term> shifted;
        for (const auto& t : f.terms()) shifted.push_back({t.m - common, t.c});
        g = MPoly::from_sorted(std::move(shifted));
        if (g.is_constant() || g.total_degree() == 1) {
            add_factor(g, mult);
            return;
        }
    }
    GQ c = g.lead_coeff();
    num_ *= c.pow(-mult);
    rest_ *= (g * c.inverse()).pow(mult);
}

RatFn RatFn::fraction(const MPoly& num, const MPoly& den) { return from_factors(num, {den}); }

RatFn RatFn::from_factors(const MPoly& num, const std::vector<MPoly>& factors)
{
    RatFn r(num);
    if (num.is_zero()) {
        for (const auto& f : factors)
            if (f.is_zero()) throw std::domain_error("RatFn: zero denominator factor");
        return r;
    }
    for (const auto& f : factors) r.add_factor(f, 1);
    r.reduce();
    return r;
}

void RatFn::reduce()
{
    if (num_.is_zero()) {
        atoms_.clear();
        rest_ = MPoly(1);
        return;
    }
    std::vector<Atom> kept;
    for (auto& [L, k] : atoms_) {
        int c = cancel_linear(num_, L, k);
        if (k - c > 0) kept.push_back({L, k - c});
    }
    atoms_ = std::move(kept);
    if (!rest_.is_constant()) {
        MPoly g = gcd(num_, rest_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            rest_ = *divide_exact(rest_, g);
            GQ c = rest_.lead_coeff();
            rest_ *= c.inverse();
            num_ *= c.inverse();
        }
    }
}

MPoly RatFn::den() const
{
    std::vector<MPoly> fs;
    for (const auto& [L, k] : atoms_) fs.push_back(L.pow(k));
    fs.push_back(rest_);
    return product_tree(std::move(fs));
}

MPoly RatFn::to_poly() const
{
    if (!is_polynomial()) throw std::domain_error("RatFn::to_poly: not a polynomial: " + str());
    return num_ * rest_.lead_coeff().inverse();
}

GQ RatFn::to_constant() const
{
    if (!is_constant()) throw std::domain_error("RatFn::to_constant: not a constant: " + str());
    return num_.constant_term();
}

RatFn RatFn::operator-() const
{
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn& RatFn::operator+=(const RatFn& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_polynomial() && o.is_polynomial()) {
        num_ += o.num_;
        return *this;
    }
    bool same = atoms_.size() == o.atoms_.size() && rest_ == o.rest_;
    for (size_t k = 0; same && k < atoms_.size(); ++k)
        same = atoms_[k].first == o.atoms_[k].first && atoms_[k].second == o.atoms_[k].second;
    if (same) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    std::vector<Atom> D = merge_atoms(atoms_, o.atoms_, true);
    MPoly restL = rest_, ca(1), cb(1);
    if (rest_.is_constant() && !o.rest_.is_constant()) {
        restL = o.rest_;
        ca = o.rest_;
    } else if (!rest_.is_constant() && o.rest_.is_constant()) {
        cb = rest_;
    } else if (!rest_.is_constant()) {
        MPoly g = gcd(rest_, o.rest_);
        ca = *divide_exact(o.rest_, g);
        cb = *divide_exact(rest_, g);
        restL = rest_ * ca;
    }
    MPoly na = num_ * atom_cofactor(D, atoms_);
    MPoly nb = o.num_ * atom_cofactor(D, o.atoms_);
    if (!ca.is_constant()) na *= ca;
    if (!cb.is_constant()) nb *= cb;
    num_ = na + nb;
    atoms_ = std::move(D);
    rest_ = restL;
    reduce();
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn operator*(const RatFn& a, const RatFn& b)
{
    if (a.is_zero() || b.is_zero()) return RatFn();
    if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ * b.num_);
    MPoly na = a.num_, nb = b.num_;
    std::vector<RatFn::Atom> da, db;
    for (const auto& [L, k] : b.atoms_) {
        int c = cancel_linear(na, L, k);
        if (k - c > 0) db.push_back({L, k - c});
    }
    for (const auto& [L, k] : a.atoms_) {
        int c = cancel_linear(nb, L, k);
        if (k - c > 0) da.push_back({L, k - c});
    }
    MPoly ra = a.rest_, rb = b.rest_;
    if (!rb.is_constant()) {
        MPoly g = gcd(na, rb);
        if (!g.is_constant()) {
            na = *divide_exact(na, g);
            rb = *divide_exact(rb, g);
        }
    }
    if (!ra.is_constant()) {
        MPoly g = gcd(nb, ra);
        if (!g.is_constant()) {
            nb = *divide_exact(nb, g);
            ra = *divide_exact(ra, g);
        }
    }
    RatFn r;
    r.num_ = na * nb;
    r.atoms_ = merge_atoms(da, db, false);
    r.rest_ = ra * rb;
    GQ c = r.rest_.lead_coeff();
    if (!c.is_one()) {
        r.rest_ *= c.inverse();
        r.num_ *= c.inverse();
    }
    return r;
}

RatFn& RatFn::operator*=(const RatFn& o)
{
    *this = *this * o;
    return *this;
}

RatFn RatFn::inverse() const
{
    if (is_zero()) throw std::domain_error("RatFn: division by zero");
    RatFn r(den());
    r.add_factor(num_, 1);
    r.reduce();
    return r;
}

RatFn& RatFn::operator/=(const RatFn& o)
{
    *this = *this * o.inverse();
    return *this;
}

RatFn RatFn::pow(int n) const
{
    if (n < 0) return inverse().pow(-n);
    RatFn result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

RatFn RatFn::sum(std::vector<RatFn> terms)
{
    if (terms.empty()) return RatFn();
    while (terms.size() > 1) {
        std::vector<RatFn> next;
        for (size_t k = 0; k + 1 < terms.size(); k += 2) next.push_back(terms[k] + terms[k + 1]);
        if (terms.size() % 2) next.push_back(std::move(terms.back()));
        terms = std::move(next);
    }
    return terms.front();
}

bool operator==(const RatFn& a, const RatFn& b)
{
    if (a.num_ == b.num_ && a.rest_ == b.rest_ && a.atoms_.size() == b.atoms_.size()) {
        bool same = true;
        for (size_t k = 0; same && k < a.atoms_.size(); ++k)
            same = a.atoms_[k].first == b.atoms_[k].first && a.atoms_[k].second == b.atoms_[k].second;
        if (same) return true;
    }
    return (a - b).is_zero();
}

RatFn RatFn::substitute(const std::array<std::optional<MPoly>, kNumVars>& subs) const
{
    std::vector<MPoly> fs;
    for (const auto& [L, k] : atoms_) {
        MPoly s = L.substitute(subs);
        if (s.is_zero()) throw PoleError("RatFn::substitute: denominator factor " + L.str() + " vanishes");
        for (int r = 0; r < k; ++r) fs.push_back(s);
    }
    if (!rest_.is_constant()) {
        MPoly s = rest_.substitute(subs);
        if (s.is_zero()) throw PoleError("RatFn::substitute: denominator " + rest_.str() + " vanishes");
        fs.push_back(s);
    }
    return from_factors(num_.substitute(subs), fs);
}

RatFn RatFn::set_zero(std::initializer_list<int> vars) const
{
    std::vector<MPoly> fs;
    for (const auto& [L, k] : atoms_) {
        MPoly s = L.set_zero(vars);
        if (s.is_zero()) throw PoleError("pole: denominator factor " + L.str() + " vanishes");
        for (int r = 0; r < k; ++r) fs.push_back(s);
    }
    if (!rest_.is_constant()) {
        MPoly s = rest_.set_zero(vars);
        if (s.is_zero()) throw PoleError("pole: denominator " + rest_.str() + " vanishes");
        fs.push_back(s);
    }
    return from_factors(num_.set_zero(vars), fs);
}

int RatFn::degree_bound(int v) const
{
    int d = std::max(num_.degree(v), 0);
    for (const auto& [L, k] : atoms_) d -= k * std::max(L.degree(v), 0);
    d -= std::max(rest_.degree(v), 0);
    return d;
}

std::optional<int> RatFn::homogeneous_degree() const
{
    if (num_.is_zero() || !num_.is_homogeneous() || !rest_.is_homogeneous()) return std::nullopt;
    int d = num_.total_degree() - rest_.total_degree();
    for (const auto& [L, k] : atoms_) {
        if (!L.is_homogeneous()) return std::nullopt;
        d -= k;
    }
    return d;
}

std::string RatFn::str() const
{
    if (is_polynomial()) return to_poly().str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(";
    bool first = true;
    for (const auto& [L, k] : atoms_) {
        if (!first) os << "*";
        first = false;
        os << "(" << L.str() << ")";
        if (k > 1) os << "^" << k;
    }
    if (!rest_.is_constant()) {
        if (!first) os << "*";
        os << "(" << rest_.str() << ")";
    }
    os << ")";
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s)
    {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) src_ += c;
    }

    RatFn parse()
    {
        RatFn r = expr();
        if (pos_ != src_.size()) fail("trailing input");
        return r;
    }

private:
    std::string src_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("RatFn::parse: " + what + " at position " + std::to_string(pos_) + " in '" +
                                    src_ + "'");
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    RatFn expr()
    {
        RatFn r = term();
        while (peek() == '+' || peek() == '-') {
            char op = src_[pos_++];
            RatFn t = term();
            if (op == '+')
                r += t;
            else
                r -= t;
        }
        return r;
    }

    RatFn term()
    {
        RatFn r = unary();
        while (peek() == '*' || peek() == '/') {
            char op = src_[pos_++];
            RatFn f = unary();
            if (op == '*')
                r *= f;
            else
                r /= f;
        }
        return r;
    }

    RatFn unary()
    {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        RatFn base = primary();
        if (peek() == '^') {
            ++pos_;
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
            }
            size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(src_.substr(start, pos_ - start));
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    RatFn primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFn r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            return RatFn(GQ(mpq_class(mpz_class(src_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            if (name == "i") return RatFn(GQ::imag_unit());
            for (int v = 0; v < kNumVars; ++v)
                if (name == var_name(v)) return RatFn(MPoly::var(v));
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected character");
    }
};

}  // namespace

RatFn RatFn::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace inst
