#pragma once

#include "instanton/tlaurent.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace inst {

// Truncated power series in named variables with per-variable (inclusive) upper
// orders. Exponents may be negative (e.g. a global Lambda prefactor); exp and
// log need a nonnegative support. C is RatFn, TLaurent or GQ.
template <class C>
class MultiSeries {
public:
    using Key = std::vector<int>;

    MultiSeries() = default;
    MultiSeries(std::vector<std::string> names, std::vector<int> orders)
        : names_(std::move(names)), orders_(std::move(orders))
    {
        if (names_.size() != orders_.size()) throw std::invalid_argument("MultiSeries: names/orders mismatch");
    }
    static MultiSeries constant(std::vector<std::string> names, std::vector<int> orders, const C& c)
    {
        MultiSeries s(std::move(names), std::move(orders));
        s.set(Key(s.names_.size(), 0), c);
        return s;
    }

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& orders() const { return orders_; }
    const std::map<Key, C>& terms() const { return terms_; }
    size_t nvars() const { return names_.size(); }

    bool in_window(const Key& k) const
    {
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i] > orders_[i]) return false;
        return true;
    }
    C coeff(const Key& k) const
    {
        if (k.size() != names_.size()) throw std::invalid_argument("MultiSeries::coeff: arity mismatch");
        if (!in_window(k)) throw WindowError("MultiSeries::coeff: exponent beyond truncation order");
        auto it = terms_.find(k);
        return it == terms_.end() ? C() : it->second;
    }
    void set(const Key& k, const C& c)
    {
        if (!in_window(k)) return;
        if (is_zero_coeff(c)) terms_.erase(k);
        else terms_[k] = c;
    }
    void add(const Key& k, const C& c)
    {
        if (!in_window(k)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!is_zero_coeff(c)) terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (is_zero_coeff(it->second)) terms_.erase(it);
    }

    MultiSeries& operator+=(const MultiSeries& o)
    {
        check_same(o, "addition");
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    MultiSeries& operator-=(const MultiSeries& o)
    {
        check_same(o, "subtraction");
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    MultiSeries operator-() const
    {
        MultiSeries r(names_, orders_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b)
    {
        a.check_same(b, "multiplication");
        MultiSeries r(a.names_, a.orders_);
        Key k(a.nvars());
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
                if (r.in_window(k)) r.add(k, ca * cb);
            }
        }
        return r;
    }
    MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

    template <class S>
    MultiSeries scaled(const S& s) const
    {
        MultiSeries r(names_, orders_);
        for (const auto& [k, c] : terms_) r.set(k, c * s);
        return r;
    }
    template <class F>
    auto map_coeffs(F f) const
    {
        using D = decltype(f(std::declval<const C&>()));
        MultiSeries<D> r(names_, orders_);
        for (const auto& [k, c] : terms_) r.set(k, f(c));
        return r;
    }
    // Multiply by the monomial with exponent vector `shift`.
    MultiSeries shifted(const Key& shift) const
    {
        MultiSeries r(names_, orders_);
        for (const auto& [k, c] : terms_) {
            Key kk = k;
            for (size_t i = 0; i < kk.size(); ++i) kk[i] += shift[i];
            r.set(kk, c);
        }
        return r;
    }
    MultiSeries with_orders(std::vector<int> orders) const
    {
        for (size_t i = 0; i < orders.size(); ++i)
            if (orders[i] > orders_[i]) throw WindowError("MultiSeries::with_orders: cannot raise a truncation order");
        MultiSeries r(names_, std::move(orders));
        for (const auto& [k, c] : terms_) r.set(k, c);
        return r;
    }

    C constant_term() const
    {
        auto it = terms_.find(Key(nvars(), 0));
        return it == terms_.end() ? C() : it->second;
    }

    // Truncated exp; requires zero constant term and nonnegative exponents.
    MultiSeries exp() const
    {
        require_positive("exp");
        if (!is_zero_coeff(constant_term())) throw std::domain_error("series_exp: nonzero constant term");
        MultiSeries result = constant(names_, orders_, C(1));
        MultiSeries power = result;
        int maxk = max_power();
        for (int k = 1; k <= maxk; ++k) {
            power = (power * *this).scaled(C(GQ(mpq_class(1, k))));
            if (power.terms_.empty()) break;
            result += power;
        }
        return result;
    }
    // Truncated log; requires constant term 1 and nonnegative exponents.
    MultiSeries log() const
    {
        require_positive("log");
        C c0 = constant_term();
        if (!is_one_coeff(c0)) throw std::domain_error("series_log: constant term is not 1");
        MultiSeries y = *this;
        y.terms_.erase(Key(nvars(), 0));
        MultiSeries result(names_, orders_);
        MultiSeries power = constant(names_, orders_, C(1));
        int maxk = max_power();
        for (int k = 1; k <= maxk; ++k) {
            power = power * y;
            if (power.terms_.empty()) break;
            result += power.scaled(C(GQ(mpq_class(k % 2 ? 1 : -1, k))));
        }
        return result;
    }

    bool operator==(const MultiSeries& o) const
    {
        if (names_ != o.names_ || orders_ != o.orders_ || terms_.size() != o.terms_.size()) return false;
        for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !(a->second == b->second)) return false;
        return true;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> orders_;
    std::map<Key, C> terms_;

    static bool is_zero_coeff(const C& c) { return c.is_zero(); }
    static bool is_one_coeff(const C& c) { return c == C(1); }

    void check_same(const MultiSeries& o, const char* what) const
    {
        if (names_ != o.names_) throw std::logic_error(std::string("MultiSeries ") + what + ": variable sets differ");
        if (orders_ != o.orders_) {
            throw WindowError(std::string("MultiSeries ") + what + ": truncation orders differ; truncate explicitly");
        }
    }
    void require_positive(const char* what) const
    {
        for (const auto& [k, c] : terms_)
            for (int e : k)
                if (e < 0) throw std::domain_error(std::string("series_") + what + ": negative exponent in support");
    }
    int max_power() const
    {
        int s = 0;
        for (int o : orders_) s += std::max(o, 0);
        return s;
    }
};

}  // namespace inst
