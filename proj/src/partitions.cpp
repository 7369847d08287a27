#include "instanton/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace inst {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw std::invalid_argument("YoungDiagram: parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
        size_ += parts_[k];
    }
}

int YoungDiagram::row(int i) const
{
    return (i >= 1 && i <= int(parts_.size())) ? parts_[i - 1] : 0;
}

int YoungDiagram::col(int j) const
{
    if (j < 1) return 0;
    int c = 0;
    while (c < int(parts_.size()) && parts_[c] >= j) ++c;
    return c;
}

YoungDiagram YoungDiagram::transpose() const
{
    std::vector<int> t;
    for (int j = 1; j <= row(1); ++j) t.push_back(col(j));
    return YoungDiagram(std::move(t));
}

std::vector<std::pair<int, int>> YoungDiagram::cells() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= int(parts_.size()); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) out.emplace_back(i, j);
    return out;
}

std::string YoungDiagram::str() const
{
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
    os << "]";
    return os.str();
}

YoungDiagram YoungDiagram::parse(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("YoungDiagram::parse: expected [..]");
    std::vector<int> parts;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("YoungDiagram::parse: empty part");
        parts.push_back(std::stoi(item));
    }
    return YoungDiagram(std::move(parts));
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<YoungDiagram>& out)
{
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = 1; p <= std::min(n, maxpart); ++p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n)
{
    std::vector<YoungDiagram> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DiagramPair> pairs_of_total(int n)
{
    std::vector<DiagramPair> out;
    for (int k = 0; k <= n; ++k) {
        auto p1 = partitions_of(k), p2 = partitions_of(n - k);
        for (const auto& y1 : p1)
            for (const auto& y2 : p2) out.push_back({y1, y2});
    }
    return out;
}

std::vector<std::vector<DiagramPair>> tuples_of_total(int chi, int n)
{
    if (chi < 1) throw std::invalid_argument("tuples_of_total: chi must be positive");
    std::vector<std::vector<DiagramPair>> out;
    std::vector<std::vector<DiagramPair>> by_size(n + 1);
    for (int k = 0; k <= n; ++k) by_size[k] = pairs_of_total(k);
    std::vector<int> comp(chi, 0);
    std::vector<DiagramPair> cur(chi);
    // Compositions of n into chi nonnegative parts, lexicographic.
    auto expand = [&](auto&& self, int pos) -> void {
        if (pos == chi) {
            out.push_back(cur);
            return;
        }
        for (const auto& p : by_size[comp[pos]]) {
            cur[pos] = p;
            self(self, pos + 1);
        }
    };
    auto compose = [&](auto&& self, int pos, int left) -> void {
        if (pos == chi - 1) {
            comp[pos] = left;
            expand(expand, 0);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            comp[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    compose(compose, 0, n);
    return out;
}

long partition_count(int n)
{
    if (n < 0) return 0;
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[m] += p[m - k];
    return p[n];
}

}  // namespace inst
