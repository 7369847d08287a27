#pragma once

#include <string>
#include <vector>

namespace inst {

// Young diagram as a weakly decreasing list of positive parts. Cells are (i, j)
// with 1 <= j <= parts[i-1].
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int row(int i) const;  // lambda_i, zero beyond the diagram
    int col(int j) const;  // lambda'_j, zero beyond the diagram
    bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= row(i); }

    // Defined for every i, j >= 1; negative outside the diagram.
    int arm(int i, int j) const { return row(i) - j; }
    int leg(int i, int j) const { return col(j) - i; }
    static int coarm(int, int j) { return j - 1; }
    static int coleg(int i, int) { return i - 1; }

    YoungDiagram transpose() const;
    // Cells in row-major order.
    std::vector<std::pair<int, int>> cells() const;

    std::string str() const;  // "[3,1,1]"
    static YoungDiagram parse(const std::string& text);

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct DiagramPair {
    YoungDiagram first, second;
    int total() const { return first.size() + second.size(); }
    const YoungDiagram& operator[](int alpha) const { return alpha == 1 ? first : second; }
    friend bool operator==(const DiagramPair& a, const DiagramPair& b)
    {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator<(const DiagramPair& a, const DiagramPair& b)
    {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    }
    std::string str() const { return "(" + first.str() + "," + second.str() + ")"; }
};

// Partitions of n in lexicographic order of parts.
std::vector<YoungDiagram> partitions_of(int n);
// Ordered by (|Y1|, parts of Y1, parts of Y2).
std::vector<DiagramPair> pairs_of_total(int n);
// All chi-tuples of pairs with total size n; compositions in lexicographic order.
std::vector<std::vector<DiagramPair>> tuples_of_total(int chi, int n);
// Number of partitions of n.
long partition_count(int n);

}  // namespace inst
