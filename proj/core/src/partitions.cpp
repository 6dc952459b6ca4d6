#include "permspectra/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace permspectra {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) cols[j]++;
    }
    return Partition(std::move(cols));
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

Partition Partition::from_string(const std::string& s) {
    std::vector<int> parts;
    std::string body = s;
    if (!body.empty() && body.front() == '[') body = body.substr(1, body.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

bool Partition::operator<(const Partition& o) const {
    // Reverse-lexicographic: larger sequences come first.
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

Int partition_count(int n) {
    if (n < 0) return 0;
    // Euler's pentagonal-number recurrence.
    std::vector<Int> p(n + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int sum = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Int term = 0;
            if (g1 <= m) term += p[m - g1];
            if (g2 <= m) term += p[m - g2];
            if (k % 2 == 1)
                sum += term;
            else
                sum -= term;
        }
        p[m] = sum;
    }
    return p[n];
}

HookGrid hook_lengths(const Partition& alpha) {
    HookGrid grid;
    Partition conj = alpha.conjugate();
    for (int i = 0; i < alpha.num_parts(); ++i) {
        std::vector<int> row(alpha.parts()[i]);
        for (int j = 0; j < alpha.parts()[i]; ++j)
            row[j] = (alpha.parts()[i] - (j + 1)) + (conj.parts()[j] - (i + 1)) + 1;
        grid.rows.push_back(std::move(row));
    }
    return grid;
}

Int dimension(const Partition& alpha) {
    Int num = factorial(alpha.n());
    for (const auto& row : hook_lengths(alpha).rows)
        for (int h : row) num /= h;
    return num;
}

namespace {

// Backtracking count of semistandard fillings of `shape` where value v is
// used exactly content[v-1] times.  Fills row by row, left to right.
Int count_fillings(const std::vector<int>& shape, std::vector<int>& remaining,
                   std::vector<std::vector<int>>& fill, int r, int c) {
    int nrows = static_cast<int>(shape.size());
    if (r == nrows) return 1;
    int nr = r, nc = c + 1;
    if (nc == shape[r]) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);               // rows non-decreasing
    if (r > 0 && c < shape[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);  // columns strict
    Int total = 0;
    int k = static_cast<int>(remaining.size());
    for (int v = lo; v <= k; ++v) {
        if (remaining[v - 1] == 0) continue;
        remaining[v - 1]--;
        fill[r][c] = v;
        total += count_fillings(shape, remaining, fill, nr, nc);
        remaining[v - 1]++;
    }
    return total;
}

}  // namespace

Int kostka(const Partition& alpha, const Partition& beta) {
    if (alpha.n() != beta.n())
        throw std::invalid_argument("kostka: |alpha| != |beta|");
    if (alpha.n() == 0) return 1;
    std::vector<int> remaining = beta.parts();
    std::vector<std::vector<int>> fill;
    for (int p : alpha.parts()) fill.emplace_back(p, 0);
    return count_fillings(alpha.parts(), remaining, fill, 0, 0);
}

std::vector<Partition> fat_partitions(int n, int t) {
    if (n < 1) throw std::invalid_argument("fat_partitions: n must be >= 1");
    if (t < 0) throw std::invalid_argument("fat_partitions: t must be >= 0");
    std::vector<Partition> out;
    for (const auto& a : partitions_of(n))
        if (a.first_part() >= n - t) out.push_back(a);
    return out;
}

Composition::Composition(std::vector<long long> terms, int n)
    : terms_(std::move(terms)), n_(n) {
    long long sum = 0;
    for (long long x : terms_) sum += x;
    if (sum != n) throw std::invalid_argument("composition terms must sum to n");
}

std::optional<Partition> normalize_composition(const Composition& lambda) {
    std::vector<int> parts;
    for (long long x : lambda.terms()) {
        if (x < 0) return std::nullopt;
        if (x > 0) parts.push_back(static_cast<int>(x));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace permspectra
