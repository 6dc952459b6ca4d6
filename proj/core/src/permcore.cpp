#include "permspectra/permcore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permspectra {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    int n = degree();
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("one-line form is not a bijection on {1..n}");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::invalid_argument("invalid transposition");
    auto p = identity(n);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::string& cycles) {
    auto p = identity(n);
    std::vector<std::vector<int>> parsed;
    std::vector<int> cur;
    std::string num;
    bool in_cycle = false;
    auto flush_num = [&] {
        if (!num.empty()) {
            cur.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char c : cycles) {
        if (c == '(') {
            if (in_cycle) throw std::invalid_argument("nested '(' in cycle notation");
            in_cycle = true;
            cur.clear();
        } else if (c == ')') {
            if (!in_cycle) throw std::invalid_argument("unmatched ')' in cycle notation");
            flush_num();
            if (!cur.empty()) parsed.push_back(cur);
            in_cycle = false;
        } else if (c >= '0' && c <= '9') {
            num += c;
        } else if (c == ' ' || c == ',' || c == '\t') {
            flush_num();
        } else {
            throw std::invalid_argument(std::string("bad character in cycle notation: ") + c);
        }
    }
    if (in_cycle) throw std::invalid_argument("unterminated cycle");
    std::vector<char> touched(n + 1, 0);
    for (const auto& cyc : parsed) {
        for (int v : cyc) {
            if (v < 1 || v > n) throw std::invalid_argument("cycle entry out of range");
            if (touched[v]) throw std::invalid_argument("point repeated in cycle notation");
            touched[v] = 1;
        }
        for (std::size_t i = 0; i < cyc.size(); ++i)
            p.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    }
    // Re-validate: disjointness of cycles was enforced above.
    return Permutation(p.images_);
}

int Permutation::preimage(int j) const {
    for (int i = 1; i <= degree(); ++i)
        if (images_[i - 1] == j) return i;
    throw std::invalid_argument("preimage: point out of range");
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(degree());
    for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

int Permutation::sign() const {
    int n = degree();
    int cycles = 0;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = images_[j] - 1;
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

Partition Permutation::cycle_type() const {
    int n = degree();
    std::vector<int> lens;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = images_[j] - 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

int Permutation::fixed_points() const {
    int c = 0;
    for (int i = 0; i < degree(); ++i)
        if (images_[i] == i + 1) ++c;
    return c;
}

std::string Permutation::to_cycle_string() const {
    int n = degree();
    std::ostringstream os;
    std::vector<char> seen(n, 0);
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || images_[i] == i + 1) {
            seen[i] = 1;
            continue;
        }
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            if (!first) os << " ";
            os << j + 1;
            seen[j] = 1;
            j = images_[j] - 1;
            first = false;
        }
        os << ")";
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

Permutation compose(const Permutation& sigma, const Permutation& pi) {
    if (sigma.degree() != pi.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(sigma.degree());
    for (int x = 1; x <= sigma.degree(); ++x) img[x - 1] = sigma(pi(x));
    return Permutation(std::move(img));
}

int agreements(const Permutation& sigma, const Permutation& pi) {
    if (sigma.degree() != pi.degree())
        throw std::invalid_argument("agreements: degree mismatch");
    int c = 0;
    for (int i = 1; i <= sigma.degree(); ++i)
        if (sigma(i) == pi(i)) ++c;
    return c;
}

Permutation i_fix(const Permutation& rho, int i) {
    if (i < 1 || i > rho.degree())
        throw std::invalid_argument("i_fix: point out of range");
    if (rho(i) == i) return rho;
    return compose(rho, Permutation::transposition(rho.degree(), rho.preimage(i), i));
}

std::uint64_t lex_rank(const Permutation& sigma) {
    int n = sigma.degree();
    std::uint64_t rank = 0, fact = 1;
    // Lehmer code, right to left.
    std::vector<std::uint64_t> digits(n);
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (sigma.images()[j] < sigma.images()[i]) ++smaller;
        digits[i] = smaller;
    }
    for (int i = n - 1; i >= 0; --i) {
        rank += digits[i] * fact;
        fact *= (n - i);
    }
    return rank;
}

Permutation from_lex_rank(int n, std::uint64_t r) {
    std::vector<std::uint64_t> fact(n, 1);
    for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<int> img;
    img.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        std::uint64_t q = r / fact[i];
        r %= fact[i];
        img.push_back(pool[q]);
        pool.erase(pool.begin() + static_cast<long>(q));
    }
    return Permutation(std::move(img));
}

DerangementCounts derangement_counts(int n) {
    if (n < 0) throw std::invalid_argument("derangement_counts: n must be >= 0");
    Int d0 = 1, d1 = 0;  // d_0, d_1
    Int d = (n == 0) ? d0 : d1;
    for (int m = 2; m <= n; ++m) {
        d = (m - 1) * (d1 + d0);
        d0 = d1;
        d1 = d;
    }
    DerangementCounts out{n, d, 0, 0};
    if (n == 0) {
        out.e = 1;
        out.o = 0;
    } else {
        Int diff = (n % 2 == 1) ? Int(n - 1) : Int(-(n - 1));  // e - o
        out.e = (d + diff) / 2;
        out.o = (d - diff) / 2;
    }
    return out;
}

Int conjugacy_class_size(const Partition& cycle_type) {
    Int centralizer = 1;
    int prev = -1, mult = 0;
    auto flush = [&] {
        for (int i = 1; i <= mult; ++i) centralizer *= i;
        for (int i = 0; i < mult; ++i) centralizer *= prev;
    };
    for (int p : cycle_type.parts()) {
        if (p == prev) {
            ++mult;
        } else {
            flush();
            prev = p;
            mult = 1;
        }
    }
    flush();
    return factorial(cycle_type.n()) / centralizer;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
    if (n < 1) throw std::invalid_argument("conjugacy_classes: n must be >= 1");
    std::vector<ConjugacyClass> out;
    for (const auto& lam : partitions_of(n))
        out.push_back({lam, conjugacy_class_size(lam)});
    return out;
}

std::vector<Permutation> enumerate_group(int n, bool even_only, int max_degree) {
    if (n < 1) throw std::invalid_argument("enumerate_group: n must be >= 1");
    if (n > max_degree)
        throw GuardrailError("enumerate_group: n=" + std::to_string(n) +
                             " exceeds guardrail " + std::to_string(max_degree));
    std::vector<Permutation> out;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    do {
        Permutation p{std::vector<int>(img)};
        if (!even_only || p.is_even()) out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace permspectra
