#include "ug/ring.hpp"

namespace ug {

void validate_ring(const TabRing& r) {
    const int n = r.size;
    if (n <= 0) throw NotARing("empty ring");
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    if (!in_range(r.zero) || !in_range(r.one)) throw NotARing("zero/one out of range");
    for (int v : r.add_)
        if (!in_range(v)) throw NotARing("addition value out of range");
    for (int v : r.mul_)
        if (!in_range(v)) throw NotARing("multiplication value out of range");
    for (int v : r.neg_)
        if (!in_range(v)) throw NotARing("negation value out of range");
    for (int a = 0; a < n; ++a) {
        if (r.add(r.zero, a) != a) throw NotARing("0 + a != a at a=" + std::to_string(a));
        if (r.mul(r.one, a) != a) throw NotARing("1 * a != a at a=" + std::to_string(a));
        if (r.add(a, r.neg(a)) != r.zero) throw NotARing("a + (-a) != 0 at a=" + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) throw NotARing("addition not commutative");
            if (r.mul(a, b) != r.mul(b, a)) throw NotARing("multiplication not commutative");
            for (int c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
                    throw NotARing("addition not associative at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                    throw NotARing("multiplication not associative at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
                    throw NotARing("distributivity fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
            }
        }
    }
}

TabRing ring_from_tables(const std::vector<std::vector<int>>& add,
                         const std::vector<std::vector<int>>& mul, int zero, int one) {
    const int n = static_cast<int>(add.size());
    if (static_cast<int>(mul.size()) != n) throw NotARing("table size mismatch");
    TabRing r;
    r.size = n;
    r.zero = zero;
    r.one = one;
    for (const auto& row : add) {
        if (static_cast<int>(row.size()) != n) throw NotARing("ragged addition table");
        r.add_.insert(r.add_.end(), row.begin(), row.end());
    }
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw NotARing("ragged multiplication table");
        r.mul_.insert(r.mul_.end(), row.begin(), row.end());
    }
    r.neg_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r.add_[a * n + b] == zero) {
                r.neg_[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (r.neg_[a] < 0) throw NotARing("no additive inverse for " + std::to_string(a));
    validate_ring(r);
    return r;
}

TabRing zmod(int n) {
    if (n <= 0) throw InputError("zmod: modulus must be positive");
    TabRing r;
    r.size = n;
    r.zero = 0;
    r.one = n == 1 ? 0 : 1;
    r.add_.resize(static_cast<size_t>(n) * n);
    r.mul_.resize(static_cast<size_t>(n) * n);
    r.neg_.resize(n);
    for (int a = 0; a < n; ++a) {
        r.neg_[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) {
            r.add_[a * n + b] = (a + b) % n;
            r.mul_[a * n + b] = (a * b) % n;
        }
    }
    return r;
}

TabRing ring_from_spec(const std::string& spec) {
    if (spec.rfind("zmod:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(spec.substr(5));
        } catch (...) {
            throw InputError("bad ring spec: " + spec);
        }
        return zmod(n);
    }
    throw InputError("unknown ring spec: " + spec + " (expected zmod:n)");
}

} // namespace ug
