#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace symplift {

/// Dense F_2 vector of length n <= 64, backed by one machine word.
struct F2Vec {
    int n = 0;
    uint64_t bits = 0;

    F2Vec() = default;
    F2Vec(int len, uint64_t b = 0) : n(len), bits(b) {
        assert(len >= 0 && len <= 64);
        mask();
    }

    void mask() {
        if (n < 64) bits &= (uint64_t{1} << n) - 1;
    }

    bool get(int i) const {
        assert(i >= 0 && i < n);
        return (bits >> i) & 1;
    }
    void set(int i, bool v) {
        assert(i >= 0 && i < n);
        if (v)
            bits |= uint64_t{1} << i;
        else
            bits &= ~(uint64_t{1} << i);
    }
    void flip(int i) { bits ^= uint64_t{1} << i; }

    bool zero() const { return bits == 0; }
    int weight() const { return std::popcount(bits); }

    F2Vec operator+(const F2Vec& o) const {
        assert(n == o.n);
        return F2Vec(n, bits ^ o.bits);
    }
    F2Vec& operator+=(const F2Vec& o) {
        assert(n == o.n);
        bits ^= o.bits;
        return *this;
    }
    bool operator==(const F2Vec& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const F2Vec& o) const { return !(*this == o); }
    bool operator<(const F2Vec& o) const { return bits < o.bits; }

    /// Bit string, index 0 first.
    std::string str() const {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }
};

inline bool dot_parity(const F2Vec& a, const F2Vec& b) {
    assert(a.n == b.n);
    return std::popcount(a.bits & b.bits) & 1;
}

/// Subspace of F_2^n kept as a reduced row-echelon basis (canonical form).
class SubspaceF2 {
public:
    SubspaceF2() = default;
    explicit SubspaceF2(int ambient) : n_(ambient) {}

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    /// Inserts a vector; returns true if the dimension grew.
    bool insert(F2Vec v) {
        assert(v.n == n_);
        uint64_t r = reduce_bits(v.bits);
        if (r == 0) return false;
        int p = pivot_of(r);
        size_t pos = 0;
        while (pos < rows_.size() && pivot_of(rows_[pos]) > p) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), r);
        // keep reduced form: clear the new pivot from rows above
        for (size_t i = 0; i < pos; ++i)
            if ((rows_[i] >> p) & 1) rows_[i] ^= r;
        return true;
    }

    bool contains(const F2Vec& v) const {
        assert(v.n == n_);
        return reduce_bits(v.bits) == 0;
    }

    bool contains(const SubspaceF2& other) const {
        for (uint64_t r : other.rows_)
            if (reduce_bits(r) != 0) return false;
        return true;
    }

    bool operator==(const SubspaceF2& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const SubspaceF2& o) const { return !(*this == o); }

    std::vector<F2Vec> basis() const {
        std::vector<F2Vec> out;
        out.reserve(rows_.size());
        for (uint64_t r : rows_) out.emplace_back(n_, r);
        return out;
    }

private:
    static int pivot_of(uint64_t r) { return 63 - std::countl_zero(r); }

    uint64_t reduce_bits(uint64_t v) const {
        for (uint64_t r : rows_) {
            if (v == 0) break;
            if ((v >> pivot_of(r)) & 1) v ^= r;
        }
        return v;
    }

    int n_ = 0;
    std::vector<uint64_t> rows_; // decreasing pivot order, reduced
};

} // namespace symplift
