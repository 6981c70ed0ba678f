#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symplift/errors.hpp"
#include "symplift/f2.hpp"

namespace symplift {

constexpr int kMaxRingExp = 16; // entries live in Z/2^k, 1 <= k <= 16

/// Square matrix over Z/2^k, row-major, entries reduced below 2^k.
class RingMat {
public:
    RingMat() = default;
    RingMat(int k, int dim);
    static RingMat identity(int k, int dim);

    int k() const { return k_; }
    int dim() const { return dim_; }
    uint32_t mask() const { return (k_ == 32) ? ~0u : ((uint32_t{1} << k_) - 1); }

    uint32_t at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }
    void set(int i, int j, uint32_t v) { e_[static_cast<size_t>(i) * dim_ + j] = v & mask(); }

    RingMat reduced(int n) const; // reduction Z/2^k -> Z/2^n, n <= k
    RingMat transposed() const;
    RingMat inverse() const;      // requires odd determinant
    RingMat pow(long e) const;    // negative exponents go through inverse()

    bool is_identity() const;
    bool congruent_identity(int n) const; // A == I (mod 2^n)

    bool operator==(const RingMat& o) const { return k_ == o.k_ && dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const RingMat& o) const { return !(*this == o); }

    const std::vector<uint32_t>& entries() const { return e_; }
    std::vector<uint32_t>& entries() { return e_; }

private:
    int k_ = 1;
    int dim_ = 0;
    std::vector<uint32_t> e_;
};

RingMat mat_mul(const RingMat& a, const RingMat& b);
RingMat operator*(const RingMat& a, const RingMat& b);

/// Vector over Z/2^k.
class RingVec {
public:
    RingVec() = default;
    RingVec(int k, int dim);
    RingVec(int k, std::vector<uint32_t> coords);

    int k() const { return k_; }
    int dim() const { return static_cast<int>(c_.size()); }
    uint32_t mask() const { return (uint32_t{1} << k_) - 1; }

    uint32_t at(int i) const { return c_[static_cast<size_t>(i)]; }
    void set(int i, uint32_t v) { c_[static_cast<size_t>(i)] = v & mask(); }

    RingVec reduced(int n) const;
    bool operator==(const RingVec& o) const { return k_ == o.k_ && c_ == o.c_; }

private:
    int k_ = 1;
    std::vector<uint32_t> c_;
};

RingVec mat_vec(const RingMat& a, const RingVec& v);

/// Exact integer matrix with overflow-checked arithmetic.
class IntMat {
public:
    IntMat() = default;
    explicit IntMat(int dim);
    static IntMat identity(int dim);

    int dim() const { return dim_; }
    int64_t at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }
    void set(int i, int j, int64_t v) { e_[static_cast<size_t>(i) * dim_ + j] = v; }

    IntMat transposed() const;
    RingMat reduced(int k) const; // reduction to Z/2^k
    bool is_identity() const;

    bool operator==(const IntMat& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

private:
    int dim_ = 0;
    std::vector<int64_t> e_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b); // throws OverflowError on 64-bit overflow
IntMat operator*(const IntMat& a, const IntMat& b);

class IntVec {
public:
    IntVec() = default;
    explicit IntVec(int dim) : c_(static_cast<size_t>(dim), 0) {}
    explicit IntVec(std::vector<int64_t> coords) : c_(std::move(coords)) {}

    int dim() const { return static_cast<int>(c_.size()); }
    int64_t at(int i) const { return c_[static_cast<size_t>(i)]; }
    void set(int i, int64_t v) { c_[static_cast<size_t>(i)] = v; }

    IntVec operator+(const IntVec& o) const;
    IntVec operator-(const IntVec& o) const;
    IntVec scaled(int64_t s) const;
    RingVec reduced(int k) const;
    F2Vec mod2() const;

    bool operator==(const IntVec& o) const { return c_ == o.c_; }

private:
    std::vector<int64_t> c_;
};

IntVec mat_vec(const IntMat& a, const IntVec& v);

/// Alternating integer Gram matrix whose mod-2 reduction is nondegenerate.
class GramForm {
public:
    explicit GramForm(IntMat j); // validates: zero diagonal, J^T = -J, det(J mod 2) = 1
    int dim() const { return j_.dim(); }
    const IntMat& matrix() const { return j_; }
    int64_t at(int i, int jj) const { return j_.at(i, jj); }

private:
    IntMat j_;
};

int64_t pair_int(const IntVec& u, const IntVec& v, const GramForm& j);
uint32_t pair_mod(const RingVec& u, const RingVec& v, const GramForm& j);
bool is_symplectic(const RingMat& a, const GramForm& j);
bool is_symplectic_int(const IntMat& a, const GramForm& j);

uint32_t inverse_odd_mod2k(uint32_t u, int k);
bool det_mod2_is_one(const IntMat& m);

// --- dump file format: header "g=<g> k=<k>", then one matrix per line ---
std::string dump_matrices(int g, const std::vector<RingMat>& ms);
std::vector<RingMat> parse_matrix_dump(const std::string& text, int* g_out = nullptr);
void write_matrix_dump(const std::string& path, int g, const std::vector<RingMat>& ms);
std::vector<RingMat> read_matrix_dump(const std::string& path, int* g_out = nullptr);

} // namespace symplift
