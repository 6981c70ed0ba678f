#include "symplift/zmod.hpp"

#include <cassert>
#include <fstream>
#include <sstream>

namespace symplift {

namespace {

void check_k(int k) {
    if (k < 1 || k > kMaxRingExp)
        throw DomainError("ring exponent k must satisfy 1 <= k <= 16, got " + std::to_string(k));
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer matrix product exceeds 64-bit range");
    return r;
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer matrix sum exceeds 64-bit range");
    return r;
}

} // namespace

RingMat::RingMat(int k, int dim) : k_(k), dim_(dim), e_(static_cast<size_t>(dim) * dim, 0) {
    check_k(k);
    if (dim <= 0) throw DimensionError("matrix dimension must be positive");
}

RingMat RingMat::identity(int k, int dim) {
    RingMat m(k, dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

RingMat RingMat::reduced(int n) const {
    if (n < 1 || n > k_)
        throw DomainError("reduction exponent out of range: n=" + std::to_string(n) +
                          ", k=" + std::to_string(k_));
    RingMat m(n, dim_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] & m.mask();
    return m;
}

RingMat RingMat::transposed() const {
    RingMat m(k_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.set(j, i, at(i, j));
    return m;
}

uint32_t inverse_odd_mod2k(uint32_t u, int k) {
    check_k(k);
    if ((u & 1) == 0) throw NotInvertibleError("even residue has no inverse mod 2^k");
    // Newton iteration x -> x(2 - ux) doubles the number of correct bits.
    uint32_t x = 1;
    for (int i = 0; i < 5; ++i) x = x * (2 - u * x);
    return x & ((k == 32) ? ~0u : ((uint32_t{1} << k) - 1));
}

RingMat RingMat::inverse() const {
    const uint32_t m = mask();
    // Gauss-Jordan over Z/2^k; an odd pivot exists in every column iff det is odd.
    RingMat a = *this;
    RingMat inv = identity(k_, dim_);
    for (int col = 0; col < dim_; ++col) {
        int piv = -1;
        for (int r = col; r < dim_; ++r)
            if (a.at(r, col) & 1) {
                piv = r;
                break;
            }
        if (piv < 0) throw NotInvertibleError("matrix determinant is even mod 2^k");
        if (piv != col) {
            for (int j = 0; j < dim_; ++j) {
                std::swap(a.entries()[static_cast<size_t>(piv) * dim_ + j],
                          a.entries()[static_cast<size_t>(col) * dim_ + j]);
                std::swap(inv.entries()[static_cast<size_t>(piv) * dim_ + j],
                          inv.entries()[static_cast<size_t>(col) * dim_ + j]);
            }
        }
        const uint32_t pinv = inverse_odd_mod2k(a.at(col, col), k_);
        for (int j = 0; j < dim_; ++j) {
            a.set(col, j, a.at(col, j) * pinv);
            inv.set(col, j, inv.at(col, j) * pinv);
        }
        for (int r = 0; r < dim_; ++r) {
            if (r == col) continue;
            const uint32_t f = a.at(r, col);
            if (!f) continue;
            for (int j = 0; j < dim_; ++j) {
                a.set(r, j, (a.at(r, j) - f * a.at(col, j)) & m);
                inv.set(r, j, (inv.at(r, j) - f * inv.at(col, j)) & m);
            }
        }
    }
    return inv;
}

RingMat RingMat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RingMat acc = identity(k_, dim_);
    RingMat base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool RingMat::is_identity() const { return *this == identity(k_, dim_); }

bool RingMat::congruent_identity(int n) const {
    const uint32_t m = (uint32_t{1} << n) - 1;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const uint32_t want = (i == j) ? 1u : 0u;
            if ((at(i, j) & m) != want) return false;
        }
    return true;
}

RingMat mat_mul(const RingMat& a, const RingMat& b) {
    if (a.k() != b.k())
        throw DimensionError("ring exponent mismatch: " + std::to_string(a.k()) + " vs " +
                             std::to_string(b.k()));
    if (a.dim() != b.dim())
        throw DimensionError("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    const int n = a.dim();
    const uint32_t m = a.mask();
    RingMat c(a.k(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            uint32_t s = 0;
            for (int l = 0; l < n; ++l) s += a.at(i, l) * b.at(l, j);
            c.set(i, j, s & m);
        }
    return c;
}

RingMat operator*(const RingMat& a, const RingMat& b) { return mat_mul(a, b); }

RingVec::RingVec(int k, int dim) : k_(k), c_(static_cast<size_t>(dim), 0) { check_k(k); }

RingVec::RingVec(int k, std::vector<uint32_t> coords) : k_(k), c_(std::move(coords)) {
    check_k(k);
    for (auto& v : c_) v &= mask();
}

RingVec RingVec::reduced(int n) const {
    if (n < 1 || n > k_) throw DomainError("reduction exponent out of range");
    RingVec v(n, dim());
    for (int i = 0; i < dim(); ++i) v.set(i, at(i));
    return v;
}

RingVec mat_vec(const RingMat& a, const RingVec& v) {
    if (a.k() != v.k() || a.dim() != v.dim()) throw DimensionError("matrix/vector shape mismatch");
    RingVec out(v.k(), v.dim());
    for (int i = 0; i < a.dim(); ++i) {
        uint32_t s = 0;
        for (int l = 0; l < a.dim(); ++l) s += a.at(i, l) * v.at(l);
        out.set(i, s);
    }
    return out;
}

IntMat::IntMat(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, 0) {
    if (dim <= 0) throw DimensionError("matrix dimension must be positive");
}

IntMat IntMat::identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

IntMat IntMat::transposed() const {
    IntMat m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.set(j, i, at(i, j));
    return m;
}

RingMat IntMat::reduced(int k) const {
    RingMat m(k, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            m.set(i, j, static_cast<uint32_t>(at(i, j) & static_cast<int64_t>(m.mask())));
    return m;
}

bool IntMat::is_identity() const { return *this == identity(dim_); }

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.dim() != b.dim()) throw DimensionError("matrix dimension mismatch");
    const int n = a.dim();
    IntMat c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int64_t s = 0;
            for (int l = 0; l < n; ++l) s = checked_add(s, checked_mul(a.at(i, l), b.at(l, j)));
            c.set(i, j, s);
        }
    return c;
}

IntMat operator*(const IntMat& a, const IntMat& b) { return mat_mul(a, b); }

IntVec IntVec::operator+(const IntVec& o) const {
    assert(dim() == o.dim());
    IntVec r(dim());
    for (int i = 0; i < dim(); ++i) r.set(i, checked_add(at(i), o.at(i)));
    return r;
}

IntVec IntVec::operator-(const IntVec& o) const {
    assert(dim() == o.dim());
    IntVec r(dim());
    for (int i = 0; i < dim(); ++i) r.set(i, checked_add(at(i), -o.at(i)));
    return r;
}

IntVec IntVec::scaled(int64_t s) const {
    IntVec r(dim());
    for (int i = 0; i < dim(); ++i) r.set(i, checked_mul(at(i), s));
    return r;
}

RingVec IntVec::reduced(int k) const {
    RingVec v(k, dim());
    for (int i = 0; i < dim(); ++i)
        v.set(i, static_cast<uint32_t>(at(i) & static_cast<int64_t>(v.mask())));
    return v;
}

F2Vec IntVec::mod2() const {
    F2Vec v(dim());
    for (int i = 0; i < dim(); ++i)
        if (at(i) & 1) v.set(i, true);
    return v;
}

IntVec mat_vec(const IntMat& a, const IntVec& v) {
    if (a.dim() != v.dim()) throw DimensionError("matrix/vector shape mismatch");
    IntVec out(v.dim());
    for (int i = 0; i < a.dim(); ++i) {
        int64_t s = 0;
        for (int l = 0; l < a.dim(); ++l) s = checked_add(s, checked_mul(a.at(i, l), v.at(l)));
        out.set(i, s);
    }
    return out;
}

bool det_mod2_is_one(const IntMat& m) {
    const int n = m.dim();
    std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) & 1) rows[static_cast<size_t>(i)] |= uint64_t{1} << j;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if ((rows[static_cast<size_t>(r)] >> col) & 1) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(col)]);
        for (int r = 0; r < n; ++r)
            if (r != col && ((rows[static_cast<size_t>(r)] >> col) & 1))
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(col)];
    }
    return true;
}

GramForm::GramForm(IntMat j) : j_(std::move(j)) {
    const int n = j_.dim();
    for (int i = 0; i < n; ++i) {
        if (j_.at(i, i) != 0) throw DomainError("Gram matrix must have zero diagonal");
        for (int l = 0; l < n; ++l)
            if (j_.at(i, l) != -j_.at(l, i)) throw DomainError("Gram matrix must be alternating");
    }
    if (!det_mod2_is_one(j_)) throw DomainError("Gram matrix must be nondegenerate mod 2");
}

int64_t pair_int(const IntVec& u, const IntVec& v, const GramForm& j) {
    if (u.dim() != j.dim() || v.dim() != j.dim()) throw DimensionError("pairing shape mismatch");
    int64_t s = 0;
    for (int a = 0; a < j.dim(); ++a)
        for (int b = 0; b < j.dim(); ++b)
            s = checked_add(s, checked_mul(u.at(a), checked_mul(j.at(a, b), v.at(b))));
    return s;
}

uint32_t pair_mod(const RingVec& u, const RingVec& v, const GramForm& j) {
    if (u.k() != v.k()) throw DimensionError("ring exponent mismatch in pairing");
    if (u.dim() != j.dim() || v.dim() != j.dim()) throw DimensionError("pairing shape mismatch");
    const uint32_t m = u.mask();
    uint32_t s = 0;
    for (int a = 0; a < j.dim(); ++a)
        for (int b = 0; b < j.dim(); ++b)
            s += u.at(a) * (static_cast<uint32_t>(j.at(a, b)) & m) * v.at(b);
    return s & m;
}

bool is_symplectic(const RingMat& a, const GramForm& j) {
    if (a.dim() != j.dim()) throw DimensionError("matrix/form dimension mismatch");
    const RingMat jk = j.matrix().reduced(a.k());
    return a.transposed() * jk * a == jk;
}

bool is_symplectic_int(const IntMat& a, const GramForm& j) {
    if (a.dim() != j.dim()) throw DimensionError("matrix/form dimension mismatch");
    return a.transposed() * j.matrix() * a == j.matrix();
}

std::string dump_matrices(int g, const std::vector<RingMat>& ms) {
    std::ostringstream os;
    const int k = ms.empty() ? 1 : ms.front().k();
    os << "g=" << g << " k=" << k << "\n";
    for (const auto& m : ms) {
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j) {
                if (i || j) os << ' ';
                os << m.at(i, j);
            }
        os << "\n";
    }
    return os.str();
}

std::vector<RingMat> parse_matrix_dump(const std::string& text, int* g_out) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw ParseError("empty matrix dump");
    int g = 0, k = 0;
    if (sscanf(header.c_str(), "g=%d k=%d", &g, &k) != 2)
        throw ParseError("bad matrix dump header: " + header);
    if (g_out) *g_out = g;
    const int dim = 2 * g;
    std::vector<RingMat> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        RingMat m(k, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                uint32_t v;
                if (!(ls >> v)) throw ParseError("short matrix row in dump");
                if (v > m.mask()) throw ParseError("residue out of range in dump");
                m.set(i, j, v);
            }
        uint32_t extra;
        if (ls >> extra) throw ParseError("trailing residues in dump line");
        out.push_back(std::move(m));
    }
    return out;
}

void write_matrix_dump(const std::string& path, int g, const std::vector<RingMat>& ms) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open dump file for writing: " + path);
    f << dump_matrices(g, ms);
}

std::vector<RingMat> read_matrix_dump(const std::string& path, int* g_out) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open dump file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_matrix_dump(ss.str(), g_out);
}

} // namespace symplift
