#include "symplift/standard_rep.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace symplift {

Permutation Permutation::identity(int d) {
    Permutation p;
    p.d = d;
    p.img.resize(static_cast<size_t>(d));
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

Permutation Permutation::transposition(int d, int i, int j) {
    if (i < 1 || j < 1 || i > d || j > d || i == j)
        throw DomainError("bad transposition indices");
    Permutation p = identity(d);
    std::swap(p.img[static_cast<size_t>(i - 1)], p.img[static_cast<size_t>(j - 1)]);
    return p;
}

Permutation Permutation::parse_cycles(const std::string& s, int d) {
    Permutation p = identity(d);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    while (pos < s.size()) {
        if (s[pos] != '(') throw ParseError("expected '(' in cycle notation: " + s);
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            int v = 0;
            bool any = false;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                ++pos;
                any = true;
            }
            if (!any) throw ParseError("expected number in cycle notation: " + s);
            if (v < 1 || v > d) throw ParseError("cycle entry out of range 1..d");
            cyc.push_back(v);
            skip_ws();
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
        // apply the cycle on the right of what has been parsed so far
        Permutation c = identity(d);
        for (size_t t = 0; t < cyc.size(); ++t)
            c.img[static_cast<size_t>(cyc[t] - 1)] = cyc[(t + 1) % cyc.size()];
        p = p.compose(c);
        skip_ws();
    }
    return p;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    assert(d == rhs.d);
    Permutation p;
    p.d = d;
    p.img.resize(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) p.img[static_cast<size_t>(i - 1)] = apply(rhs.apply(i));
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.d = d;
    p.img.resize(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) p.img[static_cast<size_t>(apply(i) - 1)] = i;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= d; ++i)
        if (apply(i) != i) return false;
    return true;
}

bool Permutation::is_transposition(int* i, int* j) const {
    int a = 0, b = 0;
    for (int v = 1; v <= d; ++v) {
        if (apply(v) != v) {
            if (!a)
                a = v;
            else if (!b)
                b = v;
            else
                return false;
        }
    }
    if (!a || !b) return false;
    if (apply(a) != b || apply(b) != a) return false;
    if (i) *i = a;
    if (j) *j = b;
    return true;
}

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(static_cast<size_t>(d) + 1, false);
    std::ostringstream os;
    bool any = false;
    for (int i = 1; i <= d; ++i) {
        if (seen[static_cast<size_t>(i)] || apply(i) == i) continue;
        os << '(';
        int v = i;
        bool first = true;
        while (!seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = true;
            if (!first) os << ' ';
            os << v;
            first = false;
            v = apply(v);
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

std::vector<int> Permutation::star_decomposition() const {
    // Decompose into cycles (least element first, cycles by least element),
    // each cycle (c1 c2 ... cr) = (c1 cr)(c1 c_{r-1})...(c1 c2), and each
    // transposition (a b) with 1 < a < b as (1 a)(1 b)(1 a).
    std::vector<int> out; // product of (1, j_t), applied left to right
    std::vector<bool> seen(static_cast<size_t>(d) + 1, false);
    auto emit = [&](int a, int b) {
        if (a == 1)
            out.push_back(b);
        else {
            out.push_back(a);
            out.push_back(b);
            out.push_back(a);
        }
    };
    for (int i = 1; i <= d; ++i) {
        if (seen[static_cast<size_t>(i)] || apply(i) == i) continue;
        std::vector<int> cyc;
        int v = i;
        while (!seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = true;
            cyc.push_back(v);
            v = apply(v);
        }
        for (size_t t = cyc.size() - 1; t >= 1; --t) emit(cyc[0], cyc[t]);
    }
    // sanity: the emitted word multiplies back to *this
#ifndef NDEBUG
    Permutation check = identity(d);
    for (int j : out) check = check.compose(transposition(d, 1, j));
    assert(check == *this);
#endif
    return out;
}

std::vector<int> parse_subset(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

GramForm chain_gram(int g) {
    IntMat j(2 * g);
    for (int i = 0; i + 1 < 2 * g; ++i) {
        j.set(i, i + 1, 1);
        j.set(i + 1, i, -1);
    }
    return GramForm(std::move(j));
}

StandardRep::StandardRep(int g, int d) : g_(g), d_(d), j_(chain_gram(g)) {
    if (g < 1 || g > 5) throw DomainError("genus must satisfy 1 <= g <= 5");
    if (d != 2 * g + 1 && d != 2 * g + 2)
        throw DomainError("degree must be 2g+1 or 2g+2 for genus " + std::to_string(g));
}

SubsetClass StandardRep::subset_class(std::vector<int> members) const {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members)
        if (m < 1 || m > d_) throw DomainError("subset member out of range 1..d");
    if (members.size() % 2 != 0) throw DomainError("subset must have even cardinality");
    if (d_ % 2 == 0 && !members.empty() && members.back() == d_) {
        std::vector<int> comp;
        size_t t = 0;
        for (int v = 1; v <= d_; ++v) {
            if (t < members.size() && members[t] == v)
                ++t;
            else
                comp.push_back(v);
        }
        members = std::move(comp);
    }
    return SubsetClass{d_, std::move(members)};
}

F2Vec StandardRep::vec_of_subset(const SubsetClass& c) const {
    F2Vec v(dim());
    // pair up consecutive members; each pair {a,b} contributes e_a + ... + e_{b-1}
    for (size_t t = 0; t + 1 < c.members.size(); t += 2) {
        const int a = c.members[t], b = c.members[t + 1];
        for (int m = a; m < b; ++m) v.flip(m - 1);
    }
    return v;
}

F2Vec StandardRep::vec_of_subset(std::vector<int> members) const {
    return vec_of_subset(subset_class(std::move(members)));
}

SubsetClass StandardRep::subset_of_vec(const F2Vec& v) const {
    assert(v.n == dim());
    std::vector<int> members;
    for (int i = 1; i <= d_; ++i) {
        const bool lo = (i - 2 >= 0 && i - 2 < dim()) ? v.get(i - 2) : false;
        const bool hi = (i - 1 < dim()) ? v.get(i - 1) : false;
        if (lo != hi) members.push_back(i);
    }
    return subset_class(std::move(members));
}

int StandardRep::subset_pairing(const SubsetClass& a, const SubsetClass& b) const {
    if (a.d != b.d) throw DimensionError("subset degree mismatch");
    size_t t = 0;
    int inter = 0;
    for (int m : a.members) {
        while (t < b.members.size() && b.members[t] < m) ++t;
        if (t < b.members.size() && b.members[t] == m) ++inter;
    }
    return inter & 1;
}

RingMat StandardRep::rho(const Permutation& sigma) const {
    if (sigma.d != d_) throw DimensionError("permutation degree mismatch");
    RingMat m(1, dim());
    for (int col = 1; col <= dim(); ++col) {
        // image of the chain vector v_{col, col+1}
        const F2Vec v = vec_of_subset({sigma.apply(col), sigma.apply(col + 1)});
        for (int row = 0; row < dim(); ++row) m.set(row, col - 1, v.get(row) ? 1 : 0);
    }
    return m;
}

IntVec StandardRep::lift_vec(int i, int j) const {
    if (i == j || i < 1 || j < 1 || i > d_ || j > d_) throw DomainError("bad lift indices");
    if (i > j) std::swap(i, j);
    IntVec a(dim());
    if (j <= 2 * g_ + 1) {
        for (int m = i; m < j; ++m) a.set(m - 1, 1);
        return a;
    }
    return lift_vec(subset_class({i, j}));
}

IntVec StandardRep::lift_vec(const SubsetClass& c) const {
    IntVec a(dim());
    for (size_t t = 0; t + 1 < c.members.size(); t += 2) {
        const int lo = c.members[t], hi = c.members[t + 1];
        for (int m = lo; m < hi; ++m) a.set(m - 1, a.at(m - 1) + 1);
    }
    return a;
}

F2Vec StandardRep::mat_vec_f2(const RingMat& m, const F2Vec& v) const {
    assert(m.dim() == v.n);
    F2Vec out(v.n);
    for (int i = 0; i < m.dim(); ++i) {
        int s = 0;
        for (int l = 0; l < m.dim(); ++l)
            if (v.get(l)) s ^= static_cast<int>(m.at(i, l) & 1);
        if (s) out.set(i, true);
    }
    return out;
}

} // namespace symplift
