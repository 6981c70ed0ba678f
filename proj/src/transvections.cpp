#include "symplift/transvections.hpp"

#include <cassert>
#include <sstream>

namespace symplift {

IntMat transvection_int(const IntVec& a, const GramForm& j, long exp) {
    const int n = j.dim();
    if (a.dim() != n) throw DimensionError("transvection vector/form mismatch");
    IntVec ja(n);
    for (int r = 0; r < n; ++r) {
        int64_t s = 0;
        for (int c = 0; c < n; ++c) s += j.at(r, c) * a.at(c);
        ja.set(r, s);
    }
    // v -> v + m<v,a>a is I + m a (Ja)^T, and (a(Ja)^T)^2 = 0 since <a,a> = 0
    IntMat m = IntMat::identity(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int64_t t;
            if (__builtin_mul_overflow(a.at(r), ja.at(c), &t) ||
                __builtin_mul_overflow(t, static_cast<int64_t>(exp), &t))
                throw OverflowError("transvection entries exceed 64-bit range");
            m.set(r, c, m.at(r, c) + t);
        }
    return m;
}

RingMat transvection_mod(const IntVec& a, const GramForm& j, int k, long exp) {
    return transvection_int(a, j, exp).reduced(k);
}

RingMat transvection_mod(const RingVec& a, const GramForm& j, long exp) {
    IntVec ai(a.dim());
    for (int i = 0; i < a.dim(); ++i) ai.set(i, a.at(i));
    return transvection_mod(ai, j, a.k(), exp);
}

IntVec apply_transvection(const IntVec& a, const IntVec& v, const GramForm& j) {
    return v + a.scaled(pair_int(v, a, j));
}

IntVec LiftTable::lift(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = overrides_.find({i, j});
    if (it != overrides_.end()) return it->second;
    return rep_->lift_vec(i, j);
}

void LiftTable::override_lift(int i, int j, IntVec a) {
    if (i > j) std::swap(i, j);
    if (a.mod2() != rep_->vec_of_subset({i, j}))
        throw DomainError("lift override must reduce to v_{{i,j}} mod 2");
    overrides_[{i, j}] = std::move(a);
}

Word& Word::append(int i, int j, long exp) {
    if (i > j) std::swap(i, j); // a_{i,j} = a_{j,i}
    if (exp != 0) factors.push_back({i, j, exp});
    return *this;
}

Word& Word::append(const Word& w) {
    factors.insert(factors.end(), w.factors.begin(), w.factors.end());
    return *this;
}

Word Word::inverse() const {
    Word w;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        w.factors.push_back({it->i, it->j, -it->exp});
    return w;
}

std::string Word::str() const {
    std::ostringstream os;
    for (size_t t = 0; t < factors.size(); ++t) {
        if (t) os << " * ";
        os << "t[" << factors[t].i << "," << factors[t].j << "]";
        if (factors[t].exp != 1) os << "^" << factors[t].exp;
    }
    return factors.empty() ? "1" : os.str();
}

Word lift_transposition(int i, int j) {
    if (i == j) throw DomainError("transposition needs distinct indices");
    Word w;
    w.append(i, j, 1);
    return w;
}

Word sigma_lift_word(const Permutation& sigma) {
    Word w;
    if (sigma.is_identity()) return w;
    int i, j;
    if (sigma.is_transposition(&i, &j)) return lift_transposition(i, j);
    for (int m : sigma.star_decomposition()) w.append(1, m, 1);
    return w;
}

Word y_lift_word(int g, int m, int i, int j) {
    Word w;
    for (int l = 1; l <= 2 * g + 1; ++l)
        if (l != m) w.append(m, l, 2);
    w.append(i, j, 1);
    return w;
}

RingMat eval_word_mod(const Word& w, const LiftTable& lifts, int k) {
    const GramForm& j = lifts.rep().gram();
    RingMat acc = RingMat::identity(k, j.dim());
    for (const auto& f : w.factors)
        acc = acc * transvection_mod(lifts.lift(f.i, f.j), j, k, f.exp);
    return acc;
}

IntMat eval_word_int(const Word& w, const LiftTable& lifts) {
    const GramForm& j = lifts.rep().gram();
    IntMat acc = IntMat::identity(j.dim());
    for (const auto& f : w.factors) acc = acc * transvection_int(lifts.lift(f.i, f.j), j, f.exp);
    return acc;
}

Word parse_word(const std::string& s, int d) {
    Word w;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto parse_long = [&]() -> long {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer in word: " + s);
        long v = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    };
    skip_ws();
    bool first = true;
    while (pos < s.size()) {
        if (!first) {
            if (s[pos] != '*') throw ParseError("expected '*' between word factors: " + s);
            ++pos;
            skip_ws();
        }
        first = false;
        if (s[pos] == 't') {
            ++pos;
            if (pos >= s.size() || s[pos] != '[') throw ParseError("expected '[' after t");
            ++pos;
            const long i = parse_long();
            skip_ws();
            if (pos >= s.size() || s[pos] != ',') throw ParseError("expected ',' in t[i,j]");
            ++pos;
            const long j = parse_long();
            skip_ws();
            if (pos >= s.size() || s[pos] != ']') throw ParseError("expected ']' in t[i,j]");
            ++pos;
            long e = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_long();
            }
            if (i < 1 || j < 1 || i > d || j > d || i == j)
                throw ParseError("t[i,j] indices out of range");
            w.append(static_cast<int>(i), static_cast<int>(j), e);
        } else if (s[pos] == 's') {
            ++pos;
            if (pos >= s.size() || s[pos] != '[') throw ParseError("expected '[' after s");
            ++pos;
            size_t close = s.find(']', pos);
            if (close == std::string::npos) throw ParseError("unterminated s[...] factor");
            const Permutation sigma = Permutation::parse_cycles(s.substr(pos, close - pos), d);
            pos = close + 1;
            long e = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_long();
            }
            Word sw = sigma_lift_word(sigma);
            if (e < 0) {
                sw = sw.inverse();
                e = -e;
            }
            for (long t = 0; t < e; ++t) w.append(sw);
        } else {
            throw ParseError("unexpected character in word: " + s);
        }
        skip_ws();
    }
    return w;
}

RingMat commutator(const RingMat& a, const RingMat& b) {
    return a * b * a.inverse() * b.inverse();
}

bool verify_braid_identity_mod8(const LiftTable& lifts, int i, int j, int k) {
    if (i == j || j == k || i == k) throw DomainError("braid indices must be distinct");
    Word lhs, rhs;
    lhs.append(i, j).append(i, k).append(i, j);
    rhs.append(i, k).append(i, j).append(i, k);
    return eval_word_mod(lhs, lifts, 3) == eval_word_mod(rhs, lifts, 3);
}

TripleCheck verify_lemma_a_plus_c(const IntVec& a, const IntVec& b, const IntVec& c,
                                  const GramForm& j) {
    TripleCheck r;
    if (pair_int(a, b, j) != -1) {
        r.failed_precondition = "<a,b> != -1";
        return r;
    }
    if (pair_int(b, c, j) != -1) {
        r.failed_precondition = "<b,c> != -1";
        return r;
    }
    if (pair_int(a, c, j) != 0) {
        r.failed_precondition = "<a,c> != 0";
        return r;
    }
    SubspaceF2 span(j.dim());
    span.insert(a.mod2());
    span.insert(b.mod2());
    span.insert(c.mod2());
    if (span.dim() != 3) {
        r.failed_precondition = "images mod 2 are dependent";
        return r;
    }
    const IntMat lhs = transvection_int(a, j, 2) * transvection_int(a - b, j, 2) *
                       transvection_int(a - b + c, j, 2) * transvection_int(b, j, 2) *
                       transvection_int(b - c, j, 2) * transvection_int(c, j, 2);
    r.ok = lhs == transvection_int(a + c, j, 2);
    return r;
}

TripleCheck verify_lemma_minus1(const IntVec& a, const IntVec& b, const GramForm& j) {
    TripleCheck r;
    const int64_t p = pair_int(a, b, j);
    if (p != 1 && p != -1) {
        r.failed_precondition = "<a,b> not a unit";
        return r;
    }
    const IntMat m = transvection_int(a, j, 2) * transvection_int(apply_transvection(b, a, j), j, 2) *
                     transvection_int(b, j, 2);
    // expected: v -> v - 2<a,b>^{-1} (<v,b>a - <v,a>b), i.e. -1 on span{a,b},
    // identity on its orthogonal complement
    const int n = j.dim();
    IntMat expect = IntMat::identity(n);
    for (int col = 0; col < n; ++col) {
        IntVec e(n);
        e.set(col, 1);
        const IntVec img = e - (a.scaled(pair_int(e, b, j)) - b.scaled(pair_int(e, a, j))).scaled(2 * p);
        for (int row = 0; row < n; ++row) expect.set(row, col, img.at(row));
    }
    r.ok = (m == expect) && (m * m).is_identity() && mat_vec(m, a) == a.scaled(-1) &&
           mat_vec(m, b) == b.scaled(-1);
    return r;
}

} // namespace symplift
