#include "symplift/closure.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "symplift/kernels.hpp"

namespace symplift {

namespace {

// Open-addressing set over PackedKey; empty slots have w[0] == 0, which no
// invertible matrix packs to (row 0 of an invertible matrix is nonzero).
class KeySet {
public:
    explicit KeySet(size_t expected) {
        size_t cap = 64;
        while (cap < expected * 2) cap <<= 1;
        slots_.resize(cap);
    }

    size_t size() const { return size_; }

    bool insert(const PackedKey& key) {
        if ((size_ + 1) * 10 >= slots_.size() * 7) grow();
        return insert_nogrow(key);
    }

    bool contains(const PackedKey& key) const {
        size_t i = index_of(key);
        while (slots_[i].w[0] != 0) {
            if (slots_[i] == key) return true;
            i = (i + 1) & (slots_.size() - 1);
        }
        return false;
    }

    std::vector<PackedKey> sorted_keys() const {
        std::vector<PackedKey> out;
        out.reserve(size_);
        for (const auto& s : slots_)
            if (s.w[0] != 0) out.push_back(s);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static uint64_t mix(uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    size_t index_of(const PackedKey& key) const {
        const uint64_t h = mix(key.w[0] ^ mix(key.w[1] ^ mix(key.w[2])));
        return static_cast<size_t>(h) & (slots_.size() - 1);
    }

    bool insert_nogrow(const PackedKey& key) {
        size_t i = index_of(key);
        while (slots_[i].w[0] != 0) {
            if (slots_[i] == key) return false;
            i = (i + 1) & (slots_.size() - 1);
        }
        slots_[i] = key;
        ++size_;
        return true;
    }

    void grow() {
        std::vector<PackedKey> old = std::move(slots_);
        slots_.assign(old.size() * 2, PackedKey{});
        size_ = 0;
        for (const auto& s : old)
            if (s.w[0] != 0) insert_nogrow(s);
    }

    std::vector<PackedKey> slots_;
    size_t size_ = 0;
};

} // namespace

GroupHandle::GroupHandle(int k_, int g_, std::vector<RingMat> gens_, const GramForm& j)
    : k(k_), g(g_), gens(std::move(gens_)) {
    for (const auto& m : gens) {
        if (m.k() != k || m.dim() != 2 * g)
            throw DimensionError("generator shape does not match the group handle");
        if (!is_symplectic(m, j)) throw DomainError("generator is not symplectic");
    }
}

PackedCodec::PackedCodec(int k, int dim) : k_(k), dim_(dim) {
    if (k < 1 || k > 4) throw DomainError("packed closure elements need k <= 4");
    if (dim < 1 || dim > 6) throw DomainError("packed closure elements need dim <= 6");
    nw_ = (dim * dim * 4 + 63) / 64;
}

PackedKey PackedCodec::pack(const uint16_t* entries) const {
    PackedKey key;
    const int n = dim_ * dim_;
    for (int p = 0; p < n; ++p)
        key.w[static_cast<size_t>(p / 16)] |= static_cast<uint64_t>(entries[p] & 0xF)
                                              << (4 * (p % 16));
    return key;
}

void PackedCodec::unpack(const PackedKey& key, uint16_t* entries) const {
    const int n = dim_ * dim_;
    for (int p = 0; p < n; ++p)
        entries[p] = static_cast<uint16_t>((key.w[static_cast<size_t>(p / 16)] >> (4 * (p % 16))) & 0xF);
}

PackedKey PackedCodec::pack_mat(const RingMat& m) const {
    uint16_t buf[36];
    for (int p = 0; p < dim_ * dim_; ++p)
        buf[p] = static_cast<uint16_t>(m.entries()[static_cast<size_t>(p)]);
    return pack(buf);
}

RingMat PackedCodec::unpack_mat(const PackedKey& key) const {
    uint16_t buf[36];
    unpack(key, buf);
    RingMat m(k_, dim_);
    for (int p = 0; p < dim_ * dim_; ++p) m.entries()[static_cast<size_t>(p)] = buf[p];
    return m;
}

bool ClosureResult::contains(const PackedKey& key) const {
    return std::binary_search(elements.begin(), elements.end(), key);
}

RingMat ClosureResult::element(size_t idx) const {
    return PackedCodec(k, 2 * g).unpack_mat(elements[idx]);
}

ClosureResult close(const GroupHandle& h, const CloseOptions& opts) {
    const int dim = 2 * h.g;
    const size_t stride = static_cast<size_t>(dim) * dim;
    const PackedCodec codec(h.k, dim);
    const uint16_t mask = static_cast<uint16_t>((1u << h.k) - 1);
    const auto mul = kernels::select_batch_mul(dim);

    std::vector<RingMat> gens = h.gens;
    if (opts.reverse_gens) std::reverse(gens.begin(), gens.end());

    std::vector<std::vector<uint16_t>> genbuf;
    for (const auto& gmat : gens) {
        std::vector<uint16_t> b(stride);
        for (size_t p = 0; p < stride; ++p) b[p] = static_cast<uint16_t>(gmat.entries()[p]);
        genbuf.push_back(std::move(b));
    }

    KeySet seen(1024);
    std::vector<uint16_t> frontier(stride, 0);
    for (int i = 0; i < dim; ++i) frontier[static_cast<size_t>(i) * dim + i] = 1;
    seen.insert(codec.pack(frontier.data()));

    std::vector<uint16_t> products;
    while (!frontier.empty()) {
        const size_t nf = frontier.size() / stride;
        std::vector<uint16_t> next;
        for (size_t base = 0; base < nf; base += opts.batch) {
            const size_t chunk = std::min(opts.batch, nf - base);
            products.assign(chunk * stride, 0);
            for (const auto& gb : genbuf) {
                mul(frontier.data() + base * stride, gb.data(), products.data(), chunk, dim, mask);
                for (size_t t = 0; t < chunk; ++t) {
                    const PackedKey key = codec.pack(products.data() + t * stride);
                    if (seen.insert(key)) {
                        if (seen.size() > static_cast<size_t>(opts.cap))
                            throw CapExceededError("closure exceeded the element cap of " +
                                                   std::to_string(opts.cap));
                        next.insert(next.end(), products.begin() + static_cast<long>(t * stride),
                                    products.begin() + static_cast<long>((t + 1) * stride));
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    ClosureResult res;
    res.k = h.k;
    res.g = h.g;
    res.order = seen.size();
    res.elements = seen.sorted_keys();
    return res;
}

IntersectionResult congruence_intersection(const ClosureResult& res, int n,
                                           const LayerSpace* layers) {
    if (n >= res.k) throw DomainError("intersection level must be below the closure modulus");
    const PackedCodec codec(res.k, 2 * res.g);
    IntersectionResult out;
    const bool want_layer = (n == res.k - 1) && layers;
    if (want_layer) out.layer = SubspaceF2(layers->npairs());
    for (const auto& key : res.elements) {
        RingMat m = codec.unpack_mat(key);
        if (!m.congruent_identity(n)) continue;
        if (want_layer) out.layer->insert(layers->layer_coords(m, n).vec());
        out.elements.push_back(std::move(m));
    }
    return out;
}

std::string fingerprint(const ClosureResult& res) {
    uint64_t h1 = 0xcbf29ce484222325ull ^ res.order;
    uint64_t h2 = 0x100000001b3ull * (static_cast<uint64_t>(res.k) << 8 | static_cast<uint64_t>(res.g));
    auto step = [](uint64_t h, uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
        return h;
    };
    for (const auto& key : res.elements) {
        h1 = step(h1, key.w[0]);
        h1 = step(h1, key.w[1] + 0x9e37ull);
        h1 = step(h1, key.w[2] + 0x79b9ull);
        h2 = step(h2, key.w[2] ^ 0xabcdull);
        h2 = step(h2, key.w[1]);
        h2 = step(h2, key.w[0] ^ 0x1234ull);
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h1;
    os.width(16);
    os << h2;
    return os.str();
}

OrbitResult conjugacy_orbit(const std::vector<RingMat>& start_gens, const std::string& start_label,
                            const std::vector<RingMat>& conjugators,
                            const std::function<std::string(const std::vector<RingMat>&)>& recover,
                            size_t label_space_size) {
    OrbitResult out;
    out.labels.insert(start_label);
    std::vector<std::pair<std::string, std::vector<RingMat>>> frontier{{start_label, start_gens}};
    while (!frontier.empty()) {
        std::vector<std::pair<std::string, std::vector<RingMat>>> next;
        for (const auto& [label, gens] : frontier) {
            for (const auto& u : conjugators) {
                const RingMat uinv = u.inverse();
                std::vector<RingMat> conj;
                conj.reserve(gens.size());
                for (const auto& m : gens) conj.push_back(u * m * uinv);
                std::string l2 = recover(conj);
                if (out.labels.insert(l2).second) next.emplace_back(std::move(l2), std::move(conj));
            }
        }
        frontier = std::move(next);
    }
    out.transitive = out.labels.size() == label_space_size;
    return out;
}

Gamma8Check verify_gamma8_containment(const LayerSpace& layers, std::mt19937_64& rng,
                                      bool perturb) {
    Gamma8Check out;
    const int g = layers.g();
    const int n = 2 * g + 1;
    if (g < 2) {
        out.status = Gamma8Status::Inconclusive; // the disjoint-pair sum is empty
        return out;
    }
    auto random_coords = [&] {
        return SpCoords{g, rng() & ((uint64_t{1} << layers.npairs()) - 1)};
    };

    // arbitrary mod-16 lift of the first delta word, times a level-8 element
    RingMat lift = eval_word_mod(layers.delta8_word(1, 2, 3), layers.lifts(), 4);
    if (perturb) lift = lift * layers.from_coords(random_coords(), 3, 4);
    const RingMat square = lift * lift;
    if (!square.congruent_identity(3)) return out; // would falsify the containment
    out.delta_square_coords = layers.layer_coords(square, 3);

    std::vector<SpCoords> seed{out.delta_square_coords};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                // lift of Delta_{i,j,k} from level 4, perturbed, then squared
                RingMat dl = layers.from_coords(layers.delta_coords(i, j, k), 2, 4);
                if (perturb) dl = dl * layers.from_coords(random_coords(), 3, 4);
                const RingMat sq = dl * dl;
                if (!sq.congruent_identity(3)) return out;
                seed.push_back(layers.layer_coords(sq, 3));
            }
    out.saturated = layers.saturate_invariant(seed, layers.rep().d());
    out.status = (out.saturated.dim() == layers.npairs()) ? Gamma8Status::Contained
                                                          : Gamma8Status::Stuck;
    return out;
}

long image_order(int d, long cap) {
    const int g = (d - 1) / 2;
    StandardRep rep(g, d);
    std::vector<RingMat> gens;
    for (int j = 2; j <= d; ++j) gens.push_back(rep.rho(Permutation::transposition(d, 1, j)));
    GroupHandle h(1, g, std::move(gens), rep.gram());
    CloseOptions opts;
    opts.cap = static_cast<uint64_t>(cap);
    return static_cast<long>(close(h, opts).order);
}

} // namespace symplift
