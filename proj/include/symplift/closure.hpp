#pragma once

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symplift/layers.hpp"

namespace symplift {

/// Generators of a subgroup of Sp(V/2^kV); every generator must be symplectic.
struct GroupHandle {
    int k;
    int g;
    std::vector<RingMat> gens;

    GroupHandle(int k_, int g_, std::vector<RingMat> gens_, const GramForm& j);
};

/// Nibble-packed matrix key: 4 bits per entry, row-major.  One 64-bit word
/// covers a 4x4 matrix; dim 6 takes three.
struct PackedKey {
    std::array<uint64_t, 3> w{0, 0, 0};
    bool operator==(const PackedKey& o) const { return w == o.w; }
    bool operator<(const PackedKey& o) const { return w < o.w; }
};

class PackedCodec {
public:
    PackedCodec(int k, int dim);
    int k() const { return k_; }
    int dim() const { return dim_; }
    int words() const { return nw_; }
    PackedKey pack(const uint16_t* entries) const;
    void unpack(const PackedKey& key, uint16_t* entries) const;
    PackedKey pack_mat(const RingMat& m) const;
    RingMat unpack_mat(const PackedKey& key) const;

private:
    int k_;
    int dim_;
    int nw_;
};

struct ClosureResult {
    int k = 1;
    int g = 1;
    uint64_t order = 0;
    std::vector<PackedKey> elements; // sorted

    bool contains(const PackedKey& key) const;
    RingMat element(size_t idx) const;
};

struct CloseOptions {
    uint64_t cap = 10'000'000;
    size_t batch = 4096;        // frontier chunk handed to the batch kernel
    bool reverse_gens = false;  // alternate traversal schedule (determinism tests)
};

ClosureResult close(const GroupHandle& h, const CloseOptions& opts = {});

struct IntersectionResult {
    std::vector<RingMat> elements;               // all members congruent I mod 2^n
    std::optional<SubspaceF2> layer;             // coords subspace when n = k-1
};

IntersectionResult congruence_intersection(const ClosureResult& res, int n,
                                           const LayerSpace* layers = nullptr);

/// Sorted-multiset digest of the element set; equal sets give equal digests.
std::string fingerprint(const ClosureResult& res);

/// Orbit of subgroup labels under a conjugator set.  `recover` maps a
/// conjugated generator tuple back to its label and throws LabelRecoveryError
/// if the tuple is not of classified shape.
struct OrbitResult {
    std::set<std::string> labels;
    bool transitive = false;
};

OrbitResult conjugacy_orbit(const std::vector<RingMat>& start_gens,
                            const std::string& start_label,
                            const std::vector<RingMat>& conjugators,
                            const std::function<std::string(const std::vector<RingMat>&)>& recover,
                            size_t label_space_size);

enum class Gamma8Status { Contained, Stuck, Inconclusive };

struct Gamma8Check {
    Gamma8Status status = Gamma8Status::Stuck;
    SpCoords delta_square_coords{};
    SubspaceF2 saturated;
};

/// Constructive level-16 containment argument: lift the first delta word to
/// mod 16 (with a random level-8 perturbation), square it, read its layer
/// coordinates, adjoin the squared delta lifts generating the level-8 N, and
/// saturate under S_d.  Contained iff the saturation is the full layer space.
Gamma8Check verify_gamma8_containment(const LayerSpace& layers, std::mt19937_64& rng,
                                      bool perturb = true);

} // namespace symplift
