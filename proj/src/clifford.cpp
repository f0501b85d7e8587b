#include "grasspack/clifford.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "grasspack/construction.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/kernel.hpp"
#include "grasspack/schreier.hpp"

namespace grasspack {

namespace {

// Coordinates are binary level-tuples in lexicographic order; tuple entry 1
// is the most significant bit of the index.
int apply_affine(int level, const std::vector<std::vector<int>>& a, const std::vector<int>& b,
                 int x) {
    int y = 0;
    for (int r = 0; r < level; ++r) {
        int bit = b[r];
        for (int c = 0; c < level; ++c)
            if (a[r][c]) bit ^= (x >> (level - 1 - c)) & 1;
        y |= bit << (level - 1 - r);
    }
    return y;
}

std::vector<std::vector<int>> identity_bits(int level) {
    std::vector<std::vector<int>> a(level, std::vector<int>(level, 0));
    for (int i = 0; i < level; ++i) a[i][i] = 1;
    return a;
}

bool invertible_over_f2(int level, const std::vector<std::vector<int>>& a) {
    std::vector<unsigned> rows(level, 0);
    for (int r = 0; r < level; ++r)
        for (int c = 0; c < level; ++c)
            if (a[r][c]) rows[r] |= 1u << c;
    int rank = 0;
    for (int c = 0; c < level; ++c) {
        int pivot = -1;
        for (int r = rank; r < level; ++r)
            if ((rows[r] >> c) & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < level; ++r)
            if (r != rank && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank == level;
}

ScaledIntMatrix hadamard_block(int level) {
    const ScaledIntMatrix h2 = ScaledIntMatrix::from_rows({{1, 1}, {1, -1}}, 1);
    return ScaledIntMatrix::identity(1 << (level - 1)).kron(h2);
}

}  // namespace

GroupElement::GroupElement(ScaledIntMatrix matrix, std::vector<int> word)
    : matrix_(std::move(matrix)), word_(std::move(word)) {
    if (!matrix_.is_orthogonal())
        throw error("group element: matrix is not orthogonal: " + matrix_.str());
}

ScaledIntMatrix affine_permutation(int level, const std::vector<std::vector<int>>& a,
                                   const std::vector<int>& b) {
    if (!invertible_over_f2(level, a))
        throw error("affine_permutation: linear part is singular over F_2");
    const int m = 1 << level;
    ScaledIntMatrix p(m, m, 0);
    for (int x = 0; x < m; ++x) p.at(x, apply_affine(level, a, b, x)) = 1;
    return p;
}

GeneratorSet make_generators(int level) {
    if (level < 1) throw error("make_generators: level must be >= 1");
    GeneratorSet gens{level, {}, {}};

    std::vector<int> zero(level, 0);
    std::vector<int> e1(level, 0);
    e1[0] = 1;
    gens.names.push_back("translate_e1");
    gens.elements.emplace_back(affine_permutation(level, identity_bits(level), e1),
                               std::vector<int>{0});

    if (level == 1) {
        // GL(1,2) is trivial; keep the degenerate linear generator explicit.
        gens.names.push_back("gl_identity");
        gens.elements.emplace_back(affine_permutation(level, identity_bits(level), zero),
                                   std::vector<int>{1});
    } else {
        auto cycle = std::vector<std::vector<int>>(level, std::vector<int>(level, 0));
        for (int c = 0; c < level; ++c) cycle[(c + 1) % level][c] = 1;
        gens.names.push_back("gl_cycle");
        gens.elements.emplace_back(affine_permutation(level, cycle, zero), std::vector<int>{1});

        auto transvection = identity_bits(level);
        transvection[0][1] = 1;  // basis vector e2 -> e1 + e2
        gens.names.push_back("gl_transvection");
        gens.elements.emplace_back(affine_permutation(level, transvection, zero),
                                   std::vector<int>{2});
    }

    gens.names.push_back("hadamard");
    gens.elements.emplace_back(hadamard_block(level),
                               std::vector<int>{static_cast<int>(gens.elements.size())});
    return gens;
}

std::vector<ScaledIntMatrix> all_affine_permutations(int level) {
    if (level > 3) throw limit_error("all_affine_permutations: level too large to enumerate");
    const int bits = level * level;
    std::vector<ScaledIntMatrix> out;
    for (int mask = 0; mask < (1 << bits); ++mask) {
        std::vector<std::vector<int>> a(level, std::vector<int>(level));
        for (int r = 0; r < level; ++r)
            for (int c = 0; c < level; ++c) a[r][c] = (mask >> (r * level + c)) & 1;
        if (!invertible_over_f2(level, a)) continue;
        for (int bmask = 0; bmask < (1 << level); ++bmask) {
            std::vector<int> b(level);
            for (int r = 0; r < level; ++r) b[r] = (bmask >> r) & 1;
            out.push_back(affine_permutation(level, a, b));
        }
    }
    return out;
}

std::vector<ScaledIntMatrix> matrix_group_closure(const GeneratorSet& gens, std::uint64_t limit) {
    std::vector<ScaledIntMatrix> elements;
    std::unordered_set<ScaledIntMatrix, ScaledIntMatrixHash> seen;
    std::deque<std::size_t> queue;

    ScaledIntMatrix id = ScaledIntMatrix::identity(gens.dim());
    elements.push_back(id);
    seen.insert(id);
    queue.push_back(0);

    while (!queue.empty()) {
        std::size_t idx = queue.front();
        queue.pop_front();
        for (const GroupElement& g : gens.elements) {
            ScaledIntMatrix next = elements[idx] * g.matrix();
            if (seen.insert(next).second) {
                if (elements.size() >= limit)
                    throw limit_error("matrix_group_closure: exceeded limit " +
                                      std::to_string(limit));
                elements.push_back(next);
                queue.push_back(elements.size() - 1);
            }
        }
    }
    return elements;
}

OrbitResult subspace_orbit(const Subspace& seed, const GeneratorSet& gens, std::uint64_t limit) {
    if (seed.ambient_dim() != gens.dim())
        throw dimension_error("subspace_orbit: seed ambient dimension " +
                              std::to_string(seed.ambient_dim()) + " != group dimension " +
                              std::to_string(gens.dim()));

    std::vector<Subspace> members;
    std::vector<std::vector<int>> words;
    std::unordered_map<std::size_t, std::vector<std::size_t>> index;

    auto lookup = [&](const Subspace& s) -> bool {
        auto it = index.find(s.hash());
        if (it == index.end()) return false;
        for (std::size_t j : it->second)
            if (members[j] == s) return true;
        return false;
    };

    members.push_back(seed);
    words.push_back({});
    index[seed.hash()].push_back(0);

    for (std::size_t head = 0; head < members.size(); ++head) {
        for (std::size_t gi = 0; gi < gens.elements.size(); ++gi) {
            Subspace next = act(members[head], gens.elements[gi].matrix());
            if (lookup(next)) continue;
            if (members.size() >= limit)
                throw limit_error("subspace_orbit: exceeded limit " + std::to_string(limit));
            std::vector<int> word = words[head];
            word.push_back(static_cast<int>(gi));
            index[next.hash()].push_back(members.size());
            members.push_back(std::move(next));
            words.push_back(std::move(word));
        }
    }

    Packing packing(seed.ambient_dim(), seed.dim(), std::move(members));
    return OrbitResult{seed, std::move(packing), std::move(words)};
}

TransitivityCertificate verify_transitivity(int level) {
    const GeneratorSet gens = make_generators(level);
    const int n = 1 << (level - 1);
    const ScaledIntMatrix seed_gen =
        ScaledIntMatrix::identity(n).hcat(ScaledIntMatrix(n, n, 0));
    const std::uint64_t family_size = (1ull << (2 * level)) + (1ull << level) - 2;

    OrbitResult orbit = subspace_orbit(Subspace(seed_gen), gens, 4 * family_size);
    const ConstructionFamily fam = build_family(level);

    VerificationReport rep("orbit identity, level " + std::to_string(level));
    rep.note("orbit_size", std::to_string(orbit.members.size()));
    rep.note("family_size", std::to_string(fam.packing.size()));

    std::size_t missing_from_orbit = 0;
    for (const Subspace& s : fam.packing.members())
        if (!orbit.members.contains(s)) ++missing_from_orbit;
    std::size_t extra_in_orbit = 0;
    for (const Subspace& s : orbit.members.members())
        if (!fam.packing.contains(s)) ++extra_in_orbit;

    rep.check("orbit size equals family size", orbit.members.size() == fam.packing.size(),
              std::to_string(orbit.members.size()) + " vs " + std::to_string(fam.packing.size()));
    rep.check("every family member is reached", missing_from_orbit == 0,
              missing_from_orbit ? std::to_string(missing_from_orbit) + " missing" : "");
    rep.check("orbit contains no extra subspaces", extra_in_orbit == 0,
              extra_in_orbit ? std::to_string(extra_in_orbit) + " extra" : "");

    // Closure: applying any generator to any member stays inside.
    bool closed = true;
    for (const Subspace& s : orbit.members.members()) {
        for (const GroupElement& g : gens.elements)
            if (!orbit.members.contains(act(s, g.matrix()))) {
                closed = false;
                break;
            }
        if (!closed) break;
    }
    rep.check("orbit is generator-closed", closed);
    return TransitivityCertificate{std::move(orbit), std::move(rep)};
}

PermutationRep permutation_representation(const GeneratorSet& gens,
                                          const ScaledIntMatrix& seed_vector,
                                          std::uint64_t limit) {
    if (seed_vector.rows() != 1 || seed_vector.cols() != gens.dim())
        throw dimension_error("permutation_representation: seed must be a 1 x m row vector");

    std::vector<ScaledIntMatrix> domain;
    std::unordered_map<std::size_t, std::vector<std::size_t>> index;
    auto find = [&](const ScaledIntMatrix& v) -> std::size_t {
        auto it = index.find(v.hash());
        if (it == index.end()) return static_cast<std::size_t>(-1);
        for (std::size_t j : it->second)
            if (domain[j] == v) return j;
        return static_cast<std::size_t>(-1);
    };

    domain.push_back(seed_vector);
    index[seed_vector.hash()].push_back(0);
    for (std::size_t head = 0; head < domain.size(); ++head) {
        for (const GroupElement& g : gens.elements) {
            ScaledIntMatrix next = domain[head] * g.matrix();
            if (find(next) != static_cast<std::size_t>(-1)) continue;
            if (domain.size() >= limit)
                throw limit_error("permutation_representation: exceeded limit " +
                                  std::to_string(limit));
            index[next.hash()].push_back(domain.size());
            domain.push_back(std::move(next));
        }
    }

    // Canonical order: sort, then recompute the index and the images.
    std::sort(domain.begin(), domain.end());
    index.clear();
    for (std::size_t j = 0; j < domain.size(); ++j) index[domain[j].hash()].push_back(j);

    PermutationRep rep;
    rep.ambient_dim = gens.dim();
    rep.domain = std::move(domain);
    {
        std::vector<BigInt> rows;
        rows.reserve(rep.domain.size() * rep.ambient_dim);
        for (const ScaledIntMatrix& v : rep.domain)
            for (const BigInt& e : v.entries()) rows.push_back(e);
        rep.spans_ambient = integer_rank(static_cast<int>(rep.domain.size()), rep.ambient_dim,
                                         std::move(rows)) == rep.ambient_dim;
    }
    rep.images.reserve(gens.elements.size());
    for (const GroupElement& g : gens.elements) {
        std::vector<std::uint32_t> image(rep.domain.size());
        for (std::size_t j = 0; j < rep.domain.size(); ++j) {
            std::size_t target = static_cast<std::size_t>(-1);
            ScaledIntMatrix moved = rep.domain[j] * g.matrix();
            auto it = index.find(moved.hash());
            if (it != index.end())
                for (std::size_t cand : it->second)
                    if (rep.domain[cand] == moved) {
                        target = cand;
                        break;
                    }
            if (target == static_cast<std::size_t>(-1))
                throw error("permutation_representation: domain is not closed");
            image[j] = static_cast<std::uint32_t>(target);
        }
        rep.images.push_back(std::move(image));
    }
    return rep;
}

BigInt half_group_order_formula(int level) {
    if (level < 1) throw error("order formula: level must be >= 1");
    BigInt order = pow2(2 * level + 1) * pow2(level * (level - 1));
    order *= pow2(level) - 1;
    for (int j = 1; j <= level - 1; ++j) order *= pow2(2 * j) - 1;  // 4^j - 1
    return order;
}

BigInt group_order(const PermutationRep& rep) {
    // Faithfulness: an orthogonal map fixing a spanning set is the identity,
    // so the domain must span R^m. Recheck rather than trusting the flag.
    std::vector<BigInt> rows;
    rows.reserve(rep.domain.size() * rep.ambient_dim);
    for (const ScaledIntMatrix& v : rep.domain)
        for (const BigInt& e : v.entries()) rows.push_back(e);
    if (integer_rank(static_cast<int>(rep.domain.size()), rep.ambient_dim, std::move(rows)) !=
        rep.ambient_dim)
        throw rank_error("group_order: domain does not span the ambient space");

    StabilizerChain chain(rep.images);
    return chain.order();
}

}  // namespace grasspack
