#include "grasspack/schreier.hpp"

#include <cstddef>
#include <deque>
#include <limits>

#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

constexpr std::uint32_t kNoPos = std::numeric_limits<std::uint32_t>::max();

// Total explicit-transversal budget, in stored points. Beyond this the
// transversals switch to Schreier-vector tree walks.
constexpr std::size_t kExplicitBudget = 200'000'000;

bool is_identity(const Perm& p) {
    for (std::uint32_t x = 0; x < p.size(); ++x)
        if (p[x] != x) return false;
    return true;
}

Perm invert(const Perm& p) {
    Perm inv(p.size());
    for (std::uint32_t x = 0; x < p.size(); ++x) inv[p[x]] = x;
    return inv;
}

std::uint32_t smallest_moved(const Perm& p) {
    for (std::uint32_t x = 0; x < p.size(); ++x)
        if (p[x] != x) return x;
    return kNoPos;
}

struct Level {
    std::uint32_t base = 0;
    std::vector<Perm> gens;
    std::vector<Perm> gen_invs;
    std::vector<std::size_t> watermark;  // per generator: orbit positions processed

    std::vector<std::uint32_t> orbit;              // points, discovery order (base first)
    std::vector<std::uint32_t> pos;                // point -> orbit position or kNoPos
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree;  // per position: (parent point, gen)
    std::vector<Perm> uinv;                        // per position, empty when not materialized
};

class ChainBuilder {
public:
    explicit ChainBuilder(const std::vector<Perm>& generators, std::size_t degree)
        : degree_(degree) {
        for (const Perm& g : generators) {
            if (g.size() != degree_) throw error("stabilizer chain: generator degree mismatch");
            if (!is_identity(g)) add_generator(0, g);
        }
        // Levels complete themselves recursively inside add_generator; a
        // final pass settles any level left with unprocessed pairs.
        for (std::size_t l = 0; l < levels_.size(); ++l) complete_level(l);
    }

    BigInt order() const {
        BigInt n = 1;
        for (const Level& l : levels_) n *= static_cast<std::uint64_t>(l.orbit.size());
        return n;
    }
    std::vector<std::uint32_t> base() const {
        std::vector<std::uint32_t> b;
        for (const Level& l : levels_) b.push_back(l.base);
        return b;
    }
    std::vector<std::size_t> orbit_sizes() const {
        std::vector<std::size_t> s;
        for (const Level& l : levels_) s.push_back(l.orbit.size());
        return s;
    }

private:
    void add_point(Level& lvl, std::uint32_t point, std::uint32_t parent, std::uint32_t gen_idx) {
        lvl.pos[point] = static_cast<std::uint32_t>(lvl.orbit.size());
        lvl.orbit.push_back(point);
        lvl.tree.emplace_back(parent, gen_idx);
        if (explicit_used_ + degree_ <= kExplicitBudget && gen_idx != kNoPos &&
            !lvl.uinv[lvl.pos[parent]].empty()) {
            // u_point^-1 = gen^-1 * u_parent^-1
            const Perm& parent_uinv = lvl.uinv[lvl.pos[parent]];
            const Perm& gi = lvl.gen_invs[gen_idx];
            Perm u(degree_);
            for (std::uint32_t x = 0; x < degree_; ++x) u[x] = parent_uinv[gi[x]];
            lvl.uinv.push_back(std::move(u));
            explicit_used_ += degree_;
        } else if (gen_idx == kNoPos) {
            // Root: identity transversal, materialized cheaply.
            Perm u(degree_);
            for (std::uint32_t x = 0; x < degree_; ++x) u[x] = x;
            lvl.uinv.push_back(std::move(u));
            explicit_used_ += degree_;
        } else {
            lvl.uinv.emplace_back();  // tree walk on demand
        }
    }

    // result := result * u_point^-1 (apply result first, then u^-1).
    void apply_uinv(const Level& lvl, std::uint32_t point, Perm& result) const {
        const std::uint32_t p = lvl.pos[point];
        if (!lvl.uinv[p].empty()) {
            const Perm& u = lvl.uinv[p];
            for (std::uint32_t x = 0; x < degree_; ++x) result[x] = u[result[x]];
            return;
        }
        // Walk the Schreier tree from `point` to the root, applying the
        // edge inverses as we go.
        std::uint32_t cur = point;
        while (true) {
            auto [parent, gen_idx] = lvl.tree[lvl.pos[cur]];
            if (gen_idx == kNoPos) break;
            const Perm& gi = lvl.gen_invs[gen_idx];
            for (std::uint32_t x = 0; x < degree_; ++x) result[x] = gi[result[x]];
            cur = parent;
        }
    }

    // Forward transversal element u_point as an explicit permutation.
    Perm forward_u(const Level& lvl, std::uint32_t point) const {
        const std::uint32_t p = lvl.pos[point];
        if (!lvl.uinv[p].empty()) return invert(lvl.uinv[p]);
        Perm u(degree_);
        for (std::uint32_t x = 0; x < degree_; ++x) u[x] = x;
        // u = edge_1 * ... * edge_L reading from the root; collect then apply.
        std::vector<std::uint32_t> edges;
        std::uint32_t cur = point;
        while (true) {
            auto [parent, gen_idx] = lvl.tree[lvl.pos[cur]];
            if (gen_idx == kNoPos) break;
            edges.push_back(gen_idx);
            cur = parent;
        }
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
            const Perm& g = lvl.gens[*it];
            for (std::uint32_t x = 0; x < degree_; ++x) u[x] = g[u[x]];
        }
        return u;
    }

    // Sift g through levels from `start`; returns the residue (identity when
    // g factors over the chain).
    Perm sift(std::size_t start, Perm g) const {
        for (std::size_t l = start; l < levels_.size(); ++l) {
            const Level& lvl = levels_[l];
            const std::uint32_t image = g[lvl.base];
            if (image == lvl.base) continue;
            if (lvl.pos[image] == kNoPos) return g;  // stuck: new orbit point for level l
            apply_uinv(lvl, image, g);
        }
        return g;
    }

    void add_generator(std::size_t level_idx, const Perm& g) {
        if (level_idx == levels_.size()) {
            levels_.emplace_back();
            Level& lvl = levels_.back();
            lvl.base = smallest_moved(g);
            lvl.pos.assign(degree_, kNoPos);
            add_point(lvl, lvl.base, lvl.base, kNoPos);
        }
        Level& lvl = levels_[level_idx];
        lvl.gens.push_back(g);
        lvl.gen_invs.push_back(invert(g));
        lvl.watermark.push_back(0);
        complete_level(level_idx);
    }

    void complete_level(std::size_t level_idx) {
        Level& lvl = levels_[level_idx];
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t gi = 0; gi < lvl.gens.size(); ++gi) {
                while (lvl.watermark[gi] < lvl.orbit.size()) {
                    const std::uint32_t position = static_cast<std::uint32_t>(lvl.watermark[gi]++);
                    const std::uint32_t p = lvl.orbit[position];
                    const std::uint32_t q = lvl.gens[gi][p];
                    if (lvl.pos[q] == kNoPos) {
                        add_point(lvl, q, p, static_cast<std::uint32_t>(gi));
                        progress = true;
                        continue;
                    }
                    // Schreier generator u_p * gen * u_q^-1 fixes the base.
                    Perm schreier = forward_u(lvl, p);
                    const Perm& gen = lvl.gens[gi];
                    for (std::uint32_t x = 0; x < degree_; ++x) schreier[x] = gen[schreier[x]];
                    apply_uinv(lvl, q, schreier);
                    if (!is_identity(schreier)) {
                        Perm residue = sift(level_idx + 1, std::move(schreier));
                        if (!is_identity(residue)) {
                            add_generator(level_idx + 1, residue);
                            progress = true;
                        }
                    }
                }
            }
        }
    }

    std::size_t degree_;
    std::size_t explicit_used_ = 0;
    // deque: complete_level holds references across recursive level creation
    std::deque<Level> levels_;

    friend class grasspack::StabilizerChain;
};

}  // namespace

StabilizerChain::StabilizerChain(const std::vector<Perm>& generators) {
    if (generators.empty()) {
        order_ = 1;
        return;
    }
    ChainBuilder builder(generators, generators.front().size());
    order_ = builder.order();
    base_ = builder.base();
    orbit_sizes_ = builder.orbit_sizes();
}

}  // namespace grasspack
