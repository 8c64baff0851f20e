#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "aca/bigint.hpp"
#include "aca/permutation.hpp"

namespace aca {

/// Permutation group given by generators, with a base and strong generating
/// set built by the deterministic Schreier-Sims procedure. Base points are
/// the smallest point moved by the generator that forced each level, so the
/// chain (and hence the order computation) is reproducible.
class PermGroup {
public:
    using point = Permutation::point;

    PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
        for (Permutation& g : generators) {
            if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
            if (g.is_identity()) continue;
            bool dup = false;
            for (const Permutation& h : gens_)
                if (h == g) {
                    dup = true;
                    break;
                }
            if (!dup) gens_.push_back(std::move(g));
        }
        build();
    }

    static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const BigInt& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    std::vector<point> base() const {
        std::vector<point> b;
        b.reserve(levels_.size());
        for (const Level& lv : levels_) b.push_back(lv.beta);
        return b;
    }

    std::vector<std::size_t> transversal_sizes() const {
        std::vector<std::size_t> s;
        s.reserve(levels_.size());
        for (const Level& lv : levels_) s.push_back(lv.orbit.size());
        return s;
    }

    bool contains(const Permutation& g) const {
        if (g.degree() != degree_) return false;
        Permutation r = g;
        if (!strip(r, 0)) return false;
        return r.is_identity();
    }

    bool is_subgroup_of(const PermGroup& other) const {
        for (const Permutation& g : gens_)
            if (!other.contains(g)) return false;
        return true;
    }

    /// Recheck the defining property of the chain: every Schreier generator of
    /// every level sifts to the identity. Intended for tests on small groups.
    bool verify_strong_generation() const {
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            const Level& lv = levels_[i];
            for (std::size_t s = 0; s < lv.orbit.size(); ++s)
                for (std::uint32_t id : lv.gen_ids) {
                    const Permutation& g = pool_[id];
                    const point q = g(lv.orbit[s]);
                    Permutation h = lv.trans[s].then(g).then(lv.trans_inv[lv.slot_of[q]]);
                    if (!strip(h, i + 1) || !h.is_identity()) return false;
                }
        }
        return true;
    }

private:
    struct Level {
        point beta = 0;
        std::vector<std::uint32_t> gen_ids;  // strong generators fixing all earlier base points
        std::vector<std::size_t> done;       // orbit slots already paired with each generator
        std::vector<std::int32_t> slot_of;   // point -> orbit slot, -1 outside
        std::vector<point> orbit;            // discovery order; slot 0 is beta itself
        std::vector<Permutation> trans;      // slot -> u with u(beta) = point
        std::vector<Permutation> trans_inv;
    };

    void build() {
        order_ = 1;
        for (const Permutation& g : gens_) insert_strong_generator(g);
        for (std::size_t i = levels_.size(); i-- > 0;) complete(i);
        for (const Level& lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
    }

    static point min_moved(const Permutation& g) {
        for (std::size_t x = 0; x < g.degree(); ++x)
            if (g(static_cast<point>(x)) != x) return static_cast<point>(x);
        throw std::logic_error("identity has no moved point");
    }

    std::size_t fixed_prefix(const Permutation& g) const {
        std::size_t m = 0;
        while (m < levels_.size() && g(levels_[m].beta) == levels_[m].beta) ++m;
        return m;
    }

    void append_level(point beta) {
        Level lv;
        lv.beta = beta;
        lv.slot_of.assign(degree_, -1);
        lv.slot_of[beta] = 0;
        lv.orbit.push_back(beta);
        lv.trans.push_back(Permutation::identity(degree_));
        lv.trans_inv.push_back(Permutation::identity(degree_));
        levels_.push_back(std::move(lv));
    }

    /// Register g as a strong generator at every level whose base prefix it
    /// fixes, opening a new level when it fixes the whole base.
    std::size_t insert_strong_generator(const Permutation& g) {
        std::size_t fixlen = fixed_prefix(g);
        if (fixlen == levels_.size()) append_level(min_moved(g));
        const std::uint32_t id = static_cast<std::uint32_t>(pool_.size());
        pool_.push_back(g);
        for (std::size_t m = 0; m <= fixlen; ++m) {
            levels_[m].gen_ids.push_back(id);
            levels_[m].done.push_back(0);
        }
        return fixlen;
    }

    /// Strip g through levels l, l+1, ... in place. Returns false when some
    /// base image falls outside its orbit (g then fixes all earlier points).
    bool strip(Permutation& g, std::size_t l) const {
        for (; l < levels_.size(); ++l) {
            if (g.is_identity()) return true;
            const Level& lv = levels_[l];
            const point q = g(lv.beta);
            if (q == lv.beta) continue;
            const std::int32_t s = lv.slot_of[q];
            if (s < 0) return false;
            g.assign_composition(g, lv.trans_inv[static_cast<std::size_t>(s)]);
        }
        return true;
    }

    void grow_orbit(Level& lv, std::size_t slot, const Permutation& g, point q) {
        lv.slot_of[q] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.trans.push_back(lv.trans[slot].then(g));
        lv.trans_inv.push_back(lv.trans.back().inverse());
    }

    /// Process Schreier pairs of level i until none are left. Any nontrivial
    /// sift residue becomes a new strong generator and the deeper levels it
    /// touches are re-completed before the pair loop resumes.
    void complete(std::size_t i) {
        for (;;) {
            bool progress = false;
            for (std::size_t gi = 0; gi < levels_[i].gen_ids.size(); ++gi) {
                while (levels_[i].done[gi] < levels_[i].orbit.size()) {
                    const std::size_t slot = levels_[i].done[gi]++;
                    progress = true;
                    process_pair(i, slot, gi);
                }
            }
            if (!progress) break;
        }
    }

    void process_pair(std::size_t i, std::size_t slot, std::size_t gi) {
        Level& lv = levels_[i];
        const Permutation& g = pool_[lv.gen_ids[gi]];
        const point q = g(lv.orbit[slot]);
        if (lv.slot_of[q] < 0) {
            grow_orbit(lv, slot, g, q);
            return;
        }
        Permutation h = lv.trans[slot].then(g);
        h.assign_composition(h, lv.trans_inv[static_cast<std::size_t>(lv.slot_of[q])]);
        if (h.is_identity()) return;
        if (strip(h, i + 1) && h.is_identity()) return;
        const std::size_t fixlen = insert_strong_generator(h);
        for (std::size_t m = fixlen; m > i; --m) complete(m);
    }

    std::size_t degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> pool_;  // strong generators
    std::deque<Level> levels_;
    BigInt order_ = 1;
};

/// Breadth-first closure of a generator set, abandoned past `cap` elements.
/// A deliberately simple-minded second route to group orders.
inline std::optional<std::vector<Permutation>> naive_closure(std::size_t degree,
                                                             const std::vector<Permutation>& gens,
                                                             std::size_t cap) {
    struct Hash {
        std::size_t operator()(const Permutation& p) const {
            std::size_t h = 1469598103934665603ull;
            for (Permutation::point x : p.images()) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_set<Permutation, Hash> seen;
    std::vector<Permutation> frontier;
    seen.insert(Permutation::identity(degree));
    frontier.push_back(Permutation::identity(degree));
    std::vector<Permutation> elements = frontier;
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& e : frontier)
            for (const Permutation& g : gens) {
                Permutation f = e.then(g);
                if (seen.insert(f).second) {
                    if (seen.size() > cap) return std::nullopt;
                    elements.push_back(f);
                    next.push_back(std::move(f));
                }
            }
        frontier = std::move(next);
    }
    return elements;
}

}  // namespace aca
