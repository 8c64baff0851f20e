#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "aca/bigint.hpp"

namespace aca {

/// Array-backed bijection on [0, d). Domains are capped at 65536 points so
/// images pack into 16 bits; group computations never need more.
class Permutation {
public:
    using point = std::uint16_t;
    static constexpr std::size_t max_degree = 65536;

    Permutation() = default;

    explicit Permutation(std::size_t degree) : img_(degree) {
        check_degree(degree);
        std::iota(img_.begin(), img_.end(), point{0});
    }

    explicit Permutation(std::vector<point> images) : img_(std::move(images)) {
        check_degree(img_.size());
        std::vector<char> hit(img_.size(), 0);
        for (point p : img_) {
            if (p >= img_.size() || hit[p]) throw std::invalid_argument("images are not a bijection");
            hit[p] = 1;
        }
    }

    static Permutation identity(std::size_t degree) { return Permutation(degree); }

    std::size_t degree() const { return img_.size(); }
    point operator()(point x) const { return img_[x]; }
    const std::vector<point>& images() const { return img_; }

    bool is_identity() const {
        for (std::size_t x = 0; x < img_.size(); ++x)
            if (img_[x] != x) return false;
        return true;
    }

    /// x -> g(f(x)) for f.then(g); composition reads left to right.
    Permutation then(const Permutation& g) const {
        require_same_degree(g);
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = g.img_[img_[x]];
        return r;
    }

    /// *this = a then b, reusing storage. a may alias *this; b may not.
    void assign_composition(const Permutation& a, const Permutation& b) {
        img_.resize(a.img_.size());
        for (std::size_t x = 0; x < img_.size(); ++x) img_[x] = b.img_[a.img_[x]];
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<point>(x);
        return r;
    }

    bool is_involution() const {
        for (std::size_t x = 0; x < img_.size(); ++x)
            if (img_[img_[x]] != x) return false;
        return true;
    }

    /// Number of 2-cycles; meaningful for involutions but defined for any permutation.
    std::size_t transposition_count() const {
        std::size_t c = 0;
        for (std::size_t x = 0; x < img_.size(); ++x)
            if (img_[x] > x && img_[img_[x]] == x) ++c;
        return c;
    }

    bool is_even() const {
        // parity = (number of points) - (number of cycles) mod 2
        std::vector<char> seen(img_.size(), 0);
        std::size_t swaps = 0;
        for (std::size_t x = 0; x < img_.size(); ++x) {
            if (seen[x]) continue;
            std::size_t len = 0;
            for (point y = static_cast<point>(x); !seen[y]; y = img_[y]) {
                seen[y] = 1;
                ++len;
            }
            swaps += len - 1;
        }
        return swaps % 2 == 0;
    }

    BigInt order() const {
        std::vector<char> seen(img_.size(), 0);
        BigInt ord = 1;
        for (std::size_t x = 0; x < img_.size(); ++x) {
            if (seen[x]) continue;
            std::size_t len = 0;
            for (point y = static_cast<point>(x); !seen[y]; y = img_[y]) {
                seen[y] = 1;
                ++len;
            }
            ord = boost::multiprecision::lcm(ord, BigInt(len));
        }
        return ord;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    static void check_degree(std::size_t d) {
        if (d > max_degree) throw std::invalid_argument("permutation degree exceeds 65536");
    }
    void require_same_degree(const Permutation& g) const {
        if (g.degree() != degree()) throw std::invalid_argument("permutation degree mismatch");
    }

    std::vector<point> img_;
};

}  // namespace aca
