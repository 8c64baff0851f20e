#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aca {

/// Finite sequence of vertices naming the order in which local updates fire.
/// Fair: every vertex occurs at least once. Simple: exactly once.
struct UpdateOrder {
    std::vector<int> seq;
    int n = 0;

    bool is_fair() const {
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        for (int v : seq) {
            if (v < 0 || v >= n) return false;
            hit[static_cast<std::size_t>(v)] = 1;
        }
        return std::ranges::all_of(hit, [](char c) { return c != 0; });
    }

    bool is_simple() const { return static_cast<int>(seq.size()) == n && is_fair(); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(seq[i]);
        }
        return s;
    }

    static UpdateOrder identity(int n) {
        UpdateOrder o{std::vector<int>(static_cast<std::size_t>(n)), n};
        std::iota(o.seq.begin(), o.seq.end(), 0);
        return o;
    }

    static UpdateOrder parse(const std::string& text, int n) {
        UpdateOrder o{{}, n};
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) o.seq.push_back(std::stoi(tok));
        return o;
    }

    friend bool operator==(const UpdateOrder& a, const UpdateOrder& b) = default;
};

inline std::vector<UpdateOrder> all_simple_orders(int n) {
    if (n > 8) throw std::invalid_argument("refusing to enumerate more than 8! simple orders");
    UpdateOrder o = UpdateOrder::identity(n);
    std::vector<UpdateOrder> out;
    do {
        out.push_back(o);
    } while (std::next_permutation(o.seq.begin(), o.seq.end()));
    return out;
}

/// Random fair order: length uniform in [n, max_len], entries uniform, then
/// missing vertices patched into distinct random positions until fair.
inline UpdateOrder sample_fair_order(int n, int max_len, std::mt19937_64& rng) {
    if (max_len < n) throw std::invalid_argument("max_len must be at least n");
    std::uniform_int_distribution<int> len_dist(n, max_len);
    std::uniform_int_distribution<int> vert(0, n - 1);
    const int len = len_dist(rng);
    UpdateOrder o{std::vector<int>(static_cast<std::size_t>(len)), n};
    for (int& v : o.seq) v = vert(rng);
    while (!o.is_fair()) {
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        for (int v : o.seq) hit[static_cast<std::size_t>(v)] = 1;
        std::vector<int> missing;
        for (int v = 0; v < n; ++v)
            if (!hit[static_cast<std::size_t>(v)]) missing.push_back(v);
        std::vector<int> positions(static_cast<std::size_t>(len));
        std::iota(positions.begin(), positions.end(), 0);
        std::shuffle(positions.begin(), positions.end(), rng);
        for (std::size_t i = 0; i < missing.size(); ++i)
            o.seq[static_cast<std::size_t>(positions[i])] = missing[i];
    }
    return o;
}

}  // namespace aca
