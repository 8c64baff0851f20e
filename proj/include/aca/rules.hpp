#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aca {

/// One of the 256 elementary update rules, identified by its 8-bit truth table.
/// Bit j of the code is the new centre value for the neighbourhood
/// (left, centre, right) packed as j = 4*left + 2*centre + right.
class Rule {
public:
    explicit Rule(int code) : code_(code) {
        if (code < 0 || code > 255) throw std::out_of_range("rule code must be in [0, 255]");
    }

    int code() const { return code_; }
    int table_bit(int ctx) const { return (code_ >> ctx) & 1; }

    friend bool operator==(const Rule& a, const Rule& b) { return a.code_ == b.code_; }
    friend bool operator!=(const Rule& a, const Rule& b) { return a.code_ != b.code_; }
    friend bool operator<(const Rule& a, const Rule& b) { return a.code_ < b.code_; }

private:
    int code_;
};

/// Behaviour of the centre cell when both neighbours are held fixed.
enum class TagSymbol : char {
    constant_zero = '0',  // both centre values map to 0
    constant_one = '1',   // both centre values map to 1
    keep = '-',           // centre value is preserved
    flip = 'x',           // centre value is toggled
};

/// Four-symbol behaviour summary of a rule. symbols[c] describes the centre
/// update when the fixed neighbour pair (left, right) is packed as c = 2*left + right.
/// Rendered as the string t3 t2 t1 t0 (both-ones context first).
struct Tag {
    std::array<TagSymbol, 4> symbols;

    std::string str() const {
        return {static_cast<char>(symbols[3]), static_cast<char>(symbols[2]),
                static_cast<char>(symbols[1]), static_cast<char>(symbols[0])};
    }

    static Tag parse(std::string_view s) {
        if (s.size() != 4) throw std::invalid_argument("tag must have 4 symbols");
        Tag t{};
        for (int c = 0; c < 4; ++c) {
            char ch = s[3 - c];
            if (ch != '0' && ch != '1' && ch != '-' && ch != 'x')
                throw std::invalid_argument("tag symbols must be one of {1,0,-,x}");
            t.symbols[c] = static_cast<TagSymbol>(ch);
        }
        return t;
    }

    friend bool operator==(const Tag& a, const Tag& b) { return a.symbols == b.symbols; }
};

inline Tag tag_of(Rule k) {
    Tag t{};
    for (int c = 0; c < 4; ++c) {
        const int left = c >> 1, right = c & 1;
        const int lo = k.table_bit(4 * left + right);      // centre 0
        const int hi = k.table_bit(4 * left + 2 + right);  // centre 1
        if (lo == 0 && hi == 1)
            t.symbols[c] = TagSymbol::keep;
        else if (lo == 1 && hi == 0)
            t.symbols[c] = TagSymbol::flip;
        else if (lo == 0)
            t.symbols[c] = TagSymbol::constant_zero;
        else
            t.symbols[c] = TagSymbol::constant_one;
    }
    return t;
}

inline Rule rule_of_tag(const Tag& t) {
    int code = 0;
    for (int c = 0; c < 4; ++c) {
        const int left = c >> 1, right = c & 1;
        int lo = 0, hi = 0;
        switch (t.symbols[c]) {
            case TagSymbol::keep: lo = 0; hi = 1; break;
            case TagSymbol::flip: lo = 1; hi = 0; break;
            case TagSymbol::constant_zero: lo = 0; hi = 0; break;
            case TagSymbol::constant_one: lo = 1; hi = 1; break;
        }
        code |= lo << (4 * left + right);
        code |= hi << (4 * left + 2 + right);
    }
    return Rule(code);
}

/// Swap the roles of the two cell values. On truth tables this conjugates by
/// the global complement: new bit j = 1 - bit(7 - j).
inline Rule invert(Rule k) {
    int code = 0;
    for (int j = 0; j < 8; ++j) code |= (1 - k.table_bit(7 - j)) << j;
    return Rule(code);
}

/// Swap left and right neighbours: bit(l,c,r) <-> bit(r,c,l), i.e. bits 1<->4 and 3<->6.
inline Rule reflect(Rule k) {
    int code = 0;
    for (int j = 0; j < 8; ++j) {
        const int left = (j >> 2) & 1, centre = (j >> 1) & 1, right = j & 1;
        code |= k.table_bit(4 * right + 2 * centre + left) << j;
    }
    return Rule(code);
}

inline Rule invert_reflect(Rule k) { return invert(reflect(k)); }

/// A rule is invertible exactly when every local map is a bijection,
/// i.e. its tag contains no constant symbol.
inline bool is_invertible(Rule k) {
    const Tag t = tag_of(k);
    return std::ranges::none_of(t.symbols, [](TagSymbol s) {
        return s == TagSymbol::constant_zero || s == TagSymbol::constant_one;
    });
}

/// Nearest invertible rule: constant tag symbols become 'keep'. The result
/// agrees with the original rule on all states the original never moves off.
inline Rule invertibilize(Rule k) {
    Tag t = tag_of(k);
    for (auto& s : t.symbols)
        if (s == TagSymbol::constant_zero || s == TagSymbol::constant_one) s = TagSymbol::keep;
    return rule_of_tag(t);
}

/// The 104 rules whose periodic states do not depend on the (fair) update order,
/// for every circle size n > 3.
inline constexpr std::array<int, 104> omega_independent_rules = {
    0,   1,   4,   5,   8,   9,   12,  13,  28,  29,  32,  40,  51,  54,  57,
    60,  64,  65,  68,  69,  70,  71,  72,  73,  76,  77,  78,  79,  92,  93,
    94,  95,  96,  99,  102, 105, 108, 109, 110, 111, 124, 125, 126, 127, 128,
    129, 132, 133, 136, 137, 140, 141, 147, 150, 152, 153, 156, 157, 160, 164,
    168, 172, 184, 188, 192, 193, 194, 195, 196, 197, 198, 199, 200, 201, 202,
    204, 205, 206, 207, 216, 218, 220, 221, 222, 223, 224, 226, 228, 230, 232,
    234, 235, 236, 237, 238, 239, 248, 249, 250, 251, 252, 253, 254, 255};

/// One representative per dynamic-equivalence class among the order-independent rules.
inline constexpr std::array<int, 41> representative_rules = {
    0,   1,   4,   5,   8,   9,   12,  13,  28,  29,  32,  40,  51,  54,
    57,  60,  72,  73,  76,  77,  105, 128, 129, 132, 133, 136, 137, 140,
    141, 150, 152, 156, 160, 164, 168, 172, 184, 200, 201, 204, 232};

inline bool is_omega_independent(Rule k) {
    return std::ranges::binary_search(omega_independent_rules, k.code());
}

inline bool is_representative(Rule k) {
    return std::ranges::binary_search(representative_rules, k.code());
}

inline std::vector<Rule> representatives() {
    std::vector<Rule> out;
    out.reserve(representative_rules.size());
    for (int c : representative_rules) out.emplace_back(c);
    return out;
}

/// Rules related by inversion, reflection or both act the same way up to a
/// relabelling of states, so they share periodic-set sizes, orbit counts and
/// group orders.
struct EquivalenceClass {
    std::vector<int> members;  // sorted, 1..4 codes
};

inline std::vector<EquivalenceClass> equivalence_classes() {
    std::array<bool, 256> seen{};
    std::vector<EquivalenceClass> classes;
    for (int c = 0; c < 256; ++c) {
        if (seen[c]) continue;
        Rule k(c);
        std::vector<int> members = {c, invert(k).code(), reflect(k).code(),
                                    invert_reflect(k).code()};
        std::ranges::sort(members);
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int m : members) seen[m] = true;
        classes.push_back({std::move(members)});
    }
    return classes;
}

inline EquivalenceClass equivalence_class_of(Rule k) {
    std::vector<int> members = {k.code(), invert(k).code(), reflect(k).code(),
                                invert_reflect(k).code()};
    std::ranges::sort(members);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {std::move(members)};
}

/// The member of the representative list equivalent to k. Defined for the
/// order-independent rules only.
inline Rule representative_of(Rule k) {
    if (!is_omega_independent(k))
        throw std::invalid_argument("representative_of: rule is not omega-independent");
    for (int m : equivalence_class_of(k).members)
        if (is_representative(Rule(m))) return Rule(m);
    throw std::logic_error("representative_of: class has no representative");
}

}  // namespace aca
