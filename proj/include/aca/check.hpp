#pragma once

#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace aca {

/// One verified fact: what was checked, what was expected, what came out.
struct Check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct CheckList {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string expected, std::string actual) {
        checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
    }

    template <typename T, typename U>
    void expect_eq(std::string name, const T& expected, const U& actual) {
        using std::to_string;
        std::string e, a;
        if constexpr (std::is_convertible_v<T, std::string>)
            e = expected;
        else {
            std::ostringstream os;
            os << expected;
            e = os.str();
        }
        if constexpr (std::is_convertible_v<U, std::string>)
            a = actual;
        else {
            std::ostringstream os;
            os << actual;
            a = os.str();
        }
        add(std::move(name), e == a, std::move(e), std::move(a));
    }

    void merge(const CheckList& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failed_count() const {
        std::size_t f = 0;
        for (const Check& c : checks) f += c.pass ? 0 : 1;
        return f;
    }
};

}  // namespace aca
