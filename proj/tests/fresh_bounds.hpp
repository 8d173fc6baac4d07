#pragma once

// Test-side re-evaluation of the bound recurrences, independent of the
// production table's lane machinery. Lanes are filled bottom-up so the long
// k-descents never recurse deeply.

#include <map>
#include <tuple>

#include "epp/bigint.hpp"

namespace test_util {

struct FreshBounds {
    std::map<std::tuple<char, int, int>, epp::BigInt> memo;

    epp::BigInt get(char tag, int k, int len) {
        auto key = std::make_tuple(tag, k, len);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        for (int j = 1; j <= k; ++j) {
            auto jkey = std::make_tuple(tag, j, len);
            if (memo.count(jkey)) continue;
            epp::BigInt v;
            switch (tag) {
            case 'f': v = f(j, len); break;
            case 'g': v = g(j, len); break;
            case '2': v = f2(j, len); break;
            default: throw std::logic_error("bad tag");
            }
            memo[jkey] = v;
        }
        return memo.at(key);
    }

    epp::BigInt f(int k, int len) {
        if (len <= 2) return k - 1;
        if (k == 1) return 0;
        int l = len - 1;
        epp::BigInt t1 = get('2', 2 * k * (2 * l + 5) * (k - 1), len - 2);
        epp::BigInt t2 = get('f', k - 1, len) + epp::BigInt(2 * l + 5) * k;
        return std::max(t1, t2);
    }
    epp::BigInt g(int k, int len) {
        if (k == 1) return 0;
        epp::BigInt prev = get('g', k - 1, len);
        epp::BigInt fk = get('f', k, len);
        return std::max({prev + 2 * len, fk + 2 * prev, 3 * fk});
    }
    epp::BigInt f2(int k, int len) {
        if (k == 1) return 0;
        epp::BigInt t1 = 4 * get('f', k, len + 1) + get('g', k, len);
        epp::BigInt t2 = epp::BigInt(len + 1) * (len - 1) + get('2', k - 1, len);
        return std::max(t1, t2);
    }
};

} // namespace test_util
