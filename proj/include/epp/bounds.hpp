#pragma once

// Memoized evaluation of the recursive hitting-set size functions f, g, f1, f2.
//
//   f(k,1) = f(k,2) = k-1,   all four functions are 0 at k = 1
//   f(k,L)  = max( f2(2k(2l+5)(k-1), L-2),  f(k-1,L) + (2l+5)k )      l = L-1, L >= 3
//   g(k,L)  = max( g(k-1,L) + 2L,  f(k,L) + 2 g(k-1,L),  3 f(k,L) )
//   f1(k,L) = f(k,L+1)
//   f2(k,L) = max( 4 f1(k,L) + g(k,L),  (L+1)(L-1) + f2(k-1,L) )
//
// Values grow doubly-exponentially (g(k,1) is already 3*2^(k-1)-(k+1)), so the
// k-descents are evaluated iteratively: each (function, L) lane keeps a rolling
// frontier and only materializes small-k prefixes plus explicitly requested
// points. Recursion depth stays bounded by the L-descent of the definitions.

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "epp/bigint.hpp"

namespace epp {

class BoundTable {
public:
    // Evaluation refuses recurrence arguments past this point: the k-descent
    // chains grow quadratically in the argument and the values exponentially,
    // so somewhere past a few hundred thousand the numbers stop being
    // representable in practice. Callers treat the overflow_error as "bound
    // not evaluable", never as a solver failure.
    long long max_recurrence_arg = 500'000;

    BigInt f(int k, int len) {
        std::lock_guard<std::mutex> lock(mu_);
        return f_(k, len);
    }
    BigInt g(int k, int len) {
        std::lock_guard<std::mutex> lock(mu_);
        return g_(k, len);
    }
    BigInt f1(int k, int len) {
        std::lock_guard<std::mutex> lock(mu_);
        check(k, len);
        return f_(k, len + 1);
    }
    BigInt f2(int k, int len) {
        std::lock_guard<std::mutex> lock(mu_);
        return f2_(k, len);
    }

    // Every (function, k, L, value) this table has materialized; used by the
    // self-check that compares stored entries against fresh recomputation.
    struct Entry {
        char tag;
        int k;
        int len;
        BigInt value;
    };
    std::vector<Entry> stored_entries() const {
        std::lock_guard<std::mutex> lock(mu_);
        std::vector<Entry> out;
        for (const auto& [key, lane] : lanes_) {
            for (size_t i = 0; i < lane.prefix.size(); ++i)
                out.push_back({key.first, static_cast<int>(i) + 1, key.second, lane.prefix[i]});
            for (const auto& [k, v] : lane.sparse)
                out.push_back({key.first, k, key.second, v});
        }
        return out;
    }

private:
    struct Lane {
        std::vector<BigInt> prefix;   // values for k = 1..prefix.size()
        std::map<int, BigInt> sparse; // requested points beyond the prefix
        int frontier_k = 0;           // rolling evaluation state
        BigInt frontier_val = 0;
        bool busy = false;
    };

    static void check(int k, int len) {
        if (k < 1 || len < 1) throw std::invalid_argument("bounds need k >= 1 and L >= 1");
    }

    // Largest recurrence argument anywhere in the evaluation cone, saturating
    // once past the budget. Lets a query refuse up front instead of after the
    // cheap prefix of an impossible chain.
    long long cone_f(long long k, int len, int depth) const {
        if (depth > 200 || k > max_recurrence_arg) return k;
        if (len <= 2 || k <= 1) return k;
        long long l = len - 1;
        long long kp = 2 * k * (2 * l + 5) * (k - 1);
        if (kp > max_recurrence_arg) return kp;
        return std::max(k, cone_f2(kp, len - 2, depth + 1));
    }
    long long cone_f2(long long k, int len, int depth) const {
        if (depth > 200 || k > max_recurrence_arg) return k;
        if (k <= 1) return 1;
        if (len == 1) return k;
        return std::max({k, cone_f(k, len + 1, depth + 1), cone_f(k, len, depth + 1)});
    }
    void require_feasible(long long cone) const {
        if (cone > max_recurrence_arg)
            throw std::overflow_error("bound recurrence argument too large to evaluate");
    }

    static constexpr int kPrefixCap = 1024;

    Lane& lane(char tag, int len) { return lanes_[{tag, len}]; }

    // Looks up a finished value; nullptr when the lane has not reached k yet.
    const BigInt* lookup(Lane& ln, int k) const {
        if (k <= static_cast<int>(ln.prefix.size())) return &ln.prefix[k - 1];
        auto it = ln.sparse.find(k);
        if (it != ln.sparse.end()) return &it->second;
        if (ln.frontier_k == k) return &ln.frontier_val;
        return nullptr;
    }

    void store(Lane& ln, int k, const BigInt& v) {
        if (k == static_cast<int>(ln.prefix.size()) + 1 && k <= kPrefixCap) {
            ln.prefix.push_back(v);
            return;
        }
        if (k > kPrefixCap) ln.sparse.emplace(k, v);
    }

    // Iterative k-ascent shared by f, g and f2. `step` produces the value at
    // j from the value at j-1.
    template <typename StepFn>
    BigInt ascend(char tag, int len, int k, StepFn step) {
        Lane& ln = lane(tag, len);
        if (const BigInt* hit = lookup(ln, k)) return *hit;
        if (ln.busy) throw std::logic_error("cyclic bound recurrence");
        struct BusyGuard {
            bool& flag;
            explicit BusyGuard(bool& f) : flag(f) { flag = true; }
            ~BusyGuard() { flag = false; }
        } busy_guard(ln.busy);
        int base_k = 1;
        BigInt base_val = 0;
        if (ln.frontier_k <= k && ln.frontier_k > base_k) {
            base_k = ln.frontier_k;
            base_val = ln.frontier_val;
        }
        if (!ln.prefix.empty() && static_cast<int>(ln.prefix.size()) <= k &&
            static_cast<int>(ln.prefix.size()) > base_k) {
            base_k = static_cast<int>(ln.prefix.size());
            base_val = ln.prefix.back();
        }
        auto below = ln.sparse.upper_bound(k);
        if (below != ln.sparse.begin()) {
            --below;
            if (below->first > base_k) {
                base_k = below->first;
                base_val = below->second;
            }
        }
        BigInt val = std::move(base_val);
        for (int j = base_k + 1; j <= k; ++j) {
            val = step(j, val);
            if (j < k && j == static_cast<int>(ln.prefix.size()) + 1 && j <= kPrefixCap)
                ln.prefix.push_back(val);
        }
        store(ln, k, val);
        if (k > ln.frontier_k) {
            ln.frontier_k = k;
            ln.frontier_val = val;
        }
        return val;
    }

    BigInt f_(int k, int len) {
        check(k, len);
        if (len <= 2) return k - 1;
        if (k == 1) return 0;
        require_feasible(cone_f(k, len, 0));
        int l = len - 1;
        return ascend('f', len, k, [&](int j, const BigInt& prev) -> BigInt {
            long long kprime = 2LL * j * (2 * l + 5) * (j - 1);
            if (kprime > max_recurrence_arg)
                throw std::overflow_error("bound recurrence argument too large to evaluate");
            BigInt via_union = f2_(static_cast<int>(kprime), len - 2);
            BigInt via_induction = prev + BigInt(2 * l + 5) * j;
            return via_union > via_induction ? via_union : via_induction;
        });
    }

    BigInt g_(int k, int len) {
        check(k, len);
        if (k == 1) return 0;
        require_feasible(cone_f(k, len, 0));
        return ascend('g', len, k, [&](int j, const BigInt& prev) -> BigInt {
            BigInt fj = f_(j, len);
            BigInt t1 = prev + 2 * len;
            BigInt t2 = fj + 2 * prev;
            BigInt t3 = 3 * fj;
            BigInt best = t1 > t2 ? t1 : t2;
            return best > t3 ? best : t3;
        });
    }

    BigInt f2_(int k, int len) {
        check(k, len);
        if (k == 1) return 0;
        require_feasible(cone_f2(k, len, 0));
        BigInt strip_cost = BigInt(len + 1) * (len - 1);
        return ascend('2', len, k, [&](int j, const BigInt& prev) -> BigInt {
            BigInt t1 = 4 * f_(j, len + 1) + g_(j, len);
            BigInt t2 = strip_cost + prev;
            return t1 > t2 ? t1 : t2;
        });
    }

    mutable std::mutex mu_;
    std::map<std::pair<char, int>, Lane> lanes_;
};

} // namespace epp
