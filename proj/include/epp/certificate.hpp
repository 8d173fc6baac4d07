#pragma once

// The universal solver output: either a packing of qualifying objects or an
// edge hitting set with a claimed size bound.

#include <functional>
#include <stdexcept>
#include <vector>

#include "epp/bigint.hpp"
#include "epp/graph.hpp"
#include "epp/path_spec.hpp"

namespace epp {

// Resolves a claimed hitting bound. When the recursive bound functions refuse
// to evaluate (their values stop being representable long before the solvers
// stop working), the certificate claims the witness size instead, which is
// always true, just weaker.
inline BigInt bound_or_witness(const std::function<BigInt()>& formula, size_t witness_size) {
    try {
        return formula();
    } catch (const std::overflow_error&) {
        return BigInt(witness_size);
    }
}

enum class CertType { Packing, Hitting };

struct Certificate {
    CertType type = CertType::Hitting;
    PathSpec spec;
    int k = 1;
    std::vector<Path> paths;    // packing witnesses
    std::vector<EdgeId> edges;  // hitting witnesses, ascending
    BigInt bound = 0;           // claimed size bound for the hitting variant

    bool is_packing() const { return type == CertType::Packing; }
    bool is_hitting() const { return type == CertType::Hitting; }

    static Certificate packing(PathSpec spec, int k, std::vector<Path> paths) {
        Certificate c;
        c.type = CertType::Packing;
        c.spec = std::move(spec);
        c.k = k;
        c.paths = std::move(paths);
        return c;
    }

    static Certificate hitting(PathSpec spec, int k, std::vector<EdgeId> edges, BigInt bound) {
        Certificate c;
        c.type = CertType::Hitting;
        c.spec = std::move(spec);
        c.k = k;
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        c.edges = std::move(edges);
        c.bound = std::move(bound);
        return c;
    }
};

} // namespace epp
