#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlink {

// Errors thrown by constructors and operations whose preconditions fail.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An oriented combinatorial map on darts 0..n-1.
//
//   alpha : fixed-point-free involution pairing the two darts of each edge
//   sigma : counterclockwise successor of a dart around its vertex
//
// Faces are the orbits of phi(d) = sigma[alpha[d]].  With sigma counterclockwise,
// the orbit of d is the face lying to the right of d when d points away from its
// vertex; the face to the left of d is the orbit of alpha[d].
struct CombMap {
    std::vector<int> alpha;
    std::vector<int> sigma;
    std::vector<int> vertex_of;
    int vertex_count = 0;

    int dart_count() const { return static_cast<int>(alpha.size()); }
    int edge_count() const { return dart_count() / 2; }

    void check_valid() const {
        const int n = dart_count();
        if (static_cast<int>(sigma.size()) != n || static_cast<int>(vertex_of.size()) != n)
            throw PreconditionError("combinatorial map arrays disagree in size");
        std::vector<char> seen(n, 0);
        for (int d = 0; d < n; ++d) {
            if (alpha[d] < 0 || alpha[d] >= n || alpha[d] == d || alpha[alpha[d]] != d)
                throw PreconditionError("alpha is not a fixed-point-free involution");
            if (sigma[d] < 0 || sigma[d] >= n)
                throw PreconditionError("sigma out of range");
            if (vertex_of[sigma[d]] != vertex_of[d])
                throw PreconditionError("sigma moves a dart off its vertex");
            seen[sigma[d]]++;
        }
        for (int d = 0; d < n; ++d)
            if (seen[d] != 1) throw PreconditionError("sigma is not a permutation");
    }
};

// Orbit decomposition of the face permutation phi(d) = sigma[alpha[d]].
struct FaceSet {
    std::vector<std::vector<int>> cycles;  // each cycle lists darts in walk order
    std::vector<int> face_of;              // dart -> face index
};

inline FaceSet face_walk(const CombMap& m) {
    const int n = m.dart_count();
    FaceSet fs;
    fs.face_of.assign(n, -1);
    for (int d0 = 0; d0 < n; ++d0) {
        if (fs.face_of[d0] != -1) continue;
        std::vector<int> cyc;
        int d = d0;
        do {
            fs.face_of[d] = static_cast<int>(fs.cycles.size());
            cyc.push_back(d);
            d = m.sigma[m.alpha[d]];
        } while (d != d0);
        fs.cycles.push_back(std::move(cyc));
    }
    return fs;
}

// Connectivity of the underlying graph (darts joined by sigma and alpha).
inline bool map_connected(const CombMap& m) {
    const int n = m.dart_count();
    if (n == 0) return m.vertex_count <= 1;
    if (m.vertex_count > 0) {
        // isolated vertices (no darts) disconnect the map unless it is a lone vertex
        std::vector<char> touched(m.vertex_count, 0);
        for (int d = 0; d < n; ++d) touched[m.vertex_of[d]] = 1;
        for (char t : touched)
            if (!t) return false;
    }
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {m.alpha[d], m.sigma[d]}) {
            if (!vis[e]) {
                vis[e] = 1;
                ++cnt;
                stack.push_back(e);
            }
        }
    }
    return cnt == n;
}

// Genus of a connected map from V - E + F = 2 - 2g.
inline int map_genus(const CombMap& m, const FaceSet& fs) {
    const int V = m.vertex_count;
    const int E = m.edge_count();
    const int F = static_cast<int>(fs.cycles.size());
    const int chi = V - E + F;
    if ((2 - chi) % 2 != 0) throw PreconditionError("odd Euler defect: map is not orientable-consistent");
    return (2 - chi) / 2;
}

// 64/128-bit FNV-1a, used for result digests and enumeration dedup.
inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Digest128 {
    std::uint64_t lo = 0, hi = 0;
    bool operator==(const Digest128& o) const { return lo == o.lo && hi == o.hi; }
};

inline Digest128 digest128(const void* data, std::size_t len) {
    return Digest128{fnv1a64(data, len), fnv1a64(data, len, 0x9e3779b97f4a7c15ULL)};
}

inline std::string hex64(std::uint64_t v) {
    static const char* k = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = k[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace twistlink
