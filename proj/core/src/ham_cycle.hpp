#pragma once

#include <optional>
#include <vector>

namespace gridpatrol::detail {

// Backtracking Hamiltonian cycle search over an adjacency list. Returns the
// cycle as vertex indices starting at 0, or nullopt. Cycles have length >= 3;
// doubling back over one edge does not count.
inline std::optional<std::vector<int>> ham_cycle(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n < 3) return std::nullopt;
    std::vector<int> path;
    path.reserve(n);
    path.push_back(0);
    std::vector<char> used(n, 0);
    used[0] = 1;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(path.size()) == n) {
            for (int nb : adj[path.back()]) {
                if (nb == 0) return true;
            }
            return false;
        }
        for (int nb : adj[path.back()]) {
            if (used[nb]) continue;
            used[nb] = 1;
            path.push_back(nb);
            if (self(self)) return true;
            path.pop_back();
            used[nb] = 0;
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return path;
}

}  // namespace gridpatrol::detail
