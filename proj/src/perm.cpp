#include "sw/perm.hpp"

#include <algorithm>
#include <numeric>

namespace sw {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

std::vector<std::vector<int>> cycles(const Perm& a) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(a.size(), false);
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int x = static_cast<int>(s); !seen[x]; x = a[x]) {
            seen[x] = true;
            c.push_back(x);
        }
        out.push_back(c);
    }
    return out;
}

bool is_full_cycle(const Perm& a) { return cycles(a).size() == 1; }

std::vector<std::vector<Perm>> all_perm_tuples(int n, int f) {
    const auto base = all_perms(n);
    std::vector<std::vector<Perm>> out{{}};
    for (int j = 0; j < f; ++j) {
        std::vector<std::vector<Perm>> next;
        for (const auto& t : out)
            for (const auto& p : base) {
                auto u = t;
                u.push_back(p);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace sw
