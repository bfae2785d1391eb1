#pragma once

#include <vector>

namespace sw {

// A permutation of {0..n-1}; perm[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
std::vector<Perm> all_perms(int n);
Perm compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
Perm inverse(const Perm& a);
std::vector<std::vector<int>> cycles(const Perm& a);
bool is_full_cycle(const Perm& a);

// Tuples of permutations, one per residue embedding.
std::vector<std::vector<Perm>> all_perm_tuples(int n, int f);

}  // namespace sw
