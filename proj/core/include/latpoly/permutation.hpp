#pragma once

#include <string>
#include <vector>

namespace latpoly {

// images[j-1] = value at j, a bijection on 1..n
using Permutation = std::vector<int>;

Permutation identity_perm(int n);
Permutation reversal_perm(int n);
Permutation inverse(const Permutation& s);
// (a * b)(j) = a(b(j))
Permutation compose(const Permutation& a, const Permutation& b);
bool is_bijection(const Permutation& s);
std::vector<Permutation> all_permutations(int n);
std::string to_string(const Permutation& s);

}  // namespace latpoly
