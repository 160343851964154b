#include "latpoly/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "latpoly/error.hpp"

namespace latpoly {

Permutation identity_perm(int n) {
    Permutation s(n);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

Permutation reversal_perm(int n) {
    Permutation s(n);
    for (int j = 0; j < n; ++j) s[j] = n - j;
    return s;
}

Permutation inverse(const Permutation& s) {
    Permutation r(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) r[s[j] - 1] = static_cast<int>(j) + 1;
    return r;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) fail("cannot compose permutations of sizes " + std::to_string(a.size()) + " and " +
                                   std::to_string(b.size()));
    Permutation r(a.size());
    for (std::size_t j = 0; j < b.size(); ++j) r[j] = a[b[j] - 1];
    return r;
}

bool is_bijection(const Permutation& s) {
    std::vector<bool> seen(s.size() + 1, false);
    for (int v : s) {
        if (v < 1 || v > static_cast<int>(s.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation s = identity_perm(n);
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

std::string to_string(const Permutation& s) {
    std::string out = "[";
    for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
    return out + "]";
}

}  // namespace latpoly
