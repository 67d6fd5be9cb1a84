#include "qchar/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace qchar {

Permutation::Permutation(int n) : images_(n) { std::iota(images_.begin(), images_.end(), 0); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v]) throw DomainError("not a permutation of {0,...,n-1}");
        seen[v] = 1;
    }
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw DimensionError("transposition index out of range");
    Permutation w(n);
    std::swap(w.images_[a], w.images_[b]);
    return w;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw DimensionError("composing permutations of different sizes");
    Permutation r(size());
    for (int i = 0; i < size(); ++i) r.images_[i] = images_[other.images_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(size());
    for (int i = 0; i < size(); ++i) r.images_[images_[i]] = i;
    return r;
}

int Permutation::sign() const {
    int inversions = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace qchar
