#pragma once

#include <vector>

#include "qchar/errors.hpp"

namespace qchar {

/// A permutation of {0, ..., n-1}, stored as the image vector.
class Permutation {
  public:
    explicit Permutation(int n = 0);                 // identity
    explicit Permutation(std::vector<int> images);   // validated bijection

    static Permutation transposition(int n, int a, int b);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    /// (*this) after other: i -> (*this)(other(i)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    /// (-1)^{number of inversions}.
    int sign() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> images_;
};

/// All n! permutations in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);

}  // namespace qchar
