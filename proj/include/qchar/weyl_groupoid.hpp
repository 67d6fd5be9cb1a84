#pragma once

#include <variant>
#include <vector>

#include "qchar/char_ring.hpp"
#include "qchar/laurent.hpp"
#include "qchar/permutation.hpp"
#include "qchar/rational.hpp"

namespace qchar {

/// Wall object [alpha] for alpha = sign*(e_i - e_j), i < j. Both signs share
/// the wall Pi_alpha = {x : x_i = -x_j}.
struct WallObject {
    int i = 0;
    int j = 0;
    int sign = +1;
    friend bool operator==(const WallObject&, const WallObject&) = default;
    WallObject opposite() const { return {i, j, -sign}; }
};

/// The single-point base object [W].
struct BasePoint {
    friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

using GroupoidObject = std::variant<BasePoint, WallObject>;

std::string object_label(const GroupoidObject& o);

/// w maps [alpha] to [w(alpha)] (and fixes [W]).
GroupoidObject act(const Permutation& w, const GroupoidObject& o);

/// r_alpha : [alpha] -> [-alpha].
struct Reflection {
    WallObject object;
    friend bool operator==(const Reflection&, const Reflection&) = default;
};

/// w : [alpha] -> [w(alpha)], or the loop at [W].
struct WeylMove {
    Permutation w;
    GroupoidObject from;
    friend bool operator==(const WeylMove&, const WeylMove&) = default;
};

using Generator = std::variant<Reflection, WeylMove>;

GroupoidObject generator_source(const Generator& g);
GroupoidObject generator_target(const Generator& g);

/// A morphism as a composable word of generators, applied left to right.
struct GroupoidMorphism {
    GroupoidObject source;
    GroupoidObject target;
    std::vector<Generator> word;
};

/// Build a morphism from a generator word, checking composability.
GroupoidMorphism make_morphism(std::vector<Generator> word);

GroupoidMorphism compose(const GroupoidMorphism& second, const GroupoidMorphism& first);

/// Cancel adjacent r_alpha r_{-alpha} pairs until no rewrite applies.
GroupoidMorphism normalize(const GroupoidMorphism& m);

struct Groupoid {
    std::vector<GroupoidObject> objects;     // n(n-1) wall objects plus [W]
    std::vector<Generator> generators;       // r per wall, transpositions per object
};

Groupoid build_groupoid(int n);

/// Affine map x -> Px + v on rational points.
struct AffineMap {
    Permutation perm;
    std::vector<Rational> shift;
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

std::vector<Rational> apply_affine(const AffineMap& m, const std::vector<Rational>& x);
AffineMap compose(const AffineMap& second, const AffineMap& first);

/// The functor to affine maps: reflections become the wall translations
/// tau_alpha, Weyl moves act by permutation.
AffineMap realize(const Generator& g, int n);
AffineMap realize(const GroupoidMorphism& m, int n);

/// A rational point of the wall {x_i = -x_j} with small deterministic entries.
std::vector<Rational> wall_point(const WallObject& o, int n, int seed);

/// Restriction of f to the wall (i, j), realized as wall_substitute.
LaurentPoly wall_restrict(const LaurentPoly& f, int i, int j);

/// The wall translation acts on a restricted polynomial by scaling the
/// t-degree-d part with c^d for a formal multiplier c (a new first
/// variable); g is fixed exactly when all d != 0 parts vanish.
LaurentPoly translate_action(const LaurentPoly& g);

bool fixed_by_translation(const LaurentPoly& g);

/// Invariance under the whole groupoid: S_n-invariance for [W] plus
/// translation-fixed restriction to every wall.
bool is_groupoid_invariant(const LaurentPoly& f);

/// As is_groupoid_invariant, with a diagnostic naming the failing object.
MembershipResult groupoid_invariance(const LaurentPoly& f);

}  // namespace qchar
