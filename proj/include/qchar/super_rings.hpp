#pragma once

#include <map>

#include "qchar/char_ring.hpp"
#include "qchar/laurent.hpp"

namespace qchar {

/// The variant character rings. GroupQ and GroupSQ share one membership
/// predicate, as do AlgebraQ for q(n)/sq(n) and the projective pairs.
enum class RingId {
    GroupQ,
    GroupSQ,
    GroupPQ,
    GroupPSQ,
    HalfIntegerCategory,
    AlgebraQ,
    AlgebraPQ,
};

const char* ring_name(RingId ring);

/// Membership in the chosen ring, with a diagnostic naming the failing
/// condition. MixedCosetError propagates from coset_components.
MembershipResult is_in_ring(const LaurentPoly& f, RingId ring);

struct CosetDecomposition {
    LaurentPoly integer_part;                    // the J_n component
    std::map<Frac, LaurentPoly> fractional_parts;  // class a -> g_a with component = odd_product * g_a
};

/// Split an AlgebraQ member into its J_n part and the odd-product quotients
/// of its fractional coset classes. Throws NotInRingError naming the
/// offending class when f is not a member.
CosetDecomposition coset_split(const LaurentPoly& f);

LaurentPoly reconstruct(const CosetDecomposition& d);

}  // namespace qchar
