#include "qchar/super_rings.hpp"

#include "qchar/schur.hpp"

namespace qchar {

const char* ring_name(RingId ring) {
    switch (ring) {
        case RingId::GroupQ: return "Q(n)";
        case RingId::GroupSQ: return "SQ(n)";
        case RingId::GroupPQ: return "PQ(n)";
        case RingId::GroupPSQ: return "PSQ(n)";
        case RingId::HalfIntegerCategory: return "half-integer category";
        case RingId::AlgebraQ: return "q(n)";
        case RingId::AlgebraPQ: return "pq(n)";
    }
    return "?";
}

namespace {

MembershipResult degree_zero(const LaurentPoly& f) {
    for (const auto& [e, c] : f.terms()) {
        const Frac d = total_degree(e);
        if (!d.is_zero()) return {false, "monomial of total degree " + d.str() + " (must be 0)"};
    }
    return {true, ""};
}

// Class-a component (a != 0) must be odd_product(n) times a symmetric
// polynomial; returns the quotient through *quotient when given.
MembershipResult check_fractional_class(const LaurentPoly& part, const Frac& cls, LaurentPoly* quotient) {
    const auto q = try_exact_div(part, odd_product(part.nvars()));
    if (!q)
        return {false, "coset class " + cls.str() + " is not divisible by the odd product"};
    if (!is_symmetric(*q))
        return {false, "coset class " + cls.str() + " has a non-symmetric odd-product quotient"};
    if (quotient) *quotient = *q;
    return {true, ""};
}

MembershipResult algebra_q_test(const LaurentPoly& f, bool half_integer_only, CosetDecomposition* split) {
    for (const auto& [cls, part] : coset_components(f)) {
        if (cls.is_zero()) {
            const MembershipResult m = is_in_Jn(part);
            if (!m) return {false, "integer coset class: " + m.reason};
            if (split) split->integer_part = part;
            continue;
        }
        if (half_integer_only && cls != Frac(1, 2))
            return {false, "coset class " + cls.str() + " is neither integer nor half-integer"};
        LaurentPoly q;
        const MembershipResult m = check_fractional_class(part, cls, &q);
        if (!m) return m;
        if (split) split->fractional_parts.emplace(cls, q);
    }
    return {true, ""};
}

}  // namespace

MembershipResult is_in_ring(const LaurentPoly& f, RingId ring) {
    switch (ring) {
        case RingId::GroupQ:
        case RingId::GroupSQ:
            return is_in_Jn(f);
        case RingId::GroupPQ:
        case RingId::GroupPSQ: {
            const MembershipResult d = degree_zero(f);
            if (!d) return d;
            return is_in_Jn(f);
        }
        case RingId::HalfIntegerCategory:
            return algebra_q_test(f, true, nullptr);
        case RingId::AlgebraQ:
            return algebra_q_test(f, false, nullptr);
        case RingId::AlgebraPQ: {
            for (const auto& [e, c] : f.terms())
                for (const Frac& x : e)
                    if (!x.is_integer()) return {false, "non-integer exponent " + x.str() + " (weights of pq(n) are integral)"};
            const MembershipResult d = degree_zero(f);
            if (!d) return d;
            return is_in_Jn(f);
        }
    }
    throw DomainError("unknown ring");
}

CosetDecomposition coset_split(const LaurentPoly& f) {
    CosetDecomposition out{LaurentPoly::zero(f.nvars()), {}};
    const MembershipResult m = algebra_q_test(f, false, &out);
    if (!m) throw NotInRingError("coset_split: not in the q(n) character ring: " + m.reason);
    return out;
}

LaurentPoly reconstruct(const CosetDecomposition& d) {
    LaurentPoly r = d.integer_part;
    const LaurentPoly odd = odd_product(r.nvars());
    for (const auto& [cls, g] : d.fractional_parts) r += odd * g;
    return r;
}

}  // namespace qchar
