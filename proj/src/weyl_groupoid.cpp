#include "qchar/weyl_groupoid.hpp"

#include <algorithm>
#include <string>

namespace qchar {

std::string object_label(const GroupoidObject& o) {
    if (std::holds_alternative<BasePoint>(o)) return "[W]";
    const WallObject& w = std::get<WallObject>(o);
    const std::string core = "e" + std::to_string(w.i + 1) + "-e" + std::to_string(w.j + 1);
    return w.sign > 0 ? "[" + core + "]" : "[-(" + core + ")]";
}

GroupoidObject act(const Permutation& w, const GroupoidObject& o) {
    if (std::holds_alternative<BasePoint>(o)) return o;
    const WallObject& a = std::get<WallObject>(o);
    int i = w(a.i), j = w(a.j), sign = a.sign;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    return WallObject{i, j, sign};
}

GroupoidObject generator_source(const Generator& g) {
    if (const auto* r = std::get_if<Reflection>(&g)) return r->object;
    return std::get<WeylMove>(g).from;
}

GroupoidObject generator_target(const Generator& g) {
    if (const auto* r = std::get_if<Reflection>(&g)) return r->object.opposite();
    const WeylMove& m = std::get<WeylMove>(g);
    return act(m.w, m.from);
}

GroupoidMorphism make_morphism(std::vector<Generator> word) {
    if (word.empty()) throw DomainError("empty generator word has no source object");
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
        if (!(generator_target(word[k]) == generator_source(word[k + 1])))
            throw DomainError("generator word is not composable at position " + std::to_string(k + 1));
    }
    return {generator_source(word.front()), generator_target(word.back()), std::move(word)};
}

GroupoidMorphism compose(const GroupoidMorphism& second, const GroupoidMorphism& first) {
    if (!(first.target == second.source)) throw DomainError("morphisms are not composable");
    GroupoidMorphism out = first;
    out.target = second.target;
    out.word.insert(out.word.end(), second.word.begin(), second.word.end());
    return out;
}

GroupoidMorphism normalize(const GroupoidMorphism& m) {
    std::vector<Generator> word = m.word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
            const auto* a = std::get_if<Reflection>(&word[k]);
            const auto* b = std::get_if<Reflection>(&word[k + 1]);
            if (a && b && b->object == a->object.opposite()) {
                word.erase(word.begin() + k, word.begin() + k + 2);
                changed = true;
                break;
            }
        }
    }
    return {m.source, m.target, std::move(word)};
}

Groupoid build_groupoid(int n) {
    if (n < 2) throw DomainError("the wall groupoid needs n >= 2");
    Groupoid g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            g.objects.push_back(WallObject{i, j, +1});
            g.objects.push_back(WallObject{i, j, -1});
        }
    g.objects.push_back(BasePoint{});
    for (const GroupoidObject& o : g.objects) {
        if (const auto* w = std::get_if<WallObject>(&o)) g.generators.push_back(Reflection{*w});
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (const GroupoidObject& o : g.objects)
                g.generators.push_back(WeylMove{Permutation::transposition(n, a, b), o});
    return g;
}

std::vector<Rational> apply_affine(const AffineMap& m, const std::vector<Rational>& x) {
    const int n = m.perm.size();
    std::vector<Rational> y(n);
    for (int k = 0; k < n; ++k) y[m.perm(k)] = x[k];
    for (int k = 0; k < n; ++k) y[k] += m.shift[k];
    return y;
}

AffineMap compose(const AffineMap& second, const AffineMap& first) {
    const int n = second.perm.size();
    AffineMap out{second.perm.compose(first.perm), std::vector<Rational>(n)};
    for (int k = 0; k < n; ++k) out.shift[second.perm(k)] = first.shift[k];
    for (int k = 0; k < n; ++k) out.shift[k] += second.shift[k];
    return out;
}

AffineMap realize(const Generator& g, int n) {
    if (const auto* r = std::get_if<Reflection>(&g)) {
        const int a = r->object.sign > 0 ? r->object.i : r->object.j;
        const int b = r->object.sign > 0 ? r->object.j : r->object.i;
        AffineMap m{Permutation(n), std::vector<Rational>(n)};
        m.shift[a] = 1;
        m.shift[b] = -1;
        return m;
    }
    return {std::get<WeylMove>(g).w, std::vector<Rational>(n)};
}

AffineMap realize(const GroupoidMorphism& m, int n) {
    AffineMap out{Permutation(n), std::vector<Rational>(n)};
    for (const Generator& g : m.word) out = compose(realize(g, n), out);
    return out;
}

std::vector<Rational> wall_point(const WallObject& o, int n, int seed) {
    std::vector<Rational> x(n);
    for (int k = 0; k < n; ++k) x[k] = Rational(seed + 2 * k + 1, seed % 3 + 2);
    x[o.j] = -x[o.i];
    return x;
}

LaurentPoly wall_restrict(const LaurentPoly& f, int i, int j) { return wall_substitute(f, i, j); }

LaurentPoly translate_action(const LaurentPoly& g) {
    std::vector<std::pair<ExponentVector, Rational>> terms;
    terms.reserve(g.term_count());
    for (const auto& [e, c] : g.terms()) {
        ExponentVector marked;
        marked.reserve(e.size() + 1);
        marked.push_back(e.empty() ? Frac(0) : e[0]);  // multiplier c^d for t-degree d
        marked.insert(marked.end(), e.begin(), e.end());
        terms.emplace_back(std::move(marked), c);
    }
    return LaurentPoly::make(terms, g.nvars() + 1);
}

bool fixed_by_translation(const LaurentPoly& g) {
    std::vector<std::pair<ExponentVector, Rational>> terms;
    terms.reserve(g.term_count());
    for (const auto& [e, c] : g.terms()) {
        ExponentVector lifted;
        lifted.reserve(e.size() + 1);
        lifted.push_back(Frac(0));
        lifted.insert(lifted.end(), e.begin(), e.end());
        terms.emplace_back(std::move(lifted), c);
    }
    return translate_action(g) == LaurentPoly::make(terms, g.nvars() + 1);
}

MembershipResult groupoid_invariance(const LaurentPoly& f) {
    for (const auto& [e, c] : f.terms())
        for (const Frac& x : e)
            if (!x.is_integer())
                throw DomainError("groupoid invariance is defined here for integer exponents only");
    if (!is_symmetric(f)) return {false, "not fixed by the [W] component (not S_n-symmetric)"};
    const int n = f.nvars();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!fixed_by_translation(wall_restrict(f, i, j)))
                return {false, "restriction to wall (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") is not fixed by the wall translation"};
    return {true, ""};
}

bool is_groupoid_invariant(const LaurentPoly& f) { return groupoid_invariance(f).member; }

}  // namespace qchar
