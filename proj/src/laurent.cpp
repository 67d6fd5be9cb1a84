#include "qchar/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qchar {

Frac total_degree(const ExponentVector& e) {
    Frac d = 0;
    for (const Frac& x : e) d += x;
    return d;
}

namespace {

void require_same_nvars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("variable counts differ: " + std::to_string(a.nvars()) + " vs " +
                             std::to_string(b.nvars()));
}

std::string exponents_str(const ExponentVector& e) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k].str();
    os << ")";
    return os.str();
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly f(nvars);
    if (c != 0) f.terms_.emplace(ExponentVector(nvars, Frac(0)), c);
    return f;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw DimensionError("variable index out of range");
    ExponentVector e(nvars, Frac(0));
    e[i] = 1;
    return monomial(nvars, e, 1);
}

LaurentPoly LaurentPoly::monomial(int nvars, const ExponentVector& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars) throw DimensionError("exponent vector length != nvars");
    LaurentPoly f(nvars);
    if (c != 0) f.terms_.emplace(e, c);
    return f;
}

LaurentPoly LaurentPoly::make(const std::vector<std::pair<ExponentVector, Rational>>& terms, int nvars) {
    LaurentPoly f(nvars);
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars)
            throw DimensionError("exponent vector length != nvars in make()");
        f.add_term(e, c);
    }
    return f;
}

Rational LaurentPoly::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;  // structural copy, no comparisons
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_nvars(a, b);
    // A single-term factor shifts every exponent by a fixed vector, which
    // preserves lex order: one ordered pass with end-hint insertion.
    if (a.term_count() == 1 || b.term_count() == 1) {
        const bool a_single = a.term_count() == 1;
        const LaurentPoly& mono = a_single ? a : b;
        const LaurentPoly& poly = a_single ? b : a;
        if (mono.is_zero() || poly.is_zero()) return LaurentPoly(a.nvars());
        const auto& [shift, c] = *mono.terms().begin();
        LaurentPoly r(a.nvars());
        ExponentVector e(a.nvars());
        for (const auto& [ef, cf] : poly.terms()) {
            for (int k = 0; k < a.nvars(); ++k) e[k] = ef[k] + shift[k];
            r.terms_.emplace_hint(r.terms_.end(), e, c * cf);
        }
        return r;
    }
    LaurentPoly r(a.nvars());
    ExponentVector e(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int k = 0; k < a.nvars(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& f) {
    if (c == 0) return LaurentPoly(f.nvars());
    LaurentPoly r = f;  // structural copy, no comparisons
    for (auto& [e, cf] : r.terms_) cf = c * cf;
    return r;
}

LaurentPoly scale(const Rational& c, const LaurentPoly& f) { return c * f; }

LaurentPoly pow(const LaurentPoly& f, unsigned k) {
    LaurentPoly r = LaurentPoly::one(f.nvars());
    LaurentPoly base = f;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

ExponentVector leading_exponent(const LaurentPoly& f) {
    if (f.is_zero()) throw DomainError("leading_exponent of the zero polynomial");
    return f.terms().rbegin()->first;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    require_same_nvars(f, g);
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    const int n = f.nvars();
    LaurentPoly q(n);
    if (f.is_zero()) return q;

    // If f = q*g, the lowest and highest slice of each coordinate multiply,
    // so every exponent of q lies in the box
    //   [min_k(f) - min_k(g), max_k(f) - max_k(g)]  per coordinate k.
    ExponentVector lo(n), hi(n);
    for (int k = 0; k < n; ++k) {
        Frac fmin, fmax, gmin, gmax;
        bool first = true;
        for (const auto& [e, c] : f.terms()) {
            if (first || e[k] < fmin) fmin = e[k];
            if (first || e[k] > fmax) fmax = e[k];
            first = false;
        }
        first = true;
        for (const auto& [e, c] : g.terms()) {
            if (first || e[k] < gmin) gmin = e[k];
            if (first || e[k] > gmax) gmax = e[k];
            first = false;
        }
        lo[k] = fmin - gmin;
        hi[k] = fmax - gmax;
        if (hi[k] < lo[k]) return std::nullopt;
    }

    const auto& glead = g.terms().rbegin()->first;
    const Rational& gc = g.terms().rbegin()->second;

    LaurentPoly rem = f;
    ExponentVector qe(n);
    while (!rem.is_zero()) {
        const auto& rlead = rem.terms_.rbegin()->first;
        for (int k = 0; k < n; ++k) {
            qe[k] = rlead[k] - glead[k];
            if (qe[k] < lo[k] || hi[k] < qe[k]) return std::nullopt;
        }
        const Rational qc = rem.terms_.rbegin()->second / gc;
        q.add_term(qe, qc);
        // rem -= qc * x^qe * g; the leading term cancels, every new term is
        // lex-smaller, and emitted quotient exponents strictly decrease, so
        // the box keeps the loop finite.
        ExponentVector e(n);
        for (const auto& [eg, cg] : g.terms()) {
            for (int k = 0; k < n; ++k) e[k] = qe[k] + eg[k];
            rem.add_term(e, -qc * cg);
        }
    }
    return q;
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    auto q = try_exact_div(f, g);
    if (!q) throw DivisionFailure("no exact Laurent quotient exists");
    return *q;
}

LaurentPoly act_permutation(const Permutation& w, const LaurentPoly& f) {
    if (w.size() != f.nvars()) throw DimensionError("permutation size != nvars");
    // Bijective relabeling: no collisions, so sort once and bulk-build.
    std::vector<std::pair<ExponentVector, Rational>> terms;
    terms.reserve(f.term_count());
    ExponentVector e(f.nvars());
    for (const auto& [ef, c] : f.terms()) {
        for (int k = 0; k < f.nvars(); ++k) e[w(k)] = ef[k];
        terms.emplace_back(e, c);
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    LaurentPoly r(f.nvars());
    r.terms_ = LaurentPoly::TermMap(terms.begin(), terms.end());
    return r;
}

void accumulate_permuted(LaurentPoly& acc, const Rational& c, const Permutation& w, const LaurentPoly& f) {
    if (w.size() != f.nvars() || acc.nvars() != f.nvars())
        throw DimensionError("accumulate_permuted: size mismatch");
    if (c == 0) return;
    ExponentVector e(f.nvars());
    for (const auto& [ef, cf] : f.terms()) {
        for (int k = 0; k < f.nvars(); ++k) e[w(k)] = ef[k];
        acc.add_term(e, c * cf);
    }
}

bool is_symmetric(const LaurentPoly& f) {
    for (int i = 0; i + 1 < f.nvars(); ++i) {
        if (act_permutation(Permutation::transposition(f.nvars(), i, i + 1), f) != f) return false;
    }
    return true;
}

LaurentPoly wall_substitute(const LaurentPoly& f, int i, int j) {
    const int n = f.nvars();
    if (i < 0 || j < 0 || i >= n || j >= n) throw DimensionError("wall index out of range");
    if (i == j) throw DomainError("wall requires two distinct positions");
    LaurentPoly r(n - 1);
    ExponentVector e(n - 1);
    for (const auto& [ef, c] : f.terms()) {
        const Frac a = ef[i];
        const Frac b = ef[j];
        if (!a.is_integer() || !b.is_integer())
            throw DomainError("substitution x_" + std::to_string(i + 1) + " = -x_" + std::to_string(j + 1) +
                              " = t is undefined on fractional exponents: monomial " + exponents_str(ef));
        e[0] = a + b;
        int pos = 1;
        for (int k = 0; k < n; ++k) {
            if (k != i && k != j) e[pos++] = ef[k];
        }
        r.add_term(e, b.is_even_integer() ? c : -c);
    }
    return r;
}

std::map<Frac, LaurentPoly> homogeneous_components(const LaurentPoly& f) {
    std::map<Frac, LaurentPoly> parts;
    for (const auto& [e, c] : f.terms()) {
        auto [it, inserted] = parts.emplace(total_degree(e), LaurentPoly(f.nvars()));
        it->second.add_term(e, c);
    }
    return parts;
}

std::map<Frac, LaurentPoly> coset_components(const LaurentPoly& f) {
    std::map<Frac, LaurentPoly> parts;
    for (const auto& [e, c] : f.terms()) {
        Frac cls = e.empty() ? Frac(0) : e[0].frac_part();
        for (const Frac& x : e) {
            if (x.frac_part() != cls)
                throw MixedCosetError("monomial with exponents " + exponents_str(e) +
                                      " has mixed fractional parts");
        }
        auto [it, inserted] = parts.emplace(cls, LaurentPoly(f.nvars()));
        it->second.add_term(e, c);
    }
    return parts;
}

}  // namespace qchar
