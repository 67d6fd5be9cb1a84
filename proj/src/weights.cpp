#include "qchar/weights.hpp"

#include <map>

namespace qchar {

bool is_weakly_decreasing(const GeneralWeight& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

bool is_weakly_decreasing(const RationalWeight& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

bool is_in_Lambda_n(const GeneralWeight& v) {
    if (!is_weakly_decreasing(v)) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1] && v[i] != 0) return false;
    return true;
}

bool is_typical(const Weight& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] + v[j] == 0) return false;
    return true;
}

bool is_typical(const RationalWeight& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if ((v[i] + v[j]).is_zero()) return false;
    return true;
}

namespace {

template <typename T>
WeightStats stats_impl(const std::vector<T>& v) {
    WeightStats s{0, 0, Integer(1)};
    std::map<T, int> mult;
    for (const T& x : v) {
        if (!(x == T(0))) ++s.length;
        ++mult[x];
    }
    s.parity = s.length % 2;
    for (const auto& [value, m] : mult)
        for (int k = 2; k <= m; ++k) s.stabilizer_order *= k;
    return s;
}

}  // namespace

WeightStats weight_stats(const GeneralWeight& v) { return stats_impl(v); }

RationalWeight to_rational_weight(const Weight& v) {
    RationalWeight r;
    r.reserve(v.size());
    for (auto x : v) r.emplace_back(x);
    return r;
}

namespace {

void enumerate_decreasing(int n, std::int64_t lo, std::int64_t hi, bool lambda_rule, GeneralWeight& cur,
                          std::vector<GeneralWeight>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    std::int64_t top = cur.empty() ? hi : cur.back();
    for (std::int64_t v = top; v >= lo; --v) {
        if (lambda_rule && !cur.empty() && v == cur.back() && v != 0) continue;
        cur.push_back(v);
        enumerate_decreasing(n, lo, hi, lambda_rule, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Weight> lambda_n_weights(int n, std::int64_t lo, std::int64_t hi) {
    std::vector<Weight> out;
    GeneralWeight cur;
    enumerate_decreasing(n, lo, hi, true, cur, out);
    return out;
}

std::vector<GeneralWeight> decreasing_weights(int n, std::int64_t lo, std::int64_t hi) {
    std::vector<GeneralWeight> out;
    GeneralWeight cur;
    enumerate_decreasing(n, lo, hi, false, cur, out);
    return out;
}

}  // namespace qchar
