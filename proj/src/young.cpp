#include "birdtrack/young.hpp"

#include <map>
#include <mutex>

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"

namespace birdtrack {

AlgebraElement young_element(const YoungTableau& t) {
    const int n = t.size();
    AlgebraElement rows = AlgebraElement::identity(n);
    for (const auto& r : t.rows())
        if (r.size() > 1) rows = rows * line_sum(n, r, false);
    AlgebraElement cols = AlgebraElement::identity(n);
    for (const auto& c : t.columns())
        if (c.size() > 1) cols = cols * line_sum(n, c, true);
    const Integer hook = hook_product(t.shape());
    return RationalFunction(Rational(Integer(1), hook)) * (rows * cols);
}

YoungOperator young_operator(const YoungTableau& t) {
    if (!t.is_standard()) throw DomainError("tableau " + t.to_string() + " is not standard");
    return {t, young_element(t), false};
}

YoungOperator hermitian_young(const YoungTableau& t) {
    if (!t.is_standard()) throw DomainError("tableau " + t.to_string() + " is not standard");
    if (t.size() > limits().max_young_boxes)
        throw ResourceError("Hermitian Young operator with " + std::to_string(t.size()) + " boxes exceeds the cap");
    if (t.size() <= 2) return {t, young_element(t), true};

    static std::mutex mu;
    static std::map<YoungTableau, AlgebraElement> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(t);
        if (it != memo.end()) return {t, it->second, true};
    }
    const AlgebraElement parent = hermitian_young(t.without_largest()).element.extended(t.size());
    AlgebraElement p = parent * young_element(t) * parent;
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(t, p);
    return {t, std::move(p), true};
}

RationalFunction operator_trace_dimension(const YoungOperator& y) { return y.element.trace(); }

RationalFunction hilbert_schmidt_norm(const AlgebraElement& x) { return (x.dagger() * x).trace(); }

}  // namespace birdtrack
