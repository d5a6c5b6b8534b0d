#include "planarlam/enumerate.hpp"

#include <algorithm>
#include <map>

namespace planarlam {

namespace {

// Size-indexed generation over the derivation rules, memoized on
// (kind, size, degree). Colorings are shared subtrees; they determine their
// skeletons, so decoration happens once per top-level result.
class Generator {
public:
    const std::vector<Coloring::Ptr>& neutral(int n, int i) {
        if (n < 0 || i < 1 || i > n + 1) return empty_;
        auto key = std::make_pair(n, i);
        auto it = neutral_memo_.find(key);
        if (it != neutral_memo_.end()) return it->second;
        std::vector<Coloring::Ptr> out;
        if (n == 0 && i == 1) out.push_back(Coloring::var_rule());
        // the argument premise has size >= 1, so the function premise stays
        // strictly below n and the recursion grounds out
        for (int a = 0; a <= n - 1; ++a) {
            int b = n - a;
            for (int j = 1; j <= i; ++j) {
                int k = i - j;
                const auto& funs = neutral(a, j);
                if (funs.empty()) continue;
                const auto& args = normal(b, k);
                if (args.empty()) continue;
                for (const auto& f : funs)
                    for (const auto& g : args)
                        out.push_back(Coloring::app_rule(f, g));
            }
        }
        return neutral_memo_.emplace(key, std::move(out)).first->second;
    }

    const std::vector<Coloring::Ptr>& normal(int n, int i) {
        // size of a normal coloring equals its leaf count, which bounds the
        // degree, so nothing lives above i = n
        if (n < 0 || i < 0 || i > n) return empty_;
        auto key = std::make_pair(n, i);
        auto it = normal_memo_.find(key);
        if (it != normal_memo_.end()) return it->second;
        std::vector<Coloring::Ptr> out;
        for (const auto& c : neutral(n - 1, i))
            out.push_back(Coloring::coerce_rule(c));
        for (const auto& c : normal(n, i + 1))
            out.push_back(Coloring::lam_rule(c));
        return normal_memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::map<std::pair<int, int>, std::vector<Coloring::Ptr>> neutral_memo_;
    std::map<std::pair<int, int>, std::vector<Coloring::Ptr>> normal_memo_;
    std::vector<Coloring::Ptr> empty_;
};

}  // namespace

std::vector<Coloring::Ptr> enumerate_colorings(ColorKind kind, int size, int degree) {
    Generator g;
    return kind == ColorKind::Neutral ? g.neutral(size, degree)
                                      : g.normal(size, degree);
}

std::vector<std::pair<LinearTerm, Coloring::Ptr>> enumerate_npt(int size, int degree) {
    std::vector<std::pair<LinearTerm, Coloring::Ptr>> out;
    for (const auto& c : enumerate_colorings(ColorKind::Normal, size, degree))
        out.emplace_back(decorate_planar(skeleton_of(c)), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return term_compare(a.first.term, b.first.term) < 0;
    });
    return out;
}

}  // namespace planarlam
