#include "stc/ilp.hpp"

#include <algorithm>
#include <climits>

#include "stc/errors.hpp"

namespace stc {

namespace {

class BranchAndBound {
public:
    explicit BranchAndBound(const MinMaxIlp& p) : p_(p) {
        n_ = p.num_vars();
        rows_ = static_cast<int>(p.a.size());
        fl_ = p.floor.empty() ? std::vector<std::int64_t>(n_, 0) : p.floor;
        last_in_class_.assign(p.class_total.size(), -1);
        for (int j = 0; j < n_; ++j) last_in_class_[p.var_class[j]] = j;
        remaining_ = p.class_total;
        y_ = p.a;
        x_.assign(n_, 0);
    }

    std::optional<IlpSolution> run() {
        for (std::size_t c = 0; c < p_.class_total.size(); ++c)
            if (p_.class_total[c] > 0 && last_in_class_[c] < 0) return std::nullopt;
        std::int64_t cur = 0;
        for (auto v : y_) cur = std::max(cur, v);
        dfs(0, cur);
        if (!found_) return std::nullopt;
        return IlpSolution{best_, best_x_};
    }

private:
    // Optimistic completion: each open class contributes its remaining total at the cheapest coefficient.
    std::int64_t bound(int j, std::int64_t cur) const {
        std::int64_t lb = cur;
        std::vector<std::int64_t> min_floor(p_.class_total.size(), LLONG_MAX);
        for (int v = j; v < n_; ++v) {
            int c = p_.var_class[v];
            min_floor[c] = std::min(min_floor[c], fl_[v]);
        }
        for (std::size_t c = 0; c < p_.class_total.size(); ++c)
            if (remaining_[c] > 0) lb = std::max(lb, min_floor[c]);
        for (int r = 0; r < rows_; ++r) {
            std::int64_t extra = 0;
            std::vector<std::int64_t> cheapest(p_.class_total.size(), LLONG_MAX);
            for (int v = j; v < n_; ++v) {
                int c = p_.var_class[v];
                cheapest[c] = std::min(cheapest[c], p_.b[r][v]);
            }
            for (std::size_t c = 0; c < p_.class_total.size(); ++c)
                if (remaining_[c] > 0) extra += remaining_[c] * cheapest[c];
            lb = std::max(lb, y_[r] + extra);
        }
        return lb;
    }

    void dfs(int j, std::int64_t cur) {
        if (found_ && bound(j, cur) >= best_) return;
        if (j == n_) {
            best_ = cur;
            best_x_ = x_;
            found_ = true;
            return;
        }
        int c = p_.var_class[j];
        std::int64_t lo = 0, hi = remaining_[c];
        if (last_in_class_[c] == j) lo = hi;
        for (std::int64_t val = lo; val <= hi; ++val) {
            std::int64_t next = cur;
            if (val > 0) next = std::max(next, fl_[j]);
            for (int r = 0; r < rows_; ++r) {
                y_[r] += p_.b[r][j] * val;
                next = std::max(next, y_[r]);
            }
            x_[j] = val;
            remaining_[c] -= val;
            if (!found_ || next < best_) dfs(j + 1, next);
            remaining_[c] += val;
            for (int r = 0; r < rows_; ++r) y_[r] -= p_.b[r][j] * val;
            x_[j] = 0;
        }
    }

    const MinMaxIlp& p_;
    int n_ = 0, rows_ = 0;
    std::vector<std::int64_t> fl_, remaining_, y_, x_, best_x_;
    std::vector<int> last_in_class_;
    std::int64_t best_ = LLONG_MAX;
    bool found_ = false;
};

} // namespace

std::optional<IlpSolution> ilp_minimize_max(const MinMaxIlp& ilp) {
    if (ilp.b.size() != ilp.a.size()) throw InvalidInput("ilp: row count mismatch");
    for (const auto& row : ilp.b)
        if (static_cast<int>(row.size()) != ilp.num_vars()) throw InvalidInput("ilp: column count mismatch");
    for (int c : ilp.var_class)
        if (c < 0 || c >= static_cast<int>(ilp.class_total.size())) throw InvalidInput("ilp: bad class index");
    for (const auto& row : ilp.b)
        for (auto v : row)
            if (v < 0) throw InvalidInput("ilp: coefficients must be non-negative");
    for (auto t : ilp.class_total)
        if (t < 0) throw InvalidInput("ilp: negative class total");
    return BranchAndBound(ilp).run();
}

} // namespace stc
