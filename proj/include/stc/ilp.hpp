#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace stc {

// minimise max( max_e a_e + sum_j b[e][j] x_j , max_{j : x_j > 0} floor_j )
// subject to sum_{j in class c} x_j = class_total[c], 0 <= x_j, x_j integer. Coefficients b are >= 0.
struct MinMaxIlp {
    std::vector<int> var_class;              // class of each variable
    std::vector<std::int64_t> class_total;
    std::vector<std::int64_t> a;             // one per row
    std::vector<std::vector<std::int64_t>> b;  // [row][var]
    std::vector<std::int64_t> floor;         // per variable; empty means all zero

    int num_vars() const { return static_cast<int>(var_class.size()); }
};

struct IlpSolution {
    std::int64_t objective = 0;
    std::vector<std::int64_t> x;
};

// Branch and bound over the variables in index order. Among optimal assignments the lexicographically
// smallest x is returned. Nothing when some class has a positive total but no variables.
std::optional<IlpSolution> ilp_minimize_max(const MinMaxIlp& ilp);

} // namespace stc
