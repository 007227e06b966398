#include "qalg/abelian.hpp"

#include <algorithm>
#include <cstdlib>

#include "qalg/errors.hpp"
#include "qalg/field.hpp"

namespace qalg {

AbelianGroup AbelianGroup::canonical(std::int64_t free, std::vector<std::int64_t> cyclic_orders) {
    if (free < 0) throw validation_error("negative free rank");
    AbelianGroup g;
    g.free_rank = free;
    std::vector<std::int64_t> t;
    for (std::int64_t x : cyclic_orders) {
        x = std::abs(x);
        if (x == 0) {
            ++g.free_rank;  // Z/0 = Z
        } else if (x > 1) {
            t.push_back(x);
        }
    }
    // enforce the divisibility chain by gcd/lcm exchanges
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (t[j] % t[i] == 0) continue;
                const std::int64_t g2 = gcd64(t[i], t[j]);
                const std::int64_t l = lcm64(t[i], t[j]);
                t[i] = g2;
                t[j] = l;
                changed = true;
            }
        }
    }
    std::erase(t, 1);
    std::sort(t.begin(), t.end());
    g.torsion = std::move(t);
    return g;
}

std::int64_t AbelianGroup::order() const {
    if (!is_finite()) throw validation_error("order of an infinite group");
    std::int64_t o = 1;
    for (const std::int64_t m : torsion) o = checked::mul(o, m);
    return o;
}

std::string AbelianGroup::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (free_rank == 1) {
        s = "Z";
    } else if (free_rank > 1) {
        s = "Z^" + std::to_string(free_rank);
    }
    for (const std::int64_t m : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(m);
    }
    return s;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<std::int64_t> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return AbelianGroup::canonical(a.free_rank + b.free_rank, std::move(orders));
}

AbelianGroup quotient_by(const AbelianGroup& a, std::int64_t m) {
    m = std::abs(m);
    if (m == 0) return a;  // A / 0 = A
    std::vector<std::int64_t> orders;
    for (std::int64_t i = 0; i < a.free_rank; ++i) orders.push_back(m);  // Z/mZ
    for (const std::int64_t k : a.torsion) orders.push_back(gcd64(m, k));
    return AbelianGroup::canonical(0, std::move(orders));
}

AbelianGroup kernel_of_mult(const AbelianGroup& a, std::int64_t m) {
    m = std::abs(m);
    if (m == 0) return a;  // everything is killed by 0
    std::vector<std::int64_t> orders;
    for (const std::int64_t k : a.torsion) orders.push_back(gcd64(m, k));
    return AbelianGroup::canonical(0, std::move(orders));
}

}  // namespace qalg
