#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qalg/snf.hpp"

namespace qalg {

// Finitely generated abelian group in canonical invariant-factor form:
// Z^free_rank + Z/m_1 + ... + Z/m_k with 2 <= m_1 | m_2 | ... | m_k.
struct AbelianGroup {
    std::int64_t free_rank = 0;
    std::vector<std::int64_t> torsion;

    // Canonicalizes an arbitrary list of cyclic orders (entries 0 mean free
    // summands, entries 1 vanish).
    static AbelianGroup canonical(std::int64_t free, std::vector<std::int64_t> cyclic_orders);

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    std::int64_t order() const;  // throws for infinite groups
    std::string str() const;     // "0", "Z", "Z^2 + Z/2 + Z/4", ...

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// A / mA in canonical form.
AbelianGroup quotient_by(const AbelianGroup& a, std::int64_t m);

// ker(m : A -> A) in canonical form.
AbelianGroup kernel_of_mult(const AbelianGroup& a, std::int64_t m);

}  // namespace qalg
