#pragma once

#include <map>

#include "mono/order.hpp"

namespace mono {

enum class Relation { gl2q, gl2a, z_equiv, hermite };
enum class Verdict { yes, no, inconclusive };

struct EquivalenceReport {
    Relation relation;
    Verdict verdict;
    std::optional<Mobius> witness;
    std::optional<FieldElement> lambda;  // hermite witness
    BaseRing base;
    std::string note;
};

// GL2(Q)-equivalence: the homogeneous system beta (c alpha + d) = a alpha + b
// has a nonzero rational solution with nonzero determinant iff the witness
// exists; returned primitive-integer normalized, first nonzero entry > 0.
std::optional<Mobius> gl2q_equivalent(const FieldElement& alpha, const FieldElement& beta);

// GL2(A)-equivalence over A = Z or Z_S through the primitive witness whose
// determinant must be a unit of A.
std::optional<Mobius> gl2a_equivalent(const FieldElement& alpha, const FieldElement& beta,
                                      const BaseRing& base);
EquivalenceReport decide_gl2a(const FieldElement& alpha, const FieldElement& beta,
                              const BaseRing& base);

// alpha - beta in Z or alpha + beta in Z
bool z_equivalent(const FieldElement& alpha, const FieldElement& beta);

// Partition a set of generators: group by the invariant order, then split
// each group into GL2(base)-classes; optionally the Z-equivalence
// sub-partition when every generator is integral.
struct ClassifyReport {
    struct Group {
        FullModule order_module;
        Rat order_discriminant;
        std::vector<std::vector<int>> classes;    // indices into gens
        std::vector<std::vector<int>> z_classes;  // only when all gens integral
    };
    std::vector<Group> groups;
    int monogenization_count() const;  // total GL2 classes across groups
};
ClassifyReport classify(const std::vector<FieldElement>& gens, const BaseRing& base);

// Bounded search for lambda with lambda M_alpha = M_beta: enumerate the colon
// module {x : x M_alpha <= M_beta} with coordinates bounded by
// coefficient_bound. "none" here means none-found, never a disproof.
std::optional<FieldElement> hermite_search(const FieldElement& alpha, const FieldElement& beta,
                                           long coefficient_bound);

}  // namespace mono
