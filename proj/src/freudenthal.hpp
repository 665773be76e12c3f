#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jordan.hpp"
#include "liemodel.hpp"

namespace albert {

// Basis layout of the uniform models built by build_s: eight sl3 generators
// (H1, H2, E12, E13, E21, E23, E31, E32), then the operator block m, then the
// three short blocks e_i (x) R, then the three coshort blocks e_i' (x) R'.
struct SLayout {
    int r_dim = 0;
    int m_dim = 0;
    int m_off = 8;
    int short_off = 0;
    int coshort_off = 0;

    int dim() const { return 8 + m_dim + 6 * r_dim; }
    int short_index(int slot, int a) const { return short_off + slot * r_dim + a; }
    int coshort_index(int slot, int a) const { return coshort_off + slot * r_dim + a; }
};

// Recover the layout of a model built by build_s from its basis tags.
SLayout layout_of(const LieModel& L);

// The Lie algebra sl3 + m + (k^3 (x) R) + (k^3 (x) R)' attached to a cubic
// norm structure R: sl3 acts standardly on the short blocks and by the
// negative transpose on the coshort blocks, m acts on R and by the negative
// trace-form adjoint on R', short wedges into coshort through the Freudenthal
// cross, and the mixed bracket lands in m + sl3. The four bracket constants
// are solved from Jacobi on a sampled spanning set and the result is verified
// on all basis triples before being returned.
//
// The designated Cartan is {H1, H2} together with a full commuting
// diagonalizable family placed at the front of the m block.
LieModel build_s(const CubicNormStructure& R);

// g2 / d4 / f4 / e6 / e7 / e8, keyed by dim R in {1, 3, 6, 9, 15, 27}
std::string algebra_name_for_r_dim(int r_dim);

// Unit-vector generators of the copy of s_{R0} inside s_R = L: the sl3 block
// plus short/coshort vectors over the chain embedding of R0 into R.
// chain[src] and chain[dst] must be the structures for R0 and R.
std::vector<Vec> subchain_generators(const LieModel& L,
                                     const std::vector<std::unique_ptr<CubicNormStructure>>& chain,
                                     int src, int dst);

// All basis indices whose tag starts with the given prefix.
std::vector<int> indices_with_tag_prefix(const LieModel& L, const std::string& prefix);

}  // namespace albert
