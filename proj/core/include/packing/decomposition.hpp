#pragma once

#include "packing/partitions.hpp"

#include <string>
#include <utility>
#include <vector>

namespace packing {

/// Multiset of (n-partition, multiplicity) pairs over the ambient sizes N.
/// This is the output of every homology/syzygy computation; depending on
/// context the labels are read as symmetric-group irreducibles or as Schur
/// functors (the bridge between the two is applied at the syzygy boundary).
struct Decomposition {
    Tuple ambient;
    std::vector<std::pair<NPartition, long>> entries;  // canonical order, mult > 0

    bool empty() const { return entries.empty(); }
    long multiplicity(const NPartition& lambda) const;
    Integer dimension() const;  // sum of mult * dim[lambda] over S_N irreducibles
    void sort_entries();

    bool operator==(const Decomposition& o) const;
    std::string str() const;  // "(2,1)x(1,1,1) + (1,1,1)x(2,1)", "0" if empty
};

}  // namespace packing
