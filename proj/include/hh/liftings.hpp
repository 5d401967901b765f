#pragma once

#include "hh/cocycles.hpp"
#include "hh/products.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

struct NoLiftingTable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Closed-form liftings exist for m even >= 4 (any N) and for m = 2, N > 1.
bool has_lifting_table(const Algebra& A);

// L^0..L^{q_max} of a named basis cocycle, built from the closed-form tables. The result
// is not checked; run Products::check on it. Throws NoLiftingTable.
Lifting table_lifting(const HomComplex& H, const NamedCocycleId& id, int q_max);

struct ConformancePair {
    NamedCocycleId eta, theta;
    bool match = false;
};

struct TableLiftingStatus {
    NamedCocycleId id;
    bool valid = false;  // passes the chain map equations up to the needed degree
};

struct ConformanceReport {
    std::vector<TableLiftingStatus> liftings;
    std::vector<ConformancePair> pairs;
    std::size_t mismatches = 0;
    bool pass = false;
};

// eta * theta from the table lifting of theta against the solver product, as classes,
// for all basis pairs with 1 <= deg eta, deg theta <= max_degree
ConformanceReport lifting_conformance(const HomComplex& H, int max_degree);

}  // namespace hh
