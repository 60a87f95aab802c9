#pragma once

#include "landscape/prob.hpp"

namespace landscape::models {

// Analytic MAX-2-SAT class: `num_clauses` 2-variable clauses over `num_vars`
// variables, each variable in exactly `occurrences_per_var` distinct clauses.
// Cost = number of false clauses; the neighbourhood flips one variable.
struct Sat2ClassSpec {
    int num_vars = 50;
    int num_clauses = 100;
    int occurrences_per_var = 4;

    void validate() const {
        if (num_vars <= 0 || num_clauses <= 0 || occurrences_per_var <= 0)
            raise(errc::invalid_argument, "sat2 spec: sizes must be positive");
        if (num_vars * occurrences_per_var != 2 * num_clauses)
            raise(errc::invalid_argument,
                  "sat2 spec: num_vars * occurrences_per_var must equal 2 * num_clauses");
    }
};

// p(C) = Binomial(num_clauses, 1/4) at C: each clause is false with
// probability 1/4 under a uniformly random assignment.
CostDistribution sat2_distribution(const Sat2ClassSpec& spec = {});

// Flip kernel. Of the flipped variable's clauses, the false ones (a
// without-replacement draw from the C false clauses) always become true and
// each true one turns false with probability 1/3. Rows are evaluated in
// exact rational arithmetic and converted to double on output.
NeighbourKernel sat2_kernel(const Sat2ClassSpec& spec = {});

}  // namespace landscape::models
