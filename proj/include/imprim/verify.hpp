#pragma once

#include "imprim/report.hpp"
#include "imprim/table.hpp"

namespace imprim {

// All q^3(q-1) elements of G over a finite field, in deterministic order.
std::vector<GroupElement> enumerate_group(const GroupLaw& law);

// Exact counting identities: |G|, |Omega|, number of blocks, |Lambda|.
CheckResult check_counts(const SmallGroup& G);

// System-of-imprimitivity axioms: blocks permuted compatibly with the point
// action; induced block group sharply 2-transitive of order q(q-1);
// G_Delta = inertia * G_O for the block y = 0.
std::vector<CheckResult> check_block_axioms(const SmallGroup& G);

// Standalone sharp-2-transitivity test of a set of permutations of q symbols
// (so degenerate inputs can be fed as negative controls).
CheckResult check_sharply_2transitive(const std::vector<std::vector<int>>& perms, long long q,
                                      const std::string& name);

// The induced group of G_Delta on the block y = 0: shape {x -> u1 + a^{e1} x},
// transitivity, multiplier subgroup order; sharp 2-transitivity exactly when
// gcd(e1, q-1) = 1, otherwise that sub-check is skipped (closure-only).
std::vector<CheckResult> check_in_block(const SmallGroup& G);

// Sharp transitivity on pairs of points in distinct blocks.  With
// unipotent_only the torus is dropped (negative control: transitivity fails).
std::vector<CheckResult> check_lambda_sharp(const SmallGroup& G, bool unipotent_only = false);

// Structural decompositions: inertia, centre of G_u, the direct and semidirect
// factorizations, the transversal L, the vector-group / noncommutativity
// witness, and the Frobenius property of the block quotient.
std::vector<CheckResult> check_structure(const SmallGroup& G);

// Left-action law, block equivariance and effectiveness.  Exhaustive over all
// (g,h) when q^3(q-1)^2 stays small; otherwise a deterministic sample of at
// least min_samples triples.
std::vector<CheckResult> check_action_axioms(const SmallGroup& G, long long min_samples = 100000);

// Symbolic associativity of the parameter tuple.
CheckResult check_associativity(const GroupParams& gp);

// Suite driver: runs the named suites ("assoc", "action", "blocks", "inblock",
// "lambda", "structure" or "all") over the given field.
VerificationReport verify_suite(const GroupParams& gp, const FieldCtx& qctx,
                                const std::vector<std::string>& suites);

}  // namespace imprim
