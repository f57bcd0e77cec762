#pragma once

#include "schub/schubert.hpp"

namespace schub {

/* Littlewood-Richardson coefficient c_{lambda,mu}^{nu}: the number of
 * semistandard fillings of the skew shape nu/lambda with content mu whose
 * reverse reading word is a lattice word. Direct backtracking count; shares
 * nothing with the determinant-based product except the data types, so it
 * serves as an independent oracle for it. */
Int lr_coefficient(const BoxedPartition& lambda, const BoxedPartition& mu,
                   const BoxedPartition& nu);

/* sigma_lambda * sigma_mu expanded through lr_coefficient over all nu in the
 * box of weight |lambda| + |mu|. */
SchubertClass lr_oracle(const BoxedPartition& lambda, const BoxedPartition& mu);

/* Bilinear extension of lr_oracle to whole classes. */
SchubertClass lr_multiply(const SchubertClass& a, const SchubertClass& b);

}  // namespace schub
