#pragma once

#include <cstdint>
#include <string>

#include "poisonlab/dataset.hpp"

namespace poisonlab {

// Synthetic insurance-claims generator. The real dataset is anonymized and
// unavailable, so this stands in with a documented, learnable fraud signal:
//
//   column                   legitimate                fraud (mixture)
//   claim_amount             exp(N(7.0, 0.55))         75%: exp(N(8.3, 0.60)), 25%: exp(N(7.5, 0.55))
//   filing_delay_days        max(0, N(10, 5))          75%: max(0, N(38, 12)), 25%: max(0, N(18, 7))
//   claimant_history_score   clamp(N(0.72, 0.12))      75%: clamp(N(0.30, 0.12)), 25%: clamp(N(0.55, 0.13))
//   claim_type               auto/home/health/liab.    skewed toward auto/liability in the blatant component
//   region                   uniform over 5 levels     uniform over 5 levels
//
// The 25% "subtle" component keeps clean-model recall below 1 so poisoning
// has room to act; the separation is wide enough that a depth-limited tree
// clears 80% balanced accuracy on clean data.
TabularDataset generate_insurance_claims(std::size_t n, double fraud_rate, std::uint64_t seed);

// Canonical CSV: header row, comma-separated, `\n` endings, label column
// `is_fraud` in {0,1}, numerics in shortest round-trip decimal form.
std::string write_tabular_csv(const TabularDataset& ds);

// Parses a canonical CSV; column kinds are inferred (numeric if every value
// parses as a double). The `is_fraud` column supplies labels.
TabularDataset read_tabular_csv(const std::string& text);

}  // namespace poisonlab
