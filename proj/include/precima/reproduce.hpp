#pragma once

#include <optional>
#include <string>
#include <vector>

#include "precima/axioms.hpp"

namespace precima {

/// One published number recomputed from the bundled corpus.
struct NumberRow {
  std::string measure;
  std::string model;
  std::string log;
  std::string note;
  double expected = 0.0;
  double tolerance = 0.0;
  std::optional<double> computed;
  bool pass = false;
};

struct NegativeEventSummary {
  double mean_m1 = 0.0, mean_m2 = 0.0;
  double sd_m1 = 0.0, sd_m2 = 0.0;
  double welch_t = 0.0, welch_dof = 0.0;
  bool ordered = false;      // mean(m1) > mean(m2), Welch-significant at 0.01
  bool within_band = false;  // both means in [0.40, 0.55]
  bool pass = false;
};

struct ReproduceResult {
  std::vector<NumberRow> rows;
  NegativeEventSummary negative_event;
  AxiomMatrix matrix;
  bool matrix_ok = false;  // crosses and the single check match the reference
  bool all_pass = false;

  std::string to_text() const;
};

/// Recomputes every binding reference value and the violation matrix.
ReproduceResult reproduce_paper();

}  // namespace precima
