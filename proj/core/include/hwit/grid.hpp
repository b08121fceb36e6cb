#pragma once

#include <hwit/twists.hpp>
#include <hwit/universal.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hwit {

// All involutive signed-permutation isometries of the diagonal form: the
// rational matrices m with m^2 = 1 sending e_i to +-e_{pi(i)}, which forces
// pi^2 = id, a_{pi(i)} = a_i, and equal signs within each 2-cycle. These are
// exactly the values usable by quadratic_cocycle. Deterministic order.
std::vector<Mat<Rat>> involutive_isometries(const DiagonalForm& q);

struct GridOptions {
  std::size_t min_forms = 200;       // distinct diagonal forms
  unsigned max_rank = 4;
  std::uint64_t seed = 20260814;     // mt19937_64 seed for entry sampling
  std::vector<long> palette = {1, -1, 2, -2, 3, -3, 5, -5};
  std::vector<long> twist_values = {-1, -2, -3, 2, 3, 5, 6};
  bool check_bridge = true;          // universal-ring specialization per cell
  std::size_t robustness_cells = 30; // flipped-sign / extra-radicand reruns
  std::size_t max_failures = 10;     // counterexamples kept for the dump
};

struct GridTally {
  std::size_t cells = 0;
  std::size_t identity_i = 0;
  std::size_t identity_ii = 0;
  std::size_t two_route = 0;
  std::size_t bridge = 0;

  bool clean() const {
    return identity_i == cells && identity_ii == cells && two_route == cells &&
           bridge == cells;
  }
};

struct GridFailure {
  DiagonalForm form;
  long twist = 0;
  Mat<Rat> isometry;
  std::string what;  // which check broke
  Cor62Report report;
};

struct GridReport {
  std::size_t forms = 0;
  GridTally total;
  std::vector<std::pair<long, GridTally>> by_twist;  // twist_values order
  std::size_t robustness_cells = 0;
  std::size_t robustness_pass = 0;
  std::vector<GridFailure> failures;  // capped at max_failures
  std::size_t failure_count = 0;      // uncapped

  bool all_pass() const { return failure_count == 0; }
};

// The flagship verification grid: distinct diagonal forms over the palette
// (exhaustive for ranks whose whole space fits, sampled above), crossed with
// every twist value and every involutive isometry. Each cell checks both
// comparison identities, the two-route delta2 agreement, the universal-ring
// specialization bridge, and (for the first robustness_cells cells) that
// delta2 survives flipped lift signs and an unused extra radicand.
GridReport run_cor62_grid(const GridOptions& opts = {});

}  // namespace hwit
