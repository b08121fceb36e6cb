#include <hwit/grid.hpp>

#include <random>
#include <set>
#include <stdexcept>

namespace hwit {

namespace {

struct Slot {
  std::size_t i, j;  // fixed point when i == j, else the 2-cycle (i, j)
};

void enumerate_matchings(const DiagonalForm& q, std::size_t next, std::vector<bool>& used,
                         std::vector<Slot>& slots, std::vector<Mat<Rat>>& out) {
  const std::size_t n = q.rank();
  while (next < n && used[next]) ++next;
  if (next == n) {
    // One matrix per sign assignment: fixed points and 2-cycles each carry
    // one free sign (m^2 = 1 forces equal signs within a cycle).
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      Mat<Rat> m(n, n);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const Rat sign(mask >> s & 1 ? -1 : 1);
        m(slots[s].i, slots[s].j) = sign;
        m(slots[s].j, slots[s].i) = sign;
      }
      out.push_back(std::move(m));
    }
    return;
  }
  used[next] = true;
  slots.push_back({next, next});
  enumerate_matchings(q, next + 1, used, slots, out);
  slots.pop_back();
  for (std::size_t j = next + 1; j < n; ++j) {
    if (used[j] || q.entries()[j] != q.entries()[next]) continue;
    used[j] = true;
    slots.push_back({next, j});
    enumerate_matchings(q, next + 1, used, slots, out);
    slots.pop_back();
    used[j] = false;
  }
  used[next] = false;
}

// First prime dividing none of the radicands the delta2 pipeline adjoins;
// adjoining its square root is then a genuine, unused field enlargement.
Int unused_radicand(const OrthCocycle& c) {
  const std::vector<Int> rads = delta2_radicands(c);
  for (long p : {7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    bool coprime = true;
    for (const Int& r : rads)
      if (r % p == 0) {
        coprime = false;
        break;
      }
    if (coprime) return Int(p);
  }
  throw std::logic_error("no coprime extra radicand below 50");
}

std::vector<DiagonalForm> collect_forms(const GridOptions& opts) {
  if (opts.palette.empty()) throw std::invalid_argument("grid palette is empty");
  std::vector<DiagonalForm> forms;
  std::set<std::vector<long>> seen;
  auto push = [&](const std::vector<long>& e) {
    if (!seen.insert(e).second) return false;
    std::vector<Rat> entries(e.begin(), e.end());
    forms.emplace_back(std::move(entries));
    return true;
  };

  // Exhaust the ranks whose whole space is small, sample the rest.
  std::vector<unsigned> sampled_ranks;
  for (unsigned r = 1; r <= opts.max_rank; ++r) {
    std::size_t space = 1;
    for (unsigned i = 0; i < r && space <= 64; ++i) space *= opts.palette.size();
    if (space > 64) {
      sampled_ranks.push_back(r);
      continue;
    }
    std::vector<std::size_t> odo(r, 0);
    for (;;) {
      std::vector<long> e(r);
      for (unsigned i = 0; i < r; ++i) e[i] = opts.palette[odo[i]];
      push(e);
      unsigned i = 0;
      while (i < r && ++odo[i] == opts.palette.size()) odo[i++] = 0;
      if (i == r) break;
    }
  }

  std::mt19937_64 gen(opts.seed);
  std::size_t stale = 0;  // consecutive duplicate draws
  while (forms.size() < opts.min_forms && !sampled_ranks.empty() && stale < 10000) {
    for (unsigned r : sampled_ranks) {
      std::vector<long> e(r);
      for (unsigned i = 0; i < r; ++i)
        e[i] = opts.palette[static_cast<std::size_t>(gen() % opts.palette.size())];
      stale = push(e) ? 0 : stale + 1;
      if (forms.size() >= opts.min_forms) break;
    }
  }
  return forms;
}

}  // namespace

std::vector<Mat<Rat>> involutive_isometries(const DiagonalForm& q) {
  std::vector<Mat<Rat>> out;
  std::vector<bool> used(q.rank(), false);
  std::vector<Slot> slots;
  enumerate_matchings(q, 0, used, slots, out);
  return out;
}

GridReport run_cor62_grid(const GridOptions& opts) {
  GridReport report;
  report.by_twist.reserve(opts.twist_values.size());
  for (long d : opts.twist_values) report.by_twist.emplace_back(d, GridTally{});

  const std::vector<DiagonalForm> forms = collect_forms(opts);
  report.forms = forms.size();

  auto fail = [&](const DiagonalForm& q, long d, const Mat<Rat>& m, std::string what,
                  const Cor62Report& rep) {
    ++report.failure_count;
    if (report.failures.size() < opts.max_failures)
      report.failures.push_back(GridFailure{q, d, m, std::move(what), rep});
  };

  for (const DiagonalForm& q : forms) {
    const std::vector<Mat<Rat>> isoms = involutive_isometries(q);
    for (std::size_t di = 0; di < opts.twist_values.size(); ++di) {
      const long d = opts.twist_values[di];
      GridTally& tally = report.by_twist[di].second;
      for (const Mat<Rat>& m : isoms) {
        const OrthCocycle c = quadratic_cocycle(q, Int(d), m);
        const Cor62Report rep = verify_cor62(q, c);

        bool bridge_ok = true;
        if (opts.check_bridge) {
          const Specialization s1 =
              specialize(det_class(rep.w1_base), rep.w1_twisted, rep.w2_twisted);
          const Specialization s2 = specialize(cq_class(rep.w1_base, rep.w2_base),
                                               rep.w1_twisted, rep.w2_twisted);
          bridge_ok = s1.deg1 == rep.d1 && s2.deg2 == rep.d2;
        }

        for (GridTally* t : {&report.total, &tally}) {
          ++t->cells;
          t->identity_i += rep.identity_i;
          t->identity_ii += rep.identity_ii;
          t->two_route += rep.two_route_match;
          t->bridge += bridge_ok;
        }
        if (!rep.identity_i) fail(q, d, m, "w1 identity failed", rep);
        if (!rep.identity_ii) fail(q, d, m, "w2 identity failed", rep);
        if (!rep.two_route_match) fail(q, d, m, "delta2 routes disagree", rep);
        if (!bridge_ok) fail(q, d, m, "universal specialization mismatch", rep);

        if (report.robustness_cells < opts.robustness_cells) {
          ++report.robustness_cells;
          Delta2Options flip;
          flip.flip_lift_signs = ~std::uint64_t{0};
          Delta2Options extra;
          extra.extra_radicand = unused_radicand(c);
          const bool ok = delta2_with(c, flip) == rep.d2 &&
                          delta2_with(c, extra) == rep.d2;
          report.robustness_pass += ok;
          if (!ok) fail(q, d, m, "delta2 not lift-independent", rep);
        }
      }
    }
  }
  return report;
}

}  // namespace hwit
