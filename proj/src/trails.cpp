#include "zigzag/trails.hpp"

namespace zigzag {

std::size_t family_size(const Trail& trail) {
  switch (trail.kind) {
    case TrailKind::WFence: return 0;
    case TrailKind::NFence: return 1;
    case TrailKind::Crown: return 2;
    case TrailKind::MFence: return trail.size() / 2;
  }
  return 0;
}

BitPattern admissible_by_index(const Trail& trail, std::size_t choice) {
  std::size_t m = trail.size();
  if (trail.kind == TrailKind::WFence) {
    throw Error(ErrorCode::WFenceHasNoSelection,
                "W-fence admits no selection");
  }
  if (choice >= family_size(trail)) {
    throw Error(ErrorCode::InvalidChoice,
                "choice " + std::to_string(choice) + " out of range");
  }

  BitPattern bits(m, 0);
  switch (trail.kind) {
    case TrailKind::Crown:
      for (std::size_t i = choice; i < m; i += 2) bits[i] = 1;
      break;
    case TrailKind::NFence:
      for (std::size_t i = 0; i < m; i += 2) bits[i] = 1;
      break;
    case TrailKind::MFence: {
      // <1 (01)^p (10)^q 1>
      std::size_t p = choice;
      bits[0] = 1;
      bits[m - 1] = 1;
      std::size_t pos = 1;
      for (std::size_t j = 0; j < p; ++j, pos += 2) bits[pos + 1] = 1;
      std::size_t q = (m - 2) / 2 - p;
      for (std::size_t j = 0; j < q; ++j, pos += 2) bits[pos] = 1;
      break;
    }
    case TrailKind::WFence:
      break;  // unreachable
  }
  return bits;
}

bool is_admissible_local(const Trail& trail, const BitPattern& pattern) {
  std::size_t m = trail.size();
  if (pattern.size() != m) {
    throw Error(ErrorCode::LengthMismatch,
                "pattern length " + std::to_string(pattern.size()) +
                    " does not match trail size " + std::to_string(m));
  }

  // End arcs of a fence are forced: their free endpoint has degree 1 in Z.
  if (!trail.closed) {
    if (!pattern[0] || !pattern[m - 1]) return false;
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    int chosen = pattern[i] + pattern[i + 1];
    if (trail.link_is_head(i)) {
      if (chosen != 1) return false;  // exactly one per shared head
    } else {
      if (chosen < 1) return false;  // at least one per shared tail
    }
  }
  if (trail.closed && m >= 2) {
    // Closing link between the last and first arc; m is even, so its type is
    // the opposite of the first link's.
    int chosen = pattern[m - 1] + pattern[0];
    if (!trail.first_link_head) {
      if (chosen != 1) return false;
    } else {
      if (chosen < 1) return false;
    }
  }
  return true;
}

BestChoice best_choice(const Trail& trail, std::span<const double> weights,
                       Direction direction) {
  std::size_t m = trail.size();
  if (trail.kind == TrailKind::WFence) {
    throw Error(ErrorCode::WFenceHasNoSelection,
                "W-fence admits no selection");
  }
  if (weights.size() != m) {
    throw Error(ErrorCode::LengthMismatch, "weight vector length mismatch");
  }

  auto better = [&](double a, double b) {
    return direction == Direction::Maximize ? a > b : a < b;
  };

  switch (trail.kind) {
    case TrailKind::NFence: {
      double s = 0.0;
      for (std::size_t i = 0; i < m; i += 2) s += weights[i];
      return {0, s};
    }
    case TrailKind::Crown: {
      double even = 0.0, odd = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        (i % 2 == 0 ? even : odd) += weights[i];
      }
      if (better(odd, even)) return {1, odd};
      return {0, even};
    }
    case TrailKind::MFence: {
      // Cumulative sums over even and odd canonical positions; each candidate
      // <1(01)^p(10)^q 1> scores in O(1).
      std::size_t half = (m - 2) / 2;
      std::vector<double> even_pref(m + 1, 0.0), odd_pref(m + 1, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        even_pref[i + 1] = even_pref[i] + (i % 2 == 0 ? weights[i] : 0.0);
        odd_pref[i + 1] = odd_pref[i] + (i % 2 == 1 ? weights[i] : 0.0);
      }
      double ends = weights[0] + weights[m - 1];
      std::size_t best = 0;
      double best_score = 0.0;
      for (std::size_t p = 0; p <= half; ++p) {
        // interior ones: even positions 2..2p, then odd positions 2p+1..m-3
        double s = ends;
        s += even_pref[2 * p + 1] - even_pref[1];  // w[2],...,w[2p]
        if (m >= 4) s += odd_pref[m - 2] - odd_pref[2 * p];  // odd in [2p+1,m-3]
        if (p == 0 || better(s, best_score)) {
          best = p;
          best_score = s;
        }
      }
      return {best, best_score};
    }
    case TrailKind::WFence:
      break;
  }
  return {0, 0.0};  // unreachable
}

}  // namespace zigzag
