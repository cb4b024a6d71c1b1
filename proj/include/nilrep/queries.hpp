#ifndef NILREP_QUERIES_HPP
#define NILREP_QUERIES_HPP

// Human- and machine-readable descriptions behind the orbit / rep /
// decompose / verify front ends.

#include "nilrep/gelfand.hpp"

#include <json.hpp>

#include <string>

namespace nilrep {

struct Document {
  std::string text;
  nlohmann::ordered_json json;
  bool ok = true; ///< false when a mathematical check in the document failed
};

Document describe_orbit(const Covector& c);

struct RepQuery {
  RepCase rep = RepCase::trivial();
  NPoint n = NPoint::identity();
  KParams k{0, 0};
  bool grid_demo = false;
  std::size_t grid_n = 1024;
  double grid_half_width = 16;
};

/// Throws Error(Domain) if the grid demo is requested with a non-lattice shift.
Document describe_rep(const RepQuery& q);

Document describe_decomposition(const RepCase& c, std::size_t sample_size);

Document describe_verification(const TheoremReport& r);

} // namespace nilrep

#endif
