#ifndef HFLKIT_KAUFFMAN_HPP
#define HFLKIT_KAUFFMAN_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hflkit/half_int.hpp"
#include "hflkit/laurent.hpp"

namespace hflkit {

class InvalidDiagram : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// PD-coded knot projection with a marked arc.
///
/// Each crossing lists its four arc labels counterclockwise starting from the
/// incoming under-strand, as in `X(a,b,c,d)`. Arcs are numbered 1..2c along
/// the knot.
struct PlanarDiagram {
  std::vector<std::array<int, 4>> crossings;
  int marked_arc = 1;

  std::size_t crossing_count() const { return crossings.size(); }

  /// Throws InvalidDiagram unless every arc 1..2c occurs exactly twice, the
  /// marked arc exists and the crossings are connected.
  void validate() const;

  /// `X(1,4,2,5), X(3,6,4,1), X(5,2,6,3), mark=6`
  std::string to_string() const;

  /// Inverse of to_string(). Whitespace is ignored; `mark=` is optional and
  /// defaults to arc 1.
  static PlanarDiagram parse(std::string_view text);

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

/// Quadrant q of a crossing is the corner between PD positions q and q+1 (mod 4).
struct Corner {
  int crossing = 0;
  int quadrant = 0;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct Region {
  std::vector<Corner> corners;  // in boundary traversal order
  std::vector<int> arcs;        // sorted, distinct

  bool touches_arc(int arc) const;
  bool touches_crossing(int crossing) const;
};

/// Faces of the projection on S^2, found by walking corners around each face.
/// Ordered by the smallest corner they contain. Throws InvalidDiagram if the
/// face count differs from #crossings + 2.
std::vector<Region> regions(const PlanarDiagram& d);

/// Indices (into regions()) of the faces adjacent to the marked arc.
std::vector<std::size_t> marked_regions(const PlanarDiagram& d, const std::vector<Region>& faces);

/// One marked corner per unmarked region, one per crossing.
struct KauffmanState {
  std::map<std::size_t, Corner> assignment;  // region index -> corner
  friend bool operator==(const KauffmanState&, const KauffmanState&) = default;
};

/// All Kauffman states, by backtracking over regions in index order and
/// corners in traversal order. Empty when the unmarked region count differs
/// from the crossing count.
std::vector<KauffmanState> enumerate_states(const PlanarDiagram& d);

// ---------------------------------------------------------------------------
// (2, 2n+1) torus knot

/// Standard alternating closed 2-braid diagram of T(2,2n+1).
///
/// Crossings are listed top to bottom along the twist column. The marked arc
/// (label 4n+2) joins the bottom crossing back to the top one; it borders the
/// left region D_L and the region taken as unbounded. Throws
/// std::invalid_argument for n < 1.
PlanarDiagram build_torus_diagram(int n);

/// Names of the faces of build_torus_diagram(n): "unbounded", "D_L", "D_R",
/// "D_1".."D_2n" (D_k lies between crossings k and k+1).
std::map<std::size_t, std::string> torus_region_names(int n, const std::vector<Region>& faces);

/// Index i (1-based) of z_i: the crossing at which the state marks D_R.
int torus_state_index(int n, const std::vector<Region>& faces, const KauffmanState& state);

struct StateGrading {
  int index = 0;
  HalfInt spinc;
  HalfInt maslov;
  friend bool operator==(const StateGrading&, const StateGrading&) = default;
};

/// s(z_i) = i - n - 1 and μ(z_i) = i - 1 for i = 1..2n+1.
std::vector<StateGrading> torus_state_gradings(int n);

/// Σ over enumerated states of (-1)^μ t^s.
LaurentPoly alexander_from_states(int n);

}  // namespace hflkit

#endif  // HFLKIT_KAUFFMAN_HPP
