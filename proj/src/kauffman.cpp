#include "hflkit/kauffman.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace hflkit {

namespace {

struct Slot {
  int crossing;
  int position;
};

// For each arc label, the two (crossing, position) slots it occupies.
std::map<int, std::vector<Slot>> arc_slots(const PlanarDiagram& d) {
  std::map<int, std::vector<Slot>> slots;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    for (int p = 0; p < 4; ++p) slots[d.crossings[c][p]].push_back({static_cast<int>(c), p});
  }
  return slots;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

void PlanarDiagram::validate() const {
  if (crossings.empty()) throw InvalidDiagram("diagram has no crossings");
  const int arcs = 2 * static_cast<int>(crossings.size());
  const auto slots = arc_slots(*this);
  for (const auto& [arc, where] : slots) {
    if (arc < 1 || arc > arcs) {
      throw InvalidDiagram("arc label " + std::to_string(arc) + " outside 1.." + std::to_string(arcs));
    }
    if (where.size() != 2) {
      throw InvalidDiagram("arc " + std::to_string(arc) + " appears " + std::to_string(where.size()) +
                           " times, expected 2");
    }
  }
  if (static_cast<int>(slots.size()) != arcs) throw InvalidDiagram("some arc labels are missing");
  if (!slots.contains(marked_arc)) throw InvalidDiagram("marked arc " + std::to_string(marked_arc) + " not in diagram");

  std::vector<int> parent(crossings.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [arc, where] : slots) {
    parent[find_root(parent, where[0].crossing)] = find_root(parent, where[1].crossing);
  }
  const int root = find_root(parent, 0);
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    if (find_root(parent, c) != root) throw InvalidDiagram("diagram is disconnected");
  }
}

std::string PlanarDiagram::to_string() const {
  std::string out;
  for (const auto& x : crossings) {
    if (!out.empty()) out += ", ";
    out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
           std::to_string(x[3]) + ")";
  }
  out += ", mark=" + std::to_string(marked_arc);
  return out;
}

PlanarDiagram PlanarDiagram::parse(std::string_view text) {
  std::string src;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
  }
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) -> InvalidDiagram {
    return InvalidDiagram("PD parse error at offset " + std::to_string(pos) + ": " + what);
  };
  const auto expect = [&](char ch) {
    if (pos >= src.size() || src[pos] != ch) throw fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  const auto number = [&]() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(src.data() + pos, src.data() + src.size(), value);
    if (ec != std::errc{}) throw fail("expected an integer");
    pos = static_cast<std::size_t>(ptr - src.data());
    return value;
  };

  PlanarDiagram d;
  bool have_mark = false;
  while (pos < src.size()) {
    if (src.compare(pos, 5, "mark=") == 0) {
      if (have_mark) throw fail("duplicate mark");
      pos += 5;
      d.marked_arc = number();
      have_mark = true;
    } else {
      expect('X');
      expect('(');
      std::array<int, 4> x{};
      for (int k = 0; k < 4; ++k) {
        if (k > 0) expect(',');
        x[k] = number();
      }
      expect(')');
      d.crossings.push_back(x);
    }
    if (pos < src.size()) expect(',');
  }
  if (d.crossings.empty()) throw fail("no crossings");
  return d;
}

// ---------------------------------------------------------------------------

bool Region::touches_arc(int arc) const { return std::binary_search(arcs.begin(), arcs.end(), arc); }

bool Region::touches_crossing(int crossing) const {
  return std::any_of(corners.begin(), corners.end(), [&](const Corner& c) { return c.crossing == crossing; });
}

std::vector<Region> regions(const PlanarDiagram& d) {
  d.validate();
  const auto slots = arc_slots(d);
  const int c = static_cast<int>(d.crossings.size());

  // Leaving corner (x, q) along the arc at position q+1 keeps the face on the
  // right; it is entered again at the corner counterclockwise of that arc's
  // other slot.
  const auto next = [&](Corner k) {
    const int arc = d.crossings[k.crossing][(k.quadrant + 1) % 4];
    const auto& two = slots.at(arc);
    const int here = (k.quadrant + 1) % 4;
    const Slot& other = (two[0].crossing == k.crossing && two[0].position == here) ? two[1] : two[0];
    return Corner{other.crossing, other.position};
  };

  std::vector<std::vector<bool>> seen(c, std::vector<bool>(4, false));
  std::vector<Region> faces;
  for (int x = 0; x < c; ++x) {
    for (int q = 0; q < 4; ++q) {
      if (seen[x][q]) continue;
      Region face;
      Corner k{x, q};
      while (!seen[k.crossing][k.quadrant]) {
        seen[k.crossing][k.quadrant] = true;
        face.corners.push_back(k);
        const auto& tuple = d.crossings[k.crossing];
        face.arcs.push_back(tuple[k.quadrant]);
        face.arcs.push_back(tuple[(k.quadrant + 1) % 4]);
        k = next(k);
      }
      std::sort(face.arcs.begin(), face.arcs.end());
      face.arcs.erase(std::unique(face.arcs.begin(), face.arcs.end()), face.arcs.end());
      faces.push_back(std::move(face));
    }
  }
  if (static_cast<int>(faces.size()) != c + 2) {
    throw InvalidDiagram("PD code is not planar: " + std::to_string(faces.size()) + " faces for " +
                         std::to_string(c) + " crossings");
  }
  return faces;
}

std::vector<std::size_t> marked_regions(const PlanarDiagram& d, const std::vector<Region>& faces) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < faces.size(); ++r) {
    if (faces[r].touches_arc(d.marked_arc)) out.push_back(r);
  }
  return out;
}

std::vector<KauffmanState> enumerate_states(const PlanarDiagram& d) {
  const auto faces = regions(d);
  const auto excluded = marked_regions(d, faces);
  std::vector<std::size_t> open;
  for (std::size_t r = 0; r < faces.size(); ++r) {
    if (std::find(excluded.begin(), excluded.end(), r) == excluded.end()) open.push_back(r);
  }
  std::vector<KauffmanState> states;
  if (open.size() != d.crossings.size()) return states;

  std::vector<bool> used(d.crossings.size(), false);
  KauffmanState current;
  const auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == open.size()) {
      states.push_back(current);
      return;
    }
    const std::size_t r = open[depth];
    for (const Corner& k : faces[r].corners) {
      if (used[k.crossing]) continue;
      used[k.crossing] = true;
      current.assignment[r] = k;
      self(self, depth + 1);
      current.assignment.erase(r);
      used[k.crossing] = false;
    }
  };
  search(search, 0);
  return states;
}

// ---------------------------------------------------------------------------

PlanarDiagram build_torus_diagram(int n) {
  if (n < 1) throw std::invalid_argument("torus diagram needs n >= 1, got " + std::to_string(n));
  const int m = 2 * n + 1;
  const int arcs = 2 * m;
  // Visit t (0 <= t < 2m) passes crossing t mod m; the knot goes under at
  // even visits. The arc entering visit t is t (2m for t = 0), the arc
  // leaving it is t + 1.
  const auto arc_in = [&](int t) { return t == 0 ? arcs : t; };
  const auto arc_out = [&](int t) { return t + 1; };

  PlanarDiagram d;
  for (int c = 0; c < m; ++c) {
    const int under = (c % 2 == 0) ? c : c + m;
    const int over = (c % 2 == 0) ? c + m : c;
    d.crossings.push_back({arc_in(under), arc_in(over), arc_out(under), arc_out(over)});
  }
  d.marked_arc = arcs;
  return d;
}

std::map<std::size_t, std::string> torus_region_names(int n, const std::vector<Region>& faces) {
  const int m = 2 * n + 1;
  const int marked = 2 * m;
  std::map<std::size_t, std::string> names;
  for (std::size_t r = 0; r < faces.size(); ++r) {
    const Region& f = faces[r];
    const bool big = static_cast<int>(f.corners.size()) == m;
    if (f.touches_arc(marked)) {
      names[r] = big ? "unbounded" : "D_L";
    } else if (big) {
      names[r] = "D_R";
    } else {
      int top = m;
      for (const Corner& k : f.corners) top = std::min(top, k.crossing);
      names[r] = "D_" + std::to_string(top + 1);
    }
  }
  return names;
}

int torus_state_index(int n, const std::vector<Region>& faces, const KauffmanState& state) {
  const auto names = torus_region_names(n, faces);
  for (const auto& [r, corner] : state.assignment) {
    if (names.at(r) == "D_R") return corner.crossing + 1;
  }
  throw std::logic_error("state leaves D_R unmarked");
}

std::vector<StateGrading> torus_state_gradings(int n) {
  if (n < 1) throw std::invalid_argument("torus gradings need n >= 1, got " + std::to_string(n));
  std::vector<StateGrading> out;
  for (int i = 1; i <= 2 * n + 1; ++i) {
    out.push_back({i, HalfInt::from_int(i - n - 1), HalfInt::from_int(i - 1)});
  }
  return out;
}

LaurentPoly alexander_from_states(int n) {
  const PlanarDiagram d = build_torus_diagram(n);
  const auto faces = regions(d);
  const auto gradings = torus_state_gradings(n);
  LaurentPoly sum;
  for (const KauffmanState& state : enumerate_states(d)) {
    const StateGrading& g = gradings.at(static_cast<std::size_t>(torus_state_index(n, faces, state) - 1));
    const BigInt sign = (g.maslov.floor() % 2 == 0) ? 1 : -1;
    sum += LaurentPoly::monomial(sign, g.spinc);
  }
  return sum;
}

}  // namespace hflkit
