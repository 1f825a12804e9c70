#include "orbsnake/snake.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace orbsnake {

namespace {

LaurentPoly cheb_label(int k, int p, int rho) { return LaurentPoly(cheb_u(k, p)) * LaurentPoly::x(rho); }

enum class StepKind { Right, Left, WindRight, WindLeft };

struct Step {
  StepKind kind = StepKind::Right;
  int glue = 0;
  int winding = 0;
  int order = 0;
};

bool single_at(const CurveDescriptor& d, std::size_t k) {
  return (k == 0 && d.ends.start_winding > 0) || (k + 1 == d.word.size() && d.ends.end_winding > 0);
}

}  // namespace

ChainSpec chain_spec(const CurveDescriptor& d, const Triangulation& t) {
  if (d.word.empty()) throw Error(ErrorKind::Input, "descriptor has no crossings");
  const bool closed = d.kind == CurveKind::ClosedCurve;
  ChainSpec spec;
  std::vector<Step> steps;
  const std::size_t m = d.word.size();
  for (std::size_t k = 0; k < m; ++k) {
    const auto& tok = d.word[k];
    const Arc& arc = t.arc(tok.arc);
    if (arc.kind == ArcKind::Pending && !single_at(d, k)) {
      Tile tile{true, tok.arc, arc.order, tok.winding, static_cast<int>(spec.crossings.size()) + 1};
      spec.tiles.push_back(tile);
      spec.crossings.push_back(tok.arc);
      spec.crossings.push_back(tok.arc);
      Turn base = pending_base(d, t, k);
      steps.push_back({base == Turn::Right ? StepKind::WindRight : StepKind::WindLeft, 0, tok.winding, arc.order});
    } else {
      Tile tile{false, tok.arc, arc.kind == ArcKind::Pending ? arc.order : 0, 0,
                static_cast<int>(spec.crossings.size()) + 1};
      if (arc.kind == ArcKind::Pending) tile.winding = k == 0 ? d.ends.start_winding : d.ends.end_winding;
      spec.tiles.push_back(tile);
      spec.crossings.push_back(tok.arc);
    }
    if (k + 1 < m) steps.push_back({*tok.turn == Turn::Right ? StepKind::Right : StepKind::Left, *tok.glue, 0, 0});
  }
  const int n = static_cast<int>(spec.crossings.size());
  UniversalLabels u(n);
  for (int j = 1; j <= n; ++j) {
    u.i[j] = LaurentPoly::x(spec.crossings[j - 1]);
    u.y[j] = LaurentPoly::y(spec.crossings[j - 1]);
  }
  for (int j = 1; j < n; ++j) {
    const Step& s = steps[j - 1];
    const bool odd = j % 2 == 1;
    const LaurentPoly& i = u.i[j];
    const LaurentPoly& ip = u.i[j + 1];
    switch (s.kind) {
      case StepKind::Right: {
        LaurentPoly c = LaurentPoly::x(s.glue);
        if (odd) {
          u.bj[j] = 0, u.lj[j] = i, u.rj[j] = ip, u.aj[j] = c;
        } else {
          u.aj[j] = 0, u.rj[j] = i, u.lj[j] = ip, u.bj[j] = c;
        }
        break;
      }
      case StepKind::Left: {
        LaurentPoly c = LaurentPoly::x(s.glue);
        if (odd) {
          u.aj[j] = 0, u.lj[j] = ip, u.rj[j] = i, u.bj[j] = c;
        } else {
          u.bj[j] = 0, u.rj[j] = ip, u.lj[j] = i, u.aj[j] = c;
        }
        break;
      }
      case StepKind::WindRight:
      case StepKind::WindLeft: {
        int rho = spec.crossings[j - 1];
        u.lj[j] = u.rj[j] = cheb_label(s.winding, s.order, rho);
        LaurentPoly hi = cheb_label(s.winding + 1, s.order, rho);
        LaurentPoly lo = cheb_label(s.winding - 1, s.order, rho);
        if ((s.kind == StepKind::WindRight) == odd) {
          u.aj[j] = hi, u.bj[j] = lo;
        } else {
          u.aj[j] = lo, u.bj[j] = hi;
        }
        break;
      }
    }
  }
  if (closed) {
    const auto& last = d.word.back();
    LaurentPoly c = LaurentPoly::x(*last.glue);
    spec.glue_arc = *last.glue;
    if (*last.turn == Turn::Left) {
      spec.glue = Glue::AZ;
      u.a = c, u.b = u.i[n], u.w = u.i[1], u.z = c;
    } else {
      spec.glue = Glue::BW;
      u.a = u.i[n], u.b = c, u.w = c, u.z = u.i[1];
    }
  } else {
    if (d.ends.start_winding > 0) {
      int rho = spec.crossings.front(), p = t.arc(rho).order, k = d.ends.start_winding;
      u.a = cheb_label(k - 1, p, rho);
      u.b = cheb_label(k, p, rho);
    } else {
      u.a = LaurentPoly::x(*d.ends.a);
      u.b = LaurentPoly::x(*d.ends.b);
    }
    if (d.ends.end_winding > 0) {
      int rho = spec.crossings.back(), p = t.arc(rho).order, k = d.ends.end_winding;
      u.w = cheb_label(k, p, rho);
      u.z = cheb_label(k - 1, p, rho);
    } else {
      u.w = LaurentPoly::x(*d.ends.w);
      u.z = LaurentPoly::x(*d.ends.z);
    }
  }
  spec.labels = std::move(u);
  return spec;
}

bool is_good(const SnakeGraph& g, const Matching& m) {
  switch (g.glue) {
    case Glue::AZ: return g.chain.uses(m, Slot::A) || g.chain.uses(m, g.chain.z_slot());
    case Glue::BW: return g.chain.uses(m, Slot::B) || g.chain.uses(m, g.chain.w_slot());
    case Glue::None: return true;
  }
  return true;
}

namespace {

std::vector<Matching> filter_good(const SnakeGraph& g, std::vector<Matching> all) {
  std::vector<Matching> out;
  for (auto& m : all)
    if (is_good(g, m)) out.push_back(std::move(m));
  return out;
}

}  // namespace

std::vector<Matching> enumerate_matchings(const SnakeGraph& g) {
  auto dp = filter_good(g, g.chain.matchings_dp());
  auto bfs = filter_good(g, g.chain.matchings_bfs());
  if (dp != bfs)
    throw Error(ErrorKind::Internal, "matching enumeration mismatch: dynamic program found " + std::to_string(dp.size()) +
                                         ", twist closure found " + std::to_string(bfs.size()));
  return dp;
}

SnakeGraph build_snake_graph(const CurveDescriptor& d, const Triangulation& t) {
  validate(d, t);
  if (d.kind == CurveKind::ContractibleLoop || d.kind == CurveKind::OrbifoldLoop || d.kind == CurveKind::Kinked || d.arc)
    throw Error(ErrorKind::Input, "curve kind " + kind_name(d.kind) + " has no snake graph");
  ChainSpec spec = chain_spec(d, t);
  SnakeGraph g{ChainGraph(spec.labels, true), spec.crossings, spec.tiles, spec.glue != Glue::None, spec.glue,
               spec.glue_arc, tile_product(spec.labels, 1, spec.labels.n), {}};
  g.matchings = enumerate_matchings(g);
  return g;
}

std::pair<Matching, Matching> minimal_maximal(const SnakeGraph& g) {
  Matching lo = g.chain.minimal();
  const int n = g.chain.n();
  for (const auto& m : g.matchings)
    if (static_cast<int>(g.chain.enclosed_tiles(m).size()) == n) return {lo, m};
  throw Error(ErrorKind::Internal, "no maximal matching");
}

std::vector<int> interior_edges(const SnakeGraph& g) {
  std::vector<int> out;
  const ChainGraph& c = g.chain;
  for (int j = 1; j < c.n(); ++j)
    for (Slot s : {Slot::Aj, Slot::Bj})
      if (int e = c.find(s, j); e >= 0) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

WeightHeight weight_height(const SnakeGraph& g, const Matching& m) { return {g.chain.weight(m), g.chain.height(m)}; }

LaurentPoly expansion_of(const SnakeGraph& g) {
  LaurentPoly s;
  for (const auto& m : g.matchings) s += g.chain.weight(m) * g.chain.height(m);
  LaurentPoly den = g.cross;
  if (g.band) den *= LaurentPoly::x(g.glue_arc);
  return s.div_exact_monomial(den);
}

LaurentPoly cluster_expansion(const CurveDescriptor& d, const Triangulation& t) {
  validate(d, t);
  switch (d.kind) {
    case CurveKind::ContractibleLoop: return -2;
    case CurveKind::OrbifoldLoop: return LaurentPoly(cheb_t(d.self_intersections + 1, d.order));
    case CurveKind::Kinked: {
      LaurentPoly inner = cluster_expansion(*d.inner, t);
      return d.kinks % 2 ? -inner : inner;
    }
    default: break;
  }
  if (d.arc) return LaurentPoly::x(*d.arc);
  return expansion_of(build_snake_graph(d, t));
}

MatchingPoset matching_poset(const SnakeGraph& g) {
  MatchingPoset p;
  p.nodes = g.matchings;
  std::map<Matching, int> index;
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    index[p.nodes[k]] = static_cast<int>(k);
    LaurentPoly h = g.chain.height(p.nodes[k]);
    p.heights.push_back(h);
    p.rank.push_back(h.terms().empty() ? 0 : mono_degree(h.terms().begin()->first));
  }
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    for (const auto& [tile, next] : g.chain.twists(p.nodes[k])) {
      auto it = index.find(next);
      if (it == index.end()) continue;
      if (p.rank[it->second] <= p.rank[k]) continue;
      p.covers.push_back({static_cast<int>(k), it->second, p.heights[it->second].div_exact_monomial(p.heights[k])});
    }
  }
  std::sort(p.covers.begin(), p.covers.end(),
            [](const PosetEdge& a, const PosetEdge& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
  auto lo = std::min_element(p.rank.begin(), p.rank.end());
  p.minimum = static_cast<int>(lo - p.rank.begin());
  return p;
}

std::string to_dot(const MatchingPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < p.nodes.size(); ++k) os << "  n" << k << " [label=\"" << p.heights[k].str() << "\"];\n";
  for (const auto& e : p.covers) os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string matching_str(const ChainGraph& g, const Matching& m) {
  std::string s = "{";
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) s += ", ";
    s += g.edges()[m[k]].name();
  }
  return s + "}";
}

}  // namespace orbsnake
