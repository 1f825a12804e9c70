#include "orbsnake/chain.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

namespace orbsnake {

namespace {

constexpr int kIdA = 1, kIdB = 2, kIdW = 3, kIdZ = 4;
constexpr int kBaseI = 100, kBaseA = 200, kBaseB = 300, kBaseL = 400, kBaseR = 500;

int L(int k) { return 2 * k; }
int R(int k) { return 2 * k + 1; }

std::pair<double, double> coord(int v) { return {static_cast<double>(v % 2), static_cast<double>(v / 2)}; }

}  // namespace

UniversalLabels::UniversalLabels(int n_)
    : n(n_), aj(n_), bj(n_), lj(n_), rj(n_), i(n_ + 1), y(n_ + 1) {
  if (n_ < 1) throw Error(ErrorKind::Input, "universal chain needs n >= 1");
}

UniversalLabels UniversalLabels::generic(int n) {
  if (n > 99) throw Error(ErrorKind::Input, "generic labels support n <= 99");
  UniversalLabels u(n);
  u.a = LaurentPoly::x(kIdA);
  u.b = LaurentPoly::x(kIdB);
  u.w = LaurentPoly::x(kIdW);
  u.z = LaurentPoly::x(kIdZ);
  for (int j = 1; j <= n; ++j) {
    u.i[j] = LaurentPoly::x(kBaseI + j);
    u.y[j] = LaurentPoly::y(kBaseI + j);
  }
  for (int j = 1; j < n; ++j) {
    u.aj[j] = LaurentPoly::x(kBaseA + j);
    u.bj[j] = LaurentPoly::x(kBaseB + j);
    u.lj[j] = LaurentPoly::x(kBaseL + j);
    u.rj[j] = LaurentPoly::x(kBaseR + j);
  }
  return u;
}

std::string Edge::name() const {
  switch (slot) {
    case Slot::A: return "a";
    case Slot::B: return "b";
    case Slot::Wp: return "w'";
    case Slot::Zp: return "z'";
    case Slot::Aj: return "a" + std::to_string(j);
    case Slot::Bj: return "b" + std::to_string(j);
    case Slot::Lj: return "l" + std::to_string(j);
    case Slot::Rj: return "r" + std::to_string(j);
  }
  return "?";
}

ChainGraph::ChainGraph(UniversalLabels labels, bool allow_degenerate) : labels_(std::move(labels)) {
  const int n = labels_.n;
  for (int j = 1; j <= n; ++j) {
    if (!labels_.i[j].is_monomial()) throw Error(ErrorKind::Input, "tile marker i" + std::to_string(j) + " must be a monomial");
  }
  auto add = [&](Slot s, int j, int u, int v, const LaurentPoly& lab) {
    if (!lab.is_zero()) edges_.push_back(Edge{s, j, u, v, lab});
  };
  add(Slot::A, 0, L(0), R(0), labels_.a);
  add(Slot::B, 0, L(0), L(1), labels_.b);
  for (int j = 1; j < n; ++j) {
    if (!allow_degenerate && labels_.aj[j].is_zero() && labels_.bj[j].is_zero())
      throw Error(ErrorKind::Input, "a" + std::to_string(j) + " and b" + std::to_string(j) + " are both zero");
    add(Slot::Lj, j, L(j), L(j + 1), labels_.lj[j]);
    add(Slot::Rj, j, R(j - 1), R(j), labels_.rj[j]);
    add(Slot::Aj, j, L(j), R(j), labels_.aj[j]);
    add(Slot::Bj, j, R(j - 1), L(j + 1), labels_.bj[j]);
  }
  const bool even = n % 2 == 0;
  add(Slot::Wp, 0, R(n - 1), R(n), even ? labels_.w : labels_.z);
  add(Slot::Zp, 0, L(n), R(n), even ? labels_.z : labels_.w);
}

int ChainGraph::find(Slot s, int j) const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].slot == s && edges_[e].j == j) return static_cast<int>(e);
  return -1;
}

bool ChainGraph::uses(const Matching& m, Slot s, int j) const {
  int e = find(s, j);
  return e >= 0 && std::binary_search(m.begin(), m.end(), e);
}

bool is_perfect(const ChainGraph& g, const Matching& m) {
  std::vector<int> cover(g.vertex_count(), 0);
  for (int e : m) {
    ++cover[g.edges()[e].u];
    ++cover[g.edges()[e].v];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

Matching ChainGraph::minimal() const {
  const int n = labels_.n;
  Matching m;
  auto need = [&](Slot s, int j) {
    int e = find(s, j);
    if (e < 0) throw Error(ErrorKind::Internal, "minimal matching edge is missing");
    m.push_back(e);
  };
  need(Slot::A, 0);
  for (int j = 1; j < n; ++j) need(j % 2 ? Slot::Lj : Slot::Rj, j);
  need(w_slot(), 0);
  std::sort(m.begin(), m.end());
  if (!is_perfect(*this, m)) throw Error(ErrorKind::Internal, "minimal matching is not perfect");
  return m;
}

std::vector<Matching> ChainGraph::matchings_dp() const {
  const int V = vertex_count();
  std::vector<std::vector<std::pair<int, int>>> fwd(V);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    int u = std::min(edges_[e].u, edges_[e].v), v = std::max(edges_[e].u, edges_[e].v);
    fwd[u].emplace_back(static_cast<int>(e), v - u);
  }
  std::map<unsigned, std::vector<Matching>> states;
  states[0].push_back({});
  for (int v = 0; v < V; ++v) {
    std::map<unsigned, std::vector<Matching>> next;
    for (auto& [mask, parts] : states) {
      if (mask & 1u) {
        auto& dst = next[mask >> 1];
        for (auto& p : parts) dst.push_back(std::move(p));
        continue;
      }
      for (const auto& [e, d] : fwd[v]) {
        if (mask & (1u << d)) continue;
        auto& dst = next[(mask | (1u << d)) >> 1];
        for (const auto& p : parts) {
          Matching q = p;
          q.push_back(e);
          dst.push_back(std::move(q));
        }
      }
    }
    states = std::move(next);
  }
  std::vector<Matching> out = std::move(states[0]);
  for (auto& m : out) std::sort(m.begin(), m.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, Matching>> ChainGraph::twists(const Matching& m) const {
  const int n = labels_.n;
  auto l = [&](int j) { return j == 0 ? find(Slot::B) : j == n ? find(Slot::Zp) : find(Slot::Lj, j); };
  auto r = [&](int j) { return j == 0 ? find(Slot::A) : j == n ? find(Slot::Wp) : find(Slot::Rj, j); };
  auto a = [&](int j) { return j == 0 ? find(Slot::A) : j == n ? find(Slot::Zp) : find(Slot::Aj, j); };
  auto b = [&](int j) { return j == 0 ? find(Slot::B) : j == n ? find(Slot::Wp) : find(Slot::Bj, j); };
  std::set<int> have(m.begin(), m.end());
  std::vector<std::pair<int, Matching>> out;
  std::set<Matching> seen;
  auto swap = [&](int tile, int p1, int p2, int q1, int q2) {
    if (p1 < 0 || p2 < 0 || q1 < 0 || q2 < 0 || p1 == p2 || q1 == q2) return;
    if (!have.count(p1) || !have.count(p2)) return;
    std::set<int> s = have;
    s.erase(p1);
    s.erase(p2);
    if (s.count(q1) || s.count(q2)) return;
    s.insert(q1);
    s.insert(q2);
    Matching res(s.begin(), s.end());
    if (seen.insert(res).second) out.emplace_back(tile, std::move(res));
  };
  auto swap3 = [&](int tile, std::array<int, 3> p, std::array<int, 3> q) {
    for (int e : p)
      if (e < 0 || !have.count(e)) return;
    std::set<int> s = have;
    for (int e : p) s.erase(e);
    for (int e : q) {
      if (e < 0 || s.count(e)) return;
      s.insert(e);
    }
    Matching res(s.begin(), s.end());
    if (seen.insert(res).second) out.emplace_back(tile, std::move(res));
  };
  for (int j = 1; j < n; ++j) {
    if (find(Slot::Aj, j) >= 0 || find(Slot::Bj, j) >= 0) continue;
    // Tiles j and j + 1 glued along a virtual a_j: one class takes the two edges of tile j adjacent to a_j and
    // the edge of tile j + 1 opposite it, the other class the rest of the 6-cycle.
    for (bool before_a : {true, false}) {
      for (bool after_a : {true, false}) {
        int opp1 = before_a ? a(j - 1) : r(j - 1);
        std::array<int, 2> adj1 = before_a ? std::array<int, 2>{l(j - 1), r(j)} : std::array<int, 2>{b(j - 1), r(j)};
        int opp2 = after_a ? a(j + 1) : l(j + 1);
        std::array<int, 2> adj2 = after_a ? std::array<int, 2>{l(j), r(j + 1)} : std::array<int, 2>{b(j + 1), l(j)};
        std::array<int, 3> x{adj1[0], adj1[1], opp2}, y{opp1, adj2[0], adj2[1]};
        swap3(j, x, y);
        swap3(j, y, x);
      }
    }
  }
  for (int j = 1; j <= n; ++j) {
    const std::array<std::array<int, 4>, 4> cycles{{{a(j - 1), a(j), l(j - 1), r(j)},
                                                    {b(j - 1), b(j), l(j), r(j - 1)},
                                                    {a(j - 1), l(j), b(j), l(j - 1)},
                                                    {b(j - 1), r(j), a(j), r(j - 1)}}};
    for (const auto& c : cycles) {
      swap(j, c[0], c[1], c[2], c[3]);
      swap(j, c[2], c[3], c[0], c[1]);
    }
  }
  return out;
}

std::vector<Matching> ChainGraph::matchings_bfs() const {
  Matching start = minimal();
  std::set<Matching> seen{start};
  std::deque<Matching> queue{start};
  while (!queue.empty()) {
    Matching cur = std::move(queue.front());
    queue.pop_front();
    for (auto& [tile, next] : twists(cur)) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> ChainGraph::enclosed_tiles(const Matching& m) const {
  Matching base = minimal();
  std::vector<int> diff;
  std::set_symmetric_difference(m.begin(), m.end(), base.begin(), base.end(), std::back_inserter(diff));
  std::vector<int> tiles;
  for (int j = 1; j <= labels_.n; ++j) {
    const double px = 0.5, py = j - 0.5;
    bool in = false;
    for (int e : diff) {
      auto [x1, y1] = coord(edges_[e].u);
      auto [x2, y2] = coord(edges_[e].v);
      if ((y1 > py) != (y2 > py)) {
        double xi = x1 + (py - y1) * (x2 - x1) / (y2 - y1);
        if (xi > px) in = !in;
      }
    }
    if (in) tiles.push_back(j);
  }
  return tiles;
}

LaurentPoly ChainGraph::weight(const Matching& m) const {
  LaurentPoly w = 1;
  for (int e : m) w *= edges_[e].label;
  return w;
}

LaurentPoly ChainGraph::height(const Matching& m) const {
  LaurentPoly h = 1;
  for (int j : enclosed_tiles(m)) h *= labels_.y[j];
  return h;
}

}  // namespace orbsnake
