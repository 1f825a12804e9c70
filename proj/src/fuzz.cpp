#include "orbsnake/fuzz.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace orbsnake {

namespace {

struct DiskIndex {
  const Triangulation& t;
  std::map<int, std::vector<int>> tris_of;  // arc -> triangles containing it

  explicit DiskIndex(const Triangulation& tr) : t(tr) {
    for (std::size_t i = 0; i < t.triangles().size(); ++i)
      for (int s : t.triangles()[i]) tris_of[s].push_back(static_cast<int>(i));
  }

  ArcKind kind(int arc) const { return t.arc(arc).kind; }

  int across(int arc, int tri) const {
    if (kind(arc) != ArcKind::Standard) return tri;
    const auto& v = tris_of.at(arc);
    return v[0] == tri ? v[1] : v[0];
  }

  int third(int tri, int s, int u) const {
    for (int x : t.triangles()[tri])
      if (x != s && x != u) return x;
    throw Error(ErrorKind::Internal, "degenerate triangle");
  }

  // (p, q) with (p, q, arc) clockwise in tri.
  std::pair<int, int> corner_opposite(int tri, int arc) const {
    const auto& s = t.triangles()[tri];
    for (int r = 0; r < 3; ++r)
      if (s[(r + 2) % 3] == arc) return {s[r], s[(r + 1) % 3]};
    throw Error(ErrorKind::Internal, "arc not in triangle");
  }

  int pending_side(int tri) const {
    for (int x : t.triangles()[tri])
      if (kind(x) == ArcKind::Pending) return x;
    return 0;
  }

  // Standard arcs crossed on the dual-tree path from triangle a to triangle b.
  std::vector<int> tree_path(int a, int b) const {
    std::map<int, std::pair<int, int>> prev;  // triangle -> (previous triangle, arc)
    std::deque<int> q{a};
    prev[a] = {-1, 0};
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      if (cur == b) break;
      for (int s : t.triangles()[cur]) {
        if (kind(s) != ArcKind::Standard) continue;
        int nx = across(s, cur);
        if (prev.count(nx)) continue;
        prev[nx] = {cur, s};
        q.push_back(nx);
      }
    }
    std::vector<int> arcs;
    for (int cur = b; cur != a; cur = prev.at(cur).first) arcs.push_back(prev.at(cur).second);
    std::reverse(arcs.begin(), arcs.end());
    return arcs;
  }
};

void set_transition(const Triangulation& t, CrossingToken& from, int to_arc) {
  auto tris = t.triangles_with(from.arc, to_arc);
  if (tris.empty()) throw Error(ErrorKind::Internal, "consecutive crossings share no triangle");
  const auto& tri = t.triangles()[tris.front()];
  int c = 0;
  for (int x : tri)
    if (x != from.arc && x != to_arc) c = x;
  from.glue = c;
  from.turn = t.turn(from.arc, to_arc, c);
}

}  // namespace

Triangulation Fuzzer::random_disk(const DiskOptions& opt) {
  std::vector<Arc> arcs;
  std::vector<std::array<int, 3>> tris;
  std::vector<int> boundary;
  int next_id = 1;
  auto new_arc = [&](ArcKind k) {
    Arc a{next_id++, k, 0, ""};
    if (k == ArcKind::Pending) a.order = uniform(opt.min_order, opt.max_order);
    arcs.push_back(a);
    if (k == ArcKind::Boundary) boundary.push_back(a.id);
    return a.id;
  };
  auto add_triangle = [&](int e) {
    if (coin(opt.pending_rate)) {
      int beta = new_arc(ArcKind::Boundary), rho = new_arc(ArcKind::Pending);
      tris.push_back(coin(0.5) ? std::array<int, 3>{e, beta, rho} : std::array<int, 3>{e, rho, beta});
    } else {
      int p = new_arc(ArcKind::Boundary), q = new_arc(ArcKind::Boundary);
      tris.push_back({e, p, q});
    }
  };
  add_triangle(new_arc(ArcKind::Boundary));
  for (int k = 1; k < opt.triangles; ++k) {
    std::size_t pick = static_cast<std::size_t>(uniform(0, static_cast<int>(boundary.size()) - 1));
    int e = boundary[pick];
    boundary.erase(boundary.begin() + static_cast<long>(pick));
    arcs[static_cast<std::size_t>(e - 1)].kind = ArcKind::Standard;
    add_triangle(e);
  }
  return Triangulation(std::move(arcs), std::move(tris));
}

std::optional<CurveDescriptor> Fuzzer::random_open(const Triangulation& t, const CurveOptions& opt) {
  DiskIndex ix(t);
  const bool general = opt.kind == CurveKind::GeneralizedArc;
  int ti = uniform(0, static_cast<int>(t.triangles().size()) - 1);
  std::vector<int> firsts;
  for (int s : t.triangles()[ti])
    if (t.arc(s).internal()) firsts.push_back(s);
  if (firsts.empty()) return std::nullopt;
  int cur = firsts[static_cast<std::size_t>(uniform(0, static_cast<int>(firsts.size()) - 1))];

  CurveDescriptor d;
  d.kind = opt.kind;
  auto [a, b] = ix.corner_opposite(ti, cur);
  bool start_single = false;
  if (general && ix.kind(cur) == ArcKind::Pending && t.arc(cur).order >= 3 && coin(opt.endpoint_winding_rate)) {
    start_single = true;
    d.ends.start_winding = uniform(1, t.arc(cur).order - 2);
  } else {
    d.ends.a = a;
    d.ends.b = b;
  }
  int n = 0;
  ti = ix.across(cur, ti);
  while (true) {
    CrossingToken tok;
    tok.arc = cur;
    const bool pending = ix.kind(cur) == ArcKind::Pending;
    const int remaining = opt.max_crossings - n;
    bool end_single = false;
    if (pending && !(d.word.empty() && start_single)) {
      const int p = t.arc(cur).order;
      if (general && p >= 3 && !d.word.empty() && coin(opt.endpoint_winding_rate)) {
        end_single = true;
      } else if (remaining < 2) {
        return std::nullopt;
      } else {
        if (general) tok.winding = uniform(0, p - 2);
        n += 2;
      }
      if (end_single) {
        if (remaining < 1) return std::nullopt;
        n += 1;
        d.ends.end_winding = uniform(1, p - 2);
      }
      if (!tok.winding && !end_single && d.word.empty() && coin(0.5)) tok.base = coin(0.5) ? Turn::Left : Turn::Right;
    } else {
      if (remaining < 1) return std::nullopt;
      n += 1;
    }
    d.word.push_back(tok);
    if (end_single) break;
    std::vector<int> exits;
    for (int s : t.triangles()[ti]) {
      if (!t.arc(s).internal() || s == cur) continue;
      exits.push_back(s);
    }
    if (exits.empty() || n >= opt.max_crossings || coin(0.3)) break;
    int nx = exits[static_cast<std::size_t>(uniform(0, static_cast<int>(exits.size()) - 1))];
    d.word.back().glue = ix.third(ti, cur, nx);
    d.word.back().turn = t.turn(cur, nx, *d.word.back().glue);
    cur = nx;
    ti = ix.across(cur, ti);
  }
  if (d.word.size() == 1 && d.ends.start_winding && d.ends.end_winding) return std::nullopt;
  if (d.word.size() > 1 && d.word.front().base) d.word.front().base.reset();
  if (!d.ends.end_winding) {
    auto [w, z] = ix.corner_opposite(ti, cur);
    d.ends.w = w;
    d.ends.z = z;
  }
  return d;
}

std::optional<CurveDescriptor> Fuzzer::random_closed(const Triangulation& t, const CurveOptions& opt) {
  DiskIndex ix(t);
  std::vector<int> pend;
  for (std::size_t i = 0; i < t.triangles().size(); ++i)
    if (ix.pending_side(static_cast<int>(i))) pend.push_back(static_cast<int>(i));
  if (pend.size() < 2) return std::nullopt;
  const int r = uniform(2, std::min<int>(4, static_cast<int>(pend.size()) + 1));
  std::vector<int> seq;
  for (int k = 0; k < r; ++k) {
    int pick;
    do {
      pick = pend[static_cast<std::size_t>(uniform(0, static_cast<int>(pend.size()) - 1))];
    } while (!seq.empty() && pick == seq.back());
    seq.push_back(pick);
  }
  if (seq.front() == seq.back()) return std::nullopt;
  for (int period = 1; period < r; ++period) {
    if (r % period) continue;
    bool periodic = true;
    for (int k = 0; k < r; ++k) periodic = periodic && seq[k] == seq[(k + period) % r];
    if (periodic) return std::nullopt;
  }
  CurveDescriptor d;
  d.kind = CurveKind::ClosedCurve;
  int n = 0;
  for (int k = 0; k < r; ++k) {
    int rho = ix.pending_side(seq[k]);
    CrossingToken tok;
    tok.arc = rho;
    tok.winding = uniform(0, t.arc(rho).order - 2);
    d.word.push_back(tok);
    n += 2;
    for (int s : ix.tree_path(seq[k], seq[(k + 1) % r])) {
      CrossingToken st;
      st.arc = s;
      d.word.push_back(st);
      n += 1;
    }
  }
  if (n > opt.max_crossings) return std::nullopt;
  const std::size_t m = d.word.size();
  for (std::size_t k = 0; k < m; ++k) set_transition(t, d.word[k], d.word[(k + 1) % m].arc);
  for (std::size_t k = 0; k < m; ++k) {
    auto& tok = d.word[k];
    if (ix.kind(tok.arc) == ArcKind::Pending && d.word[(k + m - 1) % m].turn != tok.turn)
      tok.base = coin(0.5) ? Turn::Left : Turn::Right;
  }
  return d;
}

std::optional<CurveDescriptor> Fuzzer::random_curve(const Triangulation& t, const CurveOptions& opt) {
  if (opt.kind == CurveKind::ClosedCurve) return random_closed(t, opt);
  return random_open(t, opt);
}

FuzzCase Fuzzer::next(const DiskOptions& disk, const CurveOptions& curve) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Triangulation t = random_disk(disk);
    auto c = random_curve(t, curve);
    if (!c) continue;
    validate(*c, t);
    return {std::move(t), std::move(*c)};
  }
  throw Error(ErrorKind::Internal, "fuzzer could not produce a curve");
}

}  // namespace orbsnake
