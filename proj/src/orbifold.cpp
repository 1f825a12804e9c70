#include "orbsnake/orbifold.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

namespace orbsnake {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Input, msg); }

std::string arc_kind_name(ArcKind k) {
  switch (k) {
    case ArcKind::Standard: return "standard";
    case ArcKind::Pending: return "pending";
    case ArcKind::Boundary: return "boundary";
  }
  return "standard";
}

ArcKind arc_kind_from(const std::string& s) {
  if (s == "standard") return ArcKind::Standard;
  if (s == "pending") return ArcKind::Pending;
  if (s == "boundary") return ArcKind::Boundary;
  fail("unknown arc kind '" + s + "'");
}

std::string turn_name(Turn t) { return t == Turn::Left ? "left" : "right"; }

Turn turn_from(const std::string& s) {
  if (s == "left") return Turn::Left;
  if (s == "right") return Turn::Right;
  fail("unknown turn '" + s + "'");
}

void check_schema(const json& j) {
  if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion)
    fail("unsupported schema_version " + std::to_string(j.at("schema_version").get<int>()));
}

}  // namespace

Triangulation::Triangulation(std::vector<Arc> arcs, std::vector<std::array<int, 3>> triangles)
    : arcs_(std::move(arcs)), triangles_(std::move(triangles)) {
  std::set<int> ids;
  for (const auto& a : arcs_) {
    if (!ids.insert(a.id).second) fail("duplicate arc id " + std::to_string(a.id));
    if (a.id < 1) fail("arc ids must be positive");
    if (a.kind == ArcKind::Pending && a.order < 2) fail("pending arc " + std::to_string(a.id) + " needs order >= 2");
  }
  std::map<int, int> uses;
  for (const auto& tri : triangles_) {
    for (int s : tri) {
      if (!ids.count(s)) fail("unknown label " + std::to_string(s) + " in triangle");
      ++uses[s];
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) fail("triangle with a repeated side");
  }
  for (const auto& a : arcs_) {
    int u = uses.count(a.id) ? uses[a.id] : 0;
    if (a.kind == ArcKind::Standard && u != 2)
      fail("internal arc " + std::to_string(a.id) + " must appear in exactly two triangles");
    if (a.kind == ArcKind::Pending && u != 1)
      fail("pending arc " + std::to_string(a.id) + " must appear in exactly one triangle");
    if (a.kind == ArcKind::Boundary && u != 1)
      fail("boundary arc " + std::to_string(a.id) + " must appear in exactly one triangle");
  }
}

bool Triangulation::has(int id) const {
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.id == id; });
}

const Arc& Triangulation::arc(int id) const {
  for (const auto& a : arcs_)
    if (a.id == id) return a;
  fail("unknown label " + std::to_string(id));
}

std::vector<int> Triangulation::internal_ids() const {
  std::vector<int> r;
  for (const auto& a : arcs_)
    if (a.internal()) r.push_back(a.id);
  return r;
}

std::vector<int> Triangulation::triangles_with(int s, int t) const {
  std::vector<int> r;
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const auto& tri = triangles_[i];
    bool hs = std::find(tri.begin(), tri.end(), s) != tri.end();
    bool ht = std::find(tri.begin(), tri.end(), t) != tri.end();
    if (hs && ht && s != t) r.push_back(static_cast<int>(i));
  }
  return r;
}

bool Triangulation::clockwise(int a, int b, int t) const {
  for (const auto& tri : triangles_)
    for (int r = 0; r < 3; ++r)
      if (tri[r] == a && tri[(r + 1) % 3] == b && tri[(r + 2) % 3] == t) return true;
  return false;
}

std::optional<Turn> Triangulation::turn(int s, int t, int c) const {
  if (clockwise(s, t, c)) return Turn::Left;
  if (clockwise(t, s, c)) return Turn::Right;
  return std::nullopt;
}

std::pair<int, int> Triangulation::enclosing_sides(int rho) const {
  for (const auto& tri : triangles_)
    for (int r = 0; r < 3; ++r)
      if (tri[r] == rho) return {tri[(r + 1) % 3], tri[(r + 2) % 3]};
  fail("arc " + std::to_string(rho) + " is in no triangle");
}

namespace {

void check_transition(const Triangulation& t, const CrossingToken& from, const CrossingToken& to, std::size_t pos) {
  std::string where = "token " + std::to_string(pos);
  if (!from.turn || !from.glue) fail("broken triangle adjacency: " + where + " lacks turn/glue");
  if (!t.has(*from.glue)) fail("unknown label " + std::to_string(*from.glue));
  if (from.arc == to.arc) fail("broken triangle adjacency: " + where + " repeats arc without a pending pair");
  auto tr = t.turn(from.arc, to.arc, *from.glue);
  if (!tr)
    fail("broken triangle adjacency: glue " + std::to_string(*from.glue) + " does not close a triangle with arcs " +
         std::to_string(from.arc) + " and " + std::to_string(to.arc));
  if (*tr != *from.turn) fail("broken triangle adjacency: " + where + " turn disagrees with triangle orientation");
}

}  // namespace

void validate(const CurveDescriptor& d, const Triangulation& t) {
  switch (d.kind) {
    case CurveKind::ContractibleLoop:
      if (!d.word.empty()) fail("contractible loop carries a word");
      return;
    case CurveKind::OrbifoldLoop:
      if (!d.word.empty()) fail("orbifold loop carries a word");
      if (d.order < 2) fail("orbifold loop needs order >= 2");
      if (d.self_intersections < 0) fail("negative self-intersection count");
      return;
    case CurveKind::Kinked:
      if (d.kinks < 1) fail("kinked curve needs at least one kink");
      if (!d.inner) fail("kinked curve lacks inner curve");
      validate(*d.inner, t);
      return;
    default:
      break;
  }
  const bool closed = d.kind == CurveKind::ClosedCurve;
  if (closed && (d.ends.a || d.ends.b || d.ends.w || d.ends.z || d.ends.start_winding || d.ends.end_winding))
    fail("open endpoints on closed curve");
  if (d.arc) {
    if (closed || !d.word.empty()) fail("triangulation arc descriptor carries a word");
    t.arc(*d.arc);
    return;
  }
  if (d.word.empty()) fail("empty crossing word");
  const std::size_t m = d.word.size();
  for (std::size_t k = 0; k < m; ++k) {
    const auto& tok = d.word[k];
    if (!t.has(tok.arc)) fail("unknown label " + std::to_string(tok.arc));
    const Arc& a = t.arc(tok.arc);
    if (!a.internal()) fail("token " + std::to_string(k) + " crosses boundary arc " + std::to_string(tok.arc));
    bool single = (k == 0 && d.ends.start_winding > 0) || (k + 1 == m && d.ends.end_winding > 0);
    if (a.kind == ArcKind::Pending && !single) {
      if (tok.winding < 0 || tok.winding > a.order - 2)
        fail("winding out of range [0, " + std::to_string(a.order - 2) + "] at token " + std::to_string(k));
      if (d.kind == CurveKind::OrdinaryArc && tok.winding != 0) fail("ordinary arc with nonzero winding");
      auto [al, be] = t.enclosing_sides(tok.arc);
      if (tok.alpha && *tok.alpha != al && *tok.alpha != be) fail("alpha is not a side around pending arc");
      if (tok.beta && *tok.beta != al && *tok.beta != be) fail("beta is not a side around pending arc");
    } else {
      if (tok.winding != 0) fail("winding on a crossing that is not a pending pair");
      if (tok.base) fail("base side on a crossing that is not a pending pair");
    }
    if (tok.glue && !t.has(*tok.glue)) fail("unknown label " + std::to_string(*tok.glue));
  }
  for (std::size_t k = 0; k + 1 < m; ++k) check_transition(t, d.word[k], d.word[k + 1], k);
  if (closed) {
    check_transition(t, d.word[m - 1], d.word[0], m - 1);
  } else {
    auto check_ends = [&](int winding, std::optional<int> p, std::optional<int> q, int crossed, const char* what) {
      if (winding > 0) {
        const Arc& a = t.arc(crossed);
        if (a.kind != ArcKind::Pending) fail(std::string(what) + " winding needs a pending end arc");
        if (winding > a.order - 2) fail(std::string("winding out of range at ") + what);
        if (d.kind == CurveKind::OrdinaryArc) fail("ordinary arc with nonzero winding");
        return;
      }
      if (!p || !q) fail(std::string("missing ") + what + " endpoint labels");
      if (!t.has(*p)) fail("unknown label " + std::to_string(*p));
      if (!t.has(*q)) fail("unknown label " + std::to_string(*q));
      if (!t.clockwise(*p, *q, crossed))
        fail(std::string("broken triangle adjacency: ") + what + " triangle is not clockwise around the crossed arc");
    };
    check_ends(d.ends.start_winding, d.ends.a, d.ends.b, d.word.front().arc, "start");
    check_ends(d.ends.end_winding, d.ends.w, d.ends.z, d.word.back().arc, "end");
    if (m == 1 && d.ends.start_winding > 0 && d.ends.end_winding > 0)
      fail("a single crossing cannot both start and end at its pending base");
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (t.arc(d.word[k].arc).kind != ArcKind::Pending) continue;
    bool single = (k == 0 && d.ends.start_winding > 0) || (k + 1 == m && d.ends.end_winding > 0);
    if (single) continue;
    pending_base(d, t, k);
  }
}

Turn pending_base(const CurveDescriptor& d, const Triangulation& t, std::size_t k) {
  const auto& tok = d.word[k];
  const std::size_t m = d.word.size();
  std::optional<Turn> in, out = tok.turn;
  if (k > 0) {
    in = d.word[k - 1].turn;
  } else if (d.kind == CurveKind::ClosedCurve) {
    in = d.word[m - 1].turn;
  }
  if (tok.base) {
    if (in && out && *in == *out && *tok.base != *in)
      fail("base side disagrees with the turns at token " + std::to_string(k));
    if (in && !out && *tok.base != *in) fail("base side disagrees with incoming turn at token " + std::to_string(k));
    return *tok.base;
  }
  if (k > 0 && in) return *in;
  if (out && (d.kind == CurveKind::ClosedCurve || k + 1 < m)) return *out;
  (void)t;
  return Turn::Right;
}

ExtendedBMatrix principal_extend(const std::vector<std::vector<int>>& b, const std::vector<bool>& pending) {
  const int n = static_cast<int>(b.size());
  for (const auto& row : b)
    if (static_cast<int>(row.size()) != n) fail("exchange matrix is not square");
  if (!pending.empty() && static_cast<int>(pending.size()) != n) fail("pending flags do not match matrix size");
  ExtendedBMatrix r;
  r.n = n;
  r.rows = b;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    r.rows.push_back(e);
  }
  r.pending = pending.empty() ? std::vector<bool>(n, false) : pending;
  return r;
}

ExtendedBMatrix generalized_mutate(const ExtendedBMatrix& b, int k) {
  if (k < 1 || k > b.n) fail("mutation index " + std::to_string(k) + " out of range");
  const int c = k - 1;
  const int d = b.pending[c] ? 2 : 1;
  ExtendedBMatrix r = b;
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    for (int j = 0; j < b.n; ++j) {
      if (static_cast<int>(i) == c || j == c) {
        r.rows[i][j] = -b.rows[i][j];
        continue;
      }
      int bik = b.rows[i][c], bkj = b.rows[c][j];
      if (bik > 0 && bkj > 0) {
        r.rows[i][j] = b.rows[i][j] + d * bik * bkj;
      } else if (bik < 0 && bkj < 0) {
        r.rows[i][j] = b.rows[i][j] - d * bik * bkj;
      }
    }
  }
  return r;
}

std::string kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::OrdinaryArc: return "ordinary_arc";
    case CurveKind::GeneralizedArc: return "generalized_arc";
    case CurveKind::ClosedCurve: return "closed_curve";
    case CurveKind::ContractibleLoop: return "contractible_loop";
    case CurveKind::OrbifoldLoop: return "orbifold_loop";
    case CurveKind::Kinked: return "kinked";
  }
  return "ordinary_arc";
}

namespace {

CurveKind curve_kind_from(const std::string& s) {
  for (auto k : {CurveKind::OrdinaryArc, CurveKind::GeneralizedArc, CurveKind::ClosedCurve, CurveKind::ContractibleLoop,
                 CurveKind::OrbifoldLoop, CurveKind::Kinked})
    if (kind_name(k) == s) return k;
  fail("unknown curve kind '" + s + "'");
}

}  // namespace

json to_json(const Triangulation& t) {
  json arcs = json::array();
  for (const auto& a : t.arcs()) {
    json ja = {{"id", a.id}, {"kind", arc_kind_name(a.kind)}};
    if (a.kind == ArcKind::Pending) ja["order"] = a.order;
    if (!a.name.empty()) ja["name"] = a.name;
    arcs.push_back(ja);
  }
  json tris = json::array();
  for (const auto& tri : t.triangles()) tris.push_back({tri[0], tri[1], tri[2]});
  return {{"schema_version", kSchemaVersion}, {"arcs", arcs}, {"triangles", tris}};
}

Triangulation triangulation_from_json(const json& j) {
  try {
    check_schema(j);
    std::vector<Arc> arcs;
    for (const auto& ja : j.at("arcs")) {
      Arc a;
      a.id = ja.at("id").get<int>();
      a.kind = arc_kind_from(ja.at("kind").get<std::string>());
      if (ja.contains("order")) a.order = ja.at("order").get<int>();
      if (ja.contains("name")) a.name = ja.at("name").get<std::string>();
      arcs.push_back(a);
    }
    std::vector<std::array<int, 3>> tris;
    for (const auto& jt : j.at("triangles")) {
      if (jt.size() != 3) fail("triangle must list three labels");
      tris.push_back({jt[0].get<int>(), jt[1].get<int>(), jt[2].get<int>()});
    }
    return Triangulation(std::move(arcs), std::move(tris));
  } catch (const json::exception& e) {
    fail(std::string("malformed triangulation: ") + e.what());
  }
}

json to_json(const CurveDescriptor& d) {
  json j = {{"schema_version", kSchemaVersion}, {"kind", kind_name(d.kind)}};
  if (d.kind == CurveKind::OrbifoldLoop) {
    j["order"] = d.order;
    j["self_intersections"] = d.self_intersections;
    return j;
  }
  if (d.kind == CurveKind::ContractibleLoop) return j;
  if (d.kind == CurveKind::Kinked) {
    j["kinks"] = d.kinks;
    j["inner"] = to_json(*d.inner);
    return j;
  }
  if (d.arc) j["arc"] = *d.arc;
  json w = json::array();
  for (const auto& tok : d.word) {
    json jt = {{"arc", tok.arc}};
    if (tok.turn) jt["turn"] = turn_name(*tok.turn);
    if (tok.glue) jt["glue"] = *tok.glue;
    if (tok.winding) jt["winding"] = tok.winding;
    if (tok.alpha) jt["alpha"] = *tok.alpha;
    if (tok.beta) jt["beta"] = *tok.beta;
    if (tok.base) jt["base"] = turn_name(*tok.base);
    w.push_back(jt);
  }
  j["word"] = w;
  if (d.open()) {
    json e = json::object();
    if (d.ends.a) e["a"] = *d.ends.a;
    if (d.ends.b) e["b"] = *d.ends.b;
    if (d.ends.w) e["w"] = *d.ends.w;
    if (d.ends.z) e["z"] = *d.ends.z;
    if (d.ends.start_winding) e["start_winding"] = d.ends.start_winding;
    if (d.ends.end_winding) e["end_winding"] = d.ends.end_winding;
    j["endpoints"] = e;
  }
  return j;
}

CurveDescriptor curve_from_json(const json& j) {
  try {
    check_schema(j);
    CurveDescriptor d;
    d.kind = curve_kind_from(j.at("kind").get<std::string>());
    if (d.kind == CurveKind::OrbifoldLoop) {
      d.order = j.at("order").get<int>();
      d.self_intersections = j.value("self_intersections", 0);
      return d;
    }
    if (d.kind == CurveKind::ContractibleLoop) return d;
    if (d.kind == CurveKind::Kinked) {
      d.kinks = j.at("kinks").get<int>();
      d.inner = std::make_shared<CurveDescriptor>(curve_from_json(j.at("inner")));
      return d;
    }
    if (j.contains("arc")) d.arc = j.at("arc").get<int>();
    if (j.contains("word")) {
      for (const auto& jt : j.at("word")) {
        CrossingToken tok;
        tok.arc = jt.at("arc").get<int>();
        if (jt.contains("turn")) tok.turn = turn_from(jt.at("turn").get<std::string>());
        if (jt.contains("glue")) tok.glue = jt.at("glue").get<int>();
        tok.winding = jt.value("winding", 0);
        if (jt.contains("alpha")) tok.alpha = jt.at("alpha").get<int>();
        if (jt.contains("beta")) tok.beta = jt.at("beta").get<int>();
        if (jt.contains("base")) tok.base = turn_from(jt.at("base").get<std::string>());
        d.word.push_back(tok);
      }
    }
    if (j.contains("endpoints")) {
      const auto& e = j.at("endpoints");
      if (e.contains("a")) d.ends.a = e.at("a").get<int>();
      if (e.contains("b")) d.ends.b = e.at("b").get<int>();
      if (e.contains("w")) d.ends.w = e.at("w").get<int>();
      if (e.contains("z")) d.ends.z = e.at("z").get<int>();
      d.ends.start_winding = e.value("start_winding", 0);
      d.ends.end_winding = e.value("end_winding", 0);
    }
    return d;
  } catch (const json::exception& e) {
    fail(std::string("malformed curve: ") + e.what());
  }
}

json to_json(const ExtendedBMatrix& b) {
  return {{"schema_version", kSchemaVersion}, {"n", b.n}, {"rows", b.rows}, {"pending", b.pending}};
}

ExtendedBMatrix bmatrix_from_json(const json& j) {
  try {
    check_schema(j);
    ExtendedBMatrix b;
    b.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    b.n = j.contains("n") ? j.at("n").get<int>() : (b.rows.empty() ? 0 : static_cast<int>(b.rows[0].size()));
    b.pending = j.contains("pending") ? j.at("pending").get<std::vector<bool>>() : std::vector<bool>(b.n, false);
    if (static_cast<int>(b.pending.size()) != b.n) fail("pending flags do not match column count");
    if (static_cast<int>(b.rows.size()) < b.n) fail("extended matrix has fewer rows than columns");
    for (const auto& r : b.rows)
      if (static_cast<int>(r.size()) != b.n) fail("ragged extended matrix");
    return b;
  } catch (const json::exception& e) {
    fail(std::string("malformed matrix: ") + e.what());
  }
}

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Input, path + ": " + e.what());
  }
}

}  // namespace

CurveFile load_curve_file(const std::string& path, const std::string& fallback) {
  nlohmann::json j = read_json(path);
  CurveFile f;
  if (j.contains("triangulation")) {
    f.triangulation = triangulation_from_json(j.at("triangulation"));
  } else if (j.contains("triangulation_file")) {
    auto dir = std::filesystem::path(path).parent_path();
    f.triangulation = triangulation_from_json(read_json((dir / j.at("triangulation_file").get<std::string>()).string()));
  } else if (!fallback.empty()) {
    f.triangulation = triangulation_from_json(read_json(fallback));
  } else {
    throw Error(ErrorKind::Input, path + ": no triangulation given");
  }
  f.curve = curve_from_json(j);
  validate(f.curve, f.triangulation);
  return f;
}

}  // namespace orbsnake
