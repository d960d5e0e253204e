#include "invdom/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "invdom/constructions.hpp"
#include "invdom/errors.hpp"
#include "invdom/graph6.hpp"

namespace invdom {

CheckSet CheckSet::parse(std::string_view list) {
  if (list == "all") return {};
  CheckSet c{false, false, false, false};
  std::stringstream ss{std::string(list)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "conjecture") continue;  // always on
    if (item == "three_halves") c.three_halves = true;
    else if (item == "main") c.main_theorem = true;
    else if (item == "strong") c.strong = true;
    else if (item == "b") c.bipartite = true;
    else throw std::invalid_argument("unknown check '" + item + "'");
  }
  return c;
}

bool GraphReport::failed() const {
  return conjecture_ok == false || three_halves_ok == false || main_thm_ok == false;
}

GraphReport analyze_graph(const Graph& g, const CheckSet& checks) {
  const auto start = std::chrono::steady_clock::now();
  GraphReport r;
  r.graph6 = write_graph6(g);
  r.n = g.n();
  r.m = g.edge_count();
  const Witnessed gam = gamma(g);
  r.gamma = gam.value;
  r.alpha = alpha(g).value;
  if (checks.bipartite) r.b = max_induced_bipartite(g).value;

  if (g.n() == 0 || has_isolated_vertex(g)) {
    r.warnings.emplace_back("graph has isolated vertices; inverse domination undefined");
  } else {
    r.inv_gamma = inverse_gamma(g).first;
    r.conjecture_ok = *r.inv_gamma <= *r.alpha;
    if (checks.strong) r.strong_inv_gamma = strong_inverse_gamma(g);
    if (checks.three_halves && !is_clique(g)) r.three_halves_ok = 2 * *r.inv_gamma <= 3 * *r.alpha - 2;
    if (checks.main_theorem) {
      try {
        const InverseCertificate c = theorem_main_construct(g, gam.witness);
        r.main_thm_size = c.t_set.size();
        r.main_thm_bound = c.bound_value;
        r.main_thm_ok = !verify_certificate(g, c).has_value();
      } catch (const InternalContradiction& e) {
        r.main_thm_ok = false;
        r.warnings.emplace_back(std::string("main construction: ") + e.what());
      }
    }
  }
  r.elapsed_micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

template <class T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
std::string show(const std::optional<bool>& v) { return v ? (*v ? "ok" : "FAIL") : "n/a"; }

std::vector<int> members(VertexSet s) { return s.to_vector(); }

}  // namespace

nlohmann::ordered_json to_json(const GraphReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["gamma"] = opt(r.gamma);
  j["alpha"] = opt(r.alpha);
  j["inv_gamma"] = opt(r.inv_gamma);
  j["strong_inv_gamma"] = opt(r.strong_inv_gamma);
  j["b"] = opt(r.b);
  j["conjecture_ok"] = opt(r.conjecture_ok);
  j["three_halves_ok"] = r.three_halves_ok ? nlohmann::ordered_json(*r.three_halves_ok) : nlohmann::ordered_json("n/a");
  j["main_thm_ok"] = opt(r.main_thm_ok);
  j["main_thm_size"] = opt(r.main_thm_size);
  j["main_thm_bound"] = opt(r.main_thm_bound);
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  if (timings) j["elapsed_micros"] = r.elapsed_micros;
  return j;
}

std::string to_pretty(const GraphReport& r) {
  std::ostringstream os;
  os << "graph6            " << r.graph6 << "\n"
     << "vertices/edges    " << r.n << " / " << r.m << "\n"
     << "gamma             " << show(r.gamma) << "\n"
     << "alpha             " << show(r.alpha) << "\n"
     << "inverse gamma     " << show(r.inv_gamma) << "\n"
     << "strong inverse    " << show(r.strong_inv_gamma) << "\n"
     << "b (bipartite)     " << show(r.b) << "\n"
     << "conjecture        " << show(r.conjecture_ok) << "\n"
     << "three-halves      " << show(r.three_halves_ok) << "\n"
     << "main construction " << show(r.main_thm_ok);
  if (r.main_thm_size) os << " (|T| = " << *r.main_thm_size << " <= " << *r.main_thm_bound << ")";
  os << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::optional<std::string> verify_certificate(const Graph& g, const InverseCertificate& c) {
  auto dominates = [&](VertexSet s) {
    for (int v = 0; v < g.n(); ++v) {
      bool hit = s.contains(v);
      for (int u = 0; u < g.n() && !hit; ++u) hit = s.contains(u) && g.adjacent(u, v);
      if (!hit) return false;
    }
    return true;
  };
  for (int v = 0; v < g.n(); ++v)
    if (c.d_set.contains(v) && c.t_set.contains(v)) return "D and T share vertex " + std::to_string(v);
  if (!c.d_set.subset_of(g.vertices()) || !c.t_set.subset_of(g.vertices())) return "set exceeds vertex range";
  if (!dominates(c.d_set)) return "D does not dominate";
  if (!dominates(c.t_set)) return "T does not dominate";
  if (c.d_set.size() != gamma(g).value) return "D is not minimum";
  if (c.t_set.size() > c.bound_value)
    return "|T| = " + std::to_string(c.t_set.size()) + " exceeds bound " + std::to_string(c.bound_value);
  return std::nullopt;
}

nlohmann::ordered_json to_json(const InverseCertificate& c) {
  nlohmann::ordered_json j;
  j["d"] = members(c.d_set);
  j["t"] = members(c.t_set);
  j["t_size"] = c.t_set.size();
  j["bound_kind"] = std::string(to_string(c.bound_kind));
  j["bound_value"] = c.bound_value;
  j["route"] = std::string(c.route);
  return j;
}

}  // namespace invdom
