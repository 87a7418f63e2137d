#include "surfgeo/homeo.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>
#include <tuple>

#include "surfgeo/constructors.hpp"
#include "surfgeo/errors.hpp"
#include "surfgeo/obstructions.hpp"

namespace surfgeo {

namespace {

using ClassKey = std::tuple<BigInt, BigInt, int>;

ClassKey key_of(const HomeoClass& c) { return {c.b_plus, c.b_minus, c.parity == Parity::odd ? 1 : 0}; }

std::string multiple(const BigInt& n, const std::string& piece) {
  if (n == 1) return piece;
  return n.str() + " " + piece;
}

struct Partner {
  std::string expr;
  std::optional<long> a, b;
};

struct Candidate {
  std::string label;
  std::string expr;
  std::optional<long> degree;
  std::vector<long> ci_degrees;
  SurfaceInvariants surface;
};

std::string join(const std::vector<long>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<HomeoPair> scan_candidate(const Candidate& c, const PairSearchSpace& space,
                                      const std::map<ClassKey, std::vector<Partner>>& partners) {
  std::vector<HomeoPair> out;
  TopInvariants base = derive_topology(c.surface);
  for (long k = std::max(1L, space.k_first); k <= space.k_last; ++k) {
    ObstructionVerdict v;
    try {
      v = einstein_obstruction(c.surface, k, Threshold::one_third);
    } catch (const NotApplicable&) {
      return out;
    }
    if (!v.obstructed) continue;
    TopInvariants m = blow_up(base, k);
    HomeoClass cls = homeo_class(m);
    auto it = partners.find(key_of(cls));
    if (it == partners.end()) continue;
    for (const Partner& p : it->second)
      out.push_back(HomeoPair{c.label, c.expr, c.degree, c.ci_degrees, k, p.expr, p.a, p.b, m, cls});
  }
  return out;
}

}  // namespace

std::string render(const HomeoClass& c) {
  if (c.parity == Parity::even) return "(" + c.b_plus.str() + ", " + c.b_minus.str() + ", even)";
  std::vector<std::string> parts;
  if (!c.b_plus.is_zero()) parts.push_back(multiple(c.b_plus, "CP²"));
  if (!c.b_minus.is_zero()) parts.push_back(multiple(c.b_minus, "CP̄²"));
  if (parts.empty()) return "S⁴";
  return parts.size() == 1 ? parts[0] : parts[0] + " # " + parts[1];
}

HomeoClass homeo_class(const TopInvariants& t) {
  if (!t.simply_connected) throw NotClassifiable("manifold is not simply connected; Freedman's classification does not apply");
  validate(t);
  BigInt b2 = *t.b2();
  if (b2 < 1) throw NotClassifiable("b2 = 0: nothing to classify beyond S^4");
  HomeoClass c{*t.b_plus(), *t.b_minus(), t.spin ? Parity::even : Parity::odd};
  if (t.spin && t.signature % 16 != 0)
    throw InconsistencyError("spin manifold with signature " + t.signature.str() + " not divisible by 16 (Rokhlin)");
  return c;
}

bool homeomorphic(const TopInvariants& a, const TopInvariants& b) { return homeo_class(a) == homeo_class(b); }

std::optional<std::string> class_discrepancy_note(const HomeoClass& c) {
  if (c == HomeoClass{169, 633, Parity::odd})
    return "b+ = 1 + 2·p_g = 169 for p_g = 84; the class is sometimes printed as 129 CP² # 633 CP̄², "
           "which contradicts c1² = 216, p_g = 84 (those force χ = 804, b+ = 169)";
  return std::nullopt;
}

std::vector<HomeoPair> find_pairs(const PairSearchSpace& space, unsigned threads) {
  std::map<ClassKey, std::vector<Partner>> partners;
  for (long a = space.bidegree_first; a <= space.bidegree_last; ++a) {
    if (a < 2 || a % 2 != 0) continue;
    for (long b = a; b <= space.bidegree_last; ++b) {
      if (b % 2 != 0) continue;
      SurfaceInvariants n = horikawa_p1xp1(a, b);
      if (!n.ample_canonical) continue;
      std::string expr = "horikawa_p1xp1(" + std::to_string(a) + "," + std::to_string(b) + ")";
      partners[key_of(homeo_class(derive_topology(n)))].push_back(Partner{expr, a, b});
    }
  }
  if (space.include_plane10) {
    SurfaceInvariants n = horikawa_plane10();
    partners[key_of(homeo_class(derive_topology(n)))].push_back(Partner{"horikawa_plane10", std::nullopt, std::nullopt});
  }

  std::vector<Candidate> candidates;
  for (long d = std::max(1L, space.d_first); d <= space.d_last; ++d)
    candidates.push_back(Candidate{std::to_string(d), "hypersurface(" + std::to_string(d) + ")", d, {}, hypersurface_p3(d)});
  for (const auto& degrees : space.complete_intersections) {
    auto ambient = static_cast<long>(degrees.size()) + 2;
    candidates.push_back(Candidate{"ci(" + join(degrees, ";") + ")", "ci(" + join(degrees, ",") + ")", std::nullopt,
                                   degrees, complete_intersection(degrees, ambient)});
  }
  if (candidates.empty() || partners.empty() || space.k_last < std::max(1L, space.k_first)) return {};

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(candidates.size()));

  std::vector<std::vector<HomeoPair>> per_candidate(candidates.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) per_candidate[i] = scan_candidate(candidates[i], space, partners);
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < candidates.size(); i += threads)
          per_candidate[i] = scan_candidate(candidates[i], space, partners);
      }));
    }
    for (auto& f : workers) f.get();
  }

  std::vector<HomeoPair> out;
  for (auto& chunk : per_candidate) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace surfgeo
