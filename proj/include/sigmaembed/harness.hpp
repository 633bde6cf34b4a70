#ifndef SIGMAEMBED_HARNESS_HPP
#define SIGMAEMBED_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "embeddings.hpp"
#include "series.hpp"

namespace sigmaembed {

enum class Status { HypothesisFails, Vacuous, Holds, Counterexample };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::HypothesisFails: return "hypothesis_fails";
    case Status::Vacuous: return "vacuous";
    case Status::Holds: return "holds";
    case Status::Counterexample: return "counterexample";
  }
  return "?";
}

struct Verdict {
  Status status = Status::Vacuous;
  bool nonvacuous = false;  // the cyclic-subgroup quantifier was exercised
  std::string detail;
  std::vector<std::pair<std::string, std::string>> witnesses;
  double seconds = 0;
};

struct HarnessOptions {
  uint64_t lattice_cap = kDefaultLatticeCap;
  uint64_t modularity_cap = kDefaultModularityCap;
  DPropertyMode d_mode = DPropertyMode::Full;
  bool representatives_only = false;
  uint64_t lemma_case_budget = 5'000'000;
};

/// Per-group analysis shared by all verifiers: the embedding context plus
/// memoized structural facts about lattice members.
class GroupStudy {
public:
  explicit GroupStudy(const Group& g, const HarnessOptions& opts = {})
      : opts_(opts), ctx_(g, opts.lattice_cap, opts.modularity_cap) {}

  const HarnessOptions& options() const { return opts_; }
  EmbeddingContext& context() { return ctx_; }
  const SubgroupLattice& lattice() const { return ctx_.lattice(); }
  const Group& group() const { return ctx_.group(); }

  bool member_cyclic(uint32_t m) {
    auto [it, fresh] = cyclic_.try_emplace(m);
    if (fresh) {
      const Subgroup& s = lattice().member(m);
      it->second = false;
      for (uint32_t e : s.indices())
        if (Subgroup::generated(group(), {e}).order() == s.order()) {
          it->second = true;
          break;
        }
    }
    return it->second;
  }

  bool member_abelian(uint32_t m) {
    auto [it, fresh] = abelian_.try_emplace(m);
    if (fresh) {
      const IndexSet& e = lattice().member(m).indices();
      it->second = true;
      for (size_t i = 0; i < e.size() && it->second; ++i)
        for (size_t j = i + 1; j < e.size(); ++j)
          if (group().mult(e[i], e[j]) != group().mult(e[j], e[i])) {
            it->second = false;
            break;
          }
    }
    return it->second;
  }

  bool member_supersoluble(uint32_t m) {
    auto [it, fresh] = supersoluble_.try_emplace(m);
    if (fresh) {
      if (m == lattice().whole_index()) {
        it->second = is_supersoluble(lattice());
      } else {
        it->second = is_supersoluble(substudy(m).lattice());
      }
    }
    return it->second;
  }

  /// Lattice index of Z_∞(G).
  uint32_t hypercenter_member() {
    if (!hypercenter_) {
      Subgroup z = hypercenter(group());
      hypercenter_ = lattice().index_of(z);
    }
    return *hypercenter_;
  }

  bool sylow_type(const SigmaPartition& sigma) {
    auto [it, fresh] = sylow_type_.try_emplace(sigma.to_string());
    if (fresh)
      it->second = is_sigma_full_of_sylow_type(lattice(), sigma, opts_.d_mode);
    return it->second;
  }

  bool hyp_embedded(uint32_t e) {
    auto [it, fresh] = hyp_.try_emplace(e);
    if (fresh) it->second = is_hypercyclically_embedded(lattice(), e);
    return it->second;
  }

  /// Study of a lattice member as a group in its own right, plus the map
  /// from parent lattice members (contained in it) to its lattice.
  GroupStudy& substudy(uint32_t m) {
    auto it = substudies_.find(m);
    if (it == substudies_.end()) {
      Group sub = lattice().member(m).as_group();
      it = substudies_.emplace(m, std::make_unique<GroupStudy>(sub, opts_)).first;
    }
    return *it->second;
  }

  /// Maps a parent lattice member x (must satisfy x ≤ m) into substudy(m).
  uint32_t map_into_substudy(uint32_t m, uint32_t x) {
    GroupStudy& s = substudy(m);
    IndexSet idx;
    for (uint32_t e : lattice().member(x).indices())
      idx.push_back(s.group().index_of(group().element(e)));
    std::sort(idx.begin(), idx.end());
    return *s.lattice().try_index_of(idx);
  }

  struct QuotientStudy {
    Epimorphism ep;
    std::unique_ptr<GroupStudy> study;
  };

  QuotientStudy& quotient_study(uint32_t n) {
    auto it = quotients_.find(n);
    if (it == quotients_.end()) {
      Epimorphism ep = quotient(group(), lattice().member(n));
      auto st = std::make_unique<GroupStudy>(ep.quotient(), opts_);
      it = quotients_.emplace(n, QuotientStudy{std::move(ep), std::move(st)}).first;
    }
    return it->second;
  }

  /// Image of parent member x in quotient_study(n)'s lattice (= xN/N).
  uint32_t map_into_quotient(uint32_t n, uint32_t x) {
    QuotientStudy& qs = quotient_study(n);
    Subgroup img = qs.ep.image_subgroup(lattice().member(x));
    return qs.study->lattice().index_of(img);
  }

  /// Restriction E∩ℋ as a Hall set of substudy(e).
  HallSet restrict_hall_set(const HallSet& hs, uint32_t e,
                            const SigmaPartition& sigma) {
    HallSet out;
    uint64_t eo = lattice().member(e).order();
    for (auto& [b, m] : hs.members) {
      if (sigma.block_part(eo, b) == 1) continue;
      out.members.emplace_back(b, map_into_substudy(e, lattice().meet_of(m, e)));
    }
    return out;
  }

  /// Image ℋN/N as a Hall set of quotient_study(n).
  HallSet quotient_hall_set(const HallSet& hs, uint32_t n,
                            const SigmaPartition& sigma) {
    HallSet out;
    QuotientStudy& qs = quotient_study(n);
    uint64_t qo = qs.study->group().order();
    for (auto& [b, m] : hs.members) {
      if (sigma.block_part(qo, b) == 1) continue;
      out.members.emplace_back(b, map_into_quotient(n, m));
    }
    return out;
  }

  std::string member_name(uint32_t m) const {
    return "subgroup#" + std::to_string(m) + "(order " +
           std::to_string(lattice().member(m).order()) + ")";
  }

private:
  HarnessOptions opts_;
  EmbeddingContext ctx_;
  std::map<uint32_t, bool> cyclic_, abelian_, supersoluble_, hyp_;
  std::map<std::string, bool> sylow_type_;
  std::optional<uint32_t> hypercenter_;
  std::map<uint32_t, std::unique_ptr<GroupStudy>> substudies_;
  std::map<uint32_t, QuotientStudy> quotients_;
};

// ---------------------------------------------------------------------------
// Theorem 1.5 / Propositions 3.1, 3.2 / Corollary 4.1
// ---------------------------------------------------------------------------

struct GateResult {
  bool pass = false;
  std::string reason;
  uint32_t quantified = 0;  // cyclic subgroups actually tested
  std::vector<std::pair<std::string, std::string>> witnesses;
};

namespace gate_detail {

/// The cyclic subgroups entering the hypothesis quantifier for an ambient
/// member V: prime order always; cyclic order 4 only when order4_active.
inline std::vector<uint32_t> quantified_cyclics(GroupStudy& study, uint32_t v,
                                                bool order4_active,
                                                uint32_t hypercenter_m) {
  const SubgroupLattice& lat = study.lattice();
  std::vector<uint32_t> out;
  for (uint32_t h : lat.subs_of(v)) {
    uint64_t o = lat.member(h).order();
    if (is_prime(o)) {
      out.push_back(h);
    } else if (o == 4 && order4_active && study.member_cyclic(h) &&
               !lat.leq(h, hypercenter_m)) {
      out.push_back(h);
    }
  }
  return out;
}

/// A Sylow p-subgroup of the member e, as a lattice index.
inline std::optional<uint32_t> sylow_member(GroupStudy& study, uint32_t e,
                                            uint64_t p) {
  const SubgroupLattice& lat = study.lattice();
  uint64_t part = 1, n = lat.member(e).order();
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  for (uint32_t m : lat.subs_of(e))
    if (lat.member(m).order() == part) return m;
  return std::nullopt;
}

inline bool sylow2_nonabelian(GroupStudy& study, uint32_t e) {
  auto s2 = sylow_member(study, e, 2);
  return s2 && !study.member_abelian(*s2);
}

}  // namespace gate_detail

/// Hypothesis gate of Theorem 1.5 for a fixed complete Hall σ-set:
/// (a) G is a σ-full group of Sylow type; (b) every member of ℋ is
/// supersoluble; (c) every cyclic subgroup of prime order (and of order 4,
/// when the Sylow 2-subgroup of E is nonabelian and H ≰ Z_∞(G)) of any
/// non-cyclic Hall σ_i-subgroup of E is weakly m-ℋ-permutable in G.
inline GateResult theorem15_hypothesis(GroupStudy& study, uint32_t e,
                                       const SigmaPartition& sigma,
                                       const HallSet& hs) {
  GateResult out;
  const SubgroupLattice& lat = study.lattice();
  if (!study.sylow_type(sigma)) {
    out.reason = "G is not a sigma-full group of Sylow type";
    return out;
  }
  for (auto& [b, m] : hs.members)
    if (!study.member_supersoluble(m)) {
      out.reason = "Hall set member is not supersoluble";
      out.witnesses.emplace_back("member", study.member_name(m));
      return out;
    }
  uint64_t eo = lat.member(e).order();
  bool order4 = gate_detail::sylow2_nonabelian(study, e);
  uint32_t zinf = study.hypercenter_member();
  for (BlockId b : sigma.sigma_of(eo)) {
    uint64_t part = sigma.block_part(eo, b);
    std::vector<char> seen_class;
    for (uint32_t v : lat.subs_of(e)) {
      if (lat.member(v).order() != part) continue;
      if (study.member_cyclic(v)) continue;
      if (study.options().representatives_only) {
        // one Hall subgroup per conjugacy class
        if (seen_class.empty()) seen_class.assign(lat.conjugacy_classes().size(), 0);
        uint32_t cls = 0;
        for (uint32_t c = 0; c < lat.conjugacy_classes().size(); ++c)
          for (uint32_t m : lat.conjugacy_classes()[c])
            if (m == v) cls = c;
        if (seen_class[cls]) continue;
        seen_class[cls] = 1;
      }
      for (uint32_t h :
           gate_detail::quantified_cyclics(study, v, order4, zinf)) {
        ++out.quantified;
        if (!study.context().is_weakly_m_h_permutable(h, hs, sigma)) {
          out.reason = "cyclic subgroup is not weakly m-H-permutable";
          out.witnesses.emplace_back("H", study.member_name(h));
          out.witnesses.emplace_back("hall_subgroup", study.member_name(v));
          return out;
        }
      }
    }
  }
  out.pass = true;
  return out;
}

namespace harness_detail {

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace harness_detail

/// Checks Theorem 1.5 for one (G, E, σ): for each complete Hall σ-set whose
/// hypothesis gate passes, the conclusion E ≤ Z_𝔘(G) must hold.
inline Verdict verify_theorem15(GroupStudy& study, uint32_t e,
                                const SigmaPartition& sigma) {
  harness_detail::Timer timer;
  Verdict v;
  const auto& sets = study.context().hall_sets(sigma);
  if (sets.empty()) {
    v.status = Status::HypothesisFails;
    v.detail = "G has no complete Hall sigma-set";
    v.seconds = timer.seconds();
    return v;
  }
  bool any_pass = false;
  std::string fail_reason;
  const HallSet* passing = nullptr;
  for (const HallSet& hs : sets) {
    GateResult g = theorem15_hypothesis(study, e, sigma, hs);
    if (g.pass) {
      any_pass = true;
      if (!passing) passing = &hs;
      if (g.quantified > 0 && e != study.lattice().trivial_index())
        v.nonvacuous = true;
    } else if (fail_reason.empty()) {
      fail_reason = g.reason;
      v.witnesses = g.witnesses;
    }
  }
  if (!any_pass) {
    v.status = Status::HypothesisFails;
    v.detail = fail_reason;
    v.seconds = timer.seconds();
    return v;
  }
  v.witnesses.clear();
  if (study.hyp_embedded(e)) {
    v.status = Status::Holds;
    v.detail = "E <= Z_U(G)";
  } else {
    v.status = Status::Counterexample;
    v.detail = "hypothesis passes but E is not hypercyclically embedded";
    v.witnesses.emplace_back("E", study.member_name(e));
    for (auto& [b, m] : passing->members)
      v.witnesses.emplace_back("hall_member", study.member_name(m));
  }
  v.seconds = timer.seconds();
  return v;
}

/// Proposition 3.1: gate on cyclic subgroups of order p (p the smallest prime
/// of |G|) and order 4; conclusion p-nilpotency.
inline Verdict verify_prop31(GroupStudy& study, const SigmaPartition& sigma) {
  harness_detail::Timer timer;
  Verdict v;
  const SubgroupLattice& lat = study.lattice();
  std::vector<uint64_t> primes = primes_of(study.group().order());
  if (primes.empty()) {
    v.status = Status::Vacuous;
    v.detail = "trivial group";
    v.seconds = timer.seconds();
    return v;
  }
  uint64_t p = primes.front();
  const auto& sets = study.context().hall_sets(sigma);
  if (sets.empty()) {
    v.status = Status::HypothesisFails;
    v.detail = "G has no complete Hall sigma-set";
    v.seconds = timer.seconds();
    return v;
  }
  bool any_pass = false;
  std::string fail_reason;
  for (const HallSet& hs : sets) {
    GateResult g;
    if (!study.sylow_type(sigma)) {
      g.reason = "G is not a sigma-full group of Sylow type";
    } else {
      bool super = true;
      for (auto& [b, m] : hs.members)
        if (!study.member_supersoluble(m)) {
          super = false;
          g.reason = "Hall set member is not supersoluble";
          break;
        }
      if (super) {
        bool order4 = p == 2 && gate_detail::sylow2_nonabelian(
                                    study, lat.whole_index());
        uint32_t zinf = study.hypercenter_member();
        g.pass = true;
        for (uint32_t h = 0; h < lat.size() && g.pass; ++h) {
          uint64_t o = lat.member(h).order();
          bool in_scope =
              o == p || (o == 4 && order4 && study.member_cyclic(h) &&
                         !lat.leq(h, zinf));
          if (!in_scope) continue;
          ++g.quantified;
          if (!study.context().is_weakly_m_h_permutable(h, hs, sigma)) {
            g.pass = false;
            g.reason = "cyclic subgroup is not weakly m-H-permutable";
            g.witnesses.emplace_back("H", study.member_name(h));
          }
        }
      }
    }
    if (g.pass) {
      any_pass = true;
      if (g.quantified > 0) v.nonvacuous = true;
    } else if (fail_reason.empty()) {
      fail_reason = g.reason;
      v.witnesses = g.witnesses;
    }
  }
  if (!any_pass) {
    v.status = Status::HypothesisFails;
    v.detail = fail_reason;
    v.seconds = timer.seconds();
    return v;
  }
  v.witnesses.clear();
  if (is_p_nilpotent(lat, p)) {
    v.status = Status::Holds;
    v.detail = "G is " + std::to_string(p) + "-nilpotent";
  } else {
    v.status = Status::Counterexample;
    v.detail = "hypothesis passes but G is not " + std::to_string(p) + "-nilpotent";
  }
  v.seconds = timer.seconds();
  return v;
}

/// Proposition 3.2: P a normal p-subgroup contained in a member of ℋ; gate on
/// cyclic subgroups of P; conclusion P ≤ Z_𝔘(G).
inline Verdict verify_prop32(GroupStudy& study, uint32_t p_member,
                             const SigmaPartition& sigma) {
  harness_detail::Timer timer;
  Verdict v;
  const SubgroupLattice& lat = study.lattice();
  uint64_t po = lat.member(p_member).order();
  if (!lat.is_normal(p_member) || primes_of(po).size() > 1)
    throw ValidationError("prop32 needs a normal p-subgroup");
  if (po == 1) {
    v.status = Status::Holds;
    v.detail = "P = 1";
    v.seconds = timer.seconds();
    return v;
  }
  const auto& sets = study.context().hall_sets(sigma);
  bool any_pass = false;
  std::string fail_reason = "G has no complete Hall sigma-set";
  for (const HallSet& hs : sets) {
    GateResult g;
    bool in_member = false;
    for (auto& [b, m] : hs.members)
      if (lat.leq(p_member, m)) in_member = true;
    if (!in_member) {
      g.reason = "P is not contained in a member of the Hall set";
    } else if (!study.sylow_type(sigma)) {
      g.reason = "G is not a sigma-full group of Sylow type";
    } else {
      bool super = true;
      for (auto& [b, m] : hs.members)
        if (!study.member_supersoluble(m)) {
          super = false;
          g.reason = "Hall set member is not supersoluble";
          break;
        }
      if (super) {
        bool order4 = primes_of(po).front() == 2 &&
                      !study.member_abelian(p_member);
        uint32_t zinf = study.hypercenter_member();
        g.pass = true;
        for (uint32_t h :
             gate_detail::quantified_cyclics(study, p_member, order4, zinf)) {
          ++g.quantified;
          if (!study.context().is_weakly_m_h_permutable(h, hs, sigma)) {
            g.pass = false;
            g.reason = "cyclic subgroup is not weakly m-H-permutable";
            g.witnesses.emplace_back("H", study.member_name(h));
            break;
          }
        }
      }
    }
    if (g.pass) {
      any_pass = true;
      if (g.quantified > 0) v.nonvacuous = true;
    } else if (fail_reason == "G has no complete Hall sigma-set" ||
               fail_reason.empty()) {
      fail_reason = g.reason;
      v.witnesses = g.witnesses;
    }
  }
  if (!any_pass) {
    v.status = Status::HypothesisFails;
    v.detail = fail_reason;
    v.seconds = timer.seconds();
    return v;
  }
  v.witnesses.clear();
  if (study.hyp_embedded(p_member)) {
    v.status = Status::Holds;
    v.detail = "P <= Z_U(G)";
  } else {
    v.status = Status::Counterexample;
    v.detail = "hypothesis passes but P is not hypercyclically embedded";
    v.witnesses.emplace_back("P", study.member_name(p_member));
  }
  v.seconds = timer.seconds();
  return v;
}

/// Corollary 4.1 with 𝔉 the supersoluble groups: gate requires G/E
/// supersoluble plus the Theorem-1.5-style condition on F*(E); conclusion is
/// that G itself is supersoluble.
inline Verdict verify_cor41(GroupStudy& study, uint32_t e,
                            const SigmaPartition& sigma) {
  harness_detail::Timer timer;
  Verdict v;
  const SubgroupLattice& lat = study.lattice();
  if (!lat.is_normal(e)) throw ValidationError("cor41 needs E normal");

  // G/E supersoluble?
  bool quotient_super;
  if (e == lat.whole_index()) {
    quotient_super = true;
  } else {
    auto& qs = study.quotient_study(e);
    quotient_super = is_supersoluble(qs.study->lattice());
  }
  if (!quotient_super) {
    v.status = Status::HypothesisFails;
    v.detail = "G/E is not supersoluble";
    v.seconds = timer.seconds();
    return v;
  }

  Subgroup fstar = generalized_fitting(study.group(), lat.member(e),
                                       study.options().lattice_cap);
  uint32_t f = lat.index_of(fstar);

  const auto& sets = study.context().hall_sets(sigma);
  if (sets.empty()) {
    v.status = Status::HypothesisFails;
    v.detail = "G has no complete Hall sigma-set";
    v.seconds = timer.seconds();
    return v;
  }
  bool any_pass = false;
  std::string fail_reason;
  for (const HallSet& hs : sets) {
    GateResult g;
    if (!study.sylow_type(sigma)) {
      g.reason = "G is not a sigma-full group of Sylow type";
    } else {
      bool super = true;
      for (auto& [b, m] : hs.members)
        if (!study.member_supersoluble(m)) {
          super = false;
          g.reason = "Hall set member is not supersoluble";
          break;
        }
      if (super) {
        // order-4 clause keyed to the Sylow 2-subgroup of E
        bool order4 = gate_detail::sylow2_nonabelian(study, e);
        uint32_t zinf = study.hypercenter_member();
        uint64_t fo = lat.member(f).order();
        g.pass = true;
        for (BlockId b : sigma.sigma_of(fo)) {
          uint64_t part = sigma.block_part(fo, b);
          for (uint32_t vm : lat.subs_of(f)) {
            if (lat.member(vm).order() != part) continue;
            if (study.member_cyclic(vm)) continue;
            for (uint32_t h :
                 gate_detail::quantified_cyclics(study, vm, order4, zinf)) {
              ++g.quantified;
              if (!study.context().is_weakly_m_h_permutable(h, hs, sigma)) {
                g.pass = false;
                g.reason = "cyclic subgroup of F*(E) is not weakly m-H-permutable";
                g.witnesses.emplace_back("H", study.member_name(h));
                break;
              }
            }
            if (!g.pass) break;
          }
          if (!g.pass) break;
        }
      }
    }
    if (g.pass) {
      any_pass = true;
      if (g.quantified > 0) v.nonvacuous = true;
    } else if (fail_reason.empty()) {
      fail_reason = g.reason;
      v.witnesses = g.witnesses;
    }
  }
  if (!any_pass) {
    v.status = Status::HypothesisFails;
    v.detail = fail_reason;
    v.seconds = timer.seconds();
    return v;
  }
  v.witnesses.clear();
  if (study.member_supersoluble(lat.whole_index())) {
    v.status = Status::Holds;
    v.detail = "G is supersoluble";
  } else {
    v.status = Status::Counterexample;
    v.detail = "hypothesis passes but G is not supersoluble";
    v.witnesses.emplace_back("E", study.member_name(e));
    v.witnesses.emplace_back("F*", study.member_name(f));
  }
  v.seconds = timer.seconds();
  return v;
}

// ---------------------------------------------------------------------------
// Lemma suites
// ---------------------------------------------------------------------------

struct LemmaResult {
  std::string name;
  uint64_t cases = 0;
  std::vector<std::string> violations;
  bool budget_exhausted = false;
};

struct LemmaReport {
  std::string group_name;
  std::string sigma;
  std::vector<LemmaResult> lemmas;
  double seconds = 0;

  uint64_t total_violations() const {
    uint64_t n = 0;
    for (const LemmaResult& r : lemmas) n += r.violations.size();
    return n;
  }
};

namespace lemma_detail {

struct Budget {
  uint64_t remaining;
  bool exhausted = false;
  bool spend(uint64_t n = 1) {
    if (remaining < n) {
      exhausted = true;
      return false;
    }
    remaining -= n;
    return true;
  }
};

}  // namespace lemma_detail

/// Exhaustively instantiates Lemmas 2.1-2.5 over the lattice of G.
inline LemmaReport lemma_suite(GroupStudy& study, const SigmaPartition& sigma,
                               const std::string& group_name = "") {
  harness_detail::Timer timer;
  LemmaReport report;
  report.group_name = group_name;
  report.sigma = sigma.to_string();
  const SubgroupLattice& lat = study.lattice();
  EmbeddingContext& ctx = study.context();
  const uint32_t L = static_cast<uint32_t>(lat.size());
  lemma_detail::Budget budget{study.options().lemma_case_budget};

  std::vector<uint32_t> subnormal = ctx.sigma_subnormal_members(sigma);
  std::vector<uint32_t> normals = lat.normal_members();
  const auto& sets = ctx.hall_sets(sigma);

  // Lemma 2.1(1): A∩K is σ-subnormal in K.
  {
    LemmaResult r{"2.1(1) A∩K σ-subnormal in K"};
    for (uint32_t a : subnormal)
      for (uint32_t k = 0; k < L; ++k) {
        if (!budget.spend()) break;
        ++r.cases;
        uint32_t x = lat.meet_of(a, k);
        if (!ctx.is_sigma_subnormal(x, sigma, k))
          r.violations.push_back("A=" + study.member_name(a) +
                                 " K=" + study.member_name(k));
      }
    r.budget_exhausted = budget.exhausted;
    report.lemmas.push_back(std::move(r));
  }

  // Lemma 2.1(2): AN/N σ-subnormal in G/N.
  {
    LemmaResult r{"2.1(2) AN/N σ-subnormal in G/N"};
    for (uint32_t n : normals) {
      auto& qs = study.quotient_study(n);
      for (uint32_t a : subnormal) {
        if (!budget.spend()) break;
        ++r.cases;
        uint32_t img = study.map_into_quotient(n, a);
        if (!qs.study->context().is_sigma_subnormal(img, sigma))
          r.violations.push_back("A=" + study.member_name(a) +
                                 " N=" + study.member_name(n));
      }
    }
    r.budget_exhausted = budget.exhausted;
    report.lemmas.push_back(std::move(r));
  }

  // Lemma 2.1(3): |G:A| a Π-number ⇒ O^Π(A) = O^Π(G).
  {
    LemmaResult r{"2.1(3) O^Π(A)=O^Π(G)"};
    std::vector<BlockId> blocks = sigma.sigma_of(study.group().order());
    for (uint32_t mask = 1; mask < (1u << blocks.size()); ++mask) {
      std::vector<BlockId> pi;
      for (size_t i = 0; i < blocks.size(); ++i)
        if (mask & (1u << i)) pi.push_back(blocks[i]);
      uint32_t og = o_upper_pi_in(lat, sigma, pi, lat.whole_index());
      for (uint32_t a : subnormal) {
        uint64_t index = study.group().order() / lat.member(a).order();
        if (!sigma.is_pi_number(index, pi)) continue;
        if (!budget.spend()) break;
        ++r.cases;
        if (o_upper_pi_in(lat, sigma, pi, a) != og)
          r.violations.push_back("A=" + study.member_name(a));
      }
    }
    r.budget_exhausted = budget.exhausted;
    report.lemmas.push_back(std::move(r));
  }

  // Lemma 2.2: closure properties of m-ℋ-permutability.
  {
    LemmaResult r1{"2.2(1) HR/R m-(ℋR/R)-permutable in G/R"};
    LemmaResult r3{"2.2(3) ℋ reduces into normal E; H m-(E∩ℋ)-permutable in E"};
    LemmaResult r4{"2.2(4) ⟨H,K⟩ m-ℋ-permutable"};
    for (const HallSet& hs : sets) {
      const auto& mh = ctx.m_h_permutable_flags(hs);
      std::vector<uint32_t> mh_members;
      for (uint32_t h = 0; h < L; ++h)
        if (mh[h]) mh_members.push_back(h);
      // (1)
      for (uint32_t n : normals) {
        auto& qs = study.quotient_study(n);
        HallSet qhs = study.quotient_hall_set(hs, n, sigma);
        for (uint32_t h : mh_members) {
          if (!budget.spend()) break;
          ++r1.cases;
          uint32_t img = study.map_into_quotient(n, h);
          if (!qs.study->context().is_m_h_permutable(img, qhs))
            r1.violations.push_back("H=" + study.member_name(h) +
                                    " R=" + study.member_name(n));
        }
      }
      // (3)
      for (uint32_t e : normals) {
        if (!budget.spend()) break;
        ++r3.cases;
        if (!reduces_into(lat, sigma, hs, e)) {
          r3.violations.push_back("not reduced: E=" + study.member_name(e));
          continue;
        }
        GroupStudy& se = study.substudy(e);
        HallSet ehs = study.restrict_hall_set(hs, e, sigma);
        for (uint32_t h : mh_members) {
          if (!lat.leq(h, e)) continue;
          if (!budget.spend()) break;
          ++r3.cases;
          uint32_t img = study.map_into_substudy(e, h);
          if (!se.context().is_m_h_permutable(img, ehs))
            r3.violations.push_back("H=" + study.member_name(h) +
                                    " E=" + study.member_name(e));
        }
      }
      // (4)
      for (uint32_t h : mh_members)
        for (uint32_t k : mh_members) {
          if (!budget.spend()) break;
          ++r4.cases;
          if (!mh[lat.join_of(h, k)])
            r4.violations.push_back("H=" + study.member_name(h) +
                                    " K=" + study.member_name(k));
        }
    }
    r1.budget_exhausted = r3.budget_exhausted = r4.budget_exhausted =
        budget.exhausted;
    report.lemmas.push_back(std::move(r1));
    report.lemmas.push_back(std::move(r3));
    report.lemmas.push_back(std::move(r4));
  }

  // Lemma 2.3: closure properties of weak m-ℋ-permutability.
  {
    LemmaResult r1{"2.3(1) reduction into E with ℋ reducing"};
    LemmaResult r2{"2.3(2) reduction into normal E"};
    LemmaResult r3{"2.3(3) H/N weakly m-(ℋN/N)-permutable, N ≤ H"};
    LemmaResult r4{"2.3(4) HN/N weakly m-(ℋN/N)-permutable, (|H|,|N|)=1"};
    for (const HallSet& hs : sets) {
      std::vector<uint32_t> weak;
      for (uint32_t h = 0; h < L; ++h)
        if (ctx.is_weakly_m_h_permutable(h, hs, sigma)) weak.push_back(h);
      for (uint32_t h : weak) {
        // (1)/(2)
        for (uint32_t e = 0; e < L; ++e) {
          if (!lat.leq(h, e)) continue;
          bool reduces = reduces_into(lat, sigma, hs, e);
          bool is_norm = lat.is_normal(e);
          if (!reduces) {
            if (is_norm) {
              ++r2.cases;
              r2.violations.push_back("ℋ does not reduce into normal E=" +
                                      study.member_name(e));
            }
            continue;
          }
          if (!budget.spend()) break;
          LemmaResult& r = is_norm ? r2 : r1;
          ++r.cases;
          GroupStudy& se = study.substudy(e);
          HallSet ehs = study.restrict_hall_set(hs, e, sigma);
          uint32_t img = study.map_into_substudy(e, h);
          if (!se.context().is_weakly_m_h_permutable(img, ehs, sigma))
            r.violations.push_back("H=" + study.member_name(h) +
                                   " E=" + study.member_name(e));
        }
        // (3), (4)
        for (uint32_t n : normals) {
          bool inside = lat.leq(n, h);
          bool coprime =
              std::gcd(lat.member(n).order(), lat.member(h).order()) == 1;
          if (!inside && !coprime) continue;
          if (!budget.spend()) break;
          auto& qs = study.quotient_study(n);
          HallSet qhs = study.quotient_hall_set(hs, n, sigma);
          uint32_t img = study.map_into_quotient(n, h);  // HN/N
          LemmaResult& r = inside ? r3 : r4;
          ++r.cases;
          if (!qs.study->context().is_weakly_m_h_permutable(img, qhs, sigma))
            r.violations.push_back("H=" + study.member_name(h) +
                                   " N=" + study.member_name(n));
        }
      }
    }
    r1.budget_exhausted = r2.budget_exhausted = r3.budget_exhausted =
        r4.budget_exhausted = budget.exhausted;
    report.lemmas.push_back(std::move(r1));
    report.lemmas.push_back(std::move(r2));
    report.lemmas.push_back(std::move(r3));
    report.lemmas.push_back(std::move(r4));
  }

  // Lemma 2.4: pairwise permutable H,K,N with H Hall: N∩HK = (N∩H)(N∩K).
  {
    LemmaResult r{"2.4 N∩HK=(N∩H)(N∩K)"};
    uint64_t go = study.group().order();
    for (uint32_t h = 0; h < L; ++h) {
      uint64_t ho = lat.member(h).order();
      if (std::gcd(ho, go / ho) != 1) continue;  // H must be a Hall subgroup
      for (uint32_t k = 0; k < L; ++k) {
        if (!ctx.permutes(h, k)) continue;
        for (uint32_t n = 0; n < L; ++n) {
          if (!ctx.permutes(h, n) || !ctx.permutes(k, n)) continue;
          if (!budget.spend()) break;
          ++r.cases;
          IndexSet hk = product_set(lat.member(h), lat.member(k));
          IndexSet lhs = intersect(lat.member(n).indices(), hk);
          IndexSet rhs = product_set(
              lat.member(lat.meet_of(n, h)), lat.member(lat.meet_of(n, k)));
          if (lhs != rhs)
            r.violations.push_back("H=" + study.member_name(h) +
                                   " K=" + study.member_name(k) +
                                   " N=" + study.member_name(n));
        }
      }
    }
    r.budget_exhausted = budget.exhausted;
    report.lemmas.push_back(std::move(r));
  }

  // Lemma 2.5: chief factors of G between H^G and H_G cyclic for modular H.
  {
    LemmaResult r{"2.5 chief factors between H^G and H_G cyclic"};
    if (study.group().order() > study.options().modularity_cap) {
      r.budget_exhausted = true;
    } else {
      for (uint32_t h = 0; h < L; ++h) {
        if (!lat.is_modular_member(h)) continue;
        if (!budget.spend()) break;
        ++r.cases;
        uint32_t lo = lat.core(h);
        uint32_t hi = lat.normal_closure_of(h);
        for (const ChiefFactor& f : chief_series_between(lat, lo, hi).factors)
          if (!is_prime(f.order))
            r.violations.push_back("H=" + study.member_name(h) + " factor order " +
                                   std::to_string(f.order));
      }
      r.budget_exhausted = budget.exhausted;
    }
    report.lemmas.push_back(std::move(r));
  }

  report.seconds = timer.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

/// All set partitions of the given primes, each as a SigmaPartition with
/// every part an explicit block.
inline std::vector<SigmaPartition> all_partitions(const std::vector<uint64_t>& primes) {
  std::vector<SigmaPartition> out;
  std::vector<std::vector<uint64_t>> blocks;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == primes.size()) {
      out.emplace_back(blocks);
      return;
    }
    // index loop: recursion below grows `blocks`, so references would dangle
    const size_t existing = blocks.size();
    for (size_t k = 0; k < existing; ++k) {
      blocks[k].push_back(primes[i]);
      self(self, i + 1);
      blocks[k].pop_back();
    }
    blocks.push_back({primes[i]});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  if (out.empty()) out.emplace_back(std::vector<std::vector<uint64_t>>{});
  return out;
}

struct SweepCase {
  std::string group;
  std::string sigma;
  std::string subject;  // e.g. "E=subgroup#7(order 4)"
  Verdict verdict;
};

struct SweepReport {
  std::string target;
  uint64_t max_order = 0;
  std::vector<SweepCase> cases;
  std::vector<std::string> notes;  // budget exhaustion etc.
  double seconds = 0;

  uint64_t count(Status s) const {
    uint64_t n = 0;
    for (const SweepCase& c : cases)
      if (c.verdict.status == s) ++n;
    return n;
  }
  uint64_t nonvacuous_holds() const {
    uint64_t n = 0;
    for (const SweepCase& c : cases)
      if (c.verdict.status == Status::Holds && c.verdict.nonvacuous) ++n;
    return n;
  }
};

/// Runs one verification target over every corpus group of order ≤ max_order,
/// every σ-partition of π(G), and every admissible subject subgroup.
inline SweepReport sweep(const std::vector<NamedGroup>& corpus, uint64_t max_order,
                         const std::string& target,
                         const HarnessOptions& opts = {}) {
  harness_detail::Timer timer;
  SweepReport report;
  report.target = target;
  report.max_order = max_order;
  for (const NamedGroup& ng : corpus) {
    if (ng.group.order() > max_order) continue;
    GroupStudy study(ng.group, opts);
    const SubgroupLattice& lat = study.lattice();
    for (const SigmaPartition& sigma : all_partitions(primes_of(ng.group.order()))) {
      try {
        if (target == "theorem15") {
          for (uint32_t e : lat.normal_members())
            report.cases.push_back({ng.name, sigma.to_string(),
                                    "E=" + study.member_name(e),
                                    verify_theorem15(study, e, sigma)});
        } else if (target == "prop31") {
          report.cases.push_back(
              {ng.name, sigma.to_string(), "G", verify_prop31(study, sigma)});
        } else if (target == "prop32") {
          for (uint32_t p : lat.normal_members()) {
            if (primes_of(lat.member(p).order()).size() != 1) continue;
            report.cases.push_back({ng.name, sigma.to_string(),
                                    "P=" + study.member_name(p),
                                    verify_prop32(study, p, sigma)});
          }
        } else if (target == "cor41") {
          for (uint32_t e : lat.normal_members())
            report.cases.push_back({ng.name, sigma.to_string(),
                                    "E=" + study.member_name(e),
                                    verify_cor41(study, e, sigma)});
        } else {
          throw ValidationError("unknown sweep target: " + target);
        }
      } catch (const BudgetError& err) {
        report.notes.push_back(ng.name + " sigma=" + sigma.to_string() + ": " +
                               err.what());
      }
    }
  }
  report.seconds = timer.seconds();
  return report;
}

/// Re-runs a counterexample verdict with a fresh study (all caches cold);
/// true iff the counterexample reproduces.
inline bool revalidate_counterexample(const NamedGroup& ng, const std::string& target,
                                      const SigmaPartition& sigma,
                                      const IndexSet& subject_key,
                                      const HarnessOptions& opts = {}) {
  GroupStudy fresh(ng.group, opts);
  auto idx = fresh.lattice().try_index_of(subject_key);
  if (!idx) return false;
  Verdict v;
  if (target == "theorem15")
    v = verify_theorem15(fresh, *idx, sigma);
  else if (target == "prop31")
    v = verify_prop31(fresh, sigma);
  else if (target == "prop32")
    v = verify_prop32(fresh, *idx, sigma);
  else if (target == "cor41")
    v = verify_cor41(fresh, *idx, sigma);
  else
    throw ValidationError("unknown target: " + target);
  return v.status == Status::Counterexample;
}

}  // namespace sigmaembed

#endif
