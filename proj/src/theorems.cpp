#include "finalg/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>

#include "finalg/errors.hpp"
#include "finalg/io.hpp"
#include "finalg/lattice.hpp"
#include "finalg/props.hpp"

namespace finalg {

namespace {

using nlohmann::ordered_json;

// Shared analyzer caches so the 18 checks reuse endomorphism rings, lattices
// and verdicts instead of recomputing them per theorem.
struct Ctx {
  const Corpus& corpus;
  SizeCaps caps;
  std::map<const FiniteModule*, std::unique_ptr<ModuleAnalyzer>> mods;
  std::map<const FiniteRing*, std::unique_ptr<RingAnalyzer>> rings;

  ModuleAnalyzer& mod(const ModulePtr& m) {
    auto it = mods.find(m.get());
    if (it == mods.end())
      it = mods.emplace(m.get(), std::make_unique<ModuleAnalyzer>(m, caps)).first;
    return *it->second;
  }
  RingAnalyzer& ring(const RingPtr& r) {
    auto it = rings.find(r.get());
    if (it == rings.end())
      it = rings.emplace(r.get(), std::make_unique<RingAnalyzer>(r, caps)).first;
    return *it->second;
  }
  // Analyzer over End(M) for a corpus entry's module.
  RingAnalyzer& endo_ring(const ModulePtr& m) { return ring(mod(m).endo().ring()); }
};

ordered_json make_violation(const std::string& theorem, const std::string& structure,
                            ordered_json details) {
  ordered_json v;
  v["theorem"] = theorem;
  v["structure"] = structure;
  // A failed implication between decided properties of a finite structure can
  // only come from a defective checker (or a wrongly encoded statement).
  v["severity"] = "implementation-suspect";
  v["details"] = std::move(details);
  return v;
}

// Runs `body(entry, hyp, viols)` per corpus entry; a SizeCapExceeded anywhere
// in the body moves the whole entry into `skipped` and counts it nowhere else.
template <class Body>
void per_entry(Ctx& c, TheoremResult& r, Body body) {
  for (const auto& e : c.corpus.entries) {
    bool hyp = false;
    std::vector<ordered_json> viols;
    try {
      body(e, hyp, viols);
    } catch (const SizeCapExceeded& ex) {
      r.skipped.push_back({e.name, ex.what()});
      continue;
    }
    ++r.tested;
    if (hyp) ++r.hypothesis_met;
    for (auto& v : viols) r.violations.push_back(std::move(v));
  }
}

// ---------------------------------------------------------------------------
// Module-level implications
// ---------------------------------------------------------------------------

void thm_hier(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    bool ab = an.check("abelian").holds;
    bool rk = an.check("rickart").holds;
    const Verdict& cea = an.check("centrally_endo_aip");
    const Verdict& ea = an.check("endo_aip");
    bool h1 = ab && rk, h2 = cea.holds;
    hyp = h1 || h2;
    if (h1 && !cea.holds)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"implication", "abelian && rickart => centrally_endo_aip"},
           {"conclusion", verdict_to_json(cea)}}));
    if (h2 && !ea.holds)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"implication", "centrally_endo_aip => endo_aip"},
           {"conclusion", verdict_to_json(ea)}}));
  });
}

const std::vector<std::string>& rickart_equiv_props() {
  static const std::vector<std::string> props = {"abelian", "reduced", "rigid",
                                                 "semicommutative", "symmetric"};
  return props;
}

void thm_rl(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    if (!an.check("rickart").holds) return;
    hyp = true;
    ordered_json values, verdicts;
    bool first = an.check(rickart_equiv_props().front()).holds, equal = true;
    for (const auto& p : rickart_equiv_props()) {
      const Verdict& v = an.check(p);
      values[p] = v.holds;
      verdicts[p] = verdict_to_json(v);
      equal = equal && v.holds == first;
    }
    if (!equal)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"equivalence", "on rickart modules: abelian <=> reduced <=> rigid "
                           "<=> semicommutative <=> symmetric"},
           {"values", values},
           {"verdicts", verdicts}}));
  });
}

void thm_rce(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    if (!an.check("rickart").holds) return;
    bool any = false;
    for (const auto& p : rickart_equiv_props()) any = any || an.check(p).holds;
    if (!any) return;
    hyp = true;
    const Verdict& cea = an.check("centrally_endo_aip");
    if (!cea.holds)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"implication", "rickart && (abelian || reduced || rigid || "
                           "semicommutative || symmetric) => centrally_endo_aip"},
           {"conclusion", verdict_to_json(cea)}}));
  });
}

void thm_ifp_eq(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  static const std::vector<std::string> props = {"centrally_endo_aip", "endo_aip",
                                                 "endo_app"};
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    if (!an.check("ifp").holds) return;
    hyp = true;
    ordered_json values, verdicts;
    bool first = an.check(props.front()).holds, equal = true;
    for (const auto& p : props) {
      const Verdict& v = an.check(p);
      values[p] = v.holds;
      verdicts[p] = verdict_to_json(v);
      equal = equal && v.holds == first;
    }
    if (!equal)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"equivalence",
            "on ifp modules: centrally_endo_aip <=> endo_aip <=> endo_app"},
           {"values", values},
           {"verdicts", verdicts}}));
  });
}

void thm_dsum(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  for (const auto& e : c.corpus.entries) {
    bool hyp = false;
    std::vector<ordered_json> viols;
    try {
      auto& an = c.mod(e.module);
      hyp = an.check("centrally_endo_aip").holds;
      if (hyp) {
        const EndoRing& s = an.endo();
        std::set<std::vector<elem_t>> seen;
        for (elem_t idem : s.ring()->idempotents()) {
          std::vector<elem_t> img = s.hom(idem).image_elements();
          // The full summand restates the hypothesis; proper images are new.
          if (img.size() == e.module->order()) continue;
          if (!seen.insert(img).second) continue;
          try {
            ExtractedModule ex = extract_submodule(e.module, img);
            Verdict v = check_module_property(ex.module, "centrally_endo_aip", c.caps);
            if (!v.holds)
              viols.push_back(make_violation(
                  r.id, e.name,
                  {{"implication", "direct summands of a centrally_endo_aip "
                                   "module are centrally_endo_aip"},
                   {"idempotent", idem},
                   {"summand", img},
                   {"summand_verdict", verdict_to_json(v)}}));
          } catch (const SizeCapExceeded& ex_cap) {
            r.skipped.push_back({e.name + " summand at idempotent " +
                                     std::to_string(idem),
                                 ex_cap.what()});
          }
        }
      }
      ++r.tested;
      if (hyp) ++r.hypothesis_met;
      for (auto& v : viols) r.violations.push_back(std::move(v));
    } catch (const SizeCapExceeded& ex_cap) {
      r.skipped.push_back({e.name, ex_cap.what()});
    }
  }
}

void thm_fisub(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  for (const auto& e : c.corpus.entries) {
    bool hyp = false;
    std::vector<ordered_json> viols;
    try {
      auto& an = c.mod(e.module);
      if (an.check("centrally_endo_aip").holds) {
        const EndoRing& s = an.endo();
        for (const Submodule& n : an.fully_invariant_subs()) {
          if (n.is_full()) continue;  // identity extension restates the hypothesis
          try {
            ExtractedModule ex = extract_submodule(e.module, n.elements());
            std::vector<ModuleHom> endn = hom_group(ex.module, ex.module, c.caps);
            // Restriction signature of every parent endomorphism (it maps N
            // into N because N is fully invariant), for O(1) extension tests.
            std::set<std::vector<elem_t>> restrictions;
            for (const ModuleHom& f : s.homs()) {
              std::vector<elem_t> sig(ex.element_images.size());
              for (std::size_t i = 0; i < sig.size(); ++i)
                sig[i] = f.apply(ex.element_images[i]);
              restrictions.insert(std::move(sig));
            }
            bool all_extend = true;
            for (const ModuleHom& g : endn) {
              std::vector<elem_t> want(ex.element_images.size());
              for (std::size_t i = 0; i < want.size(); ++i)
                want[i] = ex.element_images[g.apply(static_cast<elem_t>(i))];
              if (!restrictions.count(want)) {
                all_extend = false;
                break;
              }
            }
            if (!all_extend) continue;
            hyp = true;
            Verdict v = check_module_property(ex.module, "centrally_endo_aip", c.caps);
            if (!v.holds)
              viols.push_back(make_violation(
                  r.id, e.name,
                  {{"implication",
                    "a fully invariant submodule with the endomorphism "
                    "extension property inherits centrally_endo_aip"},
                   {"submodule", n.elements()},
                   {"submodule_verdict", verdict_to_json(v)}}));
          } catch (const SizeCapExceeded& ex_cap) {
            r.skipped.push_back(
                {e.name + " fully invariant submodule of order " +
                     std::to_string(n.order()),
                 ex_cap.what()});
          }
        }
      }
      ++r.tested;
      if (hyp) ++r.hypothesis_met;
      for (auto& v : viols) r.violations.push_back(std::move(v));
    } catch (const SizeCapExceeded& ex_cap) {
      r.skipped.push_back({e.name, ex_cap.what()});
    }
  }
}

void thm_fgz(Ctx& c, TheoremResult& r, std::vector<ordered_json>& obs) {
  std::uint32_t converse_checked = 0;
  std::vector<std::string> converse_failures;
  for (const auto& e : c.corpus.entries) {
    if (!e.is_z_module) continue;
    try {
      auto& an = c.mod(e.module);
      const Verdict& cea = an.check("centrally_endo_aip");
      const Verdict& ss = an.check("semisimple");
      ++r.tested;
      if (cea.holds) {
        ++r.hypothesis_met;
        if (!ss.holds)
          r.violations.push_back(make_violation(
              r.id, e.name,
              {{"implication", "centrally_endo_aip z-modules are semisimple"},
               {"conclusion", verdict_to_json(ss)}}));
      }
      if (ss.holds) {
        ++converse_checked;
        if (!cea.holds) converse_failures.push_back(e.name);
      }
    } catch (const SizeCapExceeded& ex) {
      r.skipped.push_back({e.name, ex.what()});
    }
  }
  obs.push_back(ordered_json{
      {"id", "FGZ-converse"},
      {"statement", "semisimple => centrally_endo_aip over the z-module entries "
                    "(companion direction, not part of the registered check)"},
      {"entries_checked", converse_checked},
      {"counterexamples", converse_failures}});
}

// Carrier Z_d rebased as a module over Z_L (d | L) so that cross
// homomorphisms between cyclic z-modules of different exponents live over one
// scalar ring.
ModulePtr rebase_cyclic(std::uint32_t d, const RingPtr& zl) {
  return std::make_shared<FiniteModule>(AbelianGroup({d}), zl,
                                        std::vector<std::vector<elem_t>>{{1}});
}

void thm_dsum2(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  std::vector<const CorpusEntry*> cyclics;
  for (const auto& e : c.corpus.entries)
    if (e.is_z_module && e.module->group().rank() <= 1 && e.module->order() <= 6)
      cyclics.push_back(&e);
  for (std::size_t i = 0; i < cyclics.size(); ++i) {
    for (std::size_t j = i; j < cyclics.size(); ++j) {
      const CorpusEntry& ea = *cyclics[i];
      const CorpusEntry& eb = *cyclics[j];
      const std::string name = ea.name + "+" + eb.name;
      const auto a = static_cast<std::uint32_t>(ea.module->order());
      const auto b = static_cast<std::uint32_t>(eb.module->order());
      bool hyp = false;
      std::vector<ordered_json> viols;
      try {
        bool summands_ok = c.mod(ea.module).check("centrally_endo_aip").holds &&
                           c.mod(eb.module).check("centrally_endo_aip").holds;
        bool monos_ok = true;
        if (summands_ok && a > 1 && b > 1) {
          RingPtr zl = cyclic_ring(std::lcm(a, b), c.caps);
          ModulePtr ma = rebase_cyclic(a, zl), mb = rebase_cyclic(b, zl);
          for (const ModuleHom& f : hom_group(ma, mb, c.caps))
            monos_ok = monos_ok && (f.is_zero() || f.is_monomorphism());
          for (const ModuleHom& f : hom_group(mb, ma, c.caps))
            monos_ok = monos_ok && (f.is_zero() || f.is_monomorphism());
        }
        if (summands_ok && monos_ok) {
          hyp = true;
          Verdict v = check_module_property(z_module({a, b}, c.caps),
                                            "centrally_endo_aip", c.caps);
          if (!v.holds)
            viols.push_back(make_violation(
                r.id, name,
                {{"implication",
                  "a direct sum of centrally_endo_aip modules whose nonzero "
                  "cross homomorphisms are all injective is centrally_endo_aip"},
                 {"summand_orders", {a, b}},
                 {"sum_verdict", verdict_to_json(v)}}));
        }
        ++r.tested;
        if (hyp) ++r.hypothesis_met;
        for (auto& v : viols) r.violations.push_back(std::move(v));
      } catch (const SizeCapExceeded& ex) {
        r.skipped.push_back({name, ex.what()});
      }
    }
  }
}

void thm_copies(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  for (const auto& e : c.corpus.entries) {
    for (std::uint32_t copies = 2; copies <= 3; ++copies) {
      const std::string name =
          e.name + " (" + std::to_string(copies) + " copies)";
      bool hyp = false;
      std::vector<ordered_json> viols;
      try {
        hyp = c.mod(e.module).check("centrally_endo_aip").holds;
        if (hyp) {
          ModulePtr sum = direct_sum(e.module, e.module, c.caps);
          if (copies == 3) sum = direct_sum(sum, e.module, c.caps);
          Verdict v = check_module_property(sum, "centrally_endo_aip", c.caps);
          if (!v.holds)
            viols.push_back(make_violation(
                r.id, name,
                {{"implication", "finite direct sums of copies of a "
                                 "centrally_endo_aip module are centrally_endo_aip"},
                 {"copies", copies},
                 {"sum_verdict", verdict_to_json(v)}}));
        }
        ++r.tested;
        if (hyp) ++r.hypothesis_met;
        for (auto& v : viols) r.violations.push_back(std::move(v));
      } catch (const SizeCapExceeded& ex) {
        r.skipped.push_back({name, ex.what()});
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Ring-level implications over the distinct corpus rings
// ---------------------------------------------------------------------------

void thm_free(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  for (const auto& [rname, rg] : c.corpus.rings) {
    const std::string name = "free(" + rname + ",2)";
    try {
      const Verdict& lhs = c.ring(rg).check("centrally_aip");
      ModulePtr fm = free_module(rg, 2, c.caps);
      Verdict rhs = check_module_property(fm, "centrally_endo_aip", c.caps);
      ++r.tested;
      ++r.hypothesis_met;  // an equivalence is exercised by every structure
      if (lhs.holds != rhs.holds)
        r.violations.push_back(make_violation(
            r.id, name,
            {{"equivalence", "centrally_aip(R) <=> centrally_endo_aip(R^2)"},
             {"ring_verdict", verdict_to_json(lhs)},
             {"module_verdict", verdict_to_json(rhs)}}));
    } catch (const SizeCapExceeded& ex) {
      r.skipped.push_back({name, ex.what()});
    }
  }
}

void thm_matrx(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  for (const auto& [rname, rg] : c.corpus.rings) {
    if (rg->order() > 4) continue;  // quartic blowup: keep the matrix ring small
    const std::string name = "M_2(" + rname + ")";
    bool hyp = false;
    std::vector<ordered_json> viols;
    try {
      hyp = c.ring(rg).check("centrally_aip").holds;
      if (hyp) {
        RingPtr m2 = matrix_ring(rg, 2, c.caps);
        Verdict v = check_ring_property(m2, "centrally_aip", c.caps);
        if (!v.holds)
          viols.push_back(make_violation(
              r.id, name,
              {{"implication", "centrally_aip(R) => centrally_aip(M_2(R))"},
               {"matrix_ring_verdict", verdict_to_json(v)}}));
      }
      ++r.tested;
      if (hyp) ++r.hypothesis_met;
      for (auto& v : viols) r.violations.push_back(std::move(v));
    } catch (const SizeCapExceeded& ex) {
      r.skipped.push_back({name, ex.what()});
    }
  }
}

// ---------------------------------------------------------------------------
// Implications about the endomorphism ring of each entry
// ---------------------------------------------------------------------------

// hypothesis_prop(M) => conclusion_prop(End(M)), one entry at a time.
void endo_conclusion(Ctx& c, TheoremResult& r, const std::string& hypothesis_prop,
                     const std::string& conclusion_prop, const char* implication) {
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    if (!an.check(hypothesis_prop).holds) return;
    hyp = true;
    const Verdict& v = c.endo_ring(e.module).check(conclusion_prop);
    if (!v.holds)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"implication", implication},
           {"endo_ring_order", an.endo().ring()->order()},
           {"conclusion", verdict_to_json(v)}}));
  });
}

void thm_endca(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  endo_conclusion(c, r, "centrally_endo_aip", "centrally_aip",
                  "centrally_endo_aip(M) => centrally_aip(End(M))");
}

void thm_endsp(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  endo_conclusion(c, r, "centrally_endo_aip", "semiprime",
                  "centrally_endo_aip(M) => semiprime(End(M))");
}

void thm_udqb(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  endo_conclusion(c, r, "centrally_endo_aip", "quasi_baer",
                  "centrally_endo_aip(M) => quasi_baer(End(M))");
}

void thm_lpqr(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    if (!an.check("locally_pq_retractable").holds) return;
    if (!c.endo_ring(e.module).check("centrally_aip").holds) return;
    hyp = true;
    const Verdict& v = an.check("centrally_endo_aip");
    if (!v.holds)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"implication", "locally_pq_retractable(M) && centrally_aip(End(M)) "
                           "=> centrally_endo_aip(M)"},
           {"conclusion", verdict_to_json(v)}}));
  });
}

void thm_ud1p(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    if (!an.check("centrally_endo_aip").holds) return;
    std::uint32_t udim = ring_right_uniform_dimension(an.endo().ring());
    if (udim != 1) return;
    hyp = true;
    const Verdict& v = c.endo_ring(e.module).check("prime");
    if (!v.holds)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"implication", "centrally_endo_aip(M) && u.dim(End(M)) == 1 => "
                           "prime(End(M))"},
           {"uniform_dimension", udim},
           {"conclusion", verdict_to_json(v)}}));
  });
}

void thm_locp(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    if (!an.check("endo_aip").holds) return;
    if (!c.endo_ring(e.module).check("local").holds) return;
    hyp = true;
    const Verdict& v = c.endo_ring(e.module).check("prime");
    if (!v.holds)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"implication", "endo_aip(M) && local(End(M)) => prime(End(M))"},
           {"conclusion", verdict_to_json(v)}}));
  });
}

void thm_speq(Ctx& c, TheoremResult& r, std::vector<ordered_json>&) {
  static const std::vector<std::string> props = {"quasi_baer", "endo_aip",
                                                 "centrally_endo_aip"};
  per_entry(c, r, [&](const CorpusEntry& e, bool& hyp, std::vector<ordered_json>& viols) {
    auto& an = c.mod(e.module);
    if (!an.check("semiprime_module").holds) return;
    hyp = true;
    ordered_json values, verdicts;
    bool first = an.check(props.front()).holds, equal = true;
    for (const auto& p : props) {
      const Verdict& v = an.check(p);
      values[p] = v.holds;
      verdicts[p] = verdict_to_json(v);
      equal = equal && v.holds == first;
    }
    if (!equal)
      viols.push_back(make_violation(
          r.id, e.name,
          {{"equivalence", "on semiprime modules: quasi_baer <=> endo_aip <=> "
                           "centrally_endo_aip"},
           {"values", values},
           {"verdicts", verdicts}}));
  });
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct ThmDef {
  const char* id;
  const char* statement;
  void (*fn)(Ctx&, TheoremResult&, std::vector<ordered_json>&);
};

const std::vector<ThmDef>& registry() {
  static const std::vector<ThmDef> defs = {
      {"HIER",
       "abelian && rickart => centrally_endo_aip, and centrally_endo_aip => "
       "endo_aip",
       thm_hier},
      {"RL",
       "on rickart modules: abelian <=> reduced <=> rigid <=> semicommutative "
       "<=> symmetric",
       thm_rl},
      {"RCE",
       "rickart && (abelian || reduced || rigid || semicommutative || "
       "symmetric) => centrally_endo_aip",
       thm_rce},
      {"IFP-EQ",
       "on ifp modules: centrally_endo_aip <=> endo_aip <=> endo_app",
       thm_ifp_eq},
      {"DSUM",
       "every direct summand (image of an idempotent endomorphism) of a "
       "centrally_endo_aip module is centrally_endo_aip",
       thm_dsum},
      {"FISUB",
       "a fully invariant submodule of a centrally_endo_aip module is "
       "centrally_endo_aip when every endomorphism of the submodule extends "
       "to the parent",
       thm_fisub},
      {"FGZ", "finite z-modules: centrally_endo_aip => semisimple", thm_fgz},
      {"DSUM2",
       "a direct sum of two centrally_endo_aip cyclic z-modules is "
       "centrally_endo_aip when every nonzero homomorphism between the "
       "summands is injective",
       thm_dsum2},
      {"COPIES",
       "if M is centrally_endo_aip then so are M+M and M+M+M", thm_copies},
      {"FREE",
       "centrally_aip(R) <=> centrally_endo_aip(free module of rank 2 over R)",
       thm_free},
      {"MATRX",
       "centrally_aip(R) => centrally_aip(M_2(R)), for corpus rings of order "
       "at most 4",
       thm_matrx},
      {"ENDCA", "centrally_endo_aip(M) => centrally_aip(End(M))", thm_endca},
      {"ENDSP", "centrally_endo_aip(M) => semiprime(End(M))", thm_endsp},
      {"LPQR",
       "locally_pq_retractable(M) && centrally_aip(End(M)) => "
       "centrally_endo_aip(M)",
       thm_lpqr},
      {"UDQB", "centrally_endo_aip(M) => quasi_baer(End(M))", thm_udqb},
      {"UD1P",
       "centrally_endo_aip(M) && u.dim(End(M)) == 1 => prime(End(M))",
       thm_ud1p},
      {"LOCP", "endo_aip(M) && local(End(M)) => prime(End(M))", thm_locp},
      {"SPEQ",
       "on semiprime modules: quasi_baer <=> endo_aip <=> centrally_endo_aip",
       thm_speq},
  };
  return defs;
}

const ThmDef& def_of(const std::string& id) {
  for (const auto& d : registry())
    if (id == d.id) return d;
  throw std::invalid_argument("unknown theorem id: " + id);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.emplace_back(d.id);
    return v;
  }();
  return ids;
}

bool is_theorem_id(const std::string& id) {
  for (const auto& d : registry())
    if (id == d.id) return true;
  return false;
}

const std::string& theorem_statement(const std::string& id) {
  static std::map<std::string, std::string> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, def_of(id).statement).first;
  return it->second;
}

SuiteReport run_theorem_suite(const Corpus& corpus,
                              const std::vector<std::string>& ids,
                              const SizeCaps& caps) {
  for (const auto& id : ids) def_of(id);  // validate before any work
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  Ctx ctx{corpus, caps};
  for (const auto& id : ids) {
    const ThmDef& d = def_of(id);
    TheoremResult res;
    res.id = d.id;
    res.statement = d.statement;
    d.fn(ctx, res, report.observations);
    report.theorems.push_back(std::move(res));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

SuiteReport run_theorem_suite(const Corpus& corpus, const SizeCaps& caps) {
  return run_theorem_suite(corpus, theorem_ids(), caps);
}

nlohmann::ordered_json report_to_json(const SuiteReport& report,
                                      bool include_timing) {
  ordered_json out;
  out["theorems"] = ordered_json::array();
  for (const auto& t : report.theorems) {
    ordered_json jt;
    jt["id"] = t.id;
    jt["statement"] = t.statement;
    jt["tested"] = t.tested;
    jt["hypothesis_met"] = t.hypothesis_met;
    jt["violations"] = t.violations;
    jt["skipped"] = ordered_json::array();
    for (const auto& s : t.skipped)
      jt["skipped"].push_back(ordered_json{{"structure", s.name}, {"reason", s.reason}});
    out["theorems"].push_back(std::move(jt));
  }
  out["observations"] = report.observations;
  if (include_timing) out["timing"] = ordered_json{{"seconds", report.seconds}};
  return out;
}

std::optional<Separation> find_separation(const std::string& prop_holds,
                                          const std::string& prop_fails,
                                          const Corpus& corpus,
                                          const SizeCaps& caps) {
  const bool both_module =
      is_module_property(prop_holds) && is_module_property(prop_fails);
  const bool both_ring =
      is_ring_property(prop_holds) && is_ring_property(prop_fails);
  if (!both_module && !both_ring) {
    auto known = [](const std::string& p) {
      return is_module_property(p) || is_ring_property(p);
    };
    if (!known(prop_holds))
      throw std::invalid_argument("unknown property id: " + prop_holds);
    if (!known(prop_fails))
      throw std::invalid_argument("unknown property id: " + prop_fails);
    throw std::invalid_argument(
        "properties " + prop_holds + " and " + prop_fails +
        " do not live on a common structure kind (module vs ring)");
  }
  if (both_module) {
    for (const auto& e : corpus.entries) {
      try {
        ModuleAnalyzer an(e.module, caps);
        const Verdict& va = an.check(prop_holds);
        if (!va.holds) continue;
        const Verdict& vb = an.check(prop_fails);
        if (!vb.holds) return Separation{e.name, va, vb};
      } catch (const SizeCapExceeded&) {
        continue;
      }
    }
    return std::nullopt;
  }
  for (const auto& [name, rg] : corpus.rings) {
    try {
      RingAnalyzer an(rg, caps);
      const Verdict& va = an.check(prop_holds);
      if (!va.holds) continue;
      const Verdict& vb = an.check(prop_fails);
      if (!vb.holds) return Separation{name, va, vb};
    } catch (const SizeCapExceeded&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace finalg
