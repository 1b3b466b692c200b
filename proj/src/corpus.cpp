#include "finalg/corpus.hpp"

#include <algorithm>
#include <functional>

#include "finalg/errors.hpp"
#include "finalg/io.hpp"

namespace finalg {

namespace {

using nlohmann::ordered_json;

ordered_json cyclic_desc(std::uint32_t n) {
  return {{"kind", "cyclic"}, {"n", n}};
}

ordered_json z_desc(const std::vector<std::uint32_t>& orders) {
  return {{"kind", "z_module"}, {"orders", orders}};
}

ordered_json regular_desc(ordered_json ring) {
  return {{"kind", "regular"}, {"ring", std::move(ring)}};
}

struct Builder {
  Corpus& out;

  // Builds one entry; a SizeCapExceeded from the builder lands in `skipped`.
  void add(const std::string& name, ordered_json desc, bool is_z,
           const std::string& ring_name, const std::function<ModulePtr()>& make) {
    try {
      CorpusEntry e;
      e.name = name;
      e.module = make();
      e.description = std::move(desc);
      e.is_z_module = is_z;
      register_ring(ring_name.empty()
                        ? "Z_" + std::to_string(e.module->ring()->order())
                        : ring_name,
                    e.module->ring());
      out.entries.push_back(std::move(e));
    } catch (const SizeCapExceeded& ex) {
      out.skipped.push_back({name, ex.what()});
    }
  }

  void register_ring(const std::string& name, const RingPtr& r) {
    for (const auto& [n, existing] : out.rings)
      if (existing->same_presentation(*r)) return;
    out.rings.emplace_back(name, r);
  }
};

bool has_family(const CorpusSpec& spec, const std::string& f) {
  return std::find(spec.families.begin(), spec.families.end(), f) !=
         spec.families.end();
}

}  // namespace

const std::vector<std::string>& corpus_family_names() {
  static const std::vector<std::string> names = {"z_cyclic", "z_pairs", "regular",
                                                 "quotient", "free"};
  return names;
}

CorpusSpec default_corpus_spec() {
  CorpusSpec spec;
  spec.families = corpus_family_names();
  return spec;
}

Corpus generate_corpus(const CorpusSpec& spec) {
  Corpus out;
  Builder b{out};
  const SizeCaps& caps = spec.caps;

  if (has_family(spec, "z_cyclic")) {
    for (std::uint32_t d = 1; d <= 12; ++d)
      b.add("z_module(" + std::to_string(d) + ")", z_desc({d}), true, "",
            [&] { return z_module({d}, caps); });
  }

  if (has_family(spec, "z_pairs")) {
    for (std::uint32_t d1 = 2; d1 <= 6; ++d1)
      for (std::uint32_t d2 = d1; d2 <= 6; ++d2)
        b.add("z_module(" + std::to_string(d1) + "," + std::to_string(d2) + ")",
              z_desc({d1, d2}), true, "",
              [&] { return z_module({d1, d2}, caps); });
  }

  // Named ring descriptions shared by the regular and quotient families.
  const ordered_json t2z2_desc = {
      {"kind", "triangular"}, {"base", cyclic_desc(2)}, {"k", 2}};
  const ordered_json t2z3_desc = {
      {"kind", "triangular"}, {"base", cyclic_desc(3)}, {"k", 2}};
  const ordered_json m2z2_desc = {
      {"kind", "matrix"}, {"base", cyclic_desc(2)}, {"k", 2}};
  const ordered_json z2z2_desc = {
      {"kind", "product"}, {"factors", {cyclic_desc(2), cyclic_desc(2)}}};
  const ordered_json z2z4_desc = {
      {"kind", "product"}, {"factors", {cyclic_desc(2), cyclic_desc(4)}}};

  if (has_family(spec, "regular")) {
    for (std::uint32_t n = 1; n <= 12; ++n)
      b.add("regular(Z_" + std::to_string(n) + ")", regular_desc(cyclic_desc(n)),
            false, "Z_" + std::to_string(n),
            [&] { return regular_module(cyclic_ring(n, caps)); });
    b.add("regular(T_2(Z_2))", regular_desc(t2z2_desc), false, "T_2(Z_2)",
          [&] { return regular_module(triangular_ring(cyclic_ring(2, caps), 2, caps)); });
    b.add("regular(T_2(Z_3))", regular_desc(t2z3_desc), false, "T_2(Z_3)",
          [&] { return regular_module(triangular_ring(cyclic_ring(3, caps), 2, caps)); });
    b.add("regular(M_2(Z_2))", regular_desc(m2z2_desc), false, "M_2(Z_2)",
          [&] { return regular_module(matrix_ring(cyclic_ring(2, caps), 2, caps)); });
    b.add("regular(Z_2xZ_2)", regular_desc(z2z2_desc), false, "Z_2xZ_2", [&] {
      return regular_module(direct_product(cyclic_ring(2, caps), cyclic_ring(2, caps), caps));
    });
    b.add("regular(Z_2xZ_4)", regular_desc(z2z4_desc), false, "Z_2xZ_4", [&] {
      return regular_module(direct_product(cyclic_ring(2, caps), cyclic_ring(4, caps), caps));
    });
  }

  if (has_family(spec, "quotient")) {
    // T_2(Z_2) / (e_12): e_12 has element id 2 in the triangular encoding.
    ordered_json q1 = {{"kind", "quotient"}, {"base", t2z2_desc},
                       {"ideal_generators", {2}}};
    b.add("regular(T_2(Z_2)/(e_12))", regular_desc(q1), false, "T_2(Z_2)/(e_12)", [&] {
      auto t = triangular_ring(cyclic_ring(2, caps), 2, caps);
      return regular_module(quotient_ring(t, {2}, caps));
    });
    // Z_4 / (2) = Z_2.
    ordered_json q2 = {{"kind", "quotient"}, {"base", cyclic_desc(4)},
                       {"ideal_generators", {2}}};
    b.add("regular(Z_4/(2))", regular_desc(q2), false, "Z_4/(2)", [&] {
      return regular_module(quotient_ring(cyclic_ring(4, caps), {2}, caps));
    });
    // (Z_2 x Z_4) / ((0,2)): element (0,2) has id 4 in the product encoding.
    ordered_json q3 = {{"kind", "quotient"}, {"base", z2z4_desc},
                       {"ideal_generators", {4}}};
    b.add("regular((Z_2xZ_4)/((0,2)))", regular_desc(q3), false,
          "(Z_2xZ_4)/((0,2))", [&] {
            auto p = direct_product(cyclic_ring(2, caps), cyclic_ring(4, caps), caps);
            return regular_module(quotient_ring(p, {4}, caps));
          });
    // M_2(Z_2) / (1) is the zero ring.
    ordered_json q4 = {{"kind", "quotient"}, {"base", m2z2_desc},
                       {"ideal_generators", {9}}};
    b.add("regular(M_2(Z_2)/(1))", regular_desc(q4), false, "M_2(Z_2)/(1)", [&] {
      auto m = matrix_ring(cyclic_ring(2, caps), 2, caps);
      return regular_module(quotient_ring(m, {m->one()}, caps));
    });
  }

  if (has_family(spec, "free")) {
    const std::pair<std::string, ordered_json> bases[] = {
        {"Z_2", cyclic_desc(2)},
        {"Z_3", cyclic_desc(3)},
        {"Z_4", cyclic_desc(4)},
        {"Z_2xZ_2", z2z2_desc},
    };
    for (const auto& [rname, rdesc] : bases) {
      ordered_json desc = {{"kind", "free"}, {"ring", rdesc}, {"n", 2}};
      b.add("free(" + rname + ",2)", desc, false, rname, [&, d = rdesc] {
        return free_module(ring_from_json(d, caps), 2, caps);
      });
    }
  }

  return out;
}

Corpus corpus_from_json(const ordered_json& j, const SizeCaps& caps) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
    throw SchemaError("corpus file must hold an \"entries\" array");
  Corpus out;
  Builder b{out};
  std::size_t index = 0;
  for (const auto& item : j.at("entries")) {
    std::string name = "entry_" + std::to_string(index++);
    if (item.is_object() && item.contains("name")) {
      if (!item.at("name").is_string())
        throw SchemaError("corpus entry \"name\" must be a string");
      name = item.at("name").get<std::string>();
    }
    ordered_json desc =
        item.is_object() && item.contains("module") ? item.at("module") : item;
    if (desc.is_object() && desc.contains("name")) desc.erase("name");
    bool is_z = desc.is_object() && desc.contains("kind") &&
                desc.at("kind") == "z_module";
    b.add(name, desc, is_z, "ring of " + name,
          [&] { return module_from_json(desc, caps); });
  }
  return out;
}

}  // namespace finalg
