#include "onerel/report.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace onerel {

namespace {

using nlohmann::json;

json point_json(const LatticePoint& p) {
  json a = json::array();
  for (int i = 0; i < p.rank; ++i) a.push_back(p.v[static_cast<std::size_t>(i)]);
  return a;
}

json covector_json(const Covector& c) {
  json a = json::array();
  for (int i = 0; i < c.rank; ++i) a.push_back(c.v[static_cast<std::size_t>(i)]);
  return a;
}

json polytope_json(const IntegralPolytope& p) {
  json a = json::array();
  for (const LatticePoint& v : p.vertices()) a.push_back(point_json(v));
  return a;
}

json character_json(const Character& chi) {
  return json{{"values", json::array({chi.value_x, chi.value_y})},
              {"induced", covector_json(chi.induced)}};
}

std::string point_text(const LatticePoint& p) {
  std::ostringstream os;
  os << '(' << p.v[0];
  if (p.rank == 2) os << ',' << p.v[1];
  os << ')';
  return os.str();
}

std::string polytope_text(const IntegralPolytope& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) os << ' ';
    os << point_text(p.vertices()[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace

std::vector<Character> default_character_grid(const Presentation& p, long long bound) {
  const AbelianizationData ab = analyze_abelianization(p);
  std::vector<Character> grid;
  for (long long vx = -bound; vx <= bound; ++vx) {
    for (long long vy = -bound; vy <= bound; ++vy) {
      if (vx == 0 && vy == 0) continue;
      if (gcd_ll(vx, vy) != 1) continue;
      if (vx * ab.e_x + vy * ab.e_y != 0) continue;
      grid.push_back(make_character(p, vx, vy));
    }
  }
  return grid;
}

Report analyze(const Presentation& p,
               std::span<const std::pair<long long, long long>> character_values,
               bool include_trace) {
  Report r;
  r.presentation = p;
  r.include_trace = include_trace;

  r.classification = classify(p);
  const PresentationKind kind = r.classification.kind;
  if (kind == PresentationKind::free_rank2 || kind == PresentationKind::other_b1_1) {
    throw ClassificationError(
        "analysis refused: presentation classified as " +
            std::string(to_string(kind)) +
            (kind == PresentationKind::free_rank2
                 ? " (empty relator: the free group on two generators)"
                 : " (b1 = 1 with both generators nonzero in H)"),
        kind);
  }

  auto [core, conj] = cyclic_reduce(p.relator);
  r.reduced_relator = core;
  if (r.classification.relator_conjugated) {
    r.warnings.push_back("relator was not cyclically reduced; replaced by its cyclic "
                         "reduction (conjugator " +
                         render_word(conj, p.names) + ")");
  }
  r.abelianization = analyze_abelianization(make_presentation(p.names, core));

  std::vector<Character> chars;
  if (character_values.empty()) {
    chars = default_character_grid(p);
  } else {
    chars.reserve(character_values.size());
    for (const auto& [vx, vy] : character_values) {
      chars.push_back(make_character(p, vx, vy));
    }
  }

  try {
    r.polytope = compute_polytope(p);
  } catch (const ClassificationError& e) {
    r.polytope_refused = e.what();
  }

  r.marking_report = markings(p, chars);

  if (r.polytope) {
    for (const Character& chi : chars) {
      r.thickness_table.push_back(
          ThicknessEntry{chi, thickness(r.polytope->class_pt.representative(),
                                        chi.induced)});
    }
    // Net coefficients per image level; the multiset support ignores the
    // cancellation, which is what makes the hull match the skew-field support.
    std::map<LatticePoint, std::pair<long long, long long>> levels;  // count, net
    for (const SignedImage& s : r.polytope->term_images) {
      auto& [count, net] = levels[s.image];
      ++count;
      net += s.sign;
    }
    for (const auto& [image, stats] : levels) {
      const auto& [count, net] = stats;
      if (net == 0) {
        std::ostringstream os;
        os << "image " << point_text(image) << " carries " << count
           << " terms whose integer coefficients cancel; the point stays in the "
           << "support (multiset semantics)";
        r.cancellation_notes.push_back(os.str());
      }
    }
  }

  if (!r.classification.torsion_free) {
    r.splitting_refused =
        "torsion: the relator is a proper power, the splitting formula requires a "
        "torsion-free group";
  } else if (!r.polytope) {
    r.splitting_refused = r.polytope_refused;
  } else {
    for (const Character& chi : chars) {
      const Covector phi = primitive(chi.induced);
      const long long th = thickness(r.polytope->class_pt.representative(), phi);
      r.splitting_table.push_back(SplittingReport{chi, th, th + 1});
    }
  }
  return r;
}

std::string render_json(const Report& r) {
  const GeneratorNames names = r.presentation.names;
  json j;
  j["schema"] = std::string(kReportSchema);
  j["version"] = std::string(kToolVersion);

  j["presentation"] = {
      {"generators", std::string(1, names.x) + "," + std::string(1, names.y)},
      {"relator", render_word(r.presentation.relator, names)},
      {"cyclically_reduced", r.presentation.cyclically_reduced},
      {"reduced_relator", render_word(r.reduced_relator, names)},
  };
  j["warnings"] = r.warnings;

  json cls;
  cls["kind"] = std::string(to_string(r.classification.kind));
  cls["torsion_free"] = r.classification.torsion_free;
  cls["relator_conjugated"] = r.classification.relator_conjugated;
  if (r.classification.power) {
    cls["proper_power"] = {{"root", render_word(r.classification.power->root, names)},
                           {"exponent", r.classification.power->exponent}};
  } else {
    cls["proper_power"] = nullptr;
  }
  j["classification"] = cls;

  j["abelianization"] = {
      {"exponent_sums", json::array({r.abelianization.e_x, r.abelianization.e_y})},
      {"b1", r.abelianization.b1},
      {"projection", r.abelianization.projection},
      {"torsion_order", r.abelianization.torsion_order},
  };

  if (r.polytope) {
    const PolytopeInvariant& inv = *r.polytope;
    json terms = json::array();
    for (const SignedImage& s : inv.term_images) {
      terms.push_back({{"sign", s.sign},
                       {"image", point_json(s.image)},
                       {"position", s.position}});
    }
    j["polytope"] = {
        {"witness_generator",
         std::string(1, inv.witness == Gen::x ? names.x : names.y)},
        {"positive", polytope_json(inv.class_pt.representative().positive)},
        {"negative", polytope_json(inv.class_pt.representative().negative)},
        {"single", inv.single ? polytope_json(*inv.single) : json(nullptr)},
        {"term_images", terms},
    };
  } else {
    j["polytope"] = nullptr;
    j["polytope_refused"] = r.polytope_refused;
  }

  if (r.include_trace && r.polytope) {
    json trace = json::array();
    const Word relator = r.reduced_relator;
    const Gen z = r.polytope->witness;
    for (const FoxTerm& t : fox_term_list(relator, z)) {
      trace.push_back({{"sign", t.sign},
                       {"word", render_word(t.word, names)},
                       {"position", t.position}});
    }
    j["fox_trace"] = trace;
  }

  json marks = json::array();
  for (const MarkingVerdict& v : r.marking_report.verdicts) {
    marks.push_back({{"character", character_json(v.character)}, {"marked", v.marked}});
  }
  j["markings"] = {{"entries", marks},
                   {"marked_count", r.marking_report.marked_count},
                   {"torsion_override", r.marking_report.torsion_override}};

  json th = json::array();
  for (const ThicknessEntry& e : r.thickness_table) {
    th.push_back({{"character", character_json(e.character)}, {"value", e.value}});
  }
  j["thickness"] = th;

  json spl;
  json entries = json::array();
  for (const SplittingReport& e : r.splitting_table) {
    entries.push_back({{"character", character_json(e.character)},
                       {"thickness", e.thickness},
                       {"complexity", e.complexity}});
  }
  spl["entries"] = entries;
  spl["refused"] = r.splitting_refused.empty() ? json(nullptr) : json(r.splitting_refused);
  j["splitting"] = spl;

  j["cancellation_notes"] = r.cancellation_notes;

  return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  const GeneratorNames names = r.presentation.names;
  std::ostringstream os;
  os << "presentation  <" << names.x << "," << names.y << " | "
     << (r.presentation.relator.empty() ? "1" : render_word(r.presentation.relator, names))
     << ">\n";
  for (const std::string& w : r.warnings) os << "warning       " << w << "\n";
  os << "classification " << to_string(r.classification.kind)
     << (r.classification.torsion_free ? ", torsion-free" : ", with torsion");
  if (r.classification.power) {
    os << " (relator = (" << render_word(r.classification.power->root, names) << ")^"
       << r.classification.power->exponent << ")";
  }
  os << "\n";
  os << "abelianization exponent sums (" << r.abelianization.e_x << ","
     << r.abelianization.e_y << "), b1 = " << r.abelianization.b1
     << ", torsion order " << r.abelianization.torsion_order << "\n";

  if (r.polytope) {
    const PolytopeInvariant& inv = *r.polytope;
    os << "polytope      d/d" << (inv.witness == Gen::x ? names.x : names.y) << " with "
       << inv.term_images.size() << " terms\n";
    os << "  positive    " << polytope_text(inv.class_pt.representative().positive) << "\n";
    os << "  negative    " << polytope_text(inv.class_pt.representative().negative) << "\n";
    if (inv.single) {
      os << "  single      " << polytope_text(*inv.single) << "\n";
    } else {
      os << "  single      none (genuinely virtual)\n";
    }
    if (r.include_trace) {
      for (const FoxTerm& t : fox_term_list(r.reduced_relator, inv.witness)) {
        os << "  term        " << (t.sign > 0 ? '+' : '-') << " "
           << (t.word.empty() ? "1" : render_word(t.word, names)) << "  image "
           << point_text(abelian_image(t.word, r.abelianization)) << "\n";
      }
    }
  } else {
    os << "polytope      refused: " << r.polytope_refused << "\n";
  }
  for (const std::string& n : r.cancellation_notes) os << "note          " << n << "\n";

  os << "markings      " << r.marking_report.marked_count << " of "
     << r.marking_report.verdicts.size() << " characters marked";
  if (r.marking_report.torsion_override) os << " (torsion: all unmarked)";
  os << "\n";
  for (const MarkingVerdict& v : r.marking_report.verdicts) {
    if (v.marked) {
      os << "  marked      phi(" << names.x << ")=" << v.character.value_x << ", phi("
         << names.y << ")=" << v.character.value_y << "\n";
    }
  }

  if (!r.splitting_refused.empty()) {
    os << "splitting     refused: " << r.splitting_refused << "\n";
  } else {
    for (const SplittingReport& e : r.splitting_table) {
      os << "splitting     phi(" << names.x << ")=" << e.character.value_x << ", phi("
         << names.y << ")=" << e.character.value_y << ": thickness " << e.thickness
         << ", complexity " << e.complexity << "\n";
    }
  }
  return os.str();
}

}  // namespace onerel
