#include "commands.hpp"

#include <functional>
#include <variant>

#include "document.hpp"
#include "mcdeform/deform.hpp"
#include "mcdeform/deligne.hpp"
#include "mcdeform/errors.hpp"

namespace mcdeform::cli {

using nlohmann::json;

namespace {

struct InvalidInput {
  std::string role;
  std::string path;
  ValidationReport report;
};

json validation_json(const ValidationReport& v) {
  json j{{"ok", v.ok}};
  if (!v.ok) {
    j["axiom"] = v.axiom;
    j["witness"] = v.witness;
    j["detail"] = v.detail;
  }
  return j;
}

std::string error_name(const Error& e) {
  if (dynamic_cast<const NotMC*>(&e)) return "NotMC";
  if (dynamic_cast<const ShapeMismatch*>(&e)) return "ShapeMismatch";
  if (dynamic_cast<const DegreeOverflow*>(&e)) return "DegreeOverflow";
  if (dynamic_cast<const PreconditionFailed*>(&e)) return "PreconditionFailed";
  if (dynamic_cast<const NotInvertible*>(&e)) return "NotInvertible";
  return "Error";
}

Report guarded(std::string command, std::vector<std::string> args, const std::function<void(Report&)>& body) {
  Report r;
  r.command = std::move(command);
  r.args = std::move(args);
  try {
    body(r);
  } catch (const InvalidInput& e) {
    r.status = "invalid";
    r.exit_code = kExitValidation;
    r.payload = validation_json(e.report);
    r.payload["input"] = e.role;
    r.payload["path"] = e.path;
  } catch (const InvalidDocument& e) {
    r.status = "invalid";
    r.exit_code = kExitValidation;
    r.payload = validation_json(e.report());
  } catch (const ParseError& e) {
    r.status = "parse_error";
    r.exit_code = kExitParse;
    r.payload = {{"message", e.what()}, {"line", e.line()}, {"column", e.column()}};
  } catch (const Error& e) {
    r.status = "error";
    r.exit_code = kExitEngine;
    r.payload = {{"error", error_name(e)}, {"message", e.what()}};
    if (auto* nm = dynamic_cast<const NotMC*>(&e)) r.payload["witness"] = nm->witness();
  } catch (const std::exception& e) {
    r.status = "error";
    r.exit_code = kExitEngine;
    r.payload = {{"error", "internal"}, {"message", e.what()}};
  }
  return r;
}

// A dgla document, or a complex document standing for End(A).
DGLA load_fiber(const std::string& path) {
  Document doc = load_document(path);
  if (doc.kind == DocumentKind::Complex) {
    ChainComplex a = to_complex(doc);
    if (auto v = validate_complex(a); !v.ok) throw InvalidInput{"g", path, v};
    return end_dgla(a);
  }
  DGLA g = to_dgla(doc);
  if (auto v = validate_dgla(g); !v.ok) throw InvalidInput{"g", path, v};
  return g;
}

ArtinianLocalDGA load_base(const std::string& path) {
  ArtinianLocalDGA r = to_artinian(load_document(path));
  if (auto v = validate_artinian(r); !v.ok) throw InvalidInput{"R", path, v};
  return r;
}

ArtinHost load_host(const std::string& g_path, const std::string& r_path) {
  DGLA g = load_fiber(g_path);
  return ArtinHost(load_base(r_path), std::move(g));
}

Vec load_element(const std::string& path, const ArtinHost& h) { return to_host_element(load_document(path), h); }

json element_json(const ArtinHost& h, const Vec& v) {
  json terms = json::array();
  const std::size_t n = h.fiber().dim();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    terms.push_back({{"coefficient", to_string(v[i])},
                     {"base", h.base().generator(h.base().m_basis()[i / n]).label},
                     {"fiber", h.fiber().label(i % n)}});
  }
  return terms;
}

json form_json(const ArtinHost& h, const FormElement& z) {
  json terms = json::array();
  const std::size_t n = h.fiber().dim();
  for (std::size_t i = 0; i < z.host_dim(); ++i)
    for (const auto& [m, c] : z.component(i).terms()) {
      json dt = json::array();
      for (int j = 0; j < z.simplex_dim(); ++j)
        if (m.dt_mask & (1u << j)) dt.push_back(j + 1);
      terms.push_back({{"coefficient", to_string(c)},
                       {"base", h.base().generator(h.base().m_basis()[i / n]).label},
                       {"fiber", h.fiber().label(i % n)},
                       {"t", m.exponents},
                       {"dt", dt}});
    }
  return {{"kind", "simplex"}, {"n", z.simplex_dim()}, {"terms", terms}};
}

json end_element_json(const DGLA& end, const Vec& v) {
  json terms = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.push_back({{"coefficient", to_string(v[i])}, {"map", end.label(i)}});
  return terms;
}

json degree_dims(const std::vector<std::pair<int, std::size_t>>& dims) {
  json out = json::array();
  for (const auto& [k, n] : dims) out.push_back({{"degree", k}, {"dim", n}});
  return out;
}

// Degree-1 elements that are MC modulo F^2, taken modulo F^2: a basis of
// first-order solutions from which lifting starts.
std::vector<Vec> tangent_basis(const ArtinHost& h) {
  const DGLA& g = h.host();
  const auto idx = g.indices_in_degree(1);
  std::vector<Vec> cols;
  for (std::size_t i : idx) cols.push_back(g.differential(Vec::unit(g.dim(), i)));
  for (const auto& v : h.filtration_basis(2, 2)) cols.push_back(v);
  std::vector<Vec> candidates = h.filtration_basis(2, 1);
  const std::size_t skip = candidates.size();
  if (!cols.empty())
    for (const auto& k : kernel_basis(QMatrix::from_columns(g.dim(), cols))) {
      Vec v = g.zero();
      for (std::size_t j = 0; j < idx.size(); ++j) v[idx[j]] = k[j];
      if (!v.is_zero()) candidates.push_back(v);
    }
  std::vector<Vec> out;
  for (std::size_t i : independent_subset(candidates, g.dim()))
    if (i >= skip) out.push_back(candidates[i]);
  return out;
}

json lift_json(const ArtinHost& h, const Vec& start, std::size_t order) {
  json steps = json::array();
  Vec current = start;
  bool obstructed = false;
  for (const auto& s : lift(h, start, order)) {
    json step{{"order", s.order},
              {"curvature_component", element_json(h, s.curvature_component)},
              {"closed", s.closed},
              {"obstructed", s.obstructed}};
    if (s.obstructed) {
      obstructed = true;
      step["obstruction"] = element_json(h, s.curvature_component);
    } else {
      step["correction"] = element_json(h, s.correction);
      current = *s.lifted;
    }
    steps.push_back(step);
  }
  return {{"start", element_json(h, start)},
          {"steps", steps},
          {"obstructed", obstructed},
          {"result", element_json(h, current)},
          {"result_is_mc", is_mc(h, current)}};
}

}  // namespace

Report cmd_validate(const std::string& path) {
  return guarded("validate", {path}, [&](Report& r) {
    Document doc = load_document(path);
    json p{{"kind", kind_name(doc.kind)}};
    ValidationReport v;
    switch (doc.kind) {
      case DocumentKind::Dgla: {
        DGLA g = to_dgla(doc);
        v = validate_dgla(g);
        std::vector<std::pair<int, std::size_t>> dims;
        for (int k : g.degrees()) dims.emplace_back(k, g.indices_in_degree(k).size());
        p["dimension"] = g.dim();
        p["degrees"] = degree_dims(dims);
        break;
      }
      case DocumentKind::Complex: {
        ChainComplex a = to_complex(doc);
        v = validate_complex(a);
        std::vector<std::pair<int, std::size_t>> dims, homology;
        for (int k : a.degrees()) dims.emplace_back(k, a.dim(k));
        p["degrees"] = degree_dims(dims);
        if (v.ok) {
          for (int k : a.degrees()) homology.emplace_back(k, homology_dim(a, k));
          p["homology"] = degree_dims(homology);
        }
        break;
      }
      case DocumentKind::Artinian: {
        ArtinianLocalDGA a = to_artinian(doc);
        v = validate_artinian(a);
        p["dimension"] = a.dim();
        if (v.ok) {
          p["nilpotency_index"] = m_filtration(a).nilpotency_index;
          p["square_zero"] = is_square_zero(a);
        }
        break;
      }
      case DocumentKind::Element:
      case DocumentKind::Simplex:
        p["terms"] = doc.terms.size();
        break;
    }
    p.update(validation_json(v));
    r.payload = p;
    if (!v.ok) {
      r.status = "fail";
      r.exit_code = kExitValidation;
    }
  });
}

Report cmd_mc(const std::string& g_path, const std::string& r_path, const McOptions& o) {
  std::vector<std::string> args{g_path, r_path};
  switch (o.mode) {
    case McOptions::Mode::Check:
      args.insert(args.end(), {"--check", o.z_path});
      break;
    case McOptions::Mode::SolveSquareZero:
      args.push_back("--solve-square-zero");
      break;
    case McOptions::Mode::Lift:
      args.insert(args.end(), {"--lift-order", std::to_string(o.order)});
      if (o.start) args.insert(args.end(), {"--start", *o.start});
      break;
  }
  return guarded("mc", args, [&](Report& r) {
    ArtinHost h = load_host(g_path, r_path);
    switch (o.mode) {
      case McOptions::Mode::Check: {
        Vec z = load_element(o.z_path, h);
        const bool degree_one = h.host().is_homogeneous(z, 1);
        const Vec c = curvature(h, z);
        r.payload = {{"degree_one", degree_one}, {"is_mc", degree_one && c.is_zero()}, {"curvature", element_json(h, c)}};
        break;
      }
      case McOptions::Mode::SolveSquareZero: {
        auto s = mc_solve_square_zero(h);
        json basis = json::array();
        for (const auto& v : s.basis) basis.push_back(element_json(h, v));
        r.payload = {{"dimension", s.basis.size()}, {"basis", basis}};
        break;
      }
      case McOptions::Mode::Lift: {
        std::vector<Vec> starts = o.start ? std::vector<Vec>{load_element(*o.start, h)} : tangent_basis(h);
        json lifts = json::array();
        bool any = false;
        for (const auto& z : starts) {
          lifts.push_back(lift_json(h, z, o.order));
          any = any || lifts.back()["obstructed"].get<bool>();
        }
        r.payload = {{"order", o.order},
                     {"nilpotency_index", h.filtration().nilpotency_index},
                     {"lifts", lifts},
                     {"obstructed", any}};
        break;
      }
    }
  });
}

Report cmd_gauge(const std::string& g_path, const std::string& r_path, const std::string& z_path,
                 const std::string& z_prime_path) {
  return guarded("gauge", {g_path, r_path, z_path, z_prime_path}, [&](Report& r) {
    ArtinHost h = load_host(g_path, r_path);
    const Vec z = load_element(z_path, h), z_prime = load_element(z_prime_path, h);
    for (const auto& [name, v] : {std::pair{"z", &z}, std::pair{"z'", &z_prime}})
      if (!h.host().is_homogeneous(*v, 1) || !is_mc(h, *v))
        throw PreconditionFailed(std::string(name) + " is not a Maurer-Cartan element");
    const GaugeSearch s = gauge_equivalent(h, z, z_prime);
    if (auto* f = std::get_if<GaugeFound>(&s)) {
      const Vec image = gauge_act(h, f->gamma, z);
      r.payload = {{"result", "found"},
                   {"gamma", element_json(h, f->gamma)},
                   {"verification", {{"gauge_image", element_json(h, image)}, {"matches", image == z_prime}}}};
    } else {
      r.payload = {{"result", "not_found"}, {"order", std::get<GaugeNotFound>(s).order}};
    }
  });
}

Report cmd_nerve(const std::string& g_path, const std::string& r_path, const NerveOptions& o) {
  std::vector<std::string> args{g_path, r_path};
  if (o.mode == NerveOptions::Mode::Path)
    args.insert(args.end(), {"--path", o.z_path, o.gamma_path});
  else
    args.insert(args.end(), {"--member", o.simplex_path});
  return guarded("nerve", args, [&](Report& r) {
    ArtinHost h = load_host(g_path, r_path);
    if (o.mode == NerveOptions::Mode::Path) {
      const Vec z = load_element(o.z_path, h), gamma = load_element(o.gamma_path, h);
      const NerveSimplex p = gauge_path(h, z, gamma);
      r.payload = {{"simplex", form_json(h, p.element)},
                   {"faces",
                    {{"d0", element_json(h, as_vector(face_map(0, p.element)))},
                     {"d1", element_json(h, as_vector(face_map(1, p.element)))}}},
                   {"member", nerve_member(h, p.element).member},
                   {"degenerate", gamma.is_zero()}};
    } else {
      const MembershipReport m = nerve_member(h, to_form_element(load_document(o.simplex_path), h));
      r.payload = {{"member", m.member}, {"witness", m.witness}};
    }
  });
}

Report cmd_deform(const DeformOptions& o) {
  std::vector<std::string> args;
  if (o.a_path) args.push_back(*o.a_path);
  if (o.counterexample)
    args.insert(args.end(), {"--counterexample", std::to_string(*o.counterexample)});
  else
    args.push_back("--classify");
  return guarded("deform", args, [&](Report& r) {
    if (o.counterexample) {
      const CounterexampleReport c = counterexample_demo({*o.counterexample});
      r.payload = {{"radius", c.radius},
                   {"is_mc", c.is_mc},
                   {"gauge_trivial", c.gauge_trivial},
                   {"interior_homology", degree_dims(c.interior_homology)},
                   {"boundary_homology", degree_dims(c.boundary_homology)},
                   {"interior_acyclic", c.interior_acyclic},
                   {"conclusion", c.conclusion}};
      return;
    }
    if (!o.a_path) throw PreconditionFailed("deform --classify needs a complex");
    const ChainComplex a = to_complex(load_document(*o.a_path));
    if (auto v = validate_complex(a); !v.ok) throw InvalidInput{"A", *o.a_path, v};
    const FirstOrderClassification c = classify_first_order(a);
    const DGLA end = end_dgla(a);
    json reps = json::array();
    for (const auto& v : c.cocycle_representatives) reps.push_back(end_element_json(end, v));
    r.payload = {{"dimension", c.dimension}, {"cocycle_representatives", reps}, {"statement", c.statement}};
  });
}

}  // namespace mcdeform::cli
