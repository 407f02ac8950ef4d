#include "oddwedge/json_io.hpp"

namespace oddwedge {

json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const std::vector<cplx>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

json to_json(const ClassStructure& cs) {
  json j;
  j["num_classes"] = cs.num_classes;
  j["labels"] = cs.labels;
  j["class_of"] = cs.class_of;
  j["representatives"] = cs.representatives;
  j["sizes"] = cs.sizes;
  j["rep_orders"] = cs.rep_orders;
  json pt = json::array();
  for (int e = 1; e <= cs.group_order; ++e) {
    json row = json::array();
    for (int c = 0; c < cs.num_classes; ++c) row.push_back(cs.power_class(e, c));
    pt.push_back(row);
  }
  j["power_table"] = pt;
  return j;
}

json to_json(const FiniteGroup& g, const ClassStructure& cs) {
  json j;
  j["name"] = g.name;
  j["order"] = g.order;
  j["identity"] = g.identity;
  j["mul_table"] = g.mul;
  j["class_structure"] = to_json(cs);
  return j;
}

json to_json(const ClassFunction& f) {
  json j;
  j["group"] = f.structure()->group_name;
  j["classes"] = f.structure()->labels;
  j["values"] = to_json(f.values());
  return j;
}

json to_json(const CharacterTable& t) {
  json j;
  j["group"] = t.cs->group_name;
  j["classes"] = t.cs->labels;
  j["sizes"] = t.cs->sizes;
  j["dims"] = t.dims;
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r.values()));
  j["rows"] = rows;
  return j;
}

json to_json(const WedgeCoefficients& wc) {
  json j;
  j["k"] = wc.k;
  j["c"] = wc.c;
  return j;
}

json to_json(const TOperator& t) {
  json j;
  j["group"] = t.cs->group_name;
  j["classes"] = t.cs->labels;
  j["k"] = t.k;
  json rows = json::array();
  for (Eigen::Index r = 0; r < t.m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < t.m.cols(); ++c) row.push_back(t.m(r, c));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

json to_json(const TSpectrum& sp) {
  json j;
  json ev = json::array();
  for (const auto& lam : sp.eigenvalues) ev.push_back(to_json(lam));
  j["eigenvalues"] = ev;
  json vecs = json::array();
  for (Eigen::Index c = 0; c < sp.eigenvectors.cols(); ++c) {
    json col = json::array();
    for (Eigen::Index r = 0; r < sp.eigenvectors.rows(); ++r)
      col.push_back(to_json(sp.eigenvectors(r, c)));
    vecs.push_back(col);
  }
  j["eigenvectors"] = vecs;
  return j;
}

json to_json(const AdamsVerification& v) {
  json j;
  j["group"] = v.group;
  j["per_character_deviation"] = v.per_character;
  j["max_deviation"] = v.max_deviation;
  j["pass"] = v.pass;
  return j;
}

json to_json(const IterationTrace& tr) {
  json j;
  j["group"] = tr.start().structure()->group_name;
  switch (tr.status) {
    case IterationStatus::converged: j["status"] = "converged"; break;
    case IterationStatus::diverged: j["status"] = "diverged"; break;
    case IterationStatus::max_steps: j["status"] = "max_steps"; break;
  }
  j["step"] = tr.step;
  j["tol"] = tr.tol;
  j["divergence_bound"] = tr.divergence_bound;
  if (tr.blowup_log10) j["blowup_log10"] = *tr.blowup_log10;
  if (tr.limit) j["limit"] = to_json(tr.limit->values());
  json its = json::array();
  for (const auto& f : tr.iterates) its.push_back(to_json(f.values()));
  j["iterates"] = its;
  return j;
}

json to_json(const PsiFixedPoints7& fp) {
  json j;
  j["u"] = fp.u;
  j["trivial"] = fp.trivial;
  j["attractor"] = fp.attractor;
  j["derivative_trivial"] = fp.derivative_trivial;
  j["derivative_attractor"] = fp.derivative_attractor;
  return j;
}

json to_json(const FixedPointReport& rep) {
  json j;
  j["location"] = rep.location;
  json jac = json::array();
  for (Eigen::Index r = 0; r < rep.jacobian.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < rep.jacobian.cols(); ++c) row.push_back(rep.jacobian(r, c));
    jac.push_back(row);
  }
  j["jacobian"] = jac;
  j["singular_values"] = rep.singular_values;
  j["spectral_radius"] = rep.spectral_radius;
  switch (rep.classification) {
    case Stability::attracting: j["classification"] = "attracting"; break;
    case Stability::repelling: j["classification"] = "repelling"; break;
    case Stability::mixed: j["classification"] = "mixed"; break;
  }
  j["criterion"] = rep.criterion;
  return j;
}

json to_json(const BasinGrid& grid) {
  json j;
  j["rect"] = json::array({grid.x0, grid.x1, grid.y0, grid.y1});
  j["resolution"] = json::array({grid.nx, grid.ny});
  j["xs"] = grid.xs;
  j["ys"] = grid.ys;
  json labels = json::array();
  json steps = json::array();
  for (int iy = 0; iy < grid.ny; ++iy) {
    json lrow = json::array();
    json srow = json::array();
    for (int ix = 0; ix < grid.nx; ++ix) {
      lrow.push_back(basin_label_name(grid.at(ix, iy)));
      srow.push_back(grid.steps[static_cast<size_t>(iy) * grid.nx + ix]);
    }
    labels.push_back(lrow);
    steps.push_back(srow);
  }
  j["labels"] = labels;
  j["steps"] = steps;
  return j;
}

}  // namespace oddwedge
