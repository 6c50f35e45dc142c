#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liealg/catalog.hpp"
#include "liealg/cohomology.hpp"
#include "liealg/contractions.hpp"
#include "liealg/deformations.hpp"
#include "liealg/geometry.hpp"
#include "liealg/homogeneous.hpp"
#include "liealg/invariants.hpp"
#include "liealg/json_io.hpp"
#include "liealg/rigidity.hpp"

using namespace liealg;

namespace {

constexpr int kOk = 0, kUsage = 1, kValidation = 2, kParse = 3, kPrecondition = 4;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

LieAlgebra load_algebra(const std::string& path) { return parse_algebra(read_json_file(path)); }

Subspace index_span(size_t n, const std::vector<int>& idx) {
  std::vector<Vec> v;
  for (int i : idx) {
    if (i < 1 || static_cast<size_t>(i) > n) throw ParseError("basis index out of range: " + std::to_string(i));
    v.push_back(unit_vec(n, static_cast<size_t>(i - 1)));
  }
  return Subspace::span(n, v);
}

json dims_json(const std::vector<size_t>& d) { return json(d); }

int cmd_check(const std::string& file) {
  ParsedAlgebra p = parse_structure(read_json_file(file));
  ValidationReport r = validate_jacobi(p.sc);
  json out;
  out["valid"] = r.ok;
  out["dim"] = p.sc.n();
  out["residuals"] = residuals_to_json(r);
  emit(out);
  return r.ok ? kOk : kValidation;
}

int cmd_invariants(const std::string& file) {
  LieAlgebra g = load_algebra(file);
  json out;
  bool nil = is_nilpotent(g);
  out["dim"] = g.dim();
  out["nilpotent"] = nil;
  out["solvable"] = is_solvable(g);
  out["nilindex"] = nil ? json(nilindex(g)) : json(nullptr);
  out["lower_central_series"] = dims_json(lower_central_series(g).dims());
  out["derived_series"] = dims_json(derived_series(g).dims());
  out["center_dim"] = center(g).dim();
  if (nil) {
    auto cs = characteristic_sequence(g);
    out["char_seq"] = cs.seq;
    out["char_seq_heuristic"] = cs.heuristic_generic;
    out["filiform"] = is_filiform(g);
  } else {
    out["char_seq"] = nullptr;
    out["filiform"] = false;
  }
  Matrix K = killing_form(g);
  out["killing_rank"] = rank(K);
  out["semisimple"] = is_semisimple(g);
  emit(out);
  return kOk;
}

int cmd_cohomology(const std::string& file, size_t p, bool basis) {
  LieAlgebra g = load_algebra(file);
  CohomologyReport r = cohomology_dims(g, p, basis);
  json out;
  out["p"] = r.p;
  out["dimC"] = r.dim_C;
  out["dimZ"] = r.dim_Z;
  out["dimB"] = r.dim_B;
  out["dimH"] = r.dim_H;
  out["modular_certified"] = r.modular_certified;
  if (basis) {
    json z = json::array(), b = json::array();
    for (const auto& c : r.Z_basis) z.push_back(cochain_to_json(c));
    for (const auto& c : r.B_basis) b.push_back(cochain_to_json(c));
    out["Z_basis"] = z;
    out["B_basis"] = b;
  }
  emit(out);
  return kOk;
}

json limit_report(const LieAlgebra& g, const std::optional<LieAlgebra>& lim) {
  json out;
  out["dim_der_before"] = derivations(g).size();
  if (!lim) {
    out["limit"] = nullptr;
    out["reason"] = "no limit at eps = 0";
    return out;
  }
  out["limit"] = algebra_to_json(*lim);
  out["dim_der_after"] = derivations(*lim).size();
  return out;
}

int cmd_contract(const std::string& file, const std::vector<int>& ww, const std::vector<int>& iw, bool abel,
                 bool contact) {
  LieAlgebra g = load_algebra(file);
  const size_t n = g.dim();
  int modes = !ww.empty() + !iw.empty() + abel + contact;
  if (modes != 1) throw std::invalid_argument("choose exactly one of --ww, --iw, --abelian, --contact");
  if (!ww.empty()) {
    if (ww.size() != n) throw std::invalid_argument("--ww needs one exponent per basis vector");
    emit(limit_report(g, weimar_woods(g, ww)));
  } else if (!iw.empty()) {
    Subspace h = index_span(n, iw);
    InonuWigner r = inonu_wigner(g, h);
    json out = limit_report(g, r.algebra);
    out["basis"] = matrix_to_json(r.basis);
    out["h_slots"] = json::array();
    for (size_t s : r.h_slots) out["h_slots"].push_back(s + 1);
    emit(out);
  } else if (abel) {
    emit(limit_report(g, limit_at_zero(param_act(g, ParamMatrix::diagonal(std::vector<int>(n, 1))))));
  } else {
    auto w = find_contact_form(g);
    if (!w) {
      json out;
      out["limit"] = nullptr;
      out["reason"] = "no contact form found by the bounded search";
      emit(out);
      return kPrecondition;
    }
    json out = limit_report(g, contract_contact_to_heisenberg(g, *w));
    out["contact_form"] = form_to_json(w->omega);
    out["basis"] = matrix_to_json(w->basis);
    emit(out);
  }
  return kOk;
}

int cmd_deform(const std::string& base, const std::string& phi_file, size_t order) {
  LieAlgebra g = load_algebra(base);
  Cochain phi = parse_cochain(read_json_file(phi_file), g.dim());
  if (phi.p() != 2) throw std::invalid_argument("--phi must be a 2-cochain");
  auto lin = linear_deformation_check(g, phi);
  json out;
  out["is_cocycle"] = lin.is_cocycle;
  out["is_square_zero"] = lin.is_square_zero;
  out["valid_for_all_t"] = lin.valid_for_all_t;
  DeformationJet jet;
  jet.base = g;
  jet.terms = {phi};
  jet.order = order;
  json res = json::object();
  for (const auto& [k, c] : jacobi_residuals(jet, order)) res[std::to_string(k)] = cochain_to_json(c);
  out["residuals"] = res;
  // extend phi by successive integration steps
  std::vector<Cochain> prefix{phi};
  json integ;
  integ["obstructed_at"] = nullptr;
  if (lin.is_cocycle) {
    while (prefix.size() < order) {
      auto next = integrate_step(g, prefix);
      if (!next) {
        integ["obstructed_at"] = prefix.size() + 1;
        break;
      }
      prefix.push_back(*next);
    }
    integ["reached_order"] = prefix.size();
    json terms = json::array();
    for (const auto& c : prefix) terms.push_back(cochain_to_json(c));
    integ["terms"] = terms;
  } else {
    integ["reached_order"] = 0;
  }
  out["integration"] = integ;
  emit(out);
  return kOk;
}

json flag_json(const FlagDecomposition& f) {
  json out;
  json b = json::array(), V = json::array();
  for (const auto& s : f.b) b.push_back(series_to_json(s));
  for (const auto& v : f.V) V.push_back(vec_to_json(v));
  out["b"] = b;
  out["V"] = V;
  out["length"] = f.length();
  out["precision_exhausted"] = f.precision_exhausted;
  out["order_needed"] = f.order_needed;
  return out;
}

int cmd_deform_decompose(const std::string& file) {
  json j = read_json_file(file);
  if (j.is_object() && j.contains("vector")) {
    size_t order = j.value("order", 8);
    std::vector<TruncatedSeries> v;
    for (const auto& s : j.at("vector")) v.push_back(parse_series(s, order));
    emit(flag_json(flag_decompose(v)));
    return kOk;
  }
  DeformationJet jet = parse_jet(j);
  ValuedDecomposition d = decompose_deformation(jet);
  json out;
  json eps = json::array(), phi = json::array();
  for (const auto& e : d.eps) eps.push_back(series_to_json(e));
  for (const auto& c : d.phi) phi.push_back(cochain_to_json(c));
  out["eps"] = eps;
  out["phi"] = phi;
  out["flag"] = flag_json(d.flag);
  auto fs = finite_system_check(d);
  out["finite_system"] = {{"holds", fs.all_hold()}, {"dim_V", fs.dim_V}, {"bound", fs.bound}};
  emit(out);
  return kOk;
}

int cmd_rigidity(const std::string& file, const std::vector<int>& torus, const std::vector<int>& nil) {
  LieAlgebra g = load_algebra(file);
  const size_t n = g.dim();
  RigidityVerdict nr = nr_test(g);
  json out;
  out["nr_test"] = {{"verdict", verdict_name(nr.verdict)}, {"dimH2", *nr.dim_H2}};
  Verdict final_v = nr.verdict;
  if (!torus.empty() || !nil.empty()) {
    Subspace T = index_span(n, torus), N = index_span(n, nil);
    RegularVector rv = regular_vector(g, T, N);
    RootSystem rs = root_system(g, rv.X, T, N);
    RigidityVerdict rt = rank_test(rs, N);
    out["rank_test"] = {{"verdict", verdict_name(rt.verdict)},
                        {"rank_S", rs.rank},
                        {"dim_n_minus_1", *rt.dim_n_minus_1},
                        {"regular_vector", vec_to_json(rv.X)},
                        {"relations", rs.text}};
    if (rt.verdict == Verdict::NotRigid) final_v = Verdict::NotRigid;
  }
  out["verdict"] = verdict_name(final_v);
  emit(out);
  return kOk;
}

json prelie_json(const PreLieProduct& p) {
  json a = json::array();
  const size_t n = p.n();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec v = p.basis_product(i, j);
      if (!vec_is_zero(v)) a.push_back({{"i", i + 1}, {"j", j + 1}, {"c", vec_to_json(v)}});
    }
  return a;
}

int cmd_geometry(const std::string& file, const std::string& sympl, const std::vector<std::string>& dext,
                 const std::string& gcs, const std::string& cplx) {
  LieAlgebra g = load_algebra(file);
  const size_t n = g.dim();
  int modes = !sympl.empty() + !dext.empty() + !gcs.empty() + !cplx.empty();
  if (modes != 1) throw std::invalid_argument("choose exactly one of --symplectic, --double-extension, --gcs, --complex");
  json out;
  if (!sympl.empty()) {
    ScalarForm w = parse_form(read_json_file(sympl), n);
    bool ok = symplectic_check(g, w);
    out["symplectic"] = ok;
    auto a = exact_primitive(g, w);
    out["exact"] = a.has_value();
    if (a) out["primitive"] = form_to_json(*a);
    if (ok) {
      PreLieProduct p = preLie_from_symplectic(g, w);
      auto r = preLie_check(g, p);
      out["pre_lie"] = {{"product", prelie_json(p)},
                        {"left_symmetric", r.left_symmetric},
                        {"commutator_is_bracket", r.commutator_is_bracket}};
    }
  } else if (!dext.empty()) {
    if (dext.size() != 2) throw std::invalid_argument("--double-extension needs <form.json> <D.json>");
    ScalarForm w = parse_form(read_json_file(dext[0]), n);
    Matrix D = parse_matrix(read_json_file(dext[1]), n, n);
    auto de = double_extension(g, w, D);
    if (!de) {
      out["extension"] = nullptr;
      out["reason"] = "Omega is not a coboundary";
    } else {
      out["extension"] = algebra_to_json(de->algebra);
      out["omega"] = form_to_json(de->omega);
      out["Z"] = vec_to_json(de->Z);
      out["jacobi"] = validate_jacobi(de->algebra.sc()).ok;
      out["symplectic"] = symplectic_check(de->algebra, de->omega);
    }
  } else if (!gcs.empty()) {
    Matrix J = parse_matrix(read_json_file(gcs), 2 * n, 2 * n);
    auto r = generalized_complex_check(g, J);
    out = {{"isometry", r.isometry},
           {"square", r.square},
           {"L_isotropic_maximal", r.L_isotropic_maximal},
           {"L_involutive", r.L_involutive},
           {"type", r.type}};
  } else {
    Matrix J = parse_matrix(read_json_file(cplx), n, n);
    out["complex_structure"] = complex_structure_check(g, J);
  }
  emit(out);
  return kOk;
}

json grading_json(const SoGrading& gr) {
  json out;
  out["k"] = gr.k;
  out["algebra"] = algebra_to_json(gr.algebra);
  json comps = json::object();
  for (size_t c = 0; c < 4; ++c) {
    json basis = json::array();
    for (const auto& v : gr.adapted[c]) basis.push_back(vec_to_json(v.v));
    comps[gr.grading.labels[c]] = {{"dim", gr.grading.components[c].dim()}, {"basis", basis}};
  }
  out["components"] = comps;
  out["grading_check"] = grading_check(gr.algebra, gr.grading);
  return out;
}

MetricSpec parse_metric_spec(const json& j, size_t k) {
  MetricSpec s;
  s.k = k;
  if (!j.is_object() || !j.contains("lambda1") || !j.contains("lambda2")) throw ParseError("spec needs lambda1 and lambda2");
  const char* names[3] = {"a", "b", "c"};
  for (size_t t = 0; t < 3; ++t) {
    const json& l1 = j.at("lambda1");
    const json& l2 = j.at("lambda2");
    if (!l1.contains(names[t]) || !l2.contains(names[t])) throw ParseError(std::string("spec missing component ") + names[t]);
    s.lambda1[t] = parse_scalar(l1.at(names[t]));
    s.lambda2[t] = parse_scalar(l2.at(names[t]));
  }
  return s;
}

json signature_json(const Signature& s) { return {{"pos", s.pos}, {"neg", s.neg}}; }

int cmd_metric(size_t k, const std::string& spec_file) {
  MetricSpec spec = parse_metric_spec(read_json_file(spec_file), k);
  auto eig = metric_eigenvalues(spec);
  auto sig = metric_signature(spec);
  auto cls = classify_metric(spec);
  const char* names[3] = {"a", "b", "c"};
  json out;
  json e = json::object(), s = json::object();
  for (size_t t = 0; t < 3; ++t) {
    e[names[t]] = {{"mu1", scalar_to_json(eig[t].mu1)}, {"m1", eig[t].m1},
                   {"mu2", scalar_to_json(eig[t].mu2)}, {"m2", eig[t].m2},
                   {"mu3", scalar_to_json(eig[t].mu3)}, {"m3", eig[t].m3}};
    s[names[t]] = signature_json(sig.per_gamma[t]);
  }
  out["eigenvalues"] = e;
  out["signature"] = s;
  out["total_signature"] = signature_json(sig.total);
  out["congruence_agrees"] = sig.congruence_agrees;
  out["riemannian"] = cls.riemannian;
  out["lorentzian"] = cls.lorentzian;
  out["naturally_reductive"] = cls.naturally_reductive;
  emit(out);
  return kOk;
}

json params_json(const std::map<std::string, long>& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on finite-dimensional Lie algebras"};
  app.require_subcommand(1);

  std::string file, phi_file, sympl, gcs, cplx, spec_file, name;
  std::vector<std::string> dext;
  std::vector<int> ww, iw, torus, nil;
  size_t p = 2, order = 4, k = 1;
  bool basis = false, abel = false, contact = false;
  long opt_n = 0, opt_p = 0, opt_phi = 0;

  auto* check = app.add_subcommand("check", "validate the Jacobi identity");
  check->add_option("file", file)->required();
  auto* inv = app.add_subcommand("invariants", "structural invariants");
  inv->add_option("file", file)->required();
  auto* coh = app.add_subcommand("cohomology", "adjoint cohomology dimensions");
  coh->add_option("file", file)->required();
  coh->add_option("--p", p, "degree");
  coh->add_flag("--basis", basis, "include cocycle and coboundary bases");
  auto* con = app.add_subcommand("contract", "contractions");
  con->add_option("file", file)->required();
  con->add_option("--ww", ww, "Weimar-Woods exponents")->delimiter(',');
  con->add_option("--iw", iw, "subalgebra basis indices")->delimiter(',');
  con->add_flag("--abelian", abel);
  con->add_flag("--contact", contact);
  auto* def = app.add_subcommand("deform", "formal deformation residuals");
  def->add_option("file", file)->required();
  def->add_option("--phi", phi_file)->required();
  def->add_option("--order", order);
  auto* dd = app.add_subcommand("deform-decompose", "flag decomposition");
  dd->add_option("file", file)->required();
  auto* rig = app.add_subcommand("rigidity", "rigidity tests");
  rig->add_option("file", file)->required();
  rig->add_option("--torus", torus)->delimiter(',');
  rig->add_option("--nilradical", nil)->delimiter(',');
  auto* geo = app.add_subcommand("geometry", "symplectic, complex and pre-Lie structures");
  geo->add_option("file", file)->required();
  geo->add_option("--symplectic", sympl);
  geo->add_option("--double-extension", dext)->expected(2);
  geo->add_option("--gcs", gcs);
  geo->add_option("--complex", cplx);
  auto* gra = app.add_subcommand("grading", "Z2 x Z2 grading of so(4k)");
  gra->add_option("--k", k)->required();
  auto* met = app.add_subcommand("metric", "adapted metrics on so(4k)");
  met->add_option("--k", k)->required();
  met->add_option("--spec", spec_file)->required();
  auto* cat = app.add_subcommand("catalog", "built-in algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list");
  auto* cat_show = cat->add_subcommand("show");
  cat_show->add_option("name", name)->required();
  auto* on = cat_show->add_option("--n", opt_n);
  auto* op = cat_show->add_option("--p", opt_p);
  auto* ophi = cat_show->add_option("--phi", opt_phi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file);
    if (*inv) return cmd_invariants(file);
    if (*coh) return cmd_cohomology(file, p, basis);
    if (*con) return cmd_contract(file, ww, iw, abel, contact);
    if (*def) return cmd_deform(file, phi_file, order);
    if (*dd) return cmd_deform_decompose(file);
    if (*rig) return cmd_rigidity(file, torus, nil);
    if (*geo) return cmd_geometry(file, sympl, dext, gcs, cplx);
    if (*gra) {
      emit(grading_json(build_so_grading(k)));
      return kOk;
    }
    if (*met) return cmd_metric(k, spec_file);
    if (*cat_list) {
      json a = json::array();
      for (const auto& e : default_catalog())
        a.push_back({{"name", e.name}, {"params", params_json(e.params)}, {"dim", e.algebra.dim()}, {"note", e.provenance}});
      emit(a);
      return kOk;
    }
    if (*cat_show) {
      std::map<std::string, long> params;
      if (*on) params["n"] = opt_n;
      if (*op) params["p"] = opt_p;
      if (*ophi) params["phi"] = opt_phi;
      emit(algebra_to_json(catalog_build(name, params)));
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const JacobiError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    emit({{"valid", false}, {"residuals", residuals_to_json(e.report)}});
    return kValidation;
  } catch (const FieldMismatch& e) {
    std::cerr << "field mismatch: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kUsage;
}
