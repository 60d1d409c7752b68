#include "jacobibv.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "core/parser.hpp"
#include "core/verify.hpp"

using namespace jbv;

struct jbv_structure {
  StructureBundle bundle;
};

struct jbv_report {
  std::string text;
  int passed = 0;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

RunOptions make_opts(const jbv_run_options* o) {
  RunOptions r;
  if (o) {
    if (o->seed != 0) r.seed = o->seed;
    if (o->trials > 0) r.trials = o->trials;
    if (o->max_degree > 0) r.max_degree = o->max_degree;
  }
  return r;
}

std::vector<std::string> split_semis(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

CheckResult info(const std::string& name, const std::string& value) {
  CheckResult c;
  c.name = name;
  c.pass = true;
  c.residual = value;
  return c;
}

Report cmd_check_jacobi(const StructureBundle& b) {
  Report rep;
  const auto& J = b.require_jacobi();
  const ValidityReport& v = J.validity();
  CheckResult c1;
  c1.name = "jacobi-pair-condition";
  c1.pass = v.residual_pp.is_zero();
  if (!c1.pass) c1.residual = v.residual_pp.to_string();
  rep.add(c1);
  CheckResult c2;
  c2.name = "jacobi-invariance-condition";
  c2.pass = v.residual_le.is_zero();
  if (!c2.pass) c2.residual = v.residual_le.to_string();
  rep.add(c2);
  return rep;
}

Report cmd_check_omega(const StructureBundle& b) {
  Report rep;
  const auto& S = b.require_omega();
  const OmegaValidity& v = S.validity();
  CheckResult c1{"poisson-condition", v.residual_qq.is_zero(), "", 0, -1};
  if (!c1.pass) c1.residual = v.residual_qq.to_string();
  rep.add(c1);
  CheckResult c2{"infinitesimal-automorphism-condition", v.residual_le.is_zero(), "", 0, -1};
  if (!c2.pass) c2.residual = v.residual_le.to_string();
  rep.add(c2);
  CheckResult c3{"pair-bracket-route", v.residual_pi.is_zero() == v.pass, "", 0, -1};
  c3.residual = v.residual_pi.is_zero() ? "extended bracket of the pair with itself vanishes"
                                        : v.residual_pi.to_string();
  rep.add(c3);
  return rep;
}

Report cmd_modular(const StructureBundle& b) {
  Report rep;
  const auto& J = b.require_jacobi();
  ModularData md = modular_data(J, b.require_vol());
  rep.add(info("V", md.V.to_string()));
  rep.add(info("divE", md.divE.to_string()));
  rep.add(info("V_class", md.V_class.to_string()));
  CheckResult der{"modular-derivation-property", md.derivation_ok, "", 0, -1};
  rep.add(der);
  rep.add(info("elw_section", md.elw_section.to_string()));
  rep.add(info("elw_candidate_display", md.elw_candidate_display.to_string()));
  rep.add(info("elw_candidate_relation", md.elw_candidate_relation.to_string()));
  rep.add(info("elw_matches_display", md.elw_matches_display ? "yes" : "no"));
  rep.add(info("elw_matches_relation", md.elw_matches_relation ? "yes" : "no"));
  if (b.omega) {
    ExtSection wpi = modular_pi(b.require_omega(), b.require_vol());
    rep.add(info("W_pi", wpi.to_string()));
    ExtSection aw = modular_elw_omega(b.require_omega(), b.require_vol());
    rep.add(info("A_omega", aw.to_string()));
    rep.add(info("trace_flat_sharp", trace_flat_sharp(b.require_omega()).to_string()));
  }
  return rep;
}

Report cmd_elw(const StructureBundle& b, const std::string& expr) {
  Report rep;
  const auto& J = b.require_jacobi();
  Value v = parse_expression(expr.empty() ? "1" : expr, b.chart);
  if (v.type != Value::Type::Scalar) throw StructuralError("elw: f must be a scalar expression");
  ExpPoly a = elw_expression(J, b.require_vol(), v.scalar);
  ExpPoly l = elw_expression_leibniz(J, b.require_vol(), v.scalar);
  rep.add(info("elw_definition_route", a.to_string()));
  rep.add(info("elw_leibniz_route", l.to_string()));
  CheckResult agree{"elw-two-routes", a == l, "", 0, -1};
  if (!agree.pass) agree.residual = (a - l).to_string();
  rep.add(agree);
  return rep;
}

Report cmd_betti(const StructureBundle& b, const std::string& expr, const RunOptions& opts) {
  Report rep;
  auto op = complex_op_from_name(expr.empty() ? "bv" : expr);
  if (!op) throw StructuralError("betti: unknown operator '" + expr + "'");
  const VolumeForm* vol = b.vol ? &*b.vol : nullptr;
  TruncatedComplex t = truncated_complex(*op, b.require_jacobi(), vol, opts.max_degree);
  auto bs = betti(t);
  std::ostringstream os;
  for (size_t k = 0; k < bs.size(); ++k) os << (k ? " " : "") << "h" << k << "=" << bs[k];
  rep.add(info(std::string("betti_") + complex_op_name(*op), os.str()));
  bool cz = true;
  for (size_t k = 0; k + 1 < t.mats.size(); ++k) {
    if (t.raising)
      cz = cz && composes_to_zero(t.mats[k + 1], t.mats[k]);
    else
      cz = cz && composes_to_zero(t.mats[k], t.mats[k + 1]);
  }
  CheckResult sq{"matrices-compose-to-zero", cz, "", 0, -1};
  rep.add(sq);
  return rep;
}

std::pair<int, std::vector<std::string>> parse_weighted_expr(const std::string& expr) {
  auto parts = split_semis(expr);
  if (parts.size() < 2 || parts.size() > 3)
    throw StructuralError("expected '<weight>; <slot1>[; <slot2>]'");
  int k = std::stoi(parts[0]);
  std::vector<std::string> slots{parts[1], parts.size() == 3 ? parts[2] : "0"};
  return {k, slots};
}

Report cmd_bv(const StructureBundle& b, const std::string& expr) {
  Report rep;
  const auto& J = b.require_jacobi();
  auto [k, slots] = parse_weighted_expr(expr);
  auto lift = [&](const std::string& text, int degree) {
    Value v = parse_expression(text, b.chart);
    if (v.type == Value::Type::Scalar) {
      if (degree == 0) return Tensor::scalar(b.chart, Kind::Form, v.scalar);
      if (v.scalar.is_zero()) return Tensor::zero(b.chart, Kind::Form, degree);
      throw StructuralError("slot expects a form of degree " + std::to_string(degree));
    }
    if (v.tensor.kind() != Kind::Form || v.tensor.degree() != degree)
      throw StructuralError("slot expects a form of degree " + std::to_string(degree));
    return v.tensor;
  };
  WForm lam(k, lift(slots[0], k), lift(slots[1], k > 0 ? k - 1 : 0));
  WForm out = bv_delta(J, lam);
  rep.add(info("bv_delta", out.to_string()));
  WForm oracle = bv_delta_oracle(J, lam);
  CheckResult agree{"generator-oracle-agreement", out == oracle, "", 0, -1};
  if (!agree.pass) agree.residual = (out - oracle).to_string();
  rep.add(agree);
  if (!J.is_valid()) rep.add(info("warning", "structure identities fail; results are formal"));
  return rep;
}

Report cmd_sigma(const StructureBundle& b, const std::string& expr) {
  Report rep;
  const auto& J = b.require_jacobi();
  auto [k, slots] = parse_weighted_expr(expr);
  auto lift = [&](const std::string& text, int degree) {
    Value v = parse_expression(text, b.chart);
    if (v.type == Value::Type::Scalar) {
      if (degree == 0) return Tensor::scalar(b.chart, Kind::Multivector, v.scalar);
      if (v.scalar.is_zero()) return Tensor::zero(b.chart, Kind::Multivector, degree);
      throw StructuralError("slot expects a multivector of degree " + std::to_string(degree));
    }
    if (v.tensor.kind() != Kind::Multivector || v.tensor.degree() != degree)
      throw StructuralError("slot expects a multivector of degree " + std::to_string(degree));
    return v.tensor;
  };
  WMv C(k, lift(slots[0], k), lift(slots[1], k > 0 ? k - 1 : 0));
  WMv out = sigma(J, C);
  rep.add(info("sigma", out.to_string()));
  WMv oracle = sigma_oracle(J, C);
  CheckResult agree{"coboundary-oracle-agreement", out == oracle, "", 0, -1};
  if (!agree.pass) agree.residual = (out - oracle).to_string();
  rep.add(agree);
  if (!J.is_valid()) rep.add(info("warning", "structure identities fail; results are formal"));
  return rep;
}

} // namespace

extern "C" {

const char* jbv_version(void) { return "0.1.0"; }

jbv_status jbv_structure_preset(const char* spec, jbv_structure** out, char** err) {
  if (!spec || !out) {
    set_err(err, "null argument");
    return JBV_EINVAL;
  }
  try {
    auto* s = new jbv_structure{parse_preset(spec)};
    *out = s;
    return JBV_OK;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return JBV_EPARSE;
  }
}

jbv_status jbv_structure_parse(const char* text, jbv_structure** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return JBV_EINVAL;
  }
  try {
    auto* s = new jbv_structure{parse_structure(text)};
    *out = s;
    return JBV_OK;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return JBV_EPARSE;
  }
}

jbv_status jbv_structure_print(const jbv_structure* s, char** out, char** err) {
  if (!s || !out) {
    set_err(err, "null argument");
    return JBV_EINVAL;
  }
  try {
    *out = dup_string(print_structure(s->bundle));
    return JBV_OK;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return JBV_EMATH;
  }
}

void jbv_structure_free(jbv_structure* s) { delete s; }

jbv_status jbv_run(const jbv_structure* s, const char* command, const char* expr,
                   const jbv_run_options* opts, jbv_report** out, char** err) {
  if (!s || !command || !out) {
    set_err(err, "null argument");
    return JBV_EINVAL;
  }
  RunOptions ro = make_opts(opts);
  std::string cmd(command);
  std::string ex = expr ? expr : "";
  try {
    Report rep;
    if (cmd == "check-jacobi") {
      rep = cmd_check_jacobi(s->bundle);
    } else if (cmd == "check-omega-poisson") {
      rep = cmd_check_omega(s->bundle);
    } else if (cmd == "modular") {
      rep = cmd_modular(s->bundle);
    } else if (cmd == "elw") {
      rep = cmd_elw(s->bundle, ex);
    } else if (cmd == "duality") {
      rep = run_suite("betti-duality", s->bundle, ro);
      rep.merge(run_suite("star-duality", s->bundle, ro));
    } else if (cmd == "betti") {
      rep = cmd_betti(s->bundle, ex, ro);
    } else if (cmd == "bv") {
      rep = cmd_bv(s->bundle, ex);
    } else if (cmd == "sigma") {
      rep = cmd_sigma(s->bundle, ex);
    } else if (cmd == "counterexample-nonstrong") {
      rep = nonstrong_witness(s->bundle);
    } else if (cmd.rfind("verify:", 0) == 0) {
      rep = run_suite(cmd.substr(7), s->bundle, ro);
    } else {
      set_err(err, "unknown command '" + cmd + "'");
      return JBV_EINVAL;
    }
    auto* r = new jbv_report;
    r->passed = rep.all_pass() ? 1 : 0;
    r->text = (opts && opts->json) ? render_json(rep) : render_text(rep);
    *out = r;
    return JBV_OK;
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return JBV_EPARSE;
  } catch (const StructuralError& e) {
    set_err(err, e.what());
    return JBV_EMATH;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return JBV_EINVAL;
  }
}

int jbv_report_passed(const jbv_report* r) { return r ? r->passed : 0; }

const char* jbv_report_text(const jbv_report* r) { return r ? r->text.c_str() : ""; }

void jbv_report_free(jbv_report* r) { delete r; }

void jbv_string_free(char* s) { std::free(s); }

jbv_status jbv_suite_names(char** out, char** err) {
  if (!out) {
    set_err(err, "null argument");
    return JBV_EINVAL;
  }
  std::ostringstream os;
  for (const auto& n : suite_names()) os << n << "\n";
  os << "all\n";
  *out = dup_string(os.str());
  return JBV_OK;
}

} // extern "C"
