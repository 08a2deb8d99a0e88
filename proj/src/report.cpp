#include "matbeta/report.hpp"

#include <cmath>
#include <cstdio>

#include "matbeta/hyper.hpp"

namespace matbeta {

namespace {

using nlohmann::json;

json opt_num(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

json expr_entry(const ExprResult& e) {
  json out;
  out["id"] = e.id;
  out["status"] = to_string(e.series.status);
  out["degree"] = e.series.degree;
  out["tail_estimate"] = e.series.tail_estimate;
  out["radius"] = e.series.radius;
  out["significance_loss"] = e.series.significance_loss;
  out["terminating"] = e.series.terminating;
  out["value"] = e.prob;
  out["sign"] = e.log_prob.sign;
  out["log_value"] =
      e.log_prob.sign == 0 ? json(nullptr) : json(e.log_prob.ln);
  return out;
}

void render(const json& j, std::string& out, int indent, int depth) {
  const std::string pad =
      indent < 0 ? "" : std::string(static_cast<std::size_t>(indent) *
                                        (static_cast<std::size_t>(depth) + 1),
                                    ' ');
  const std::string close_pad =
      indent < 0
          ? ""
          : std::string(static_cast<std::size_t>(indent) *
                            static_cast<std::size_t>(depth),
                        ' ');
  const char* nl = indent < 0 ? "" : "\n";
  switch (j.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    case json::value_t::string:
      out += j.dump();  // nlohmann handles escaping
      break;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += "[";
      out += nl;
      bool first = true;
      for (const auto& el : j) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        render(el, out, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += "]";
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.cbegin(); it != j.cend(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        render(it.value(), out, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += "}";
      break;
    }
    default:
      out += j.dump();  // integers and unsigned print exactly
      break;
  }
}

}  // namespace

json build_report(const ReportMeta& meta, const ManovaResult& res) {
  json rep;
  rep["schema_version"] = 1;

  json inputs;
  inputs["command"] = meta.command;
  inputs["m"] = meta.m;
  inputs["nu_h"] = meta.nu_h;
  inputs["nu_e"] = meta.nu_e;
  inputs["beta"] = meta.beta;
  inputs["alpha"] = meta.alpha;
  rep["inputs"] = inputs;

  json engine;
  engine["max_degree"] = meta.control.max_degree;
  engine["rel_tol"] = meta.control.rel_tol;
  engine["stall_window"] = meta.control.stall_window;
  engine["divergence_window"] = meta.control.divergence_window;
  engine["significance_loss_limit"] = meta.control.significance_loss_limit;
  rep["engine"] = engine;

  const CriteriaReport& c = res.criteria;
  json crit;
  crit["m"] = c.m;
  crit["nu_h"] = c.nu_h;
  crit["nu_e"] = c.nu_e;
  crit["s"] = c.s;
  crit["rank_sh"] = c.rank_sh;
  crit["lambda"] = c.lambda;
  crit["theta"] = c.theta;
  crit["wilks_lambda"] = c.wilks_lambda;
  crit["wilks_u"] = c.wilks_u;
  crit["wilks_v"] = opt_num(c.wilks_v);
  crit["lawley_hotelling"] = c.lawley_hotelling;
  crit["pillai_v"] = c.pillai_v;
  crit["pillai_w"] = c.pillai_w;
  crit["pillai_h"] = c.pillai_h;
  crit["pillai_r"] = c.pillai_r;
  crit["pillai_t"] = c.pillai_t;
  crit["roy_lambda_max"] = c.roy_lambda_max;
  crit["roy_theta_max"] = c.roy_theta_max;
  crit["anderson_lambda_min"] = opt_num(c.anderson_lambda_min);
  crit["roy_theta_min"] = opt_num(c.roy_theta_min);
  crit["dempster_t"] = c.dempster_t;
  rep["criteria"] = crit;

  const PValueResult& p = res.pvalue;
  json pv;
  pv["m"] = p.m;
  pv["s"] = p.s;
  json dims;
  dims["m"] = p.dims.m;
  dims["nu_h"] = p.dims.nu_h;
  dims["nu_e"] = p.dims.nu_e;
  dims["swapped"] = p.dims.swapped;
  pv["dims_used"] = dims;
  pv["shape_a"] = p.params.a;
  pv["shape_b"] = p.params.b;
  pv["spectrum"] = p.spectrum;
  json exprs = json::array();
  for (const ExprResult& e : p.probs.exprs) exprs.push_back(expr_entry(e));
  pv["expressions"] = exprs;
  pv["used"] = p.probs.used;
  pv["consensus"] = p.probs.consensus;
  pv["spread"] = p.probs.spread;
  pv["p_value"] = p.p_value;
  pv["trivial_zero_sh"] = p.trivial_zero_sh;
  pv["reject_05"] = p.reject_05;
  pv["reject_01"] = p.reject_01;
  rep["p_value"] = pv;

  return rep;
}

std::string dump_json_17(const nlohmann::json& j, int indent) {
  std::string out;
  render(j, out, indent, 0);
  if (indent >= 0) out += "\n";
  return out;
}

}  // namespace matbeta
