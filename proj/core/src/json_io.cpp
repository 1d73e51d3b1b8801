#include "qweyl/json_io.hpp"

#include <gmpxx.h>

namespace qweyl {

namespace {

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    fail(Errc::parse_error, "bad rational '" + text + "'");
  if (q.get_den() == 0) fail(Errc::parse_error, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_text(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::parse_error, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t require_int(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_number_integer())
    fail(Errc::parse_error, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

json to_json(const FieldCtx& ctx) {
  json j;
  if (ctx.kind() == FieldKind::prime) {
    j["kind"] = "prime";
    j["p"] = ctx.p();
    j["l"] = ctx.l();
    j["gamma"] = ctx.gamma().residue();
  } else {
    j["kind"] = "cyclotomic";
    j["l"] = ctx.l();
  }
  return j;
}

FieldCtx ctx_from_json(const json& j) {
  const json& kind = require_field(j, "kind");
  if (!kind.is_string()) fail(Errc::parse_error, "field 'kind' must be a string");
  if (kind == "prime") {
    std::optional<std::int64_t> hint;
    if (j.contains("gamma")) hint = require_int(j, "gamma");
    return FieldCtx::prime(require_int(j, "p"), static_cast<int>(require_int(j, "l")),
                           hint);
  }
  if (kind == "cyclotomic")
    return FieldCtx::cyclotomic(static_cast<int>(require_int(j, "l")));
  fail(Errc::parse_error, "unknown field kind '" + kind.get<std::string>() + "'");
}

json to_json(const FieldElem& v) {
  if (v.ctx().kind() == FieldKind::prime) return v.residue();
  json arr = json::array();
  for (const auto& c : v.coeffs()) arr.push_back(rational_text(c));
  return arr;
}

FieldElem elem_from_json(const FieldCtx& ctx, const json& j) {
  if (ctx.kind() == FieldKind::prime) {
    if (!j.is_number_integer())
      fail(Errc::parse_error, "prime field element must be an integer");
    return ctx.from_residue(j.get<std::int64_t>());
  }
  if (!j.is_array())
    fail(Errc::parse_error, "cyclotomic element must be an array of rationals");
  std::vector<mpq_class> coeffs;
  for (const auto& entry : j) {
    if (!entry.is_string())
      fail(Errc::parse_error, "cyclotomic coefficients must be 'num/den' strings");
    coeffs.push_back(parse_rational(entry.get<std::string>()));
  }
  return ctx.from_coeffs(std::move(coeffs));
}

json to_json(const Mat& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(to_json(m.at(i, k)));
  j["entries"] = entries;
  return j;
}

Mat mat_from_json(const FieldCtx& ctx, const json& j) {
  auto rows = require_int(j, "rows");
  auto cols = require_int(j, "cols");
  if (rows < 0 || cols < 0) fail(Errc::parse_error, "matrix dimensions must be nonnegative");
  const json& entries = require_field(j, "entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    fail(Errc::bad_length, "expected " + std::to_string(rows * cols) + " entries");
  Mat m(ctx, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      m.set(i, k, elem_from_json(ctx, entries.at(idx++)));
  return m;
}

json to_json(const Solution& s) {
  json j;
  j["ctx"] = to_json(s.ctx);
  j["x"] = to_json(s.x);
  j["y"] = to_json(s.y);
  return j;
}

Solution solution_from_json(const json& j) {
  FieldCtx ctx = ctx_from_json(require_field(j, "ctx"));
  Mat x = mat_from_json(ctx, require_field(j, "x"));
  Mat y = mat_from_json(ctx, require_field(j, "y"));
  return {std::move(ctx), std::move(x), std::move(y)};
}

json to_json(const CanonicalForm& form) {
  json j;
  if (form.tag == CanonicalForm::Tag::singular_beta) {
    j["tag"] = "SingularBeta";
    j["beta"] = to_json(*form.beta);
  } else {
    j["tag"] = "NonsingularLambdaEta";
    j["lambda"] = to_json(*form.lambda);
    j["eta"] = to_json(*form.eta);
  }
  return j;
}

CanonicalForm canonical_from_json(const FieldCtx& ctx, const json& j) {
  const json& tag = require_field(j, "tag");
  if (tag == "SingularBeta")
    return CanonicalForm::singular(elem_from_json(ctx, require_field(j, "beta")));
  if (tag == "NonsingularLambdaEta")
    return CanonicalForm::nonsingular(elem_from_json(ctx, require_field(j, "lambda")),
                                      elem_from_json(ctx, require_field(j, "eta")));
  fail(Errc::parse_error, "unknown canonical form tag");
}

json to_json(const RelationReport& r) {
  json j;
  j["pass"] = r.pass;
  j["commutes"] = r.commutes;
  if (r.residual) j["residual"] = to_json(*r.residual);
  return j;
}

json to_json(const StructuralReport& r) {
  json j;
  j["x_power_scalar"] = r.x_power_scalar ? to_json(*r.x_power_scalar) : json(nullptr);
  j["y_power_scalar"] = r.y_power_scalar ? to_json(*r.y_power_scalar) : json(nullptr);
  j["ux_skew"] = r.ux_skew;
  j["yu_skew"] = r.yu_skew;
  j["u_invertible"] = r.u_invertible;
  j["spectrum_checked"] = r.spectrum_checked;
  j["spectrum_orbit"] = r.spectrum_orbit;
  j["pass"] = r.all_pass();
  return j;
}

json to_json(const ElementaryCombination& c) {
  json j;
  j["m"] = c.m;
  j["n"] = c.n;
  json terms = json::array();
  for (const auto& t : c.terms) {
    json term;
    term["i"] = t.i;
    term["j"] = t.j;
    term["coeff"] = to_json(t.coeff);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

json to_json(const Reduction& r) {
  json j;
  j["canonical"] = to_json(r.canonical);
  j["witness"] = to_json(r.witness);
  json trace;
  json blocks = json::array();
  for (auto b : r.trace.block_sizes) blocks.push_back(b);
  trace["block_sizes"] = blocks;
  json alphas = json::array();
  for (const auto& a : r.trace.alphas) alphas.push_back(to_json(a));
  trace["alphas"] = alphas;
  json ps = json::array();
  for (const auto& p : r.trace.ps) ps.push_back(to_json(p));
  trace["ps"] = ps;
  json bs = json::array();
  for (const auto& b : r.trace.bs) bs.push_back(to_json(b));
  trace["bs"] = bs;
  if (r.trace.intermediate) trace["intermediate"] = to_json(*r.trace.intermediate);
  j["trace"] = trace;
  return j;
}

json to_json(const CensusReport& r) {
  json j;
  j["ctx"] = to_json(r.ctx);
  j["n"] = r.n;
  j["pruned"] = r.pruned;
  j["total_solutions"] = r.total_solutions;
  j["irreducible_count"] = r.irreducible_count;
  json classes = json::array();
  for (const auto& cls : r.classes) {
    json c;
    c["canonical"] = cls.canonical ? to_json(*cls.canonical) : json(nullptr);
    c["size"] = cls.size;
    c["canonical_members"] = cls.canonical_members;
    c["representative"] = to_json(cls.representative);
    classes.push_back(c);
  }
  j["classes"] = classes;
  j["anomalies"] = r.anomalies;
  return j;
}

json to_json(const CrossValidation& v) {
  json j;
  j["bijection"] = v.bijection;
  json missing = json::array();
  for (const auto& form : v.missing) missing.push_back(to_json(form));
  j["missing"] = missing;
  j["unexpected"] = v.unexpected;
  j["anomalies"] = v.anomalies;
  return j;
}

json to_json(const Error& e) {
  json j;
  json inner;
  inner["code"] = to_string(e.code());
  std::string what = e.what();
  std::string prefix = std::string(to_string(e.code())) + ": ";
  inner["message"] = what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
  j["error"] = inner;
  return j;
}

std::string elem_to_text(const FieldElem& v) { return v.str(); }

FieldElem elem_from_text(const FieldCtx& ctx, const std::string& text) {
  if (ctx.kind() == FieldKind::prime) {
    std::int64_t r = 0;
    bool ok = false;
    try {
      std::size_t used = 0;
      r = std::stoll(text, &used);
      ok = used == text.size();
    } catch (const std::exception&) {
    }
    if (!ok) fail(Errc::parse_error, "bad integer '" + text + "'");
    return ctx.from_residue(r);
  }
  std::vector<mpq_class> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    coeffs.push_back(parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ctx.from_coeffs(std::move(coeffs));
}

std::vector<FieldElem> elems_from_text(const FieldCtx& ctx, const std::string& text) {
  std::vector<FieldElem> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string piece =
        text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    out.push_back(elem_from_text(ctx, piece));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace qweyl
