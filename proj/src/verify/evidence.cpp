#include "lol/textio.hpp"
#include "lol/verify.hpp"

namespace lol::verify {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool Recorder::expect(const std::string& claim, bool ok, json detail) {
  json c = {{"claim", claim}, {"ok", ok}};
  if (!detail.is_null()) c["detail"] = std::move(detail);
  claims_.push_back(std::move(c));
  if (!ok) ++failures_;
  return ok;
}

bool Recorder::expect_eq(const std::string& claim, const json& expected, const json& actual) {
  const bool ok = expected == actual;
  claims_.push_back({{"claim", claim}, {"ok", ok}, {"expected", expected}, {"actual", actual}});
  if (!ok) ++failures_;
  return ok;
}

bool Recorder::identity(const std::string& claim, const Mat& expected, const Mat& actual) {
  ++identities_;
  return expect_eq(claim, format_mat(expected), format_mat(actual));
}

void Recorder::witness(json w) { witnesses_.push_back(std::move(w)); }

void Recorder::note(const std::string& key, json value) { notes_[key] = std::move(value); }

void Recorder::fail(const std::string& why) {
  claims_.push_back({{"claim", why}, {"ok", false}});
  ++failures_;
}

json Recorder::evidence() const {
  json e = {{"claims", claims_}, {"identities", identities_}};
  if (!witnesses_.empty()) e["witnesses"] = witnesses_;
  if (!notes_.empty()) e["notes"] = notes_;
  return e;
}

json mat_json(const Mat& m) { return {{"ring", m.ring().name()}, {"n", m.rows()}, {"m", format_mat(m)}}; }

Mat mat_from_json(const json& j) {
  return parse_mat(Ring::parse(j.at("ring").get<std::string>()), j.at("m").get<std::string>());
}

json bicyclic_witness(const BicyclicSpec& z, Variant v, const BicyclicTriple& x, const ObstructionResult& r) {
  json w = {{"kind", "bicyclic"},
            {"variant", variant_name(v)},
            {"rho", mat_json(z.rho)},
            {"mu", mat_json(z.mu)},
            {"a", mat_json(x.a)},
            {"b", mat_json(x.b)},
            {"c", mat_json(x.c)},
            {"splits", r.splits}};
  if (r.splits) {
    w["u"] = mat_json(*r.u);
    w["v"] = mat_json(*r.v);
  } else {
    w["certificate_terms"] = r.certificate.size();
  }
  return w;
}

json norm_witness(const Mat& g, const Mat& m, const Mat& result) {
  return {{"kind", "norm"}, {"g", mat_json(g)}, {"m", mat_json(m)}, {"result", mat_json(result)}};
}

json commutator_witness(const Mat& a, const Mat& b, const Mat& result) {
  return {{"kind", "commutator"}, {"a", mat_json(a)}, {"b", mat_json(b)}, {"result", mat_json(result)}};
}

json conjugate_witness(const Mat& g, const Mat& a, const Mat& result) {
  return {{"kind", "conjugate"}, {"g", mat_json(g)}, {"a", mat_json(a)}, {"result", mat_json(result)}};
}

json power_witness(const Mat& m, std::int64_t k, const Mat& result) {
  return {{"kind", "power"}, {"m", mat_json(m)}, {"k", k}, {"result", mat_json(result)}};
}

json order_witness(const std::vector<Mat>& gens, std::size_t order) {
  json g = json::array();
  for (const Mat& x : gens) g.push_back(mat_json(x));
  return {{"kind", "order"}, {"gens", g}, {"order", order}};
}

namespace {

Variant variant_from(const std::string& s) {
  if (s == "glift") return Variant::GLift;
  if (s == "blift") return Variant::BLift;
  throw Error(ErrorCode::ParseError, "unknown variant '" + s + "'");
}

std::optional<std::string> mismatch(const Mat& expected, const Mat& actual, const char* what) {
  if (expected == actual) return std::nullopt;
  return std::string(what) + ": expected " + format_mat(expected) + ", got " + format_mat(actual);
}

}  // namespace

std::optional<std::string> reverify_witness(const json& w) {
  const std::string kind = w.at("kind").get<std::string>();
  if (kind == "norm") {
    const Mat g = mat_from_json(w.at("g")), m = mat_from_json(w.at("m"));
    return mismatch(mat_from_json(w.at("result")), GModule::full(m.ring(), m.rows()).norm_cyclic(g, m), "norm");
  }
  if (kind == "commutator")
    return mismatch(mat_from_json(w.at("result")), commutator(mat_from_json(w.at("a")), mat_from_json(w.at("b"))),
                    "commutator");
  if (kind == "conjugate") {
    const Mat g = mat_from_json(w.at("g"));
    return mismatch(mat_from_json(w.at("result")), g * mat_from_json(w.at("a")) * mat_inv(g), "conjugate");
  }
  if (kind == "power")
    return mismatch(mat_from_json(w.at("result")), mat_from_json(w.at("m")).pow(w.at("k").get<std::int64_t>()),
                    "power");
  if (kind == "order") {
    std::vector<Mat> gens;
    for (const auto& g : w.at("gens")) gens.push_back(mat_from_json(g));
    if (gens.empty()) return "order witness without generators";
    const auto got = Subgroup::closure(gens).order();
    if (got != w.at("order").get<std::size_t>()) return "closure order " + std::to_string(got);
    return std::nullopt;
  }
  if (kind == "bicyclic") {
    const Variant v = variant_from(w.at("variant").get<std::string>());
    const auto z = BicyclicSpec::make(mat_from_json(w.at("rho")), mat_from_json(w.at("mu")));
    const BicyclicTriple x{mat_from_json(w.at("a")), mat_from_json(w.at("b")), mat_from_json(w.at("c"))};
    if (!bicyclic_cocycle_failures(z, x, v).empty()) return "triple is not a cocycle";
    if (w.at("splits").get<bool>()) {
      if (!(bicyclic_boundary(z, mat_from_json(w.at("u")), mat_from_json(w.at("v"))) == x))
        return "boundary of (u, v) differs from the triple";
      return std::nullopt;
    }
    // No witness to substitute: rerun the decider, which re-checks its certificate.
    if (bicyclic_split(z, x, v).splits) return "triple splits after all";
    return std::nullopt;
  }
  return "unknown witness kind '" + kind + "'";
}

}  // namespace lol::verify
