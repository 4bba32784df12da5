#include "macias/jsonio.hpp"

namespace macias {

Json to_json(const Element& e) { return render_element(e); }

Json elements_json(const std::vector<Element>& v) {
  Json out = Json::array();
  for (const Element& e : v) out.push_back(render_element(e));
  return out;
}

Json to_json(const RingDescriptor& ring, const Window& w) {
  Json out;
  switch (ring.kind) {
    case RingKind::Int:
    case RingKind::GaussInt:
    case RingKind::QuadM5:
    case RingKind::ProdIntInt:
      out["height"] = w.height ? w.height->get_str() : "";
      break;
    case RingKind::PolyFp:
      out["degree"] = w.degree.value_or(-1);
      break;
    case RingKind::PolyZ:
      out["degree"] = w.degree.value_or(-1);
      out["height"] = w.height ? w.height->get_str() : "";
      break;
  }
  return out;
}

Json to_json(const Ideal& I) {
  Json out;
  if (const auto* p = std::get_if<PrincipalIdeal>(&I.rep)) {
    out["type"] = "principal";
    out["generator"] = render_element(p->g);
    return out;
  }
  if (const auto* t = std::get_if<TwoGenIdeal>(&I.rep)) {
    out["type"] = "two_gen";
    out["a"] = render_element(t->a);
    out["b"] = render_element(t->b);
    return out;
  }
  const auto& h = std::get<HnfIdeal>(I.rep);
  out["type"] = "hnf";
  out["matrix"] = Json::array({Json::array({h.m.d.get_str(), h.m.c.get_str()}),
                               Json::array({"0", h.m.e.get_str()})});
  out["index"] = hnf_index(h.m).get_str();
  return out;
}

Json to_json(const MaximalIdealDescriptor& m) {
  Json out;
  if (const auto* ip = std::get_if<IntPrimeDesc>(&m.name)) {
    out["kind"] = "int_prime";
    out["p"] = ip->p.get_str();
    return out;
  }
  if (const auto* gp = std::get_if<GaussPrimeDesc>(&m.name)) {
    out["kind"] = "gauss_prime";
    out["generator"] = render_element(gp->pi);
    return out;
  }
  if (const auto* qp = std::get_if<QuadPrimeDesc>(&m.name)) {
    out["kind"] = "quad_prime";
    out["p"] = qp->p.get_str();
    switch (qp->kind) {
      case SplitKind::inert: out["split"] = "inert"; break;
      case SplitKind::ramified: out["split"] = "ramified"; break;
      case SplitKind::split_plus: out["split"] = "split_plus"; break;
      case SplitKind::split_minus: out["split"] = "split_minus"; break;
    }
    if (qp->kind != SplitKind::inert) out["a"] = qp->a.get_str();
    return out;
  }
  if (const auto* fp = std::get_if<PolyFpPrimeDesc>(&m.name)) {
    out["kind"] = "polyfp_prime";
    out["h"] = render_element(fp->h);
    return out;
  }
  if (const auto* zx = std::get_if<ZxPrimeDesc>(&m.name)) {
    out["kind"] = "zx_prime";
    out["p"] = zx->p.get_str();
    out["h"] = render_element(zx->h);
    return out;
  }
  const auto& pp = std::get<ProdPrimeDesc>(m.name);
  out["kind"] = "prod_prime";
  out["side"] = pp.side == ProdSide::left ? "left" : "right";
  out["p"] = pp.p.get_str();
  return out;
}

Json to_json(const Certificate& c) {
  Json out;
  if (const auto* b = std::get_if<BezoutCertificate>(&c)) {
    out["type"] = "bezout";
    out["u"] = render_element(b->u);
    out["v"] = render_element(b->v);
    return out;
  }
  if (const auto* cm = std::get_if<CommonMaximalCertificate>(&c)) {
    out["type"] = "common_maximal";
    out["ideal"] = to_json(cm->m);
    return out;
  }
  const auto& h = std::get<HnfIndexCertificate>(c);
  out["type"] = "hnf_index";
  out["matrix"] = Json::array({Json::array({h.m.d.get_str(), h.m.c.get_str()}),
                               Json::array({"0", h.m.e.get_str()})});
  out["index"] = h.index.get_str();
  return out;
}

Json to_json(const ComaximalResult& r) {
  Json out;
  out["comaximal"] = r.verdict;
  out["certificate"] = to_json(r.certificate);
  return out;
}

Json to_json(const ClosureResult& r) {
  Json out;
  out["method"] = method_name(r.method);
  if (r.ideal_form) out["ideal_form"] = to_json(*r.ideal_form);
  out["lower"] = elements_json(r.lower);
  if (r.exact_on_window)
    out["upper"] = "= lower";
  else
    out["upper"] = elements_json(r.upper);
  out["exact_on_window"] = r.exact_on_window;
  return out;
}

Json to_json(const MaximalIdealSet& s) {
  Json out;
  Json list = Json::array();
  for (const MaximalIdealDescriptor& m : s.ideals) list.push_back(to_json(m));
  out["ideals"] = list;
  if (s.all_primes_left) out["all_primes_left"] = true;
  if (s.all_primes_right) out["all_primes_right"] = true;
  if (s.prime_bound) out["prime_bound"] = s.prime_bound->get_str();
  return out;
}

Json to_json(const Factorization& f) {
  Json out;
  out["unit"] = render_element(f.unit);
  Json parts = Json::array();
  for (const auto& [p, e] : f.parts)
    parts.push_back(Json::array({render_element(p), e}));
  out["factors"] = parts;
  return out;
}

Json to_json(const GcdResult& g) {
  Json out;
  if (const auto* e = std::get_if<Element>(&g)) {
    out["type"] = "gcd";
    out["value"] = render_element(*e);
    return out;
  }
  const auto& w = std::get<NoGcdWitness>(g);
  out["type"] = "no_gcd";
  out["witnesses"] =
      Json::array({render_element(w.d1), render_element(w.d2)});
  return out;
}

Json to_json(const DensityVerdict& v) {
  Json out;
  out["property"] =
      v.property == DensityProperty::dense ? "dense" : "nowhere_dense";
  out["holds"] = v.holds;
  Json ws = Json::array();
  for (const DensityWitness& w : v.witnesses) {
    Json row;
    row["basic_open"] = render_element(w.basic_open);
    if (w.witness) row["witness"] = render_element(*w.witness);
    row["note"] = w.note;
    ws.push_back(row);
  }
  out["witnesses"] = ws;
  return out;
}

Json to_json(const GolombResult& g) {
  Json out;
  out["holds"] = g.holds;
  out["modulus"] = g.modulus.get_str();
  Json rs = Json::array();
  for (const Int& r : g.residues) rs.push_back(r.get_str());
  out["residues"] = rs;
  return out;
}

Json to_json(const CheckReport& r) {
  Json out;
  out["id"] = r.id;
  out["ring"] = r.ring.to_string();
  out["cases_run"] = r.cases_run;
  out["verdict"] = verdict_name(r.verdict);
  Json vs = Json::array();
  for (const Violation& v : r.violations) {
    Json row;
    row["inputs"] = elements_json(v.inputs);
    row["observed"] = v.observed;
    row["expected"] = v.expected;
    vs.push_back(row);
  }
  out["violations"] = vs;
  if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
  out["seed"] = r.replay_seed;
  return out;
}

Json to_json(const CheckSpec& s) {
  Json out;
  out["id"] = s.id;
  out["statement"] = s.statement;
  Json rings = Json::array();
  for (RingKind k : s.rings)
    rings.push_back(RingDescriptor{k, k == RingKind::PolyFp ? 3 : 0}.to_string());
  out["rings"] = rings;
  Json ef = Json::array();
  for (RingKind k : s.expected_fail_rings)
    ef.push_back(RingDescriptor{k, k == RingKind::PolyFp ? 3 : 0}.to_string());
  out["expected_fail_rings"] = ef;
  return out;
}

Json to_json(const Counterexample& c) {
  Json out;
  out["a"] = render_element(c.a);
  out["b"] = render_element(c.b);
  out["certificate"] = to_json(c.cert.certificate);
  return out;
}

}  // namespace macias
