#include "symmcomb/report.hpp"

namespace symmcomb {

namespace {

Json one_based(const std::vector<int>& v)
{
  Json out = Json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

Json int_matrix(const IntMatrix& m)
{
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

}  // namespace

Json to_json(const Rational& q)
{
  if (is_integral(q)) return q.numerator();
  return to_string(q);
}

Json to_json(const RatVector& v)
{
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const Weight& w) { return to_json(w.coords()); }

Json to_json(const WeylElement& w) { return w.str(); }

Json diagram_json(const SatakeDiagram& d)
{
  Json arrows = Json::array();
  for (auto [i, j] : d.arrows) arrows.push_back({i + 1, j + 1});
  return Json{{"name", d.name},
              {"cartan_type", d.datum.label},
              {"cartan_matrix", int_matrix(d.datum.cartan)},
              {"symmetrizer", d.datum.symmetrizer},
              {"black", one_based(d.black)},
              {"arrows", arrows}};
}

Json involution_json(const SymmetricSpace& s)
{
  const auto& t = s.involution;
  const int n = s.roots.rank();
  Json simple = Json::array();
  for (int j = 0; j < n; ++j) {
    std::vector<int> col;
    for (int i = 0; i < n; ++i) col.push_back(t.on_simple[i][j]);
    simple.push_back(col);
  }
  Json beta = Json::object();
  for (int a = 0; a < n; ++a)
    if (!t.beta[a].empty()) beta[std::to_string(a + 1)] = t.beta[a];
  Json restricted = Json::array();
  for (const auto& r : s.restricted.roots)
    restricted.push_back(Json{{"root", to_json(r.value)},
                              {"simple", to_json(s.roots.to_simple(r.value))},
                              {"in_base", r.in_base},
                              {"multiplicity", r.multiplicity}});
  Json base = Json::array();
  for (const auto& b : s.restricted.base) base.push_back(to_json(b));
  return Json{{"sigma_on_simple_roots", simple},
              {"sigma_on_weights", int_matrix(t.on_weights)},
              {"bar", one_based(t.bar)},
              {"representatives", one_based(t.representatives)},
              {"exceptional", one_based(t.exceptional)},
              {"c_values", t.c_values},
              {"beta", beta},
              {"restricted",
               Json{{"type", s.restricted.type},
                    {"reduced", s.restricted.reduced},
                    {"rank", s.restricted.rank()},
                    {"base", base},
                    {"doubled", s.restricted.doubled},
                    {"cartan_matrix", int_matrix(s.restricted.cartan)},
                    {"roots", restricted}}}};
}

Json lattice_json(const SymmetricSpace& s)
{
  const auto& L = s.lattice;
  Json gens = Json::array(), pic = Json::array(), theta = Json::array(), hnf = Json::array();
  for (const auto& g : L.generators) gens.push_back(to_json(g));
  for (const auto& g : L.pic_generators) pic.push_back(to_json(g));
  for (std::size_t k = 0; k < L.theta.size(); ++k)
    theta.push_back(Json{{"weight", to_json(L.theta[k])}, {"form", L.theta_forms[k]}});
  for (const auto& row : L.pic.basis()) hnf.push_back(row);
  return Json{{"spherical_generators", gens},
              {"c", L.c},
              {"pic_generators", pic},
              {"pic_basis", hnf},
              {"pic_rank", L.pic.rank()},
              {"theta_basis", theta}};
}

Json spherical_json(const SymmetricSpace& s, const Weight& mu)
{
  return Json{{"weight", to_json(mu)},
              {"dominant", mu.is_dominant()},
              {"special", is_special(s, mu)},
              {"in_omega1", in_omega1(s, mu)},
              {"spherical", is_spherical(s, mu)},
              {"in_pic", in_pic(s, mu)}};
}

Json path_json(const Path& p)
{
  Json segs = Json::array();
  for (const auto& seg : p.segments())
    segs.push_back(Json{{"velocity", to_json(seg.velocity)}, {"duration", to_json(seg.duration)}});
  return Json{{"segments", segs}, {"endpoint", to_json(p.endpoint())}};
}

Json ls_path_json(const BondedPoset& poset, const LSPath& pi)
{
  Json chain = Json::array(), a = Json::array();
  for (int k : pi.chain) chain.push_back(poset.reps[k].str());
  for (const auto& q : pi.a) a.push_back(to_json(q));
  Json w = Json::array();
  for (int letter : word(poset, pi)) w.push_back(poset.reps[letter].str());
  return Json{{"chain", chain}, {"a", a}, {"word", w}, {"endpoint", to_json(realize(poset, pi).endpoint())}};
}

Json poset_json(const BondedPoset& poset)
{
  Json elems = Json::array(), covers = Json::array();
  for (std::size_t k = 0; k < poset.size(); ++k)
    elems.push_back(Json{{"tau", poset.reps[k].str()},
                         {"weight", to_json(poset.elements[k])},
                         {"length", poset.lengths[k]}});
  for (auto [a, b, f] : poset.covers)
    covers.push_back(Json{{"lower", poset.reps[a].str()}, {"upper", poset.reps[b].str()}, {"bond", f}});
  return Json{{"shape", to_json(poset.lambda)}, {"elements", elems}, {"covers", covers}, {"N", poset.n_lambda}};
}

Json crystal_json(const Crystal& c)
{
  Json nodes = Json::array(), edges = Json::array();
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    Json node = path_json(c.nodes[k]);
    node["id"] = k;
    nodes.push_back(node);
  }
  for (const auto& e : c.edges) edges.push_back(Json{{"from", e.from}, {"color", e.color + 1}, {"to", e.to}});
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json monomial_json(const StandardMonomials& sm, const Monomial& x)
{
  Json factors = Json::array();
  for (std::size_t j = 0; j < x.factors.size(); ++j) {
    Json f = ls_path_json(sm.model(x.shapes[j]).poset(), x.factors[j]);
    f["theta"] = x.shapes[j] + 1;
    factors.push_back(f);
  }
  return Json{{"n", x.n},
              {"shape", to_json(sm.shape(x))},
              {"flag_shape", to_json(sm.flag_shape(x))},
              {"factors", factors}};
}

Json dimension_json(const DimensionReport& r)
{
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back(
        Json{{"n", t.n}, {"mu", to_json(t.mu)}, {"weyl_dim", t.weyl_dim}, {"standard_monomials", t.monomials}});
  return Json{{"lambda", to_json(r.lambda)},
              {"I", one_based(r.frozen)},
              {"standard_monomials", r.count},
              {"sum_weyl_dim", r.expected},
              {"terms", terms},
              {"summary", r.summary()},
              {"pass", r.pass}};
}

Json decomposition_json(const Decomposition& d)
{
  Json out = Json::array();
  for (const auto& [nu, m] : d) out.push_back(Json{{"nu", to_json(nu)}, {"multiplicity", m}});
  return out;
}

Json witness_json(const PrvWitness& w)
{
  return Json{{"lambda_bar", to_json(w.lambda_bar)},
              {"mu_bar", to_json(w.mu_bar)},
              {"lambda_prime", to_json(w.lambda_prime)},
              {"mu_prime", to_json(w.mu_prime)},
              {"multiplicity", w.multiplicity},
              {"checks",
               Json{{"in_omega1_plus", w.in_omega1},
                    {"lambda_prime_below_lambda", w.below_lambda},
                    {"mu_prime_below_mu", w.below_mu},
                    {"nu_occurs", w.occurs}}},
              {"verified", w.verified()}};
}

Json instance_json(const PrvInstance& inst)
{
  return Json{{"nu", to_json(inst.nu)},
              {"lambda", to_json(inst.lambda)},
              {"mu", to_json(inst.mu)},
              {"witness", inst.witness ? witness_json(*inst.witness) : Json(nullptr)}};
}

Json sweep_json(const SweepReport& r)
{
  Json inst = Json::array(), fails = Json::array();
  for (const auto& i : r.instances) inst.push_back(instance_json(i));
  for (auto k : r.failures) fails.push_back(instance_json(r.instances[k]));
  return Json{{"bound", r.bound},
              {"instances", inst},
              {"counterexamples", fails},
              {"verified", r.instances.size() - r.failures.size()},
              {"pass", r.pass()}};
}

Json support_json(const SupportReport& r)
{
  Json inst = Json::array();
  for (const auto& i : r.instances) inst.push_back(instance_json(i));
  return Json{{"lambda", to_json(r.lambda)}, {"mu", to_json(r.mu)}, {"instances", inst}, {"pass", r.pass}};
}

}  // namespace symmcomb
