#include "embedding.hpp"

#include <cinttypes>
#include <cstdio>

namespace kani {
namespace {

bool is_power_of(uint32_t n, uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::string field_desc(const Field& f) {
  char buf[48];
  if (f->m == 1)
    std::snprintf(buf, sizeof buf, "F_%u", f->p);
  else
    std::snprintf(buf, sizeof buf, "F_%u^%u", f->p, f->m);
  return buf;
}

// rebuild q on G/O and wrap the pair as a child extension of the same H
ExtensionData collapse_extension(const EmbeddingProblem& pb, const QuotientResult& qr) {
  const ExtensionData& e = pb.extension;
  const GroupPtr& G = e.G;
  std::vector<uint16_t> imgs(qr.quotient->n, uint16_t(0xffff));
  for (uint32_t a = 0; a < G->n; ++a) {
    uint16_t c = qr.proj(uint16_t(a));
    uint16_t want = e.q(uint16_t(a));
    if (imgs[c] == 0xffff)
      imgs[c] = want;
    else
      require(imgs[c] == want, errc::anomaly, "collapse does not respect the projection");
  }
  std::vector<uint16_t> gen_imgs;
  for (uint16_t g : qr.quotient->gens) gen_imgs.push_back(imgs[g]);
  GroupHom childq = make_hom(qr.quotient, e.H, gen_imgs);
  require(childq.images == imgs, errc::internal, "collapsed projection drifted");
  return make_extension(qr.quotient, e.H, childq, pb.cover.p);
}

// delta and h1 shared by every summand of the scalar extension of an
// F_p-simple module, plus their positions in the cover's table
struct SummandData {
  std::vector<GModule> summands;
  std::vector<uint32_t> indices;
  uint32_t delta = 0;
  uint32_t h1 = 0;
  uint32_t h2 = 0;
};

SummandData summand_data(const CoverDatum& y, const GModule& simple_fp, const Options& opt) {
  SummandData sd;
  sd.summands = decompose_over_extension(simple_fp, y.field, opt.seed);
  bool first = true;
  for (const GModule& V : sd.summands) {
    uint32_t idx = y.simples.index_of(V, opt.seed);
    sd.indices.push_back(idx);
    uint32_t d = y.delta[idx], c1 = h1(V, opt), c2 = h2(V, opt);
    if (first) {
      sd.delta = d;
      sd.h1 = c1;
      sd.h2 = c2;
      first = false;
    } else {
      require(d == sd.delta, errc::anomaly, "summands of one rational module carry different deltas");
      require(c1 == sd.h1 && c2 == sd.h2, errc::anomaly,
              "summands of one rational module carry different cohomology");
    }
  }
  return sd;
}

BaseCase base_case_core(const EmbeddingProblem& pb, const KernelChart& chart, const Options& opt) {
  const CoverDatum& y = pb.cover;
  BaseCase bc;
  bc.kernel_dim = chart.mod.dim;

  TwoCocycle cls = extension_class(pb.extension);
  bc.class_trivial = is_trivial_class(cls, opt);

  SummandData sd = summand_data(y, chart.mod, opt);
  hom_count(y, chart.mod, opt);  // runs the counting identity's agreement checks

  // at the dividing simples inflation adds one h1 dimension when the class
  // is zero and none when it is not (the transgression eats it)
  for (const GModule& V : sd.summands) {
    uint32_t up = h1(inflate(V, pb.extension.q), opt);
    if (bc.class_trivial)
      require(up == sd.h1 + 1, errc::anomaly, "split kernel did not add one h1 dimension");
    else
      require(up == sd.h1, errc::anomaly, "nonzero class did not absorb the kernel h1");
  }
  if (!bc.class_trivial) {
    bc.solvable = true;
    bc.rationale = "nonzero class: solvable with no condition on the cover";
    return bc;
  }
  bc.solvable = sd.delta > 0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "zero class: delta = %u at the kernel simples%s", sd.delta,
                sd.delta > 0 ? "" : ", no surjective lift");
  bc.rationale = buf;
  return bc;
}

bool all_nonneg(const std::vector<SlackRow>& rows) {
  for (const SlackRow& r : rows)
    if (r.slack < 0) return false;
  return true;
}

bool solve2(const EmbeddingProblem& pb, const Options& opt, std::vector<ReductionStep>& trace,
            std::vector<BaseCase>& bases) {
  const ExtensionData& e = pb.extension;
  const GroupPtr& G = e.G;
  uint32_t p = pb.cover.p;

  if (e.kernel.order() == 1) {
    bases.push_back(BaseCase{0, true, true, "trivial kernel: the given cover already solves it"});
    return true;
  }

  // Frattini subgroup of the kernel, generated inside G by p-th powers and
  // commutators; trivial exactly when the kernel is elementary abelian
  std::vector<uint16_t> seeds;
  for (uint16_t x : e.kernel.members) {
    uint16_t xp = 0;
    for (uint32_t t = 0; t < p; ++t) xp = G->mulv(xp, x);
    seeds.push_back(xp);
    for (uint16_t y : e.kernel.members)
      seeds.push_back(G->mulv(G->mulv(G->mulv(x, y), G->inv[x]), G->inv[y]));
  }
  Subgroup phi = subgroup_generated(G, seeds);
  require(phi.order() < e.kernel.order(), errc::internal, "Frattini subgroup is not proper");

  Subgroup O;
  ReductionStep::Kind kind;
  if (phi.order() > 1) {
    kind = ReductionStep::Kind::FrattiniQuotient;
    O = phi;
  } else {
    // elementary abelian kernel: collapse by the kernel of a map onto the
    // first simple quotient in canonical order, unless already simple
    auto chart = e.chart ? e.chart : kernel_chart(e, p);
    MeataxeResult mx = meataxe_is_irreducible(chart->mod, opt.seed);
    if (mx.irreducible) {
      BaseCase bc = base_case_core(pb, *chart, opt);
      bases.push_back(bc);
      return bc.solvable;
    }
    kind = ReductionStep::Kind::SimpleQuotient;
    Field fp = FieldParams::prime(p);
    SimpleSet sims = simple_modules(e.H, fp, opt.seed);
    std::optional<FqMatrix> onto;
    for (const GModule& V : sims.simples) {
      std::vector<FqMatrix> maps = hom_space(chart->mod, V);
      if (maps.empty()) continue;
      require(rank_of(maps[0]) == V.dim, errc::internal, "quotient map onto a simple is not onto");
      require(V.dim < chart->mod.dim, errc::internal, "reducible module with a full-size simple quotient");
      onto = maps[0];
      break;
    }
    require(onto.has_value(), errc::internal, "module with no simple quotient");
    FqMatrix ker = kernel_basis(*onto);
    std::vector<uint16_t> kseeds;
    for (uint32_t r = 0; r < ker.rows; ++r) {
      uint64_t code = 0, w = 1;
      for (uint32_t i = 0; i < ker.cols; ++i) {
        code += uint64_t(ker.at(r, i)) * w;
        w *= p;
      }
      kseeds.push_back(chart->vec_to_elt[code]);
    }
    O = subgroup_generated(G, kseeds);
    uint32_t expect = 1;
    for (uint32_t r = 0; r < ker.rows; ++r) expect *= p;
    require(O.order() == expect, errc::internal, "kernel subgroup order mismatch");
  }
  require(is_normal(O), errc::anomaly, "collapse subgroup is not normal in the total group");

  QuotientResult qr = quotient_group(G, O, opt.group_cap);
  ExtensionData child = collapse_extension(pb, qr);
  EmbeddingProblem child_pb{pb.cover, child};
  std::vector<SlackRow> child_slack = kani_check(child_pb, opt);
  if (all_nonneg(kani_check(pb, opt)))
    require(all_nonneg(child_slack), errc::anomaly, "a collapse broke the slack monotonicity");
  trace.push_back(ReductionStep{kind, O.order(), qr.quotient->n, child_slack});

  if (!solve2(child_pb, opt, trace, bases)) return false;

  // the child solution turns the collapsed layer into its own problem over
  // the dominating cover
  CoverDatum z;
  try {
    z = transfer_delta_along_quotient(pb.cover, child, opt);
  } catch (const error& err) {
    if (err.code() == errc::domain)
      fail(errc::anomaly, "solvable child admits no dominating cover");
    throw;
  }
  ExtensionData top = make_extension(G, qr.quotient, qr.proj, p);
  return solve2(EmbeddingProblem{std::move(z), std::move(top)}, opt, trace, bases);
}

}  // namespace

EmbeddingProblem make_problem(CoverDatum cover, ExtensionData extension) {
  require(extension.H == cover.H, errc::domain, "extension does not target the cover's group");
  require(is_power_of(extension.kernel.order(), cover.p), errc::domain,
          "kernel is not a p-group for the cover's p");
  return EmbeddingProblem{std::move(cover), std::move(extension)};
}

std::vector<SlackRow> kani_check(const EmbeddingProblem& pb, const Options& opt) {
  require(pb.extension.H == pb.cover.H, errc::domain, "extension does not target the cover's group");
  std::vector<SlackRow> rows;
  for (uint32_t i = 0; i < pb.cover.simples.size(); ++i) {
    const GModule& V = pb.cover.simples.simples[i];
    SlackRow r;
    r.simple_index = i;
    r.dim_V = V.dim;
    r.h1_H = h1(V, opt);
    r.h1_G = h1(inflate(V, pb.extension.q), opt);
    r.delta = pb.cover.delta[i];
    r.slack = int64_t(r.delta) - int64_t(r.h1_G) + int64_t(r.h1_H);
    rows.push_back(r);
  }
  return rows;
}

Verdict decide_strong_solvability(const EmbeddingProblem& pb, const Options& opt) {
  EmbeddingProblem checked = make_problem(pb.cover, pb.extension);

  Verdict v;
  v.seed = opt.seed;
  v.field_desc = field_desc(pb.cover.field);
  v.notes = pb.cover.notes;
  v.slack = kani_check(checked, opt);
  v.solvable = all_nonneg(v.slack);

  bool reduced = solve2(checked, opt, v.trace, v.base_cases);
  require(reduced == v.solvable, errc::anomaly,
          "reduction route disagrees with the slack criterion");

  v.notes.push_back(
      "a weak solution always exists; this verdict concerns strong (surjective) solutions");
  return v;
}

std::vector<ReductionStep> reduction_trace(const EmbeddingProblem& pb, const Options& opt) {
  EmbeddingProblem checked = make_problem(pb.cover, pb.extension);
  std::vector<ReductionStep> trace;
  std::vector<BaseCase> bases;
  solve2(checked, opt, trace, bases);
  return trace;
}

BaseCase classify_base_case(const EmbeddingProblem& pb, const Options& opt) {
  EmbeddingProblem checked = make_problem(pb.cover, pb.extension);
  require(checked.extension.kernel.order() > 1, errc::domain, "base case needs a nontrivial kernel");
  auto chart = checked.extension.chart ? checked.extension.chart
                                       : kernel_chart(checked.extension, checked.cover.p);
  MeataxeResult mx = meataxe_is_irreducible(chart->mod, opt.seed);
  require(mx.irreducible, errc::domain, "kernel is not simple under conjugation");
  return base_case_core(checked, *chart, opt);
}

HomCount hom_count(const CoverDatum& y, const GModule& P_mod, const Options& opt) {
  require(P_mod.group == y.H, errc::domain, "module group does not match the cover");
  require(P_mod.field->m == 1 && P_mod.field->p == y.p, errc::domain,
          "kernel module must live over the prime field");
  SummandData sd = summand_data(y, P_mod, opt);
  HomCount hc;
  hc.deg = uint32_t(sd.summands.size());
  hc.hom_dim = hc.deg * (sd.h2 + sd.delta);
  hc.h2_side = hc.deg * sd.h2;
  // scalar extension must not move cohomology dimensions
  require(h2(P_mod, opt) == hc.h2_side, errc::anomaly,
          "scalar extension changed a cohomology dimension");
  return hc;
}

bool decide_pprime_profinite(const GroupPtr& P, const CoverDatum& y,
                             const std::vector<std::vector<uint16_t>>& action_on_gens,
                             const Options& opt) {
  require(is_p_prime(*y.H, y.p), errc::domain, "this route needs a group of order prime to p");
  require(is_p_group(*P, y.p), errc::domain, "kernel group is not a p-group for the cover's p");
  SemidirectResult sd = semidirect_product(P, y.H, action_on_gens, opt.group_cap);
  Field fp = FieldParams::prime(y.p);
  SimpleSet sims = simple_modules(y.H, fp, opt.seed);
  for (const GModule& V : sims.simples) {
    SummandData dat = summand_data(y, V, opt);
    uint64_t bound = uint64_t(dat.summands.size()) * dat.delta;
    uint32_t lhs = h1(inflate(V, sd.proj), opt);
    if (lhs > bound) return false;
  }
  return true;
}

RouteReport cross_check_routes(const GroupPtr& P, const CoverDatum& y,
                               const std::vector<std::vector<uint16_t>>& action_on_gens,
                               const Options& opt) {
  SemidirectResult sd = semidirect_product(P, y.H, action_on_gens, opt.group_cap);
  ExtensionData e = make_extension(sd.G, y.H, sd.proj, y.p);
  RouteReport rep;
  rep.strong = decide_strong_solvability(make_problem(y, e), opt);
  rep.pprime = decide_pprime_profinite(P, y, action_on_gens, opt);
  require(rep.strong.solvable == rep.pprime, errc::anomaly,
          "free-quotient route disagrees with the extension route");
  rep.solvable = rep.strong.solvable;
  return rep;
}

std::string Verdict::to_text() const {
  std::string out;
  char buf[160];
  out += solvable ? "verdict: strongly solvable\n" : "verdict: not strongly solvable\n";
  std::snprintf(buf, sizeof buf, "field %s, seed %" PRIu64 "\n", field_desc.c_str(), seed);
  out += buf;
  out += "  idx  dimV  h1(G)  h1(H)  delta  slack\n";
  for (const SlackRow& r : slack) {
    std::snprintf(buf, sizeof buf, "  %3u  %4u  %5u  %5u  %5u  %5" PRId64 "%s\n", r.simple_index,
                  r.dim_V, r.h1_G, r.h1_H, r.delta, r.slack, r.slack < 0 ? "  <- fails" : "");
    out += buf;
  }
  for (const ReductionStep& s : trace) {
    std::snprintf(buf, sizeof buf, "collapse %s: |O| = %u, child order %u\n",
                  s.kind == ReductionStep::Kind::FrattiniQuotient ? "Frattini" : "simple quotient",
                  s.collapsed_order, s.child_order);
    out += buf;
  }
  for (const BaseCase& b : base_cases) {
    std::snprintf(buf, sizeof buf, "base case: kernel dim %u, %s\n", b.kernel_dim,
                  b.rationale.c_str());
    out += buf;
  }
  for (const std::string& n : notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace kani
