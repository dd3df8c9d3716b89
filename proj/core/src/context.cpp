#include "context.hpp"

namespace proxal::detail {

EvalContext make_context(const Instance& inst) {
  EvalContext ctx;
  ctx.u = &inst.universe();
  ctx.primal = &inst.primal();
  ctx.maximal = inst.primal().maximal();

  const ProximityRelation r = inst.relation().materialize();
  ctx.matrix = r.matrix();
  ctx.axioms = check_primal_proximity(*ctx.u, inst.primal().family(), ctx.matrix);
  ctx.validated = ctx.axioms.passed();

  ctx.point = point_primal_map(r).table();
  ctx.star = cl_star_map(r).table();
  ctx.hat = tau_hat_family(r);
  ctx.star_opens = tau_star_family(r);
  const std::uint32_t count = ctx.u->subset_count();
  ctx.hat_cl.resize(count);
  ctx.hat_int.resize(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    ctx.hat_cl[m] = closure_in(*ctx.u, ctx.hat, Subset{m});
    ctx.hat_int[m] = interior_in(*ctx.u, ctx.hat, Subset{m});
  }

  if (inst.topology()) {
    const Topology& t = *inst.topology();
    ctx.topology = &t;
    ctx.diamond_opens = tau_diamond_family(t, inst.primal());
    ctx.primal_regular = is_primal_regular(t, inst.primal()).passed();
    ctx.primal_normal = is_primal_normal(t, inst.primal()).passed();
    ctx.t1 = is_T1(t);
    ctx.normal = is_normal(t);
  }
  return ctx;
}

}  // namespace proxal::detail
