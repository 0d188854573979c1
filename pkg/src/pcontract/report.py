"""Report dictionaries shared by the CLI, the figures and the tests.

Every report carries ``schema_version`` and is built only from exact data,
so serialising with sorted keys is byte-for-byte reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .charring import char_leq, lower_bound_character
from .chevalley import (
    ParabolicContraction,
    coadjoint_action_violations,
    contraction_violations,
    intertwiner_violations,
)
from .hwmod import (
    build_irreducible,
    check_annihilator,
    check_graded_identity,
    matrix_coeff_invariants,
    pbw_filtration,
    v_double_prime,
    v_prime,
)
from .orbits import decompose_in_D, generator_weight, is_in_D, levi_projection, orbit_set, semigroup_check
from .rootsys import Weight, linear_deg
from .syinv import sy_character, verify_lower_bound
from .charring import weyl_dim

SCHEMA_VERSION = 1
EXHAUSTIVE_DIM_LIMIT = 40


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _header(kind: str, P: ParabolicContraction) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "type": str(P.rs),
        "pi_prime": sorted(i + 1 for i in P.pi_prime),
    }


def describe_report(P: ParabolicContraction, exhaustive: bool | None = None) -> dict:
    rs = P.rs
    if exhaustive is None:
        exhaustive = P.dim_p <= EXHAUSTIVE_DIM_LIMIT
    out = _header("describe", P)
    out["root_system"] = {
        "rank": rs.rank,
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "positive_roots": len(rs.positive_roots),
        "highest_root": list(rs.highest_root),
    }
    out["split"] = P.summary()
    m_pairs = [(a, b) for a in P.m_idx for b in P.m_idx if P.L.bracket(a, b)]
    checks = {
        "m_m_brackets_in_p": len(m_pairs),
        "m_m_brackets_in_ptilde": sum(1 for a in P.m_idx for b in P.m_idx if P.bracket_ptilde(a, b)),
        "contraction_rule_violations": len(contraction_violations(P)),
    }
    if exhaustive:
        checks["coadjoint_action_violations"] = len(coadjoint_action_violations(P))
        checks["killing_intertwiner_violations"] = len(intertwiner_violations(P))
    out["checks"] = checks
    return out


def orbits_report(P: ParabolicContraction, trunc: int | None = None) -> dict:
    rs = P.rs
    orbs = orbit_set(rs, P.pi_prime)
    if trunc is None:
        trunc = 2 * linear_deg(rs, rs.rho)
    sg = semigroup_check(rs, P.pi_prime, trunc)
    out = _header("orbits", P)
    out["orbits"] = [o.to_json(rs) for o in orbs]
    out["semigroup_check"] = {
        "deg_cutoff": trunc,
        "dominant_weights_checked": sg.checked,
        "in_D": sg.in_D,
        "counterexamples": [str(c) for c in sg.counterexamples],
        "free": sg.ok,
    }
    return out


def lower_bound_report(P: ParabolicContraction, trunc: int) -> dict:
    rs = P.rs
    orbs = orbit_set(rs, P.pi_prime)
    lb = lower_bound_character(rs, orbs, trunc)
    out = _header("lower_bound", P)
    out["trunc_deg"] = trunc
    out["deltas"] = [o.delta_gamma.to_json() for o in orbs]
    out["character"] = [
        dict(d, deg=linear_deg(rs, nu)) for d, nu in zip(lb.to_json(), lb.coeffs)
    ]
    return out


def verify_report(P: ParabolicContraction, trunc: int, max_degree: int, full_character: bool = True,
                  progress=None) -> dict:
    rs = P.rs
    orbs = orbit_set(rs, P.pi_prime)
    rep = verify_lower_bound(P, orbs, trunc, max_degree, progress=progress)
    out = rep.to_json(rs)
    out["pi_prime"] = sorted(i + 1 for i in P.pi_prime)
    out["orbits"] = [o.to_json(rs) for o in orbs]
    if full_character:
        lb = lower_bound_character(rs, orbs, trunc)
        sy = sy_character(P, trunc, rep.degree_reached)
        cmp = char_leq(lb, sy)
        out["character_comparison"] = {
            "max_poly_degree_used": rep.degree_reached,
            "found_character": sy.to_json(),
            "lower_bound_leq_found": cmp.holds,
            "first_deficit": cmp.witness.to_json() if cmp.witness is not None else None,
            "equal": lb == sy,
        }
    return out


def hwmod_report(P: ParabolicContraction, lam: Weight, dim_ceiling: int | None) -> dict:
    rs = P.rs
    M = build_irreducible(rs, lam, dim_ceiling=dim_ceiling, L=P.L)
    filt = pbw_filtration(M, P)
    gr = filt.gr_dims
    inv = matrix_coeff_invariants(M, P)
    in_d = is_in_D(rs, P.pi_prime, lam)
    gen_w = generator_weight(rs, P.pi_prime, lam)
    weight_sums_ok = all(sum(g.get(mu, 0) for g in gr) == d for mu, d in M.dims.items())
    dec = decompose_in_D(rs, P.pi_prime, lam)
    out = _header("hwmod", P)
    out.update({
        "lambda": lam.to_json(),
        "levi_projection": levi_projection(rs, P.pi_prime, lam).to_json(),
        "dim": M.dim,
        "weyl_dim": weyl_dim(rs, lam),
        "weight_space_dims": [[list(mu), M.dims[mu]] for mu in M.weights],
        "dim_v_prime": v_prime(M, P).dim,
        "dim_v_double_prime": v_double_prime(M, P).dim,
        "gr_dims": [[[list(mu), d] for mu, d in sorted(g.items(), reverse=True)] for g in gr],
        "gr_totals": filt.gr_totals,
        "annihilator_check": check_annihilator(M, P),
        "graded_identity_check": check_graded_identity(M, P, filt),
        "weight_sums_check": weight_sums_ok,
        "invariant_dim": inv.dim,
        "invariant_weights": [w.to_json() for w in inv.weights],
        "generator_weight": gen_w.to_json(),
        "in_D": in_d,
        "decomposition": None if dec is None else [[[g + 1 for g in k], v] for k, v in dec.items()],
    })
    out["consistent"] = bool(
        out["dim"] == out["weyl_dim"]
        and out["annihilator_check"]
        and out["graded_identity_check"]
        and weight_sums_ok
        and inv.dim == int(in_d)
        and all(w == gen_w for w in inv.weights)
    )
    return out


def to_rows(report: dict) -> tuple[list[str], list[list]]:
    """Tabular view of a report for tab-delimited text output."""
    kind = report["kind"]
    if kind == "orbits":
        head = ["gamma", "d_gamma", "delta_gamma", "delta_gamma_roots", "deg_delta"]
        return head, [[o[h] for h in head] for o in report["orbits"]]
    if kind == "lower_bound":
        return ["weight", "deg", "coefficient"], [[c["weight"], c["deg"], c["coefficient"]] for c in report["character"]]
    if kind == "semi_invariant_report":
        head = ["weight", "deg", "lower_bound", "found", "min_degree", "status"]
        return head, [[r[h] for h in head] for r in report["rows"]]
    if kind == "hwmod":
        return ["k", "gr_dim"], [[k, d] for k, d in enumerate(report["gr_totals"])]
    if kind == "describe":
        s = report["split"]
        rows = [[k, s[k]] for k in ("dim_g", "dim_p", "dim_r", "dim_m", "dim_m_minus")]
        rows += [[k, v] for k, v in report["checks"].items()]
        return ["quantity", "value"], rows
    return [], []


def _cell(x) -> str:
    if isinstance(x, list):
        return "(" + ",".join(_cell(y) for y in x) + ")"
    if isinstance(x, Fraction):
        return str(x)
    return "" if x is None else str(x)


def render_text(report: dict) -> str:
    lines = [f"# {report['kind']} {report['type']} pi'={report['pi_prime']}"]
    for key in ("status", "in_D", "invariant_dim", "consistent", "dim", "degree_reached"):
        if key in report:
            lines.append(f"# {key}: {_cell(report[key])}")
    if "semigroup_check" in report:
        sg = report["semigroup_check"]
        lines.append(f"# semigroup free up to deg {sg['deg_cutoff']}: {sg['free']} "
                     f"({sg['in_D']} of {sg['dominant_weights_checked']} dominant weights in D)")
    if "character_comparison" in report:
        cc = report["character_comparison"]
        lines.append(f"# lower bound <= found: {cc['lower_bound_leq_found']}; equal: {cc['equal']}")
    head, rows = to_rows(report)
    if head:
        lines.append("\t".join(head))
        lines.extend("\t".join(_cell(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"
