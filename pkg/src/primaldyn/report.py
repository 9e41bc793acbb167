"""JSON analysis report and DOT rendering of the functional graph."""

from __future__ import annotations

import json

from .checks import run_theorems
from .dynamics import classify_points
from .errors import DomainTooLarge
from .fgraph import FunctionalMap, rho_decompose
from .proximal import (
    is_ay_chaotic,
    is_d_chaotic,
    is_sensitive,
    periodic_points_dense,
    prox_asym_syprox,
    stability_check,
    triangle_relation,
)
from .system import system_report
from .topology import enumerate_opens, minimal_opens

SCHEMA_VERSION = 1

FINITE_NOTE = (
    "finite X: every component carries exactly one cycle, so omega-limits are never empty "
    "and the only realizable ergodic kind is a single periodic orbit")

TOWER_CAVEAT = (
    "finite truncation of Z_m x N: Omega(f) here is the cycle Z_m x {0}, not all of X_m, "
    "because the truncation is not surjective; R(f), omega(x) and the unique minimal set "
    "transfer unchanged")

MOD_MUL_CAVEAT = (
    "finite analog i -> m*i mod N of z -> z^m on the circle: primal-topology verdicts "
    "(stability, no sensitivity, no AY/D-chaos) transfer; usual-topology chaos does not apply")


def _pts(s) -> list[int]:
    return s.to_list()


def build_report(f: FunctionalMap, family: dict | None = None) -> dict:
    rho = rho_decompose(f)
    V = minimal_opens(f)
    pc = classify_points(f)
    sysr = system_report(f)
    prox, asym, syprox = prox_asym_syprox(f)
    tri = triangle_relation(f)
    cert = stability_check(f)
    try:
        open_count = enumerate_opens(f).count
    except DomainTooLarge:
        open_count = None

    caveats = [FINITE_NOTE]
    if family and family.get("family") == "tower":
        caveats.append(TOWER_CAVEAT)
    if family and family.get("family") == "mod-mul":
        caveats.append(MOD_MUL_CAVEAT)

    points = []
    for x in range(f.n):
        points.append({
            "point": x,
            "tail_len": rho.tail_len[x],
            "period": rho.period(x),
            "periodic": pc.periodic[x],
            "eventually_periodic": pc.eventually_periodic[x],
            "recurrent": pc.recurrent[x],
            "quasi_periodic": pc.quasi_periodic[x],
            "quasi_period": pc.quasi_period[x],
            "almost_periodic": pc.almost_periodic[x],
            "transitive_point": pc.transitive_point[x],
            "non_wandering": pc.non_wandering[x],
            "omega": _pts(pc.omega[x]),
        })

    sensitive = is_sensitive(f)
    return {
        "schema_version": SCHEMA_VERSION,
        "map": {"n": f.n, "succ": f.to_list()},
        "family": family,
        "rho": {
            "tail_len": list(rho.tail_len),
            "cycle_id": list(rho.cycle_id),
            "cycle_len": list(rho.cycle_len),
            "cycle_entry": list(rho.cycle_entry),
            "component_id": list(rho.component_id),
            "cycles": [_pts(c) for c in rho.cycles],
        },
        "minimal_opens": [_pts(v) for v in V.V],
        "open_set_count": open_count,
        "system": {
            "omega_set": _pts(sysr.omega_set),
            "recurrent_set": _pts(sysr.recurrent_set),
            "minimal_sets": [_pts(s) for s in sysr.minimal_sets],
            "n_components": rho.n_components,
            "transitive": sysr.transitive,
            "transitive_points": _pts(sysr.transitive_points),
            "top_ergodic": sysr.top_ergodic,
            "weakly_mixing": sysr.weakly_mixing,
            "strongly_mixing": sysr.strongly_mixing,
            "ergodic_kind": sysr.ergodic_kind.value,
            "sensitive": sensitive,
            "periodic_points_dense": periodic_points_dense(f),
            "ay_chaotic": is_ay_chaotic(f),
            "d_chaotic": is_d_chaotic(f),
        },
        "points": points,
        "relations": {
            "triangle": [list(p) for p in tri.pairs()],
            "prox": [list(p) for p in prox.pairs()],
            "asym_equals_prox": asym == prox,
            "syprox_equals_prox": syprox == prox,
        },
        "stability": {
            "certified_points": len(cert),
            "steps_checked": list(cert.steps_checked),
        },
        "theorems": {k: ("pass" if v else "fail") for k, v in run_theorems(f).items()},
        "caveats": caveats,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


_PALETTE = ("lightblue", "palegreen", "lightsalmon", "khaki", "plum", "lightpink",
            "lightcyan", "wheat", "lightgrey", "aquamarine")


def to_dot(f: FunctionalMap) -> str:
    """Components get fill colors, cycle edges are bold, minimal sets are clusters."""
    rho = rho_decompose(f)
    pc = classify_points(f)
    lines = ["digraph primal {", "  rankdir=LR;", "  node [shape=circle, style=filled];"]
    for c, cyc in enumerate(rho.cycles):
        lines.append(f"  subgraph cluster_min{c} {{")
        lines.append(f'    label="minimal set {c} (period {rho.cycle_len[c]})"; style=dashed;')
        lines.append("    " + " ".join(f"{x};" for x in cyc))
        lines.append("  }")
    for x in range(f.n):
        color = _PALETTE[rho.component_id[x] % len(_PALETTE)]
        shape = "doublecircle" if pc.periodic[x] else "circle"
        lines.append(f'  {x} [fillcolor={color}, shape={shape}];')
    for x, y in enumerate(f.succ):
        style = ' [style=bold, penwidth=2]' if rho.tail_len[x] == 0 else ""
        lines.append(f"  {x} -> {y}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
