"""Human-readable text reports and DOT exports of the three graphs.

All output is deterministic for a fixed input: vertex ids are stable, maps
are iterated in id order, and weight-2 intersections are drawn as two
parallel edges.
"""

from __future__ import annotations

from .conductor import Report
from .dualgraph import INSERT, LEAF, XGraph, YGraph


def render_text(report: Report) -> str:
    lines = []
    head = report.label or "instance"
    if report.p is not None:
        head += f"  (p = {report.p}, {report.num_roots} roots, genus {report.genus})"
    else:
        head += f"  (matrix mode, {report.num_roots} roots, genus {report.genus})"
    lines.append(head)
    lines.append(f"equation discriminant nu(d_f) = {report.nu_df}"
                 "   (= nu(Delta) iff the input equation is minimal)")
    lines.append(f"conductor -Art(X/S)            = {report.artin}   (graph route)")
    lines.append(f"conductor, summed over tree    = {report.artin_local_sum}")
    lines.append(f"components n(X) = {report.n_components}   f~ = {report.f_tilde}")
    verdict = "HOLDS with equality" if report.equality_holds else "HOLDS strictly"
    lines.append(f"inequality -Art(X/S) <= nu(d_f): {verdict}")
    lines.append(f"X minimal: {'yes' if report.x_minimal else 'no'}")
    if report.contractible:
        lines.append(f"contractible chain vertices: {list(report.contractible)}")
    for w in report.warnings:
        lines.append(f"warning: {w}")
    lines.append("")
    lines.append("tree (wt, parity, d, D'', =?):")
    led = {entry.vertex: entry for entry in report.ledgers}

    def walk(vid: int, indent: int) -> None:
        v = report.tree[vid]
        row = led[vid]
        eq = "=" if row.equality else f"<  (defect {row.d - row.D_double_prime})"
        lines.append(
            f"{'  ' * indent}v{vid}  wt={v.wt}  {v.parity:4}  d={row.d}  D''={row.D_double_prime}  {eq}"
        )
        for c in v.children:
            walk(c, indent + 1)

    walk(report.tree.root.id, 1)
    return "\n".join(lines) + "\n"


def dot_tree(report: Report) -> str:
    lines = ["graph t_b {"]
    for v in report.tree:
        lines.append(f'  v{v.id} [label="wt={v.wt}/{v.parity}"];')
    for v in report.tree:
        for c in v.children:
            lines.append(f"  v{v.id} -- v{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _y_label(y: YGraph, vid: int) -> str:
    v = y[vid]
    if v.kind == INSERT:
        core = f"insert({v.origin[0]},{v.origin[1]})"
    elif v.kind == LEAF:
        core = f"leaf({v.origin[0]}:r{v.origin[1]})"
    else:
        core = f"v{v.origin[0]}"
    tag = f"/{'odd' if v.odd else 'even'}"
    roots = f" +{len(v.attached_roots)}r" if v.attached_roots else ""
    return core + tag + roots


def dot_cover(y: YGraph) -> str:
    lines = ["graph t_y {"]
    for v in y:
        lines.append(f'  y{v.id} [label="{_y_label(y, v.id)}"];')
    for pid in sorted(y.children):
        for c in y.children[pid]:
            lines.append(f"  y{pid} -- y{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_model(x: XGraph) -> str:
    lines = ["graph t_x {"]
    for c in x:
        lines.append(f'  x{c.id} [label="m={c.m}, χ={c.chi}"];')
    for (a, b), w in sorted(x.edges.items()):
        for _ in range(w):
            lines.append(f"  x{a} -- x{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
