"""Per-vertex conductor terms, the discriminant comparison, and reports.

The conductor of the constructed model decomposes into one integer per tree
vertex (``D`` below).  Directly comparing ``D(v)`` with the local
discriminant share ``d(v)`` fails, so two rebalancing passes are applied:
``E`` shifts weight between neighbouring vertices and sums to zero over the
tree, and the step from ``D' = D + E`` to ``D''`` moves 2 units from each
odd leaf of weight 2 to the ancestor where its chain begins.  After both
passes ``D''(v) <= d(v)`` holds vertex by vertex, which summed over the tree
gives the conductor-discriminant inequality.  Every intermediate identity is
asserted on concrete data; all arithmetic is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cluster import (
    ClusterTree,
    ClusterVertex,
    build_cluster_tree,
    check_tree_invariants,
    equation_discriminant,
    local_disc,
)
from .dualgraph import (
    XGraph,
    YGraph,
    artin_conductor,
    build_tx,
    build_ty,
    component_term,
    detect_nonminimal,
    genus_check,
    self_intersections,
)
from .errors import InequalityViolated, InternalInvariantViolation
from .valuation import Instance, ValuationMatrix, _check_count, build_matrix

# equality classification tags for the per-vertex comparison
EVEN_ALL_EVEN_CHILDREN_WT2 = "EVEN_ALL_EVEN_CHILDREN_WT2"
ODD_WT2 = "ODD_WT2"
ODD_WT3_NO_EVEN_CHILDREN = "ODD_WT3_NO_EVEN_CHILDREN"
STRICT = "STRICT"

VALUATION_WARN_THRESHOLD = 10**6


def local_artin(v: ClusterVertex, tree: ClusterTree) -> int:
    """Share of the conductor carried by one vertex (closed form)."""
    if not v.odd:
        return (v.l % 2) + 2 * v.r + 2 * v.s
    base = -2 if not tree.parent_odd(v) else -1
    return base - v.r + 3 * v.s + 2 * v.l


def _odd_child_shift(v: ClusterVertex, tree: ClusterTree) -> int:
    return sum(2 - tree[c].wt * (tree[c].wt - 1) for c in v.children if tree[c].odd)


def local_shift(v: ClusterVertex, tree: ClusterTree) -> int:
    """Rebalancing term E; sums to zero over the whole tree."""
    if not v.odd:
        return -(v.l % 2) - _odd_child_shift(v, tree)
    base = 2 if not tree.parent_odd(v) else 1
    return v.r + v.s + base - v.wt * (v.wt - 1) - _odd_child_shift(v, tree)


def _shifted_closed_form(v: ClusterVertex, tree: ClusterTree) -> int:
    odd_child_sq = sum(tree[c].wt * (tree[c].wt - 1) for c in v.children if tree[c].odd)
    if not v.odd:
        return 2 * v.s + odd_child_sq
    return 2 * (v.l + v.s) - v.wt * (v.wt - 1) + odd_child_sq


def weight2_children(v: ClusterVertex, tree: ClusterTree) -> int:
    return sum(1 for c in v.children if tree[c].wt == 2)


def local_artin_bound(v: ClusterVertex, tree: ClusterTree) -> int:
    """The comparison quantity D'': shifted conductor share, with the odd
    weight-2 chain adjustment applied."""
    dp = local_artin(v, tree) + local_shift(v, tree)
    if dp != _shifted_closed_form(v, tree):
        raise InternalInvariantViolation("D + E disagrees with the closed form of D'", vertex=v.id)
    if not v.odd:
        return dp
    if v.wt == 2:
        return dp - 2 if v.is_leaf else dp
    return dp + 2 * weight2_children(v, tree)


@dataclass(frozen=True)
class VertexLedger:
    vertex: int
    d: int
    D: int
    E: int
    D_prime: int
    D_double_prime: int
    L_count: int
    equality: bool
    reason: str


def compare_vertex(v: ClusterVertex, tree: ClusterTree) -> VertexLedger:
    """Evaluate all local terms at one vertex and classify the comparison."""
    d = local_disc(v, tree)
    D = local_artin(v, tree)
    E = local_shift(v, tree)
    dp = D + E
    dpp = local_artin_bound(v, tree)
    l_count = weight2_children(v, tree) if v.odd and v.wt > 2 else 0

    if not v.odd:
        eq = all(tree[c].wt == 2 for c in v.children if not tree[c].odd)
        reason = EVEN_ALL_EVEN_CHILDREN_WT2 if eq else STRICT
    elif v.wt == 2:
        eq, reason = True, ODD_WT2
    elif v.wt == 3 and all(tree[c].odd for c in v.children):
        eq, reason = True, ODD_WT3_NO_EVEN_CHILDREN
    else:
        eq, reason = False, STRICT

    if dpp > d:
        raise InequalityViolated(f"D'' = {dpp} exceeds d = {d}", vertex=v.id)
    if eq != (dpp == d):
        raise InternalInvariantViolation("equality clause disagrees with the computed values", vertex=v.id)
    if dpp - dp not in (-2, 0, 2 * l_count):
        raise InternalInvariantViolation("D'' - D' outside {-2, 0, 2 #L}", vertex=v.id)
    return VertexLedger(
        vertex=v.id, d=d, D=D, E=E, D_prime=dp, D_double_prime=dpp,
        L_count=l_count, equality=eq, reason=reason,
    )


@dataclass
class Report:
    """Everything the analysis pipeline establishes about one instance."""

    label: str | None
    p: int | None                     # None in matrix mode
    num_roots: int
    genus: int
    nu_df: int
    artin: int                        # conductor from the cover graph
    artin_local_sum: int              # conductor as a sum over tree vertices
    n_components: int
    f_tilde: int
    inequality_holds: bool
    equality_holds: bool
    x_minimal: bool
    component_bound_ok: bool
    ledgers: tuple[VertexLedger, ...]
    tree: ClusterTree
    ygraph: YGraph
    xgraph: XGraph
    self_int: dict[int, int]
    warnings: tuple[str, ...] = ()
    contractible: tuple[int, ...] = ()

    def to_json_dict(self) -> dict:
        vertices = []
        for led in self.ledgers:
            v = self.tree[led.vertex]
            vertices.append(
                {
                    "id": v.id,
                    "depth": v.depth,
                    "wt": v.wt,
                    "l_prime": v.l_prime,
                    "r": v.r,
                    "s": v.s,
                    "l": v.l,
                    "parity": v.parity,
                    "d": led.d,
                    "D": led.D,
                    "E": led.E,
                    "D_prime": led.D_prime,
                    "D_double_prime": led.D_double_prime,
                    "equality": led.equality,
                    "reason": led.reason,
                }
            )
        return {
            "label": self.label,
            "nu_df": self.nu_df,
            "artin_conductor": self.artin,
            "artin_local_sum": self.artin_local_sum,
            "n_components": self.n_components,
            "f_tilde": self.f_tilde,
            "inequality_holds": self.inequality_holds,
            "equality_holds": self.equality_holds,
            "x_minimal": self.x_minimal,
            "component_bound_ok": self.component_bound_ok,
            "warnings": list(self.warnings),
            "vertices": vertices,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def _check_shift_identities(tree: ClusterTree, ledgers) -> None:
    """The three cancellation identities behind sum(E) = 0, each accumulated
    from its own side so agreement is informative."""
    lhs1 = sum(
        -(2 - tree[c].wt * (tree[c].wt - 1))
        for v in tree
        if not v.odd
        for c in v.children
        if tree[c].odd
    )
    rhs1 = sum(
        2 - v.wt * (v.wt - 1) - _odd_child_shift(v, tree)
        for v in tree
        if v.odd
    )
    if lhs1 + rhs1 != 0:
        raise InternalInvariantViolation("odd/even weight rebalancing does not cancel")
    lhs2 = sum(-(v.l % 2) for v in tree if not v.odd)
    rhs2 = sum(v.r for v in tree if v.odd)
    if lhs2 + rhs2 != 0:
        raise InternalInvariantViolation("parent-parity rebalancing does not cancel")
    lhs3 = sum(-1 for v in tree if v.odd and tree.parent_odd(v))
    rhs3 = sum(v.s for v in tree if v.odd)
    if lhs3 + rhs3 != 0:
        raise InternalInvariantViolation("odd-parent count rebalancing does not cancel")
    if sum(led.E for led in ledgers) != 0:
        raise InternalInvariantViolation("shift terms E do not sum to zero")


def _check_bound_bijection(tree: ClusterTree, ledgers) -> None:
    odd_wt2_leaves = sum(1 for v in tree if v.odd and v.wt == 2 and v.is_leaf)
    chain_heads = sum(led.L_count for led in ledgers)
    if odd_wt2_leaves != chain_heads:
        raise InternalInvariantViolation(
            f"odd weight-2 leaves ({odd_wt2_leaves}) != weight-2 chain heads ({chain_heads})"
        )
    if sum(led.D_double_prime for led in ledgers) != sum(led.D_prime for led in ledgers):
        raise InternalInvariantViolation("sum of D'' differs from sum of D'")


def _check_conductor_decomposition(tree: ClusterTree, x: XGraph, ledgers, artin: int) -> None:
    by_vertex = {v.id: 0 for v in tree}
    for c in x:
        by_vertex[x.base_vertex(c.id)] += component_term(x, c.id)
    for led in ledgers:
        if by_vertex[led.vertex] != led.D:
            raise InternalInvariantViolation(
                f"component terms over the vertex sum to {by_vertex[led.vertex]}, formula gives {led.D}",
                vertex=led.vertex,
            )
    if sum(led.D for led in ledgers) != artin:
        raise InternalInvariantViolation("local conductor terms do not sum to the graph conductor")


def analyze(
    source: Instance | ValuationMatrix,
    *,
    allow_small: bool = False,
    label: str | None = None,
) -> Report:
    """Run the full pipeline and return a fully cross-checked report.

    Accepts either a split-roots instance or a bare ultrametric valuation
    matrix.  Raises :class:`InstanceError` for bad input and
    :class:`InternalInvariantViolation` (or a subclass) if any proved
    identity fails, which would mean a bug in this package.
    """
    warnings: list[str] = []
    if isinstance(source, Instance):
        source.validate(allow_small=allow_small)
        matrix = build_matrix(source)
        p: int | None = source.p
        label = label if label is not None else source.label
    else:
        matrix = source
        matrix.check_shape()
        _check_count(matrix.n, allow_small)
        p = None

    n = matrix.n
    genus = (n - 2) // 2
    if n < 6:
        warnings.append(f"{n} roots: genus {genus} < 2 is out of scope for the underlying theory")
    top = matrix.max_finite()
    if top > VALUATION_WARN_THRESHOLD:
        warnings.append(f"largest pairwise valuation {top} exceeds {VALUATION_WARN_THRESHOLD}; check the input")

    tree = build_cluster_tree(matrix, allow_small=allow_small)
    check_tree_invariants(tree)

    nu_df = equation_discriminant(matrix)
    if sum(local_disc(v, tree) for v in tree) != nu_df:
        raise InternalInvariantViolation("local discriminant shares do not sum to nu(d_f)")

    y = build_ty(tree)
    x = build_tx(y)
    artin = artin_conductor(x)
    selfint = self_intersections(x)
    genus_check(x, selfint)

    # second route to the conductor: 2g - 2 plus chi of the special fiber
    chi_special = sum(c.chi for c in x) - x.total_edge_weight()
    if artin != (2 * genus - 2) + chi_special:
        raise InternalInvariantViolation("conductor disagrees with the Euler-characteristic route")
    if all(c.m == 1 for c in x) and artin != x.total_edge_weight():
        raise InternalInvariantViolation("reduced special fiber but conductor != number of nodes")

    ledgers = tuple(compare_vertex(v, tree) for v in tree)
    _check_conductor_decomposition(tree, x, ledgers, artin)
    _check_shift_identities(tree, ledgers)
    _check_bound_bijection(tree, ledgers)

    bound_sum = sum(led.D_double_prime for led in ledgers)
    if bound_sum > nu_df:
        raise InequalityViolated(f"sum of D'' = {bound_sum} exceeds nu(d_f) = {nu_df}")
    if artin > nu_df:
        raise InequalityViolated(f"conductor {artin} exceeds discriminant {nu_df}")

    contractible = tuple(detect_nonminimal(tree))
    equality = artin == nu_df
    if equality != all(led.equality for led in ledgers):
        raise InternalInvariantViolation("global equality disagrees with the per-vertex ledger")
    if equality != (all(led.equality for led in ledgers) and not contractible):
        raise InternalInvariantViolation("equality with a contractible component present")

    n_x = x.n_components
    f_tilde = artin - n_x + 1
    if f_tilde < 0:
        raise InternalInvariantViolation(f"negative representation conductor {f_tilde}")
    component_bound_ok = n_x <= artin + 1
    if not component_bound_ok:
        raise InternalInvariantViolation("component count exceeds conductor + 1")

    return Report(
        label=label,
        p=p,
        num_roots=n,
        genus=genus,
        nu_df=nu_df,
        artin=artin,
        artin_local_sum=sum(led.D for led in ledgers),
        n_components=n_x,
        f_tilde=f_tilde,
        inequality_holds=artin <= nu_df,
        equality_holds=equality,
        x_minimal=not contractible,
        component_bound_ok=component_bound_ok,
        ledgers=ledgers,
        tree=tree,
        ygraph=y,
        xgraph=x,
        self_int=selfint,
        warnings=tuple(warnings),
        contractible=contractible,
    )
