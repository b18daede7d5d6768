"""Instance generation and independent brute-force oracles.

The oracles deliberately take different algorithmic routes from the main
pipeline so that agreement is evidence rather than tautology:

* :func:`disc_oracle` multiplies out the full product of root differences as
  one big integer and divides by p repeatedly, instead of summing pairwise
  valuations.
* :func:`naive_tree_oracle` builds the refinement tree by the recursive
  shift-and-divide route (partition one depth at a time on a decremented
  submatrix) instead of global depth slicing with chain jumps.

:func:`gen_instance` realizes a randomly sampled nesting shape with actual
integers: roots inside a cluster at depth d share everything up to p**d and
get distinct residues at p**(d+1) when they separate, so the resulting tree
is the sampled shape by construction and collisions are impossible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cluster import ClusterTree, equation_discriminant
from .conductor import Report, analyze
from .errors import InternalInvariantViolation
from .valuation import INFINITY, Instance, ValuationMatrix, build_matrix, validate_ultrametric

GEN_PRIMES = (3, 5, 7, 11, 13)


@dataclass(frozen=True)
class GenSpec:
    """Deterministic recipe for one random instance."""

    seed: int
    p: int = 3
    genus: int = 2
    max_depth: int = 3
    chain_prob: float = 0.2

    def rng(self) -> random.Random:
        return random.Random(f"{self.seed}:{self.p}:{self.genus}:{self.max_depth}:{self.chain_prob}")


def _random_composition(rng: random.Random, total: int, parts: int) -> list[int]:
    """Split `total` into `parts` positive summands, uniformly over cut points."""
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
    edges = [0] + cuts + [total]
    return [edges[i + 1] - edges[i] for i in range(parts)]


def _realize(rng: random.Random, n: int, depth: int, max_depth: int, chain_prob: float, p: int) -> list[int]:
    """Integers whose pairwise valuations realize a random nesting of n roots."""
    if n == 1:
        return [0]
    if depth >= max_depth:
        parts = min(p, n)
    elif n >= 2 and rng.random() < chain_prob:
        parts = 1
    else:
        parts = rng.randint(2, min(p, n))
    sizes = _random_composition(rng, n, parts)
    residues = rng.sample(range(p), parts)
    out: list[int] = []
    for size, res in zip(sizes, residues):
        if size == 1:
            out.append(res)
        else:
            out.extend(res + p * t for t in _realize(rng, size, depth + 1, max_depth, chain_prob, p))
    return out


def gen_instance(spec: GenSpec) -> Instance:
    rng = spec.rng()
    n = 2 * spec.genus + 2
    values = _realize(rng, n, 0, spec.max_depth, spec.chain_prob, spec.p)
    # dress the roots up with a unit scale and a shift; the matrix is unchanged
    unit = rng.randrange(1, 50 * spec.p)
    while unit % spec.p == 0:
        unit += 1
    shift = rng.randrange(-1000, 1000)
    roots = [unit * v + shift for v in values]
    if len(set(roots)) != n:
        raise InternalInvariantViolation("generator produced colliding roots")
    return Instance.from_values(spec.p, roots, label=f"gen-{spec.seed}-p{spec.p}-g{spec.genus}")


# ---------------------------------------------------------------------------
# oracles


def disc_oracle(inst: Instance) -> int:
    """Valuation of the squared product of root differences, by brute force."""
    prod = Fraction(1)
    n = inst.num_roots
    for i in range(n):
        for j in range(i + 1, n):
            prod *= inst.roots[i] - inst.roots[j]
    prod *= prod
    num, den = prod.numerator, prod.denominator
    v = 0
    while num % inst.p == 0:
        num //= inst.p
        v += 1
    while den % inst.p == 0:
        den //= inst.p
        v -= 1
    return v


@dataclass(frozen=True)
class OracleVertex:
    depth: int
    members: frozenset[int]
    parent_members: frozenset[int] | None
    wt: int
    l_prime: int
    r: int
    s: int
    l: int
    f_val: int
    odd: bool


def naive_tree_oracle(m: ValuationMatrix) -> list[OracleVertex]:
    """Refinement tree by recursive shift-and-divide, as flat annotated records."""
    out: list[OracleVertex] = []

    def rec(indices: tuple[int, ...], sub: list[list], depth: int, parent: frozenset[int] | None, parent_f: int | None):
        mine = frozenset(indices)
        # one refinement step: classes under "local valuation >= 1"
        classes: list[list[int]] = []
        for pos, idx in enumerate(indices):
            for cls in classes:
                ref = indices.index(cls[0])
                e = sub[pos][ref]
                if e is INFINITY or e >= 1:
                    cls.append(idx)
                    break
            else:
                classes.append([idx])
        kids = [cls for cls in classes if len(cls) >= 2]
        singles = [cls[0] for cls in classes if len(cls) == 1]
        wt = len(indices)
        kid_wts = [len(k) for k in kids]
        r = sum(1 for w in kid_wts if w % 2 == 1)
        s = len(kid_wts) - r
        f_val = 0 if parent_f is None else parent_f + wt
        out.append(
            OracleVertex(
                depth=depth,
                members=mine,
                parent_members=parent,
                wt=wt,
                l_prime=len(singles),
                r=r,
                s=s,
                l=len(singles) + r,
                f_val=f_val,
                odd=f_val % 2 == 1,
            )
        )
        for cls in kids:
            pos_of = [indices.index(i) for i in cls]
            shifted = [
                [sub[a][b] if sub[a][b] is INFINITY else sub[a][b] - 1 for b in pos_of]
                for a in pos_of
            ]
            rec(tuple(cls), shifted, depth + 1, mine, f_val)

    all_idx = tuple(range(m.n))
    base = [[m.at(i, j) for j in all_idx] for i in all_idx]
    rec(all_idx, base, 0, None, None)
    return out


def trees_agree(tree: ClusterTree, oracle: list[OracleVertex]) -> bool:
    """Isomorphism with identical annotations, keyed by (depth, member set)."""
    ours = {
        (v.depth, v.members): (
            v.wt,
            v.l_prime,
            v.r,
            v.s,
            v.l,
            v.f_val,
            v.odd,
            tree[v.parent].members if v.parent is not None else None,
        )
        for v in tree
    }
    theirs = {
        (o.depth, o.members): (o.wt, o.l_prime, o.r, o.s, o.l, o.f_val, o.odd, o.parent_members)
        for o in oracle
    }
    return ours == theirs


def mutate_entry(m: ValuationMatrix, i: int, j: int, delta: int = 1) -> ValuationMatrix:
    """Bump one symmetric pair of entries; used to probe the validator."""
    rows = [list(row) for row in m.entries]
    rows[i][j] += delta
    rows[j][i] += delta
    return ValuationMatrix(tuple(tuple(row) for row in rows))


def default_specs(count: int, *, base_seed: int = 0) -> list[GenSpec]:
    """A deterministic spread of generator recipes across primes and genera."""
    specs = []
    for k in range(count):
        p = GEN_PRIMES[k % len(GEN_PRIMES)]
        genus = 2 + (k // len(GEN_PRIMES)) % 5
        max_depth = 1 + k % 4
        chain_prob = (k % 3) * 0.15
        specs.append(GenSpec(seed=base_seed + k, p=p, genus=genus, max_depth=max_depth, chain_prob=chain_prob))
    return specs


def run_trial(spec: GenSpec) -> Report:
    """Generate one instance, analyze it, and cross-check every oracle."""
    inst = gen_instance(spec)
    matrix = build_matrix(inst)
    if not validate_ultrametric(matrix).ok:
        raise InternalInvariantViolation(f"generated matrix not ultrametric ({spec})")
    report = analyze(inst)
    if disc_oracle(inst) != report.nu_df:
        raise InternalInvariantViolation(f"discriminant oracle disagrees ({spec})")
    if equation_discriminant(matrix) != report.nu_df:
        raise InternalInvariantViolation(f"pairwise-sum discriminant disagrees ({spec})")
    if not trees_agree(report.tree, naive_tree_oracle(matrix)):
        raise InternalInvariantViolation(f"tree oracle disagrees ({spec})")
    return report
