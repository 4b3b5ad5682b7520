"""The polarity graph B(q) on the points of PG(2,q), and its verifier.

Vertices are the q^2+q+1 projective points in canonical order, with an
edge exactly when the dot product vanishes.  The self-orthogonal points
form the quadric set W.  verify_brown machine-checks every structural
property this construction is supposed to have, exhaustively, and
returns witnesses for any failure instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import projective
from .gf import factor_prime_power, make_field
from .graphs import Graph

MAX_Q = 31


class UnsupportedQ(ValueError):
    pass


@dataclass(frozen=True)
class BrownGraph:
    graph: Graph
    q: int
    point_of: tuple[projective.ProjPoint, ...]
    quadric: frozenset[int]  # W
    nonquadric: frozenset[int]  # V

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class BrownCertificate:
    q: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _validate_q(q: int, max_q: int) -> tuple[int, int]:
    try:
        p, m = factor_prime_power(q)
    except ValueError:
        raise UnsupportedQ(f"q={q} is not a prime power") from None
    if p == 2:
        raise UnsupportedQ(f"q={q} is even; odd prime powers only")
    if q < 3 or q > max_q:
        raise UnsupportedQ(f"q={q} outside the supported range [3, {max_q}]")
    return p, m


@lru_cache(maxsize=None)
def build_brown(q: int, max_q: int = MAX_Q) -> BrownGraph:
    """B(q): deterministic vertex order, edge {i,j} iff points orthogonal."""
    p, m = _validate_q(q, max_q)
    spec = make_field(p, m)
    points = projective.enumerate_points(spec)
    n = len(points)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if projective.incidence(spec, points[i], points[j]):
                edges.append((i, j))
    quadric = frozenset(
        i for i in range(n) if projective.is_quadric(spec, points[i])
    )
    graph = Graph(n, edges)
    return BrownGraph(
        graph=graph,
        q=q,
        point_of=tuple(points),
        quadric=quadric,
        nonquadric=frozenset(range(n)) - quadric,
    )


def verify_brown(bg: BrownGraph) -> BrownCertificate:
    """Exhaustively check the seven structural properties of B(q)."""
    g = bg.graph
    q = bg.q
    checks = []

    # (i) order, |W|, and the two degree values
    ok = g.n == q * q + q + 1 and len(bg.quadric) == q + 1
    detail = ""
    if ok:
        for v in range(g.n):
            want = q if v in bg.quadric else q + 1
            if g.degree(v) != want:
                ok = False
                detail = f"vertex {v} has degree {g.degree(v)}, expected {want}"
                break
    else:
        detail = f"n={g.n}, |W|={len(bg.quadric)}"
    checks.append(CheckResult("order_and_degrees", ok, detail))

    # (ii) W independent
    ok, detail = True, ""
    for w in sorted(bg.quadric):
        hit = g.adj[w] & bg.quadric
        if hit:
            ok, detail = False, f"quadric edge {w}-{min(hit)}"
            break
    checks.append(CheckResult("quadric_independent", ok, detail))

    # (iii) no quadric vertex on a triangle
    ok, detail = True, ""
    for w in sorted(bg.quadric):
        nbrs = sorted(g.adj[w])
        for i, x in enumerate(nbrs):
            common = g.adj[x] & g.adj[w]
            if any(y > x for y in common):
                y = min(y for y in common if y > x)
                ok, detail = False, f"triangle {w},{x},{y}"
                break
        if not ok:
            break
    checks.append(CheckResult("no_quadric_triangle", ok, detail))

    # (iv) every nonadjacent pair has exactly one common neighbor
    ok, detail = True, ""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v in g.adj[u]:
                continue
            c = len(g.adj[u] & g.adj[v])
            if c != 1:
                ok, detail = False, f"pair ({u},{v}) has {c} common neighbors"
                break
        if not ok:
            break
    checks.append(CheckResult("nonadjacent_unique_common", ok, detail))

    # (v) every pair within V has exactly one common neighbor
    ok, detail = True, ""
    vv = sorted(bg.nonquadric)
    for i, u in enumerate(vv):
        for v in vv[i + 1 :]:
            c = len(g.adj[u] & g.adj[v])
            if c != 1:
                ok, detail = False, f"V-pair ({u},{v}) has {c} common neighbors"
                break
        if not ok:
            break
    checks.append(CheckResult("v_pairs_unique_common", ok, detail))

    # (vi) every vertex of V has exactly two or zero neighbors in W
    ok, detail = True, ""
    for v in vv:
        c = len(g.adj[v] & bg.quadric)
        if c not in (0, 2):
            ok, detail = False, f"vertex {v} has {c} quadric neighbors"
            break
    checks.append(CheckResult("v_quadric_neighbors", ok, detail))

    # (vii) C4-freeness
    from .graphs import is_c4_free

    free, witness = is_c4_free(g)
    checks.append(
        CheckResult("c4_free", free, "" if free else f"witness {witness}")
    )

    return BrownCertificate(q=q, checks=tuple(checks))
