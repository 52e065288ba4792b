"""Decomposing dense host graphs into induced pattern copies.

For a pattern F = K_{a1,...,ak} the pipeline produces, for a target
vertex count n, a graph G on n vertices that misses only O(n) of the
edges of K_n yet decomposes into induced copies of F:

  1. write n = n'*p + t, where p is the smallest usable multiplier (a
     multiple of a1*...*ak whose designs exist), n' is the largest
     value at or below n/p that satisfies the two counting conditions
     for clique decomposability and that the search oracle actually
     certifies, and t < p*q is the leftover (q is the period of the
     admissible n' values);
  2. decompose K_{n'} into edge-disjoint, generally non-induced copies
     of F (exact-cover search);
  3. replace each vertex by an independent p-set, giving the complete
     multipartite graph G' = K_{p,...,p} with n' parts, and each K_{n'}
     copy by the corresponding blown-up placement;
  4. split every p-set inside a placement class into cells of size a_i
     and transport the cell-aligned decomposition of K_{p*a1,...,p*ak}
     through the placement, turning it into p**2 induced copies;
  5. append t isolated vertices.

The non-edges of the result are the within-p-set pairs plus everything
at the isolated vertices: n'*C(p,2) + C(t,2) + t*(n-t) of them, always
fewer than (p*q + p/2)*n.  Every certificate is re-verified against the
independent search-based checker before it is returned.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple

from . import oracle
from .blowup import Decomposition, FCopy, MultipartiteHost, PatternSignature
from .embedded import embedded_decompose, star_parameters
from .oracle import BudgetExceeded, NoDecomposition, SearchBudget

__all__ = [
    "DenseCertificate",
    "DenseParameters",
    "DivisibilityReport",
    "DivisibilityViolation",
    "InternalInvariant",
    "NON_EDGE_CAP",
    "NoFeasibleParameters",
    "Placement",
    "admissible_period",
    "assemble",
    "choose_parameters",
    "divisibility_check",
    "step1_decompose_clique",
    "step2_blow_up",
    "step3_refine",
    "step4_apply_embedded",
]

NON_EDGE_CAP = 10**6


class NoFeasibleParameters(ValueError):
    """No certified parameter split exists for this n (within budget)."""


class DivisibilityViolation(ValueError):
    """A refinement step needs a_i to divide p and it does not."""


class InternalInvariant(RuntimeError):
    """A property the construction guarantees failed to hold; this is a bug."""


class DivisibilityReport(NamedTuple):
    ok: bool
    reasons: tuple[str, ...]


@dataclass(frozen=True)
class DenseParameters:
    """The split n = n'*p + t with n' = s*q + r."""

    n: int
    p: int
    q: int
    r: int
    s: int
    t: int
    n_prime: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "s": self.s,
            "t": self.t,
            "n_prime": self.n_prime,
        }


@dataclass(frozen=True)
class Placement:
    """A K_{n'} pattern copy after blow-up: class i holds the independent
    p-sets that replaced its original vertices."""

    class_groups: tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class DenseCertificate:
    params: DenseParameters
    decomposition: Decomposition
    non_edge_count: int
    non_edges: tuple[tuple[int, int], ...] | None
    bound_lhs: int
    bound_rhs: float

    def to_json_dict(self) -> dict:
        host = self.decomposition.host
        if self.non_edges is not None:
            non_edges: object = [list(e) for e in self.non_edges]
        else:
            non_edges = {
                "structural": {
                    "psets": len(host.parts),
                    "p": self.params.p,
                    "isolated": host.isolated,
                    "count": self.non_edge_count,
                }
            }
        return {
            "n": self.params.n,
            "pattern": list(self.decomposition.pattern.parts),
            "params": self.params.to_json_dict(),
            "non_edges": non_edges,
            "copies": [
                {"classes": [list(c) for c in copy.classes]}
                for copy in self.decomposition.copies
            ],
            "bound": {"lhs": self.bound_lhs, "rhs": self.bound_rhs},
        }


def _degree_gcd(pattern: PatternSignature) -> int:
    total = pattern.order
    return functools.reduce(math.gcd, (total - a for a in pattern.parts))


def divisibility_check(pattern: PatternSignature, n_prime: int) -> DivisibilityReport:
    """The two counting conditions for K_{n'} to split into pattern copies:
    the edge count of the pattern divides C(n', 2), and every vertex
    degree n'-1 is a multiple of the gcd of the pattern's class degrees."""
    e = pattern.edge_count
    d = _degree_gcd(pattern)
    pairs = n_prime * (n_prime - 1) // 2
    first = pairs % e == 0
    second = (n_prime - 1) % d == 0
    reasons = (
        f"C({n_prime}, 2) = {pairs} is{'' if first else ' not'} a multiple of {e}",
        f"{n_prime} - 1 is{'' if second else ' not'} a multiple of gcd of class degrees {d}",
    )
    return DivisibilityReport(ok=first and second, reasons=reasons)


@functools.lru_cache(maxsize=None)
def admissible_period(pattern: PatternSignature) -> tuple[int, tuple[int, ...]]:
    """Period q and residues r mod q of the n' passing divisibility_check.

    The conditions are periodic in n' with period dividing
    lcm(2*|E(F)|, d); the returned q is the smallest period of the
    admissible set.
    """
    e = pattern.edge_count
    d = _degree_gcd(pattern)
    span = math.lcm(2 * e, d)
    admissible = {x for x in range(span) if divisibility_check(pattern, x).ok}
    for q in range(1, span + 1):
        if span % q == 0 and all((x + q) % span in admissible for x in admissible):
            return q, tuple(sorted({x % q for x in admissible}))
    raise AssertionError("unreachable: span itself is always a period")


@functools.lru_cache(maxsize=None)
def _step1_outcome(
    pattern: PatternSignature, n_prime: int, budget: SearchBudget
) -> tuple[str, Decomposition | None]:
    """('found', d) | ('none', None) | ('budget', None) for K_{n'} search."""
    graph = oracle.complete_graph(n_prime)
    try:
        found = oracle.exact_cover_decompose(graph, pattern, induced=False, budget=budget)
    except NoDecomposition:
        return "none", None
    except BudgetExceeded:
        return "budget", None
    return "found", found


def choose_parameters(
    pattern: PatternSignature, n: int, budget: SearchBudget | None = None
) -> DenseParameters:
    """Pick p, q and the largest certified n' with t = n - n'*p below p*q.

    The t-bound confines n' to a window of exactly q consecutive values
    ending at floor(n/p), and any q consecutive values contain an
    admissible residue, so only oracle failures can make this raise.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if budget is None:
        budget = oracle.default_budget()
    p, _ = star_parameters(pattern)
    q, _residues = admissible_period(pattern)
    top = n // p
    lo = max(1, top - q + 1)
    budget_hit = False
    for n_prime in range(top, lo - 1, -1):
        if not divisibility_check(pattern, n_prime).ok:
            continue
        status, _ = _step1_outcome(pattern, n_prime, budget)
        if status == "budget":
            budget_hit = True
            continue
        if status == "none":
            continue
        t = n - n_prime * p
        if not 0 <= t <= p * q - 1:
            raise InternalInvariant(
                f"leftover t = {t} escaped [0, {p * q - 1}] for n = {n}, n' = {n_prime}"
            )
        return DenseParameters(
            n=n, p=p, q=q, r=n_prime % q, s=n_prime // q, t=t, n_prime=n_prime
        )
    detail = " (search budget exhausted on some candidates)" if budget_hit else ""
    raise NoFeasibleParameters(
        f"no certified clique order for pattern {pattern.parts} and n = {n}{detail}"
    )


def step1_decompose_clique(
    pattern: PatternSignature, n_prime: int, budget: SearchBudget | None = None
) -> Decomposition:
    """Edge-disjoint (not necessarily induced) pattern copies tiling K_{n'}."""
    report = divisibility_check(pattern, n_prime)
    if not report.ok:
        raise NoDecomposition("; ".join(report.reasons))
    if budget is None:
        budget = oracle.default_budget()
    status, found = _step1_outcome(pattern, n_prime, budget)
    if status == "none":
        raise NoDecomposition(
            f"K_{n_prime} admits no decomposition into {pattern.parts} copies"
        )
    if status == "budget":
        raise BudgetExceeded(f"search budget exhausted on K_{n_prime}")
    assert found is not None
    return found


def step2_blow_up(
    d: Decomposition, p: int
) -> tuple[MultipartiteHost, tuple[Placement, ...]]:
    """Replace each K_{n'} vertex by an independent p-set.

    Vertex v becomes {(v-1)*p + 1, ..., v*p}; the host becomes the
    complete multipartite graph with n' parts of size p, and each copy
    becomes a Placement carrying its classes as groups of p-sets (in
    ascending original-vertex order).  p = 1 is the identity.
    """
    if p < 1:
        raise ValueError(f"multiplier must be positive, got {p}")
    n_prime = d.host.order

    def pset(v: int) -> tuple[int, ...]:
        return tuple(range((v - 1) * p + 1, v * p + 1))

    host = MultipartiteHost(parts=(p,) * n_prime)
    placements = tuple(
        Placement(class_groups=tuple(tuple(pset(v) for v in cls) for cls in copy.classes))
        for copy in d.copies
    )
    return host, placements


def step3_refine(
    placement: Placement, pattern: PatternSignature, p: int
) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Split class i of the placement into p cells of size a_i.

    Cells are numbered p-set by p-set, consecutive runs inside each
    p-set, so each class yields a_i * (p / a_i) = p cells.  Requires
    every a_i to divide p.
    """
    out = []
    for i, a in enumerate(pattern.parts):
        if p % a != 0:
            raise DivisibilityViolation(f"part size {a} does not divide multiplier {p}")
        cells = []
        for group in placement.class_groups[i]:
            for j in range(p // a):
                cells.append(group[j * a : (j + 1) * a])
        out.append(tuple(cells))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _embedded_for(pattern: PatternSignature, p: int):
    return embedded_decompose(pattern, p)


def step4_apply_embedded(
    partitions: tuple[tuple[tuple[int, ...], ...], ...],
    pattern: PatternSignature,
    p: int,
) -> tuple[FCopy, ...]:
    """Transport the cell-aligned decomposition through one placement.

    The abstract decomposition of K_{p*a1,...,p*ak} names a cell index
    per part for each of its p**2 copies; substituting the placement's
    actual cells yields p**2 induced copies inside the blown-up host.
    """
    ed = _embedded_for(pattern, p)
    return tuple(
        FCopy(classes=tuple(partitions[i][x - 1] for i, x in enumerate(cell_idx)))
        for cell_idx in ed.copy_cells()
    )


def assemble(
    pattern: PatternSignature, n: int, budget: SearchBudget | None = None
) -> DenseCertificate:
    """Run the full pipeline for n vertices and return a verified certificate.

    The certificate's decomposition lives on the host of n'*p vertices in
    independent p-sets plus t isolated vertices at the top ids; its copy
    list is ordered by (placement, underlying block).  Non-edges are
    listed explicitly up to NON_EDGE_CAP, structurally above that.
    """
    params = choose_parameters(pattern, n, budget)
    step1 = step1_decompose_clique(pattern, params.n_prime, budget)
    _, placements = step2_blow_up(step1, params.p)
    copies: list[FCopy] = []
    for placement in placements:
        partitions = step3_refine(placement, pattern, params.p)
        copies.extend(step4_apply_embedded(partitions, pattern, params.p))
    host = MultipartiteHost(parts=(params.p,) * params.n_prime, isolated=params.t)
    decomposition = Decomposition(
        host=host, pattern=pattern, copies=tuple(copies), induced=True
    )

    p, t, n_prime = params.p, params.t, params.n_prime
    expected_non_edges = (
        n_prime * (p * (p - 1) // 2) + t * (t - 1) // 2 + t * (n - t)
    )
    non_edges = None
    if expected_non_edges <= NON_EDGE_CAP:
        listed = []
        offsets = host.offsets
        for i in range(n_prime):
            for u in range(offsets[i] + 1, offsets[i + 1] + 1):
                for v in range(u + 1, offsets[i + 1] + 1):
                    listed.append((u, v))
        for u in range(1, n + 1):
            for v in range(max(u + 1, n - t + 1), n + 1):
                listed.append((u, v))
        non_edges = tuple(sorted(listed))
        if len(non_edges) != expected_non_edges:
            raise InternalInvariant(
                f"non-edge list has {len(non_edges)} entries, formula gives {expected_non_edges}"
            )
    bound_rhs_doubled = p * (2 * params.q + 1) * n
    if 2 * expected_non_edges >= bound_rhs_doubled:
        raise InternalInvariant(
            f"{expected_non_edges} non-edges is not below (p*q + p/2)*n = {bound_rhs_doubled / 2}"
        )
    violations = oracle.verify_decomposition(
        oracle.multipartite_graph(host), pattern, decomposition.copies, induced=True
    )
    if violations:
        raise InternalInvariant(f"assembled decomposition failed verification: {violations[0]}")
    return DenseCertificate(
        params=params,
        decomposition=decomposition,
        non_edge_count=expected_non_edges,
        non_edges=non_edges,
        bound_lhs=expected_non_edges,
        bound_rhs=bound_rhs_doubled / 2,
    )