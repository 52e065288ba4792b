"""Decomposing a blown-up pattern into induced copies of the pattern.

The pattern is a complete multipartite graph F = K_{a1,...,ak} and the
host is its m-fold blow-up F* = K_{m*a1,...,m*ak} with m = a1*...*ak.
Part i of the host splits into m cells of a_i consecutive vertices;
cells are addressed by index vectors j = (j_1, ..., j_k) with
j_l in 1..a_l, ranked in mixed-radix order with j_1 most significant.
A copy of F picks one cell per part, so it is described by k index
vectors (j^1, ..., j^k), the cell of part i being j^i.

The m**2 copies of a full decomposition are driven by one transversal
design TD(k, a_i) per part and named by codewords w = (b, c), both
halves cell index vectors.  Coordinate i of every vector in the copy of
w is read off one block of the i-th design: B^i is the block through
point b_i of group i and point c_i of group (i mod k) + 1, and the i-th
coordinate of j^(i') is the index of the point of B^i in group i'.  In
particular j^i_i = b_i and j^(i+1)_i = c_i (cyclically); decoding
checks these identities at runtime rather than assuming them.  Distinct
codewords give edge-disjoint copies and together they cover every edge
of the host exactly once, each copy induced.

Decoding also inverts: an edge determines the cells of its endpoints,
each design block is recoverable from the two coordinates those cells
provide, and the codeword can be read back off the diagonal.  This is
edge_to_copy, the constructive proof that the copies tile the host.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from . import designs
from .designs import TransversalDesign, block_through

__all__ = [
    "BlowupContext",
    "Codeword",
    "Decomposition",
    "FCopy",
    "MultipartiteHost",
    "PatternSignature",
    "SamePart",
    "UnsupportedPattern",
    "blowup_decompose",
    "decode_codeword",
    "decomposition_from_json",
    "edge_to_copy",
    "make_context",
]

CellIndex = tuple[int, ...]


class UnsupportedPattern(ValueError):
    """Some part sizes admit no transversal design of the needed width."""

    def __init__(self, message: str, failing_parts: tuple[int, ...] = ()):
        super().__init__(message)
        self.failing_parts = failing_parts


class SamePart(ValueError):
    """Both endpoints lie in the same part, so no edge connects them."""


@dataclass(frozen=True)
class PatternSignature:
    """Part sizes (a1, ..., ak) of a complete multipartite pattern."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(a) for a in self.parts))
        if len(self.parts) < 2:
            raise ValueError("a pattern needs at least two parts")
        if any(a < 1 for a in self.parts):
            raise ValueError(f"part sizes must be positive, got {self.parts}")

    @classmethod
    def from_text(cls, text: str) -> PatternSignature:
        return cls(parts=tuple(int(tok) for tok in text.split(",")))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        out = 1
        for a in self.parts:
            out *= a
        return out

    @property
    def order(self) -> int:
        return sum(self.parts)

    @property
    def edge_count(self) -> int:
        total = sum(self.parts)
        return (total * total - sum(a * a for a in self.parts)) // 2


@dataclass(frozen=True)
class MultipartiteHost:
    """Host graph: complete multipartite parts, optional trailing isolated
    vertices, optionally minus an explicit list of non-edges.

    Vertices are 1-based and consecutive: part 1 first, then part 2, and
    so on, with the isolated vertices taking the highest ids.  With
    singleton parts and an explicit non-edge list this describes an
    arbitrary graph.
    """

    parts: tuple[int, ...]
    isolated: int = 0
    non_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(s) for s in self.parts))
        if any(s < 1 for s in self.parts):
            raise ValueError(f"part sizes must be positive, got {self.parts}")
        if self.isolated < 0:
            raise ValueError(f"isolated count must be nonnegative, got {self.isolated}")
        normalized = tuple(
            sorted((u, v) if u < v else (v, u) for u, v in self.non_edges)
        )
        if len(set(normalized)) != len(normalized):
            raise ValueError("duplicate entries in non-edge list")
        for u, v in normalized:
            pu, pv = self.part_of(u), self.part_of(v)
            if pu is None or pv is None or pu == pv:
                raise ValueError(f"({u}, {v}) is not a cross-part pair")
        object.__setattr__(self, "non_edges", normalized)

    @property
    def order(self) -> int:
        return sum(self.parts) + self.isolated

    @property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for s in self.parts:
            out.append(out[-1] + s)
        return tuple(out)

    def part_of(self, v: int) -> int | None:
        """1-based part index of vertex v, or None for isolated vertices."""
        if not 1 <= v <= self.order:
            raise ValueError(f"vertex {v} out of range 1..{self.order}")
        offsets = self.offsets
        for i in range(len(self.parts)):
            if v <= offsets[i + 1]:
                return i + 1
        return None

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges in lexicographic order."""
        skip = set(self.non_edges)
        offsets = self.offsets
        total = offsets[-1]
        for i, s in enumerate(self.parts):
            for u in range(offsets[i] + 1, offsets[i] + s + 1):
                for v in range(offsets[i] + s + 1, total + 1):
                    if (u, v) not in skip:
                        yield (u, v)

    @property
    def edge_count(self) -> int:
        total = sum(self.parts)
        cross = (total * total - sum(s * s for s in self.parts)) // 2
        return cross - len(self.non_edges)

    def to_json_dict(self) -> dict:
        out: dict = {"parts": list(self.parts)}
        if self.isolated:
            out["isolated"] = self.isolated
        if self.non_edges:
            out["non_edges"] = [list(e) for e in self.non_edges]
        return out


def _host_from_json(data: dict) -> MultipartiteHost:
    return MultipartiteHost(
        parts=tuple(data["parts"]),
        isolated=int(data.get("isolated", 0)),
        non_edges=tuple((int(u), int(v)) for u, v in data.get("non_edges", ())),
    )


class Codeword(NamedTuple):
    b: CellIndex
    c: CellIndex


@dataclass(frozen=True)
class FCopy:
    """One pattern copy: per-part vertex classes, and, when produced by
    decoding, the cell index vectors and codeword behind them."""

    classes: tuple[tuple[int, ...], ...]
    detailed: tuple[CellIndex, ...] | None = None
    codeword: Codeword | None = None


@dataclass(frozen=True)
class Decomposition:
    host: MultipartiteHost
    pattern: PatternSignature
    copies: tuple[FCopy, ...]
    induced: bool

    def to_json_dict(self) -> dict:
        copies = []
        for copy in self.copies:
            entry: dict = {"classes": [list(c) for c in copy.classes]}
            if copy.codeword is not None:
                entry["codeword"] = {"b": list(copy.codeword.b), "c": list(copy.codeword.c)}
            copies.append(entry)
        return {
            "host": self.host.to_json_dict(),
            "pattern": list(self.pattern.parts),
            "copies": copies,
            "induced": self.induced,
        }


def decomposition_from_json(data: dict) -> Decomposition:
    copies = []
    for entry in data["copies"]:
        codeword = None
        if "codeword" in entry:
            codeword = Codeword(
                b=tuple(entry["codeword"]["b"]), c=tuple(entry["codeword"]["c"])
            )
        copies.append(
            FCopy(
                classes=tuple(tuple(int(v) for v in c) for c in entry["classes"]),
                codeword=codeword,
            )
        )
    return Decomposition(
        host=_host_from_json(data["host"]),
        pattern=PatternSignature(parts=tuple(data["pattern"])),
        copies=tuple(copies),
        induced=bool(data["induced"]),
    )


@dataclass(frozen=True)
class BlowupContext:
    """Pattern plus the per-part transversal designs and cell layout."""

    pattern: PatternSignature
    part_designs: tuple[TransversalDesign, ...] = field(repr=False)

    @property
    def host(self) -> MultipartiteHost:
        m = self.pattern.m
        return MultipartiteHost(parts=tuple(m * a for a in self.pattern.parts))

    def cell_rank(self, j: CellIndex) -> int:
        """Mixed-radix rank of a cell index vector, first coordinate most
        significant; ranks run 0..m-1."""
        rank = 0
        for coord, radix in zip(j, self.pattern.parts):
            if not 1 <= coord <= radix:
                raise ValueError(f"cell coordinate {coord} out of range 1..{radix}")
            rank = rank * radix + (coord - 1)
        return rank

    def cell_vertices(self, part: int, j: CellIndex) -> tuple[int, ...]:
        """Global vertex ids of cell j in the given part (1-based part)."""
        a = self.pattern.parts[part - 1]
        offset = self.host.offsets[part - 1]
        start = offset + a * self.cell_rank(j)
        return tuple(range(start + 1, start + a + 1))

    def cell_of(self, v: int) -> tuple[int, CellIndex]:
        """Part and cell index vector of a host vertex."""
        host = self.host
        part = host.part_of(v)
        if part is None:
            raise ValueError(f"vertex {v} is not in any part")
        a = self.pattern.parts[part - 1]
        rank = (v - host.offsets[part - 1] - 1) // a
        j = []
        for radix in reversed(self.pattern.parts):
            j.append(rank % radix + 1)
            rank //= radix
        return part, tuple(reversed(j))

    def codewords(self) -> Iterator[Codeword]:
        """All m**2 codewords in lexicographic order."""
        space = [range(1, a + 1) for a in self.pattern.parts]
        for b in itertools.product(*space):
            for c in itertools.product(*space):
                yield Codeword(b=b, c=c)


def make_context(pattern: PatternSignature) -> BlowupContext:
    """Construct the per-part designs TD(k, a_i), or report which parts fail.

    TD(k, a_i) needs k-2 mutually orthogonal Latin squares of order a_i,
    so a part is unsupported when k - 2 exceeds the reachable bound for
    its size (size 1 is always fine).
    """
    k = pattern.k
    failing = tuple(
        i + 1 for i, a in enumerate(pattern.parts) if k - 2 > designs.macneish(a)
    )
    if failing:
        sizes = [pattern.parts[i - 1] for i in failing]
        raise UnsupportedPattern(
            f"no TD({k}, a) construction for parts {list(failing)} (sizes {sizes})",
            failing_parts=failing,
        )
    cache: dict[int, TransversalDesign] = {}
    part_designs = []
    for a in pattern.parts:
        if a not in cache:
            cache[a] = designs.td_from_mols(designs.mols(a, k - 2), k)
        part_designs.append(cache[a])
    return BlowupContext(pattern=pattern, part_designs=tuple(part_designs))


def _copy_from_blocks(
    ctx: BlowupContext, blocks: tuple[tuple[tuple[int, int], ...], ...]
) -> tuple[tuple[CellIndex, ...], tuple[tuple[int, ...], ...]]:
    """Cell index vectors and vertex classes determined by one block per design.

    blocks[i] is a block of design i; coordinate i of the vector for
    part i' is the index of the block's point in group i'.
    """
    k = ctx.pattern.k
    detailed = []
    for part in range(1, k + 1):
        vector = tuple(dict(block)[part] for block in blocks)
        detailed.append(vector)
    classes = tuple(ctx.cell_vertices(part, j) for part, j in enumerate(detailed, start=1))
    return tuple(detailed), classes


def decode_codeword(ctx: BlowupContext, w: Codeword) -> FCopy:
    """The pattern copy named by codeword w = (b, c).

    Block i is the block of design i through point b_i of group i and
    point c_i of the cyclically next group; the copy's cell vectors are
    read off those blocks coordinatewise.
    """
    k = ctx.pattern.k
    for i, a in enumerate(ctx.pattern.parts):
        if not (1 <= w.b[i] <= a and 1 <= w.c[i] <= a):
            raise ValueError(f"codeword coordinate {i + 1} out of range for part size {a}")
    blocks = []
    for i in range(1, k + 1):
        succ = i % k + 1
        blocks.append(block_through(ctx.part_designs[i - 1], w.b[i - 1], i, w.c[i - 1], succ))
    detailed, classes = _copy_from_blocks(ctx, tuple(blocks))
    for i in range(1, k + 1):
        succ = i % k + 1
        if detailed[i - 1][i - 1] != w.b[i - 1] or detailed[succ - 1][i - 1] != w.c[i - 1]:
            raise RuntimeError(
                f"block rule and coordinate rules disagree at position {i} for codeword {w}"
            )
    return FCopy(classes=classes, detailed=detailed, codeword=w)


def blowup_decompose(pattern: PatternSignature) -> Decomposition:
    """Decompose the m-fold blow-up of the pattern into m**2 induced copies,
    one per codeword, in lexicographic codeword order."""
    ctx = make_context(pattern)
    copies = tuple(decode_codeword(ctx, w) for w in ctx.codewords())
    return Decomposition(host=ctx.host, pattern=pattern, copies=copies, induced=True)


def edge_to_copy(ctx: BlowupContext, u: int, v: int) -> tuple[Codeword, FCopy]:
    """The unique copy covering host edge (u, v), with its codeword.

    The endpoints' cells supply coordinates in two groups of every
    design, which pins down one block per design; the codeword is read
    back off the diagonal (b) and the cyclic superdiagonal (c).
    """
    part_u, ju = ctx.cell_of(u)
    part_v, jv = ctx.cell_of(v)
    if part_u == part_v:
        raise SamePart(f"vertices {u} and {v} both lie in part {part_u}")
    k = ctx.pattern.k
    blocks = []
    for l in range(1, k + 1):
        blocks.append(
            block_through(ctx.part_designs[l - 1], ju[l - 1], part_u, jv[l - 1], part_v)
        )
    detailed, classes = _copy_from_blocks(ctx, tuple(blocks))
    b = tuple(detailed[l - 1][l - 1] for l in range(1, k + 1))
    c = tuple(detailed[l % k][l - 1] for l in range(1, k + 1))
    w = Codeword(b=b, c=c)
    copy = FCopy(classes=classes, detailed=detailed, codeword=w)
    if u not in copy.classes[part_u - 1] or v not in copy.classes[part_v - 1]:
        raise RuntimeError(f"reconstructed copy for edge ({u}, {v}) does not contain it")
    return w, copy