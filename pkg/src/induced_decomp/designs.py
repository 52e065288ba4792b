"""Latin squares, mutually orthogonal families, and transversal designs.

The constructions here are classical.  For a prime power q the squares
L_lam[x][y] = lam*x + y over GF(q), lam ranging over the nonzero field
elements, form q-1 mutually orthogonal Latin squares (MOLS).  Products
of MOLS families give MOLS of composite orders: min over the prime-power
factors p_i**e_i of n of (p_i**e_i - 1) squares are always reachable
this way (the MacNeish bound).  A family of k-2 MOLS of order n is
equivalent to a transversal design TD(k, n): k groups of n points and
n**2 blocks, each block meeting every group exactly once, such that
every pair of points from distinct groups lies in exactly one block.

Orders beyond the MacNeish bound (where deeper direct constructions
would be needed) are refused rather than approximated.

All indices are 1-based: rows, columns and symbols of a Latin square
run 1..n, groups of a TD run 1..k and points within a group 1..n.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .gf import NotPrimePower, factorize, galois_field

__all__ = [
    "CountExceedsBound",
    "InsufficientSquares",
    "LatinSquare",
    "MolsFamily",
    "NotPrimePower",
    "SameGroup",
    "TransversalDesign",
    "UnsupportedOrder",
    "block_through",
    "cyclic_latin",
    "latin_square_from_json",
    "macneish",
    "mols",
    "mols_family_from_json",
    "mols_prime_power",
    "mols_product",
    "td_from_json",
    "td_from_mols",
    "verify_td",
]


class CountExceedsBound(ValueError):
    """More squares requested than the construction can deliver."""


class UnsupportedOrder(ValueError):
    """Requested MOLS count exceeds the MacNeish bound for this order."""


class InsufficientSquares(ValueError):
    """A TD(k, n) needs k-2 squares and the family has fewer."""


class SameGroup(ValueError):
    """block_through needs two points from distinct groups."""


@dataclass(frozen=True, eq=False)
class LatinSquare:
    """An order-n grid where every row and column is a permutation of 1..n."""

    order: int
    grid: np.ndarray

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ValueError(f"order must be positive, got {n}")
        grid = np.asarray(self.grid, dtype=np.int64)
        if grid.shape != (n, n):
            raise ValueError(f"grid shape {grid.shape} does not match order {n}")
        expected = np.arange(1, n + 1)
        for axis, name in ((1, "row"), (0, "column")):
            sorted_lines = np.sort(grid, axis=axis)
            ok = (sorted_lines == expected).all(axis=axis) if axis == 1 else (
                sorted_lines == expected[:, None]
            ).all(axis=axis)
            if not ok.all():
                bad = int(np.flatnonzero(~ok)[0]) + 1
                raise ValueError(f"{name} {bad} is not a permutation of 1..{n}")
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)

    def symbol(self, x: int, y: int) -> int:
        """Symbol at row x, column y (1-based)."""
        return int(self.grid[x - 1, y - 1])

    def to_json_dict(self) -> dict:
        return {"order": self.order, "grid": self.grid.tolist()}


def latin_square_from_json(data: dict) -> LatinSquare:
    return LatinSquare(order=int(data["order"]), grid=np.array(data["grid"]))


@dataclass(frozen=True, eq=False)
class MolsFamily:
    """Latin squares of one order, pairwise orthogonal.

    Two squares are orthogonal when the n**2 pairs (first symbol, second
    symbol) over all positions are all distinct.  The family may be
    empty; any single square is trivially a family.
    """

    order: int
    squares: tuple[LatinSquare, ...]

    def __post_init__(self):
        object.__setattr__(self, "squares", tuple(self.squares))
        for i, sq in enumerate(self.squares):
            if sq.order != self.order:
                raise ValueError(f"square {i} has order {sq.order}, family has {self.order}")
        n = self.order
        for i in range(len(self.squares)):
            for j in range(i + 1, len(self.squares)):
                joint = (self.squares[i].grid - 1) * n + (self.squares[j].grid - 1)
                if np.unique(joint).size != n * n:
                    raise ValueError(f"squares {i} and {j} are not orthogonal")

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self):
        return iter(self.squares)

    def __getitem__(self, i: int) -> LatinSquare:
        return self.squares[i]

    def to_json_dict(self) -> dict:
        return {"order": self.order, "squares": [sq.to_json_dict() for sq in self.squares]}


def mols_family_from_json(data: dict) -> MolsFamily:
    return MolsFamily(
        order=int(data["order"]),
        squares=tuple(latin_square_from_json(d) for d in data["squares"]),
    )


def cyclic_latin(n: int) -> LatinSquare:
    """The addition table of Z_n: entry at (x, y) is ((x + y - 2) mod n) + 1."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    idx = np.arange(n)
    return LatinSquare(order=n, grid=(np.add.outer(idx, idx) % n) + 1)


def mols_prime_power(q: int, count: int) -> MolsFamily:
    """count MOLS of prime-power order q via linear maps over GF(q).

    Square number t (t = 1..count) has entry lam_t*x + y at position
    (x, y), where lam_t is the t-th nonzero field element and rows,
    columns and symbols are identified with field elements through the
    integer encoding (value v <-> symbol v + 1).  Requires count <= q-1.
    """
    field = galois_field(q)  # raises NotPrimePower for bad q
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    if count > q - 1:
        raise CountExceedsBound(f"at most {q - 1} MOLS of order {q} available, requested {count}")
    squares = []
    for lam in range(1, count + 1):
        grid = np.empty((q, q), dtype=np.int64)
        for x in range(q):
            lam_x = field.mul(lam, x)
            for y in range(q):
                grid[x, y] = field.add(lam_x, y) + 1
        squares.append(LatinSquare(order=q, grid=grid))
    return MolsFamily(order=q, squares=tuple(squares))


def mols_product(a: MolsFamily, b: MolsFamily, count: int) -> MolsFamily:
    """Pair squares of two families into count MOLS of order a.order * b.order.

    Positions and symbols of the product square are pairs flattened as
    (u - 1) * b.order + v, so the i-th product square has entry
    (A_i[xa][ya] - 1) * b.order + B_i[xb][yb] at the position encoding
    ((xa, xb), (ya, yb)).  Orthogonality is inherited coordinatewise.
    """
    if count > min(len(a), len(b)):
        raise CountExceedsBound(
            f"product of families with {len(a)} and {len(b)} squares yields at most "
            f"{min(len(a), len(b))}, requested {count}"
        )
    nb = b.order
    ones = np.ones((nb, nb), dtype=np.int64)
    squares = []
    for i in range(count):
        grid = np.kron(a.squares[i].grid - 1, ones) * nb + np.tile(b.squares[i].grid, (a.order, a.order))
        squares.append(LatinSquare(order=a.order * b.order, grid=grid))
    return MolsFamily(order=a.order * b.order, squares=tuple(squares))


def macneish(n: int) -> int | float:
    """min over prime-power factors p**e of n of (p**e - 1); infinity for n = 1."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return math.inf
    return min(p**e - 1 for p, e in factorize(n))


def mols(n: int, count: int) -> MolsFamily:
    """count MOLS of order n, refusing counts above the MacNeish bound.

    Prime-power orders use the field construction directly; composite
    orders take products over the prime-power factors in ascending prime
    order.  Order 1 admits any count (the trivial square).
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    bound = macneish(n)
    if count > bound:
        raise UnsupportedOrder(
            f"{count} MOLS of order {n} exceeds the reachable bound {bound}"
        )
    if n == 1:
        one = LatinSquare(order=1, grid=np.array([[1]]))
        return MolsFamily(order=1, squares=(one,) * count)
    if count == 0:
        return MolsFamily(order=n, squares=())
    factors = factorize(n)
    family = mols_prime_power(factors[0][0] ** factors[0][1], count)
    for p, e in factors[1:]:
        family = mols_product(family, mols_prime_power(p**e, count), count)
    return family


@dataclass(frozen=True, eq=False)
class TransversalDesign:
    """k groups of n points with blocks of size k, one point per group.

    Points are (group, index) pairs, 1-based on both coordinates; the
    groups are implicit (group g is {(g, 1), ..., (g, n)}).  A valid
    design covers every pair of points from distinct groups in exactly
    one block; the constructor only checks shape so that damaged designs
    can be represented and then diagnosed by verify_td.
    """

    blocksize: int
    groupsize: int
    blocks: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        if self.blocksize < 2:
            raise ValueError(f"blocksize must be at least 2, got {self.blocksize}")
        if self.groupsize < 1:
            raise ValueError(f"groupsize must be positive, got {self.groupsize}")
        blocks = tuple(tuple(sorted(block)) for block in self.blocks)
        for block in blocks:
            for g, x in block:
                if not (1 <= g <= self.blocksize and 1 <= x <= self.groupsize):
                    raise ValueError(f"point ({g}, {x}) out of range")
        object.__setattr__(self, "blocks", blocks)

    @functools.cached_property
    def _pair_to_block(self) -> dict[tuple[tuple[int, int], tuple[int, int]], int]:
        index: dict[tuple[tuple[int, int], tuple[int, int]], int] = {}
        for b, block in enumerate(self.blocks):
            for i in range(len(block)):
                for j in range(i + 1, len(block)):
                    index.setdefault((block[i], block[j]), b)
        return index

    def groups(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return tuple(
            tuple((g, x) for x in range(1, self.groupsize + 1))
            for g in range(1, self.blocksize + 1)
        )

    def to_json_dict(self) -> dict:
        def pid(point):
            return f"g{point[0]}:{point[1]}"

        return {
            "k": self.blocksize,
            "n": self.groupsize,
            "groups": [[pid(pt) for pt in grp] for grp in self.groups()],
            "blocks": [[pid(pt) for pt in block] for block in self.blocks],
        }


def _parse_point(text: str) -> tuple[int, int]:
    g, x = text.removeprefix("g").split(":")
    return int(g), int(x)


def td_from_json(data: dict) -> TransversalDesign:
    return TransversalDesign(
        blocksize=int(data["k"]),
        groupsize=int(data["n"]),
        blocks=tuple(tuple(_parse_point(p) for p in block) for block in data["blocks"]),
    )


def td_from_mols(family: MolsFamily, k: int) -> TransversalDesign:
    """TD(k, n) from k-2 MOLS of order n.

    Block (x, y) is {(1, x), (2, y), (3, L1[x][y]), ..., (k, L_{k-2}[x][y])};
    blocks are emitted in lexicographic (x, y) order.
    """
    if k < 2:
        raise ValueError(f"blocksize must be at least 2, got {k}")
    if len(family) < k - 2:
        raise InsufficientSquares(
            f"TD({k}, {family.order}) needs {k - 2} squares, family has {len(family)}"
        )
    n = family.order
    used = family.squares[: k - 2]
    blocks = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            block = [(1, x), (2, y)]
            block.extend((g + 3, sq.symbol(x, y)) for g, sq in enumerate(used))
            blocks.append(tuple(block))
    return TransversalDesign(blocksize=k, groupsize=n, blocks=tuple(blocks))


def verify_td(td: TransversalDesign) -> list[str]:
    """Exhaustively check the design axioms; return a list of violations.

    Checks block transversality (size k, one point per group) and that
    every pair of points from distinct groups is covered exactly once
    while no within-group pair is covered at all.  An empty list means
    the design is valid.
    """
    violations = []
    k, n = td.blocksize, td.groupsize
    for b, block in enumerate(td.blocks):
        groups_hit = [g for g, _ in block]
        if len(block) != k or sorted(groups_hit) != list(range(1, k + 1)):
            violations.append(f"block {b} is not a transversal: {block}")
    counts: dict[tuple[tuple[int, int], tuple[int, int]], int] = {}
    for block in td.blocks:
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                key = (block[i], block[j])
                counts[key] = counts.get(key, 0) + 1
    for (p1, p2), c in sorted(counts.items()):
        if p1[0] == p2[0]:
            violations.append(f"within-group pair g{p1[0]}:{p1[1]}/g{p2[0]}:{p2[1]} covered {c} times")
    for g1 in range(1, k + 1):
        for g2 in range(g1 + 1, k + 1):
            for x1 in range(1, n + 1):
                for x2 in range(1, n + 1):
                    c = counts.get(((g1, x1), (g2, x2)), 0)
                    if c != 1:
                        violations.append(
                            f"pair g{g1}:{x1}/g{g2}:{x2} covered {c} times"
                        )
    return violations


def block_through(
    td: TransversalDesign, index_a: int, group_a: int, index_b: int, group_b: int
) -> tuple[tuple[int, int], ...]:
    """The unique block containing (group_a, index_a) and (group_b, index_b)."""
    if group_a == group_b:
        raise SameGroup(f"both points lie in group {group_a}")
    key = tuple(sorted(((group_a, index_a), (group_b, index_b))))
    try:
        return td.blocks[td._pair_to_block[key]]
    except KeyError:
        raise LookupError(f"no block covers g{group_a}:{index_a} and g{group_b}:{index_b}") from None
