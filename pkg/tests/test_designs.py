"""Latin square, MOLS, and transversal design tests.

Orthogonality is re-checked here with an independent set-based count
rather than the library's own validator, so the two implementations
vouch for each other.
"""

from __future__ import annotations

import json
import math

import numpy as np
import pytest

from induced_decomp import designs
from induced_decomp.designs import (
    CountExceedsBound,
    InsufficientSquares,
    LatinSquare,
    MolsFamily,
    SameGroup,
    TransversalDesign,
    UnsupportedOrder,
    block_through,
    cyclic_latin,
    macneish,
    mols,
    mols_prime_power,
    mols_product,
    td_from_json,
    td_from_mols,
    verify_td,
)


def orthogonal_by_pair_set(a: LatinSquare, b: LatinSquare) -> bool:
    """Independent check: superimposed symbol pairs must all differ."""
    pairs = set()
    for x in range(a.order):
        for y in range(a.order):
            pairs.add((int(a.grid[x, y]), int(b.grid[x, y])))
    return len(pairs) == a.order ** 2


def test_cyclic_latin_frozen():
    sq = cyclic_latin(5)
    assert sq.grid[0].tolist() == [1, 2, 3, 4, 5]
    assert sq.grid[1].tolist() == [2, 3, 4, 5, 1]
    assert sq.symbol(5, 5) == 4


def test_cyclic_latin_smallest_orders():
    assert cyclic_latin(1).grid.tolist() == [[1]]
    assert cyclic_latin(3).grid.tolist() == [[1, 2, 3], [2, 3, 1], [3, 1, 2]]


def test_latin_square_rejects_repeats():
    with pytest.raises(ValueError, match="row 1"):
        LatinSquare(order=2, grid=np.array([[1, 1], [2, 2]]))
    with pytest.raises(ValueError, match="column"):
        LatinSquare(order=2, grid=np.array([[1, 2], [1, 2]]))


def test_latin_square_grid_immutable():
    sq = cyclic_latin(3)
    with pytest.raises(ValueError):
        sq.grid[0, 0] = 2


def test_mols_prime_power_frozen():
    fam = mols_prime_power(3, 2)
    assert fam.squares[0].grid.tolist() == [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
    assert fam.squares[1].grid.tolist() == [[1, 2, 3], [3, 1, 2], [2, 3, 1]]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_mols_prime_power_full_family(q):
    fam = mols_prime_power(q, q - 1)
    assert len(fam) == q - 1
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            assert orthogonal_by_pair_set(fam.squares[i], fam.squares[j])


def test_mols_prime_power_count_limit():
    with pytest.raises(CountExceedsBound):
        mols_prime_power(4, 4)


def test_mols_family_validates_orthogonality():
    sq = cyclic_latin(3)
    with pytest.raises(ValueError, match="not orthogonal"):
        MolsFamily(order=3, squares=(sq, sq))


@pytest.mark.parametrize("n,expected", [(2, 1), (6, 1), (12, 2), (10, 1), (9, 8), (36, 3)])
def test_macneish_values(n, expected):
    assert macneish(n) == expected


def test_macneish_order_one():
    assert macneish(1) == math.inf


def test_mols_product_order_12():
    fam = mols(12, 2)
    assert fam.order == 12 and len(fam) == 2
    assert orthogonal_by_pair_set(fam.squares[0], fam.squares[1])


def test_mols_product_coprime_orders():
    a = mols_prime_power(3, 2)
    b = mols_prime_power(7, 2)
    fam = mols_product(a, b, 2)
    assert fam.order == 21 and len(fam) == 2
    assert orthogonal_by_pair_set(fam.squares[0], fam.squares[1])
    assert len(mols_product(a, b, 0)) == 0


def test_mols_product_count_limit():
    a = mols_prime_power(4, 3)
    b = mols_prime_power(3, 2)
    with pytest.raises(CountExceedsBound):
        mols_product(a, b, 3)


def test_mols_refuses_above_bound():
    with pytest.raises(UnsupportedOrder, match="bound 1"):
        mols(6, 2)
    with pytest.raises(UnsupportedOrder):
        mols(10, 2)


def test_mols_order_one_any_count():
    fam = mols(1, 5)
    assert len(fam) == 5
    assert fam.squares[0].grid.tolist() == [[1]]


def test_mols_count_zero():
    assert len(mols(7, 0)) == 0


def test_td_from_mols_frozen():
    td = td_from_mols(mols(3, 1), 3)
    assert td.blocksize == 3 and td.groupsize == 3
    assert len(td.blocks) == 9
    assert td.blocks[0] == ((1, 1), (2, 1), (3, 1))
    assert td.blocks[1] == ((1, 1), (2, 2), (3, 2))


def test_td_k2_is_all_pairs():
    td = td_from_mols(mols(4, 0), 2)
    assert len(td.blocks) == 16
    assert verify_td(td) == []


def test_td_order_one():
    td = td_from_mols(mols(1, 0), 2)
    assert td.blocks == (((1, 1), (2, 1)),)
    assert verify_td(td) == []


def test_td_insufficient_squares():
    with pytest.raises(InsufficientSquares):
        td_from_mols(mols(5, 1), 4)


@pytest.mark.parametrize("k,n", [(3, 2), (3, 3), (4, 3), (5, 4), (3, 12)])
def test_td_verifies(k, n):
    td = td_from_mols(mols(n, k - 2), k)
    assert verify_td(td) == []
    assert len(td.blocks) == n * n


def test_verify_td_deleted_block():
    """Removing one block of TD(3,2) uncovers exactly its three pairs."""
    td = td_from_mols(mols(2, 1), 3)
    damaged = TransversalDesign(
        blocksize=3, groupsize=2, blocks=td.blocks[1:]
    )
    violations = verify_td(damaged)
    assert len(violations) == 3
    assert all("covered 0 times" in v for v in violations)


def test_verify_td_duplicated_block():
    td = td_from_mols(mols(2, 1), 3)
    damaged = TransversalDesign(
        blocksize=3, groupsize=2, blocks=td.blocks + (td.blocks[0],)
    )
    violations = verify_td(damaged)
    assert len(violations) == 3
    assert all("covered 2 times" in v for v in violations)


def test_verify_td_non_transversal_block():
    bad = TransversalDesign(
        blocksize=3,
        groupsize=2,
        blocks=(((1, 1), (1, 2), (2, 1)),),
    )
    violations = verify_td(bad)
    assert any("not a transversal" in v for v in violations)
    assert any("within-group" in v for v in violations)


def test_block_through_frozen():
    td = td_from_mols(mols(3, 1), 3)
    assert block_through(td, 1, 1, 2, 2) == ((1, 1), (2, 2), (3, 2))
    # order of the two query points does not matter
    assert block_through(td, 2, 2, 1, 1) == ((1, 1), (2, 2), (3, 2))


def test_block_through_cross_pair_design():
    # with k = 2 the blocks are exactly the cross pairs
    td = td_from_mols(mols(3, 0), 2)
    assert block_through(td, 2, 1, 3, 2) == ((1, 2), (2, 3))


def test_block_through_same_group():
    td = td_from_mols(mols(3, 1), 3)
    with pytest.raises(SameGroup):
        block_through(td, 1, 1, 2, 1)


def test_block_through_missing_pair():
    td = td_from_mols(mols(2, 1), 3)
    damaged = TransversalDesign(blocksize=3, groupsize=2, blocks=td.blocks[1:])
    removed = td.blocks[0]
    with pytest.raises(LookupError):
        block_through(damaged, removed[0][1], 1, removed[1][1], 2)


def test_td_json_round_trip():
    td = td_from_mols(mols(4, 2), 4)
    data = json.loads(json.dumps(td.to_json_dict()))
    back = td_from_json(data)
    assert back.blocks == td.blocks
    assert back.blocksize == td.blocksize and back.groupsize == td.groupsize


def test_td_json_point_format():
    td = td_from_mols(mols(2, 0), 2)
    data = td.to_json_dict()
    assert data["groups"][0] == ["g1:1", "g1:2"]
    assert data["blocks"][0] == ["g1:1", "g2:1"]


def test_construction_deterministic():
    a = json.dumps(td_from_mols(mols(9, 3), 5).to_json_dict(), sort_keys=True)
    b = json.dumps(td_from_mols(mols(9, 3), 5).to_json_dict(), sort_keys=True)
    assert a == b


def test_latin_square_json_round_trip():
    sq = cyclic_latin(4)
    back = designs.latin_square_from_json(json.loads(json.dumps(sq.to_json_dict())))
    assert (back.grid == sq.grid).all()
