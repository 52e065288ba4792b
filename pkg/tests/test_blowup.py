"""Blown-up pattern decompositions and the codeword coordinate system."""

from __future__ import annotations

import itertools
import json

import pytest

from induced_decomp import oracle
from induced_decomp.blowup import (
    Codeword,
    MultipartiteHost,
    PatternSignature,
    SamePart,
    UnsupportedPattern,
    blowup_decompose,
    decode_codeword,
    decomposition_from_json,
    edge_to_copy,
    make_context,
)


def test_pattern_signature_from_text():
    assert PatternSignature.from_text("1,2").parts == (1, 2)
    assert PatternSignature.from_text(" 2, 3 ,6 ").parts == (2, 3, 6)


def test_pattern_signature_properties():
    pat = PatternSignature((2, 3, 6))
    assert pat.k == 3
    assert pat.m == 36
    assert pat.order == 11
    assert pat.edge_count == 2 * 3 + 2 * 6 + 3 * 6


@pytest.mark.parametrize("parts", [(), (3,), (0, 2), (-1, 1)])
def test_pattern_signature_rejects(parts):
    with pytest.raises(ValueError):
        PatternSignature(parts)


def test_host_geometry():
    host = MultipartiteHost((2, 4), isolated=1)
    assert host.order == 7
    assert host.offsets == (0, 2, 6)
    assert host.part_of(1) == 1 and host.part_of(3) == 2
    assert host.part_of(7) is None
    assert host.edge_count == 8
    assert list(host.edges())[:3] == [(1, 3), (1, 4), (1, 5)]


def test_host_non_edges_must_cross_parts():
    with pytest.raises(ValueError):
        MultipartiteHost((2, 2), non_edges=((1, 2),))


def test_host_non_edges_normalized():
    host = MultipartiteHost((2, 2), non_edges=((3, 1),))
    assert host.non_edges == ((1, 3),)
    assert (1, 3) not in list(host.edges())
    assert host.edge_count == 3


def test_make_context_small():
    ctx = make_context(PatternSignature((1, 2)))
    assert ctx.host.parts == (2, 4)
    # part 1 splits into cells of size 1, part 2 into cells of size 2
    assert ctx.cell_vertices(1, (1, 1)) == (1,)
    assert ctx.cell_vertices(1, (1, 2)) == (2,)
    assert ctx.cell_vertices(2, (1, 1)) == (3, 4)
    assert ctx.cell_vertices(2, (1, 2)) == (5, 6)
    assert ctx.cell_of(1) == (1, (1, 1))
    assert ctx.cell_of(6) == (2, (1, 2))


def test_cell_rank_mixed_radix():
    ctx = make_context(PatternSignature((2, 3)))
    # 0-based ranks over cell indices (j1, j2), j1 in 1..2, j2 in 1..3,
    # most significant digit first
    ranks = [ctx.cell_rank((j1, j2)) for j1 in (1, 2) for j2 in (1, 2, 3)]
    assert ranks == [0, 1, 2, 3, 4, 5]


def test_codewords_enumeration():
    ctx = make_context(PatternSignature((1, 2)))
    cws = list(ctx.codewords())
    assert len(cws) == 4
    assert cws[0] == Codeword(b=(1, 1), c=(1, 1))
    assert cws[-1] == Codeword(b=(1, 2), c=(1, 2))


def test_decode_frozen_example():
    """The four copies of the doubled (1,2) pattern, spelled out."""
    ctx = make_context(PatternSignature((1, 2)))
    table = {
        Codeword((1, 1), (1, 1)): ((1,), (3, 4)),
        Codeword((1, 1), (1, 2)): ((2,), (3, 4)),
        Codeword((1, 2), (1, 1)): ((1,), (5, 6)),
        Codeword((1, 2), (1, 2)): ((2,), (5, 6)),
    }
    for cw, classes in table.items():
        assert decode_codeword(ctx, cw).classes == classes


def test_decode_rejects_out_of_range():
    ctx = make_context(PatternSignature((1, 2)))
    with pytest.raises(ValueError):
        decode_codeword(ctx, Codeword((1, 3), (1, 1)))


@pytest.mark.parametrize("parts", [(1, 2), (2, 2), (1, 1, 2), (2, 2, 2)])
def test_decode_fixes_diagonal_and_successor_coordinates(parts):
    # coordinate i of cell vector i equals b_i, and coordinate i of the
    # next vector (wrapping around) equals c_i, for every codeword
    ctx = make_context(PatternSignature(parts))
    k = len(parts)
    for w in ctx.codewords():
        fc = decode_codeword(ctx, w)
        for i in range(k):
            assert fc.detailed[i][i] == w.b[i]
            assert fc.detailed[(i + 1) % k][i] == w.c[i]


@pytest.mark.parametrize("parts", [
    (1, 1), (1, 2), (2, 2), (3, 3),
    (1, 1, 1), (1, 2, 3), (2, 2, 2), (2, 3, 3),
])
def test_blowup_counts_and_oracle_agreement(parts):
    pat = PatternSignature(parts)
    d = blowup_decompose(pat)
    assert d.induced is True
    assert d.host.parts == tuple(pat.m * a for a in parts)
    assert len(d.copies) == pat.m ** 2
    g = oracle.multipartite_graph(d.host)
    assert oracle.verify_decomposition(
        g, pat, [c.classes for c in d.copies], induced=True
    ) == []


@pytest.mark.parametrize("parts", [(1, 2), (2, 2), (1, 1, 2)])
def test_edge_to_copy_round_trip(parts):
    pat = PatternSignature(parts)
    ctx = make_context(pat)
    d = blowup_decompose(pat)
    by_codeword = {c.codeword: c.classes for c in d.copies}
    hit = set()
    for u, v in oracle.multipartite_graph(d.host).edges():
        cw, copy = edge_to_copy(ctx, u, v)
        assert copy.classes == by_codeword[cw]
        flat = [x for cl in copy.classes for x in cl]
        assert u in flat and v in flat
        hit.add(cw)
    assert len(hit) == pat.m ** 2


def test_edge_to_copy_same_part():
    ctx = make_context(PatternSignature((1, 2)))
    with pytest.raises(SamePart):
        edge_to_copy(ctx, 3, 4)


def test_unsupported_pattern():
    with pytest.raises(UnsupportedPattern) as info:
        make_context(PatternSignature((6, 6, 6, 6)))
    assert info.value.failing_parts == (1, 2, 3, 4)


def test_large_pattern_needing_field_mols():
    # four parts force TD(4, a_i), so sizes must admit 2 MOLS
    pat = PatternSignature((1, 3, 4, 5))
    d = blowup_decompose(pat)
    assert len(d.copies) == 60 ** 2


def test_decomposition_json_round_trip():
    d = blowup_decompose(PatternSignature((1, 2)))
    data = json.loads(json.dumps(d.to_json_dict(), sort_keys=True))
    back = decomposition_from_json(data)
    assert back.pattern == d.pattern
    assert back.induced is True
    assert back.host.parts == d.host.parts
    assert [c.classes for c in back.copies] == [c.classes for c in d.copies]


def test_decomposition_json_shape():
    d = blowup_decompose(PatternSignature((1, 2)))
    data = d.to_json_dict()
    assert data["host"] == {"parts": [2, 4]}
    assert data["pattern"] == [1, 2]
    assert data["induced"] is True
    first = data["copies"][0]
    assert first["codeword"] == {"b": [1, 1], "c": [1, 1]}
    assert first["classes"] == [[1], [3, 4]]


def test_copies_are_lexicographic_in_codeword():
    d = blowup_decompose(PatternSignature((2, 2)))
    cws = [c.codeword for c in d.copies]
    assert cws == sorted(cws)
    assert len(set(cws)) == len(cws)
