import pytest

from pathcover import (
    StrongWitness,
    build_graph,
    format_witness,
    parse_witness,
    strong_feasible,
    verify_strong_witness,
    verify_weak_cover,
    weak_cover_set,
)
from conftest import family


def edges_of(G, mask):
    return {G.edges[i] for i in range(G.m) if mask >> i & 1}


def test_weak_cycle5_excludes_far_edge():
    G = family("cycle", 5)
    covered = edges_of(G, weak_cover_set(G, 0, 2))
    assert covered == {(0, 1), (0, 4), (1, 2), (3, 4)}


def test_weak_star_center_k1():
    G = family("complete_bipartite", 1, 4)
    assert weak_cover_set(G, 0, 1) == G.full_edge_mask()


def test_weak_path10_first_two_edges():
    G = family("path", 10)
    assert edges_of(G, weak_cover_set(G, 0, 2)) == {(0, 1), (1, 2)}


def test_verify_weak_cover_examples():
    assert not verify_weak_cover(family("cycle", 5), [0], 2)
    assert verify_weak_cover(family("complete_bipartite", 2, 3), [0], 2)
    G = family("generalized_petersen", 5, 2)
    assert verify_weak_cover(G, range(G.n), 1)


def test_strong_cycle5_single_source_fails():
    assert strong_feasible(family("cycle", 5), [0], 2) is None


def test_strong_cycle5_two_sources():
    G = family("cycle", 5)
    witness = strong_feasible(G, [0, 2], 2)
    assert witness is not None
    assert verify_strong_witness(G, [0, 2], 2, witness)
    assert witness.covered == G.full_edge_mask()


def test_strong_k23_single_source_fails():
    # forced edges from u0 plus one path to the far side cover 4 of 6 edges
    assert strong_feasible(family("complete_bipartite", 2, 3), [0], 2) is None


def test_witness_round_trip():
    G = family("cycle", 5)
    witness = strong_feasible(G, [0, 2], 2)
    assert parse_witness(G, format_witness(witness)) == witness


def test_witness_detour_rejected():
    G = family("cycle", 5)
    # (0, 1, 2, 3) has length 3 but d(0, 3) = 2
    bad = StrongWitness(
        (((0, 3), (0, 1, 2, 3)),),
        G.edge_mask([(0, 1), (1, 2), (2, 3)]),
    )
    assert not verify_strong_witness(G, [0], 2, bad)


def test_witness_missing_edge_rejected():
    # every assignment is a valid geodesic but the union misses edge (2, 3)
    G = family("cycle", 5)
    assignments = (
        ((0, 1), (0, 1)),
        ((0, 2), (0, 1, 2)),
        ((0, 3), (0, 4, 3)),
        ((0, 4), (0, 4)),
    )
    covered = G.edge_mask([(0, 1), (1, 2), (0, 4), (3, 4)])
    partial = StrongWitness(assignments, covered)
    assert not verify_strong_witness(G, [0], 2, partial)


def test_witness_inconsistent_covered_mask_rejected():
    G = family("cycle", 5)
    witness = strong_feasible(G, [0, 2], 2)
    tampered = StrongWitness(witness.assignments, witness.covered >> 1)
    assert not verify_strong_witness(G, [0, 2], 2, tampered)


def test_witness_source_outside_set_rejected():
    G = family("cycle", 5)
    witness = strong_feasible(G, [0, 2], 2)
    assert not verify_strong_witness(G, [0], 2, witness)


def test_weak_monotone_in_k():
    G = family("generalized_petersen", 5, 2)
    for u in range(G.n):
        prev = 0
        for k in range(1, 4):
            mask = weak_cover_set(G, u, k)
            assert mask & prev == prev
            prev = mask


def test_strong_single_source_within_weak():
    G = family("butterfly", 2)
    full = strong_feasible(G, range(G.n), 2)
    for (u, _), path in full.assignments:
        mask = G.edge_mask(zip(path, path[1:]))
        assert mask & weak_cover_set(G, u, 2) == mask


def test_strong_full_vertex_set_always_feasible():
    for G in (family("cycle", 5), family("crown", 4), family("benes", 1)):
        for k in (1, 2, 3):
            assert strong_feasible(G, range(G.n), k) is not None


def test_witness_deterministic():
    G = family("butterfly", 2)
    a = strong_feasible(G, [0, 2, 8], 2)
    b = strong_feasible(G, [0, 2, 8], 2)
    assert a == b


def test_empty_graph_trivially_covered():
    G = build_graph(1, [])
    witness = strong_feasible(G, [], 2)
    assert witness is not None and witness.assignments == ()
