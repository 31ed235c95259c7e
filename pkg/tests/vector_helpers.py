"""Vectorized per-graph quantities over all labeled graphs on n nodes.

These are test-side oracles: independent of the library's per-graph
code paths, built directly on numpy bit manipulation so exhaustive
n = 7 sweeps stay fast enough for the suite.
"""

import itertools

import numpy as np


def pair_bit(i, j):
    """Bit position of the 0-based pair (i, j), i < j, column-major."""
    return j * (j - 1) // 2 + i


def all_graph_bits(n):
    """Every labeled graph on n nodes as a uint64 bitmask array."""
    return np.arange(1 << (n * (n - 1) // 2), dtype=np.uint64)


def bit_matrix(masks, n):
    """(len(masks), P) 0/1 array of adjacency bits."""
    p = n * (n - 1) // 2
    masks = np.asarray(masks, dtype=np.uint64)
    if p == 0:
        return np.zeros((len(masks), 0), dtype=np.uint8)
    cols = [(masks >> np.uint64(b)) & np.uint64(1) for b in range(p)]
    return np.stack(cols, axis=1).astype(np.uint8)


def degree_rows(masks, n):
    """(len(masks), n) vertex degrees."""
    bits = bit_matrix(masks, n)
    deg = np.zeros((len(bits), n), dtype=np.int64)
    col = 0
    for j in range(1, n):
        for i in range(j):
            deg[:, i] += bits[:, col]
            deg[:, j] += bits[:, col]
            col += 1
    return deg


def sorted_degree_rows(masks, n):
    return np.sort(degree_rows(masks, n), axis=1)[:, ::-1]


def edge_counts(masks, n):
    return degree_rows(masks, n).sum(axis=1) // 2


def trace_rows(d_sorted):
    """Ferrers trace per row of a descending-sorted degree array."""
    n = d_sorted.shape[1]
    idx = np.arange(1, n + 1)
    return (d_sorted >= idx).sum(axis=1)


def split_rows_hs(d_sorted):
    """Degree-based split recognition: prefix degree sum at the trace
    equals f(f-1) plus the suffix sum."""
    rows, n = d_sorted.shape
    f = trace_rows(d_sorted)
    cum = np.concatenate([np.zeros((rows, 1), dtype=np.int64),
                          d_sorted.cumsum(axis=1)], axis=1)
    prefix = np.take_along_axis(cum, f[:, None], axis=1)[:, 0]
    total = cum[:, -1]
    return prefix == f * (f - 1) + (total - prefix)


def split_rows_bipartition(masks, n):
    """Structural split recognition: some vertex subset is a clique and
    its complement is independent.  Checked over all 2^n subsets with
    bitmask tests."""
    masks = np.asarray(masks, dtype=np.uint64)
    result = np.zeros(len(masks), dtype=bool)
    verts = list(range(n))
    for size in range(n + 1):
        for clique in itertools.combinations(verts, size):
            cs = set(clique)
            need = np.uint64(0)
            for i, j in itertools.combinations(sorted(clique), 2):
                need |= np.uint64(1) << np.uint64(pair_bit(i, j))
            forbid = np.uint64(0)
            rest = [v for v in verts if v not in cs]
            for i, j in itertools.combinations(rest, 2):
                forbid |= np.uint64(1) << np.uint64(pair_bit(i, j))
            result |= ((masks & need) == need) & ((masks & forbid) == np.uint64(0))
    return result


def conjugate_rows(d_sorted):
    """(rows, n) conjugate degrees of descending-sorted degree rows."""
    n = d_sorted.shape[1]
    return np.stack([(d_sorted >= i).sum(axis=1) for i in range(1, n + 1)],
                    axis=1)


def laplacian_prefix_rows(masks, n):
    """(len(masks), n) eigenvalue prefix sums via numpy's eigensolver.

    Independent oracle: does not touch the library's Jacobi code.
    """
    bits = bit_matrix(masks, n).astype(float)
    adj = np.zeros((len(bits), n, n))
    col = 0
    for j in range(1, n):
        for i in range(j):
            adj[:, i, j] = bits[:, col]
            adj[:, j, i] = bits[:, col]
            col += 1
    deg = adj.sum(axis=2)
    lap = -adj
    rows = np.arange(n)
    lap[:, rows, rows] = deg
    vals = np.linalg.eigvalsh(lap)[:, ::-1]
    return vals.cumsum(axis=1)
