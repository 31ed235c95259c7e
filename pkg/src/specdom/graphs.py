"""Simple undirected graphs on 1-based nodes with a packed edge bitset.

Edges live in the strict upper triangle, stored column-major: the bit for
the 0-based pair (i, j) with i < j sits at position j*(j-1)//2 + i.  This
is exactly the bit order of the graph6 format, so encoding and decoding
are straight bit runs.  Node names are 1-based everywhere in the API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .partitions import DegreeSequence


class GraphInputError(ValueError):
    """Malformed graph input (edge lists, pair files)."""


class Graph6Error(ValueError):
    """Malformed graph6 record; the message names the byte at fault."""


def _bit_index(i: int, j: int) -> int:
    """Bit position of 0-based pair (i, j), i < j."""
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def _bit_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """0-based (i, j) pair for each bit position, column-major."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


@dataclass(frozen=True)
class Graph:
    """Immutable graph: node count ``n`` and packed upper-triangle ``bits``."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one node, got n={self.n}")
        limit = 1 << (self.n * (self.n - 1) // 2)
        if self.bits < 0 or self.bits >= limit:
            raise ValueError(f"edge bits out of range for n={self.n}")

    @property
    def m(self) -> int:
        """Number of edges."""
        return self.bits.bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        i, j = min(u, v) - 1, max(u, v) - 1
        return (self.bits >> _bit_index(i, j)) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Sorted 1-based edge list."""
        pairs = _bit_pairs(self.n)
        bits = self.bits
        out = []
        while bits:
            low = bits & -bits
            p = low.bit_length() - 1
            i, j = pairs[p]
            out.append((i + 1, j + 1))
            bits ^= low
        out.sort()
        return out

    def degrees(self) -> tuple[int, ...]:
        """Degree of node u at index u-1."""
        degs = [0] * self.n
        pairs = _bit_pairs(self.n)
        bits = self.bits
        while bits:
            low = bits & -bits
            p = low.bit_length() - 1
            i, j = pairs[p]
            degs[i] += 1
            degs[j] += 1
            bits ^= low
        return tuple(degs)

    def degree_sequence(self) -> DegreeSequence:
        """Degrees sorted into nonincreasing order."""
        return DegreeSequence(self.degrees(), self.n)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Graph on nodes 1..n from unordered pairs; duplicates collapse.

    Self-loops and out-of-range node names are rejected with the offending
    pair in the message.
    """
    if n < 1:
        raise GraphInputError(f"graph needs at least one node, got n={n}")
    bits = 0
    for pair in pairs:
        u, v = pair
        if u == v:
            raise GraphInputError(f"self-loop ({u}, {v}) rejected")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphInputError(f"node out of range in pair ({u}, {v}) for n={n}")
        i, j = min(u, v) - 1, max(u, v) - 1
        bits |= 1 << _bit_index(i, j)
    return Graph(n, bits)


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got n={n}")
    return from_edge_list(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got n={n}")
    return Graph(n, (1 << (n * (n - 1) // 2)) - 1)


def complete_plus_isolated(c: int, n: int) -> Graph:
    """K_c together with n - c isolated nodes (c = 0 or 1 gives edgeless)."""
    if not 0 <= c <= n:
        raise ValueError(f"clique size {c} outside [0, {n}]")
    if n < 1:
        raise ValueError(f"graph needs at least one node, got n={n}")
    bits = 0
    for j in range(1, c):
        for i in range(j):
            bits |= 1 << _bit_index(i, j)
    return Graph(n, bits)


def complement(g: Graph) -> Graph:
    """Edge-complement on the same nodes."""
    full = (1 << (g.n * (g.n - 1) // 2)) - 1
    return Graph(g.n, g.bits ^ full)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union; component nodes are relabelled consecutively."""
    parts = list(graphs)
    if not parts:
        raise ValueError("disjoint union needs at least one graph")
    n = sum(g.n for g in parts)
    bits = 0
    offset = 0
    for g in parts:
        sub = g.bits
        pairs = _bit_pairs(g.n)
        while sub:
            low = sub & -sub
            p = low.bit_length() - 1
            i, j = pairs[p]
            bits |= 1 << _bit_index(i + offset, j + offset)
            sub ^= low
        offset += g.n
    return Graph(n, bits)


# graph6 codec (format of McKay's nauty tools), bytes 63..126 only.

_G6_PREFIX = ">>graph6<<"


def _g6_size(s: str) -> tuple[int, int]:
    """Node count and header length of a graph6 record."""
    c0 = ord(s[0]) - 63
    if c0 < 63:
        return c0, 1
    if len(s) >= 2 and s[1] == chr(126):
        if len(s) < 8:
            raise Graph6Error("byte 1: truncated 8-byte size header")
        n = 0
        for t in range(2, 8):
            n = (n << 6) | (ord(s[t]) - 63)
        return n, 8
    if len(s) < 4:
        raise Graph6Error("byte 0: truncated 4-byte size header")
    n = 0
    for t in range(1, 4):
        n = (n << 6) | (ord(s[t]) - 63)
    return n, 4


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 record; errors name the byte offset at fault."""
    s = text.rstrip("\n")
    if s.startswith(_G6_PREFIX):
        s = s[len(_G6_PREFIX):]
    if not s:
        raise Graph6Error("byte 0: empty record")
    for off, ch in enumerate(s):
        code = ord(ch)
        if code < 63 or code > 126:
            raise Graph6Error(f"byte {off}: character {ch!r} outside graph6 range 63..126")
    n, header_len = _g6_size(s)
    if n == 0:
        raise Graph6Error("byte 0: node count 0 unsupported (graphs need a node)")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = len(s) - header_len
    if body != expected:
        raise Graph6Error(
            f"byte {header_len}: body holds {body} characters, n={n} needs {expected}"
        )
    bits = 0
    for ci in range(expected):
        val = ord(s[header_len + ci]) - 63
        base = 6 * ci
        for t in range(6):
            if not (val >> (5 - t)) & 1:
                continue
            p = base + t
            if p >= nbits:
                raise Graph6Error(f"byte {header_len + ci}: nonzero padding bit")
            bits |= 1 << p
    return Graph(n, bits)


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 record for a graph."""
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = chr(126) + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        header = chr(126) * 2 + "".join(
            chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0)
        )
    nbits = n * (n - 1) // 2
    bits = g.bits
    chars = []
    for base in range(0, nbits, 6):
        val = 0
        for t in range(6):
            p = base + t
            val <<= 1
            if p < nbits and (bits >> p) & 1:
                val |= 1
        chars.append(chr(val + 63))
    return header + "".join(chars)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream of graph6 lines, skipping blank ones."""
    for line in lines:
        s = line.strip()
        if s:
            yield decode_graph6(s)


# Plain edge-list text format: a header line "n m" and then m lines "i j".


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" edge-list format; errors carry 1-based line numbers."""
    lines = text.splitlines()
    ln = 0
    header = None
    for ln, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if stripped:
            header = (ln, stripped)
            break
    if header is None:
        raise GraphInputError("line 1: missing 'n m' header")
    hln, htext = header
    fields = htext.split()
    if len(fields) != 2:
        raise GraphInputError(f"line {hln}: header must be 'n m', got {htext!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphInputError(f"line {hln}: header must be two integers, got {htext!r}")
    if n < 1:
        raise GraphInputError(f"line {hln}: node count must be positive, got {n}")
    if m < 0:
        raise GraphInputError(f"line {hln}: edge count must be nonnegative, got {m}")
    pairs = []
    seen = 0
    for ln2 in range(hln + 1, len(lines) + 1):
        stripped = lines[ln2 - 1].strip()
        if not stripped:
            continue
        if seen == m:
            raise GraphInputError(f"line {ln2}: extra content after {m} edges")
        fields = stripped.split()
        if len(fields) != 2:
            raise GraphInputError(f"line {ln2}: edge must be 'i j', got {stripped!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphInputError(f"line {ln2}: edge must be two integers, got {stripped!r}")
        try:
            from_edge_list(n, [(u, v)])
        except GraphInputError as exc:
            raise GraphInputError(f"line {ln2}: {exc}")
        pairs.append((u, v))
        seen += 1
    if seen != m:
        raise GraphInputError(f"line {len(lines)}: header promised {m} edges, found {seen}")
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph) -> str:
    """Render a graph in the "n m" edge-list format."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
