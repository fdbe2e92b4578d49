"""Simple undirected graphs: named families, edge lists, Cartesian products.

Vertices are indexed 0..n-1.  Adjacency matrices are dense float64 arrays
with entries in {0, 1}, symmetric, zero diagonal.  Graphs are frozen after
construction so spectral results derived from them stay valid.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .errors import EdgeListError, InvalidParameterError

FAMILY_KINDS = ("path", "complete", "complete_bipartite", "cycle")


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph with a 0/1 adjacency matrix."""

    n: int
    adjacency: np.ndarray
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=np.float64).copy()
        if adj.ndim != 2 or adj.shape != (self.n, self.n):
            raise InvalidParameterError(
                f"adjacency must be {self.n}x{self.n}, got shape {adj.shape}")
        if self.n < 1:
            raise InvalidParameterError("graph needs at least one vertex")
        if not np.array_equal(adj, adj.T):
            raise InvalidParameterError("adjacency must be symmetric")
        if np.any(np.diag(adj) != 0.0):
            raise InvalidParameterError("adjacency diagonal must be zero")
        if not np.all((adj == 0.0) | (adj == 1.0)):
            raise InvalidParameterError("adjacency entries must be 0 or 1")
        labels = self.labels or tuple(str(i) for i in range(self.n))
        if len(labels) != self.n:
            raise InvalidParameterError("labels must name every vertex")
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def fingerprint(self) -> str:
        """Short stable identifier derived from the adjacency matrix."""
        digest = hashlib.sha256()
        digest.update(str(self.n).encode())
        digest.update(self.adjacency.astype(np.uint8).tobytes())
        return digest.hexdigest()[:16]

    def degree_sequence(self) -> list[int]:
        return [int(d) for d in self.adjacency.sum(axis=1)]


def make_family(kind: str, params: list[int]) -> Graph:
    """Build a named graph family: path, complete, complete_bipartite, cycle."""
    if kind not in FAMILY_KINDS:
        raise InvalidParameterError(f"unknown family {kind!r}; expected one of {FAMILY_KINDS}")
    params = [int(p) for p in params]
    if kind == "complete_bipartite":
        if len(params) != 2:
            raise InvalidParameterError("complete_bipartite takes two part sizes")
        m, n = params
        if m < 1 or n < 1:
            raise InvalidParameterError("complete_bipartite part sizes must be >= 1")
        return complete_bipartite_graph(m, n)
    if len(params) != 1:
        raise InvalidParameterError(f"{kind} takes a single vertex count")
    (n,) = params
    if kind == "cycle":
        if n < 3:
            raise InvalidParameterError("cycle needs at least 3 vertices")
        return cycle_graph(n)
    if n < 1:
        raise InvalidParameterError(f"{kind} needs at least 1 vertex")
    return path_graph(n) if kind == "path" else complete_graph(n)


def path_graph(n: int) -> Graph:
    """Path on n vertices, numbered along the path."""
    if n < 1:
        raise InvalidParameterError("path needs at least 1 vertex")
    adj = np.zeros((n, n))
    idx = np.arange(n - 1)
    adj[idx, idx + 1] = 1.0
    adj[idx + 1, idx] = 1.0
    return Graph(n, adj)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError("complete graph needs at least 1 vertex")
    return Graph(n, np.ones((n, n)) - np.eye(n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("cycle needs at least 3 vertices")
    adj = np.zeros((n, n))
    for i in range(n):
        j = (i + 1) % n
        adj[i, j] = adj[j, i] = 1.0
    return Graph(n, adj)


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """Complete bipartite graph; parts are the index blocks [0,m) and [m,m+n)."""
    if m < 1 or n < 1:
        raise InvalidParameterError("complete bipartite parts must be >= 1")
    adj = np.zeros((m + n, m + n))
    adj[:m, m:] = 1.0
    adj[m:, :m] = 1.0
    return Graph(m + n, adj)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product with adjacency A(g) (+) A(h) as a Kronecker sum.

    Vertex (a, b) of the product gets index a*h.n + b, so the adjacency is
    exactly kron(A(g), I) + kron(I, A(h)).
    """
    adj = np.kron(g.adjacency, np.eye(h.n)) + np.kron(np.eye(g.n), h.adjacency)
    labels = tuple(f"{la},{lb}" for la in g.labels for lb in h.labels)
    return Graph(g.n * h.n, adj, labels)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line n, then one "u v" edge per line.

    Requires 0 <= u < v < n.  Blank lines and lines starting with '#' are
    skipped.  Self-loops, duplicate edges, reversed pairs and out-of-range
    indices are rejected.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    if not lines:
        raise EdgeListError("empty edge list: expected a leading vertex count")
    head_no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise EdgeListError(f"line {head_no}: vertex count must be an integer, got {head!r}") from None
    if n < 1:
        raise EdgeListError(f"line {head_no}: vertex count must be >= 1, got {n}")
    adj = np.zeros((n, n))
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: vertex indices must be integers, got {line!r}") from None
        if u < 0 or v < 0 or u >= n or v >= n:
            raise EdgeListError(f"line {lineno}: vertex index out of range [0, {n}) in {line!r}")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop {u}-{v} is not allowed")
        if u > v:
            raise EdgeListError(f"line {lineno}: edges must be written with u < v, got {line!r}")
        if (u, v) in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge {u}-{v}")
        seen.add((u, v))
        adj[u, v] = adj[v, u] = 1.0
    return Graph(n, adj)
