"""Small simple undirected graphs on bitset adjacency.

Vertices are always 0..n-1.  Adjacency is a tuple of int bitmasks, one per
vertex, which makes neighbourhood intersection, induced-subgraph tests and
subset iteration word-parallel.  Everything here is exact and aimed at the
small orders (n <= ~20, and <= 12 for isomorphism-sensitive paths) that the
rest of the library works with.

Provided here:

* the ``Graph`` value type (immutable, hashable),
* graph6 reading/writing (single-byte header regime, n <= 62),
* BFS distances, connectivity and 2-connectivity,
* an exact canonical form (lexicographically least graph6 string over all
  relabelings, computed by a pruned ordering search),
* exhaustive generation of connected graphs up to isomorphism.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache
INFINITY = float("inf")

#: Largest order accepted by the exact canonical-form search.
MAX_CANONICAL_ORDER = 12

#: Largest order for exhaustive connected-graph generation.
MAX_GENERATION_ORDER = 8

#: Largest order encodable with a single-byte graph6 header.
MAX_GRAPH6_ORDER = 62


class GraphError(ValueError):
    """Domain error: the input graph violates a precondition."""


class CapabilityError(GraphError):
    """The request is valid but outside the supported size regime."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"graph order must be >= 1, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(masks))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        """Build from per-vertex neighbour bitmasks (validated)."""
        g = object.__new__(cls)
        n = len(adj)
        if n < 1:
            raise GraphError("graph order must be >= 1")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise GraphError(f"adjacency of vertex {v} out of range")
            if (mask >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(mask):
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def _raw(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Fast path for internally-constructed, already-valid adjacency.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {sorted(self.edges())})"

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(m.bit_count() for m in self.adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in _bits(self.adj[v] >> (v + 1)):
                yield (v, v + 1 + u)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")


# ---------------------------------------------------------------------------
# constructions


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._raw(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def permuted(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel: vertex v of ``g`` becomes ``perm[v]`` in the result."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("not a permutation of 0..n-1")
    adj = [0] * g.n
    for v in range(g.n):
        mask = 0
        for u in _bits(g.adj[v]):
            mask |= 1 << perm[u]
        adj[perm[v]] = mask
    return Graph._raw(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``; returns (graph, old labels in order)."""
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph needs at least one vertex")
    for v in keep:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for u in _bits(g.adj[v]):
            if u in index:
                adj[index[v]] |= 1 << index[u]
    return Graph._raw(len(keep), tuple(adj)), tuple(keep)


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (single-byte header, order <= 62).

    Raises :class:`Graph6Error` naming the byte offset for characters outside
    63..126, a bad length, or nonzero padding bits.
    """
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 line")
    data = line.encode("ascii", errors="replace")
    for i, byte in enumerate(data):
        if not (63 <= byte <= 126):
            raise Graph6Error(f"character {chr(byte)!r} outside graph6 range 63..126", offset=i)
    if data[0] == 126:
        raise CapabilityError("multi-byte graph6 order headers (n > 62) are not supported")
    n = data[0] - 63
    if n < 1:
        raise Graph6Error("graph6 order 0 is not supported", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise Graph6Error(
            f"graph6 body for n={n} needs {nbytes} bytes, got {len(data) - 1}",
            offset=len(data),
        )
    adj = [0] * n
    bit_index = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for byte_index, byte in enumerate(data[1:], start=1):
        value = byte - 63
        for k in range(5, -1, -1):
            bit = (value >> k) & 1
            if bit_index < nbits:
                if bit:
                    i, j = pairs[bit_index]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits", offset=byte_index)
            bit_index += 1
    return Graph._raw(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    """Encode as a graph6 line; requires order <= 62."""
    if g.n > MAX_GRAPH6_ORDER:
        raise CapabilityError(f"graph6 writer supports n <= {MAX_GRAPH6_ORDER}, got {g.n}")
    out = [chr(63 + g.n)]
    value = 0
    width = 0
    for j in range(1, g.n):
        for i in range(j):
            value = (value << 1) | ((g.adj[i] >> j) & 1)
            width += 1
            if width == 6:
                out.append(chr(63 + value))
                value = 0
                width = 0
    if width:
        value <<= 6 - width
        out.append(chr(63 + value))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a corpus: one graph per line, '#' lines and blanks skipped."""
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield parse_graph6(stripped)


# ---------------------------------------------------------------------------
# distances and connectivity


def distances_from(g: Graph, sources: int) -> list[int | float]:
    """BFS distances from the ``sources`` bitmask (INFINITY if unreachable)."""
    dist: list[int | float] = [INFINITY] * g.n
    frontier = sources
    seen = sources
    d = 0
    while frontier:
        for v in _bits(frontier):
            dist[v] = d
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def distance(g: Graph, u: int, v: int) -> int | float:
    """Shortest-path distance; 0 iff u == v, INFINITY across components."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return 0
    dist = distances_from(g, 1 << u)
    return dist[v]


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertex_mask()


def _connected_within(g: Graph, mask: int) -> bool:
    # Is the induced subgraph on the ``mask`` vertices connected?
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == mask

def cut_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose removal disconnects the graph (empty for n <= 2)."""
    if g.n <= 2 or not is_connected(g):
        return ()
    full = g.vertex_mask()
    cuts = []
    for v in range(g.n):
        if not _connected_within(g, full ^ (1 << v)):
            cuts.append(v)
    return tuple(cuts)


def is_biconnected(g: Graph) -> bool:
    """Connected with no cut vertex; K1 and K2 count as 2-connected here."""
    if not is_connected(g):
        return False
    if g.n <= 2:
        return True
    return not cut_vertices(g)


# ---------------------------------------------------------------------------
# canonical form
#
# The canonical form of g is the lexicographically least graph6 string of any
# relabeling of g.  graph6 orders the adjacency bits column by column --
# (0,1), (0,2), (1,2), (0,3), ... -- so the least bit string can be found by
# growing a vertex ordering one position at a time: placing vertex p_k fixes
# the k bits adj(p_0,p_k)..adj(p_{k-1},p_k) and nothing earlier.  A
# branch-and-bound over orderings with per-position pruning is exact and fast
# at the orders used here.

_BITS_SENTINEL = 1 << 63


def _canonical_order(n: int, adj: Sequence[int]) -> list[int]:
    if n == 1:
        return [0]
    best = [_BITS_SENTINEL] * n
    best_order: list[int] | None = None
    order = [0] * n

    def place(pos: int, bits_by_vertex: dict[int, int]) -> None:
        nonlocal best_order
        groups: dict[int, list[int]] = {}
        for v, b in bits_by_vertex.items():
            groups.setdefault(b, []).append(v)
        for b in sorted(groups):
            if b > best[pos]:
                break
            if b < best[pos]:
                best[pos] = b
                for k in range(pos + 1, n):
                    best[k] = _BITS_SENTINEL
                best_order = None
            for v in groups[b]:
                order[pos] = v
                if pos + 1 == n:
                    if best_order is None:
                        best_order = order.copy()
                else:
                    nxt = {
                        u: (ub << 1) | ((adj[u] >> v) & 1)
                        for u, ub in bits_by_vertex.items()
                        if u != v
                    }
                    place(pos + 1, nxt)

    for v0 in range(n):
        order[0] = v0
        place(1, {u: (adj[u] >> v0) & 1 for u in range(n) if u != v0})
    assert best_order is not None
    return best_order


def canonical_graph(g: Graph) -> Graph:
    """The canonically labelled copy of ``g`` (order <= MAX_CANONICAL_ORDER)."""
    if g.n > MAX_CANONICAL_ORDER:
        raise CapabilityError(
            f"canonical form supports n <= {MAX_CANONICAL_ORDER}, got {g.n}"
        )
    order = _canonical_order(g.n, g.adj)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return permuted(g, perm)


def canonical_form(g: Graph) -> str:
    """Relabeling-invariant encoding: equal iff the graphs are isomorphic.

    Equals ``min(write_graph6(permuted(g, p)) for every permutation p)``.
    """
    return write_graph6(canonical_graph(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# exhaustive generation


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    seen: dict[str, Graph] = {}
    # Every connected graph on n vertices is some connected graph on n-1
    # vertices plus one vertex joined to a nonempty neighbourhood (delete any
    # non-cut vertex to see this), so augmenting connected parents is complete.
    for parent in _connected_classes(n - 1):
        for mask in range(1, 1 << (n - 1)):
            adj = list(parent.adj) + [mask]
            for u in _bits(mask):
                adj[u] |= 1 << (n - 1)
            child = Graph._raw(n, tuple(adj))
            key = canonical_form(child)
            if key not in seen:
                seen[key] = canonical_graph(child)
    return tuple(seen[key] for key in sorted(seen))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per connected isomorphism class.

    Deterministic: graphs come out sorted by canonical form.  Supported for
    1 <= n <= MAX_GENERATION_ORDER.
    """
    if not 1 <= n <= MAX_GENERATION_ORDER:
        raise CapabilityError(
            f"generation supports 1 <= n <= {MAX_GENERATION_ORDER}, got {n}"
        )
    yield from _connected_classes(n)


def connected_graph_count(n: int) -> int:
    return len(_connected_classes(n))
