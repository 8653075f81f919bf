"""Graphs, graph-state stabilizers, local complementation and LC orbits.

A graph on n vertices defines the standard-form word stabilizer with
generators X_i Z^{r_i}, where r_i is row i of the adjacency matrix.  Two
graph states related by local complementation (toggling all edges inside one
vertex's neighborhood) are local-Clifford equivalent, so the search only has
to visit one representative per orbit of {isomorphism + local
complementation}.

Canonicalization is an exact branch-and-bound over vertex orderings
constrained to the sorted degree sequence; no third-party isomorphism engine
is involved.  Orbit enumeration is a BFS over local complementations,
quotienting by canonical form at every step, and can be cached to disk as
graph6 with a version header.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .pauli import PauliOperator

MAX_VERTICES = 16

CACHE_HEADER = "# cws-orbits v1"


class GraphError(ValueError):
    """Malformed graph, graph6 line, or out-of-range vertex."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adj[i] is the neighbor bit mask of vertex i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row {i} has bits above n-1")
            if (row >> i) & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in range(self.n):
                if ((row >> j) & 1) != ((self.adj[j] >> i) & 1):
                    raise GraphError(f"adjacency not symmetric at ({i},{j})")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if a == b or not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"bad edge ({a},{b}) for n={n}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(n, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if (self.adj[i] >> j) & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1


@dataclass(frozen=True)
class StandardFormStabilizer:
    """Rows r_1..r_n of Z-supports; generator i is X_i Z^{r_i}."""

    n: int
    rows: tuple[int, ...]

    def generators(self) -> list[PauliOperator]:
        return [PauliOperator(self.n, 1 << i, self.rows[i], 0) for i in range(self.n)]


def graph_state_stabilizer(g: Graph) -> StandardFormStabilizer:
    """Standard-form stabilizer of the graph state: rows are adjacency rows."""
    return StandardFormStabilizer(g.n, g.adj)


def local_complement(g: Graph, v: int) -> Graph:
    """Toggle every edge inside the neighborhood of v.  Involutive."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    nb = g.adj[v]
    rows = list(g.adj)
    m = nb
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        rows[i] ^= nb & ~(1 << i)
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6 encoding (trailing padding bits must be zero)

def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (n <= 16); rejects malformed padding."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 line")
    head = ord(s[0]) - 63
    if head == 63:
        raise GraphError("multi-byte graph6 sizes exceed the n <= 16 limit")
    if not 1 <= head <= MAX_VERTICES:
        raise GraphError(f"graph6 vertex count {head} outside 1..{MAX_VERTICES}")
    n = head
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nchars:
        raise GraphError(f"graph6 body length {len(body)}, expected {nchars}")
    bits = 0
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise GraphError(f"invalid graph6 character {ch!r}")
        bits = (bits << 6) | v
    pad = 6 * nchars - nbits
    if bits & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 line")
    bits >>= pad
    rows = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append((g.adj[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# exact canonical form

def _canonical_rows(g: Graph) -> tuple[int, ...]:
    """Lexicographically maximal placement-row sequence over vertex orderings.

    Row k holds the adjacency bits of the k-th placed vertex toward the
    previously placed ones.  The search walks placements restricted to the
    descending degree sequence, pruning any branch whose next row drops below
    the best known sequence, and skipping twin vertices (identical
    neighborhoods outside the pair), whose placements are exchanged by an
    automorphism.
    """
    n = g.n
    degrees = [g.degree(v) for v in range(n)]
    target = sorted(degrees, reverse=True)
    best: list[int] | None = None

    def extend(placed: list[int], placed_mask: int, rows: list[int]):
        nonlocal best
        k = len(placed)
        if k == n:
            if best is None or rows > best:
                best = rows.copy()
            return
        candidates: list[tuple[int, int]] = []
        tried: list[int] = []
        for v in range(n):
            if (placed_mask >> v) & 1 or degrees[v] != target[k]:
                continue
            vb = 1 << v
            if any((g.adj[u] | (1 << u) | vb) == (g.adj[v] | (1 << u) | vb)
                   for u in tried):
                continue
            tried.append(v)
            av = g.adj[v]
            row = 0
            for t, u in enumerate(placed):
                row |= ((av >> u) & 1) << t
            candidates.append((row, v))
        candidates.sort(reverse=True)
        for row, v in candidates:
            # invariant: rows == best[:k] when tied; otherwise rows > best[:k]
            if best is not None and rows == best[:k] and row < best[k]:
                break
            placed.append(v)
            rows.append(row)
            extend(placed, placed_mask | (1 << v), rows)
            placed.pop()
            rows.pop()

    extend([], 0, [])
    assert best is not None
    return tuple(best)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for isomorphic graphs and distinct otherwise."""
    rows = _canonical_rows(g)
    bits = 0
    nbits = 0
    for k, row in enumerate(rows):
        bits = (bits << k) | row
        nbits += k
    return bytes([g.n]) + bits.to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_graph(g: Graph) -> Graph:
    """The relabeled copy of g realizing its canonical form."""
    rows = _canonical_rows(g)
    adj = [0] * g.n
    for k, row in enumerate(rows):
        for t in range(k):
            if (row >> t) & 1:
                adj[k] |= 1 << t
                adj[t] |= 1 << k
    return Graph(g.n, tuple(adj))


def _decode_canonical(form: bytes) -> Graph:
    n = form[0]
    bits = int.from_bytes(form[1:], "big")
    adj = [0] * n
    pos = n * (n - 1) // 2
    for k in range(n):
        for t in range(k):
            pos -= 1
    # re-walk in emission order: row k contributed k bits, most recent last
    pos = 0
    total = n * (n - 1) // 2
    consumed = 0
    adj = [0] * n
    for k in range(n - 1, -1, -1):
        row = (bits >> consumed) & ((1 << k) - 1)
        consumed += k
        for t in range(k):
            if (row >> t) & 1:
                adj[k] |= 1 << t
                adj[t] |= 1 << k
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# enumeration up to isomorphism, and LC orbits

@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism (canonical representatives).

    Built by vertex augmentation: every graph on n vertices arises from some
    graph on n-1 vertices plus one vertex with an arbitrary neighborhood.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"n={n} outside 1..{MAX_VERTICES}")
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[bytes, Graph] = {}
    for g in nonisomorphic_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            rows = [g.adj[i] | (((nb >> i) & 1) << (n - 1)) for i in range(n - 1)]
            rows.append(nb)
            cand = Graph(n, tuple(rows))
            form = canonical_form(cand)
            if form not in seen:
                seen[form] = canonical_graph(cand)
    return tuple(seen[f] for f in sorted(seen))


def lc_orbit(g: Graph) -> set[bytes]:
    """Canonical forms of every graph reachable from g by LC + relabeling."""
    start = canonical_form(g)
    frontier = {start: canonical_graph(g)}
    seen = {start}
    while frontier:
        nxt: dict[bytes, Graph] = {}
        for h in frontier.values():
            for v in range(h.n):
                lc = local_complement(h, v)
                form = canonical_form(lc)
                if form not in seen:
                    seen.add(form)
                    nxt[form] = canonical_graph(lc)
        frontier = nxt
    return seen


def lc_orbit_representatives(n: int, connected_only: bool = False,
                             cache_dir: str | Path | None = None) -> list[Graph]:
    """One representative per {isomorphism + local complementation} orbit.

    Representatives are the lexicographically least canonical form of each
    orbit, listed in ascending order, so two runs agree exactly.  When
    ``cache_dir`` is given, results are stored as graph6 under a version
    header and reused.
    """
    if not 2 <= n <= 9:
        raise GraphError(f"orbit enumeration supports 2 <= n <= 9, got {n}")
    if cache_dir is not None:
        path = Path(cache_dir) / f"orbits_n{n}_{'conn' if connected_only else 'all'}.g6"
        if path.exists():
            return _read_orbit_cache(path, n, connected_only)

    pool = [g for g in nonisomorphic_graphs(n)
            if not connected_only or g.is_connected()]
    forms = {canonical_form(g): g for g in pool}
    processed: set[bytes] = set()
    reps: list[Graph] = []
    for form in sorted(forms):
        if form in processed:
            continue
        orbit = lc_orbit(forms[form])
        processed.update(orbit)
        reps.append(forms[form])

    if cache_dir is not None:
        _write_orbit_cache(path, n, connected_only, reps)
    return reps


def _write_orbit_cache(path: Path, n: int, connected_only: bool, reps: list[Graph]):
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{CACHE_HEADER} n={n} connected={int(connected_only)}"]
    lines += [emit_graph6(g) for g in reps]
    path.write_text("\n".join(lines) + "\n")


def _read_orbit_cache(path: Path, n: int, connected_only: bool) -> list[Graph]:
    lines = path.read_text().splitlines()
    expected = f"{CACHE_HEADER} n={n} connected={int(connected_only)}"
    if not lines or lines[0].strip() != expected:
        raise GraphError(f"orbit cache {path} has wrong or missing header")
    return [parse_graph6(line) for line in lines[1:] if line.strip()]


def read_graph6_file(path: str | Path) -> list[Graph]:
    """All graphs from a graph6 file, one per line; '#' lines are skipped."""
    graphs = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        graphs.append(parse_graph6(line))
    return graphs
