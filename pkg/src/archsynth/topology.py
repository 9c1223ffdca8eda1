"""Coupling maps: undirected connectivity graphs with all-pairs shortest paths.

Paths are canonical and deterministic: breadth-first distances plus a
next-hop table that always prefers the lowest-index neighbor.
"""
from __future__ import annotations

import json
from collections import deque

import numpy as np


class TopologyError(ValueError):
    """Structurally invalid coupling map (e.g. disconnected)."""


class TopologyFormatError(ValueError):
    """Malformed coupling-map file or topology specifier."""


class CouplingMap:
    def __init__(self, num_qubits: int, edges, name: str = ""):
        if num_qubits < 1:
            raise TopologyError(f"num_qubits must be positive, got {num_qubits}")
        canon = set()
        for e in edges:
            if len(e) != 2:
                raise TopologyFormatError(f"edge {e!r} is not a pair")
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise TopologyFormatError(f"self-loop edge {e!r}")
            if not (0 <= a < num_qubits and 0 <= b < num_qubits):
                raise TopologyFormatError(f"edge {e!r} out of range for {num_qubits} qubits")
            canon.add((min(a, b), max(a, b)))
        self.num_qubits = num_qubits
        self.edges = tuple(sorted(canon))
        self.name = name
        self._adj = [[] for _ in range(num_qubits)]
        for a, b in self.edges:
            self._adj[a].append(b)
            self._adj[b].append(a)
        for nbrs in self._adj:
            nbrs.sort()
        self._dist, self._next = self._bfs_all_pairs()

    def _bfs_all_pairs(self):
        n = self.num_qubits
        dist = np.full((n, n), -1, dtype=np.int32)
        for s in range(n):
            dist[s, s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in self._adj[u]:
                    if dist[s, v] < 0:
                        dist[s, v] = dist[s, u] + 1
                        queue.append(v)
        if n > 1 and (dist < 0).any():
            comps = self._components()
            raise TopologyError(
                f"coupling map {self.name or '?'} is disconnected: components {comps}"
            )
        # next hop from u toward v: lowest-index neighbor on a shortest path
        nxt = np.full((n, n), -1, dtype=np.int32)
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                for w in self._adj[u]:  # ascending, so first hit is canonical
                    if dist[w, v] == dist[u, v] - 1:
                        nxt[u, v] = w
                        break
        return dist, nxt

    def _components(self):
        seen = [False] * self.num_qubits
        comps = []
        for s in range(self.num_qubits):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                u = queue.popleft()
                comp.append(u)
                for v in self._adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    def neighbors(self, q: int):
        return tuple(self._adj[q])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    def distance(self, a: int, b: int) -> int:
        return int(self._dist[a, b])

    @property
    def distance_matrix(self) -> np.ndarray:
        return self._dist

    def shortest_path(self, a: int, b: int):
        """Canonical shortest path from a to b, inclusive of both endpoints."""
        path = [a]
        u = a
        while u != b:
            u = int(self._next[u, b])
            path.append(u)
        return path

    def save(self, path) -> None:
        payload = {
            "name": self.name,
            "num_qubits": self.num_qubits,
            "edges": [list(e) for e in self.edges],
        }
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=1)

    @classmethod
    def load(cls, path) -> "CouplingMap":
        with open(path) as fh:
            try:
                payload = json.load(fh)
            except json.JSONDecodeError as exc:
                raise TopologyFormatError(f"{path}: not valid JSON: {exc}") from exc
        for key in ("num_qubits", "edges"):
            if key not in payload:
                raise TopologyFormatError(f"{path}: missing key {key!r}")
        return cls(payload["num_qubits"], payload["edges"], name=payload.get("name", ""))

    def __repr__(self):
        return f"CouplingMap({self.name or 'unnamed'}, {self.num_qubits} qubits, {len(self.edges)} edges)"


def line(n: int) -> CouplingMap:
    return CouplingMap(n, [(i, i + 1) for i in range(n - 1)], name=f"line:{n}")


def complete(n: int) -> CouplingMap:
    return CouplingMap(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"complete:{n}"
    )


def grid(width: int, height: int) -> CouplingMap:
    edges = []
    for r in range(height):
        for c in range(width):
            q = r * width + c
            if c + 1 < width:
                edges.append((q, q + 1))
            if r + 1 < height:
                edges.append((q, q + width))
    return CouplingMap(width * height, edges, name=f"grid:{width}x{height}")


def garnet() -> CouplingMap:
    """20-qubit diagonal square lattice, rows of 4/6/6/4 qubits.

    Qubits are numbered row-major; adjacent rows connect diagonally, giving
    degree <= 4 as on a 45-degree-rotated square lattice.
    """
    rows = [
        [(0, x) for x in (1, 3, 5, 7)],
        [(1, x) for x in (0, 2, 4, 6, 8, 10)],
        [(2, x) for x in (1, 3, 5, 7, 9, 11)],
        [(3, x) for x in (4, 6, 8, 10)],
    ]
    coords = [c for row in rows for c in row]
    index = {c: i for i, c in enumerate(coords)}
    edges = []
    for (y, x), i in index.items():
        for dx in (-1, 1):
            j = index.get((y + 1, x + dx))
            if j is not None:
                edges.append((i, j))
    return CouplingMap(20, edges, name="garnet")


def heavyhex(long_rows: int = 8, row_len: int = 16) -> CouplingMap:
    """Heavy-hex lattice family: long qubit rows joined by sparse bridge qubits.

    Bridges sit every 4 columns, with alternating offsets on successive gaps,
    so row qubits have degree <= 3.  The default (8, 16) instance has
    8*16 + 7*4 = 156 qubits.  Ids are assigned in reading order: each long
    row, then the bridge qubits below it.
    """
    if long_rows < 2 or row_len < 4:
        raise TopologyError("heavyhex needs at least 2 rows of at least 4 qubits")
    counter = 0
    rows = []
    bridge_rows = []
    for r in range(long_rows):
        rows.append(list(range(counter, counter + row_len)))
        counter += row_len
        if r + 1 < long_rows:
            offset = 3 if r % 2 == 0 else 1
            cols = list(range(offset, row_len, 4))
            bridge_rows.append(list(zip(cols, range(counter, counter + len(cols)))))
            counter += len(cols)
    edges = []
    for r, row in enumerate(rows):
        edges.extend(zip(row, row[1:]))
        if r < len(bridge_rows):
            for col, bridge in bridge_rows[r]:
                edges.append((row[col], bridge))
                edges.append((bridge, rows[r + 1][col]))
    return CouplingMap(counter, edges, name=f"heavyhex:{counter}")


def from_spec(spec: str) -> CouplingMap:
    """Parse a topology shorthand: complete:N, line:N, grid:WxH, heavyhex:156, garnet."""
    name, _, arg = spec.partition(":")
    try:
        if name == "complete":
            return complete(int(arg))
        if name == "line":
            return line(int(arg))
        if name == "grid":
            w, _, h = arg.partition("x")
            return grid(int(w), int(h))
        if name == "heavyhex":
            total = int(arg) if arg else 156
            if total != 156:
                raise TopologyFormatError(
                    f"heavyhex is instantiated by qubit total 156, got {total}"
                )
            return heavyhex(8, 16)
        if name == "garnet":
            return garnet()
    except ValueError as exc:
        if isinstance(exc, (TopologyError, TopologyFormatError)):
            raise
        raise TopologyFormatError(f"bad topology spec {spec!r}: {exc}") from exc
    raise TopologyFormatError(f"unknown topology {spec!r}")
