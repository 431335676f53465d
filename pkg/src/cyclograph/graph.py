"""Hermitian matrices over Z, Z[i], Z[omega] viewed as charged weighted graphs.

Only the upper triangle is stored: ``weights[(u, v)]`` with u < v holds the
matrix entry a_uv, and a_vu is its conjugate.  Diagonal entries are the
integer charges.  Graphs are immutable after construction; every operation
returns a new graph.
"""

from __future__ import annotations

import json
from collections import deque

from .poly import IntPoly
from .ring import (GAUSSIAN, RATIONAL, QuadInt, RingId, RingMismatch,
                   file_tag, format_element, ring_by_tag)


class HermitianBookkeepingError(AssertionError):
    """A characteristic polynomial coefficient had a nonzero tau part."""


class HGraph:
    __slots__ = ("ring", "n", "charges", "weights", "_cache")

    def __init__(self, ring: RingId, charges, weights):
        """charges: iterable of ints; weights: {(u, v): QuadInt} with u < v."""
        self.ring = ring
        self.charges = tuple(int(c) for c in charges)
        self.n = len(self.charges)
        wt = {}
        for (u, v), w in weights.items():
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v})")
            if isinstance(w, int):
                w = QuadInt(w, 0, ring)
            if w.ring != ring:
                w = w.promote(ring)
            if not w:
                continue
            if (u, v) in wt:
                raise ValueError(f"duplicate edge ({u}, {v})")
            wt[(u, v)] = w
        self.weights = wt
        self._cache = {}

    # -- construction helpers --------------------------------------------

    @staticmethod
    def from_edges(ring: RingId, n: int, edges, charges=None) -> "HGraph":
        """edges: iterable of (u, v, weight); vertices may come unordered."""
        wt = {}
        for u, v, w in edges:
            if u == v:
                raise ValueError("self loops belong in charges")
            if u > v:
                u, v = v, u
                w = (w if isinstance(w, QuadInt) else QuadInt(w, 0, ring)).conj()
            if (u, v) in wt:
                raise ValueError(f"duplicate edge ({u}, {v})")
            wt[(u, v)] = w
        return HGraph(ring, charges if charges is not None else [0] * n, wt)

    def promote(self, ring: RingId) -> "HGraph":
        if self.ring == ring:
            return self
        if self.ring is not RATIONAL:
            raise RingMismatch(
                f"cannot promote {self.ring.tag} graph into {ring.tag}")
        return HGraph(ring, self.charges,
                      {e: w.promote(ring) for e, w in self.weights.items()})

    # -- basic protocol ----------------------------------------------------

    def __repr__(self):
        return (f"HGraph({self.ring.tag}, n={self.n}, charges={self.charges}, "
                f"edges={self.edge_list()})")

    def __eq__(self, other):
        """Identical labelled data (not equivalence; see module equiv)."""
        return (isinstance(other, HGraph) and self.ring == other.ring
                and self.charges == other.charges
                and self.weights == other.weights)

    def __hash__(self):
        return hash((self.ring.tag, self.charges,
                     tuple(sorted((e, w.pair()) for e, w in self.weights.items()))))

    def edge_list(self):
        return sorted((u, v, w.a, w.b) for (u, v), w in self.weights.items())

    # -- entries and local structure ---------------------------------------

    def entry(self, u: int, v: int) -> QuadInt:
        if u == v:
            return QuadInt(self.charges[u], 0, self.ring)
        if u < v:
            w = self.weights.get((u, v))
            return w if w is not None else QuadInt(0, 0, self.ring)
        w = self.weights.get((v, u))
        return w.conj() if w is not None else QuadInt(0, 0, self.ring)

    def neighbors(self, v: int) -> list[int]:
        out = self._cache.get("nbrs")
        if out is None:
            out = [[] for _ in range(self.n)]
            for (a, b) in self.weights:
                out[a].append(b)
                out[b].append(a)
            for lst in out:
                lst.sort()
            self._cache["nbrs"] = out
        return out[v]

    def degree(self, v: int) -> int:
        """charge^2 plus the sum of weight norms at v (the paper's degree)."""
        if not (0 <= v < self.n):
            raise ValueError("vertex out of range")
        d = self.charges[v] ** 2
        for (a, b), w in self.weights.items():
            if a == v or b == v:
                d += w.norm()
        return d

    def degrees(self) -> list[int]:
        out = self._cache.get("degs")
        if out is None:
            out = [c * c for c in self.charges]
            for (a, b), w in self.weights.items():
                nw = w.norm()
                out[a] += nw
                out[b] += nw
            self._cache["degs"] = out
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        queue = deque([0])
        seen[0] = True
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in self.neighbors(u):
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    # -- derived graphs ------------------------------------------------------

    def induced_subgraph(self, subset) -> "HGraph":
        subset = list(subset)
        if len(set(subset)) != len(subset):
            raise ValueError("duplicate vertices in subset")
        if any(not 0 <= v < self.n for v in subset):
            raise ValueError("vertex out of range")
        index = {v: i for i, v in enumerate(subset)}
        wt = {}
        for (u, v), w in self.weights.items():
            if u in index and v in index:
                a, b = index[u], index[v]
                if a < b:
                    wt[(a, b)] = w
                else:
                    wt[(b, a)] = w.conj()
        return HGraph(self.ring, [self.charges[v] for v in subset], wt)

    def attach_vertex(self, charge: int, incident: dict) -> "HGraph":
        """New graph with one extra vertex (index n).

        ``incident[v]`` becomes the matrix entry a_{v, n}.
        """
        wt = dict(self.weights)
        for v, w in incident.items():
            if isinstance(w, int):
                w = QuadInt(w, 0, self.ring)
            if w.ring != self.ring:
                w = w.promote(self.ring)
            if not w:
                raise ValueError("incident weights must be nonzero")
            wt[(v, self.n)] = w
        return HGraph(self.ring, self.charges + (int(charge),), wt)

    # -- exact matrix computations ---------------------------------------------

    def matrix_pairs(self) -> list[list[tuple[int, int]]]:
        """Full matrix as (a, b) integer pairs on the basis {1, tau}."""
        n = self.n
        m = [[(0, 0)] * n for _ in range(n)]
        for v, c in enumerate(self.charges):
            m[v][v] = (c, 0)
        conj_is_eisenstein = self.ring.tag == "Eisenstein"
        for (u, v), w in self.weights.items():
            m[u][v] = (w.a, w.b)
            if conj_is_eisenstein:
                m[v][u] = (w.a + w.b, -w.b)
            else:
                m[v][u] = (w.a, -w.b)
        return m

    def square_is_4I(self) -> bool:
        """Exact test of A^2 == 4I (the paper's visibly-cyclotomic property)."""
        n = self.n
        m = self.matrix_pairs()
        p, q = self.ring._tau_sq
        for i in range(n):
            row = m[i]
            for j in range(i, n):
                sa = sb = 0
                for k in range(n):
                    xa, xb = row[k]
                    if xa == 0 and xb == 0:
                        continue
                    ya, yb = m[k][j]
                    cross = xb * yb
                    sa += xa * ya + p * cross
                    sb += xa * yb + xb * ya + q * cross
                if sb != 0 or sa != (4 if i == j else 0):
                    return False
        return True

    def charpoly(self) -> IntPoly:
        """det(xI - A) by the division-free Berkowitz algorithm.

        Raises HermitianBookkeepingError if any coefficient picks up a
        nonzero tau component, which would mean the stored data is not
        Hermitian.
        """
        n = self.n
        if n == 0:
            return IntPoly((1,))
        m = self.matrix_pairs()
        p, q = self.ring._tau_sq

        def mul(x, y):
            cross = x[1] * y[1]
            return (x[0] * y[0] + p * cross,
                    x[0] * y[1] + x[1] * y[0] + q * cross)

        C = [(1, 0)]
        for r in range(1, n + 1):
            d = m[r - 1][r - 1]
            t = [(1, 0), (-d[0], -d[1])]
            if r >= 2:
                row = m[r - 1][:r - 1]
                v = [m[i][r - 1] for i in range(r - 1)]
                for step in range(r - 1):
                    sa = sb = 0
                    for x, y in zip(row, v):
                        cross = x[1] * y[1]
                        sa += x[0] * y[0] + p * cross
                        sb += x[0] * y[1] + x[1] * y[0] + q * cross
                    t.append((-sa, -sb))
                    if step < r - 2:
                        nv = []
                        for i in range(r - 1):
                            mi = m[i]
                            za = zb = 0
                            for k in range(r - 1):
                                x = mi[k]
                                y = v[k]
                                cross = x[1] * y[1]
                                za += x[0] * y[0] + p * cross
                                zb += x[0] * y[1] + x[1] * y[0] + q * cross
                            nv.append((za, zb))
                        v = nv
            newC = []
            lenC = len(C)
            for i in range(r + 1):
                sa = sb = 0
                for j in range(max(0, i - r), min(i, lenC - 1) + 1):
                    x = t[i - j]
                    y = C[j]
                    cross = x[1] * y[1]
                    sa += x[0] * y[0] + p * cross
                    sb += x[0] * y[1] + x[1] * y[0] + q * cross
                newC.append((sa, sb))
            C = newC
        for a, b in C:
            if b != 0:
                raise HermitianBookkeepingError(
                    "characteristic polynomial left the rational integers")
        return IntPoly([a for a, _ in reversed(C)])

    # -- file format -------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "ring": file_tag(self.ring),
            "n": self.n,
            "charges": list(self.charges),
            "edges": [[u, v, [w.a, w.b]]
                      for (u, v), w in sorted(self.weights.items())],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @staticmethod
    def from_json_obj(obj: dict) -> "HGraph":
        ring = ring_by_tag(obj["ring"])
        n = int(obj["n"])
        charges = obj["charges"]
        if len(charges) != n:
            raise ValueError("charge list length disagrees with n")
        wt = {}
        for u, v, (a, b) in obj["edges"]:
            if not u < v:
                raise ValueError("edges must satisfy u < v")
            if (u, v) in wt:
                raise ValueError(f"duplicate edge ({u}, {v})")
            wt[(u, v)] = QuadInt(a, b, ring)
        return HGraph(ring, charges, wt)

    @staticmethod
    def from_json(text: str) -> "HGraph":
        return HGraph.from_json_obj(json.loads(text))

    def to_dot(self, name: str = "G") -> str:
        """Graphviz form following the arrowhead conventions of the tables:
        real weights are undirected (negative ones dashed), a weight with k
        arrowheads in the paper gets penwidth k here, labelled with the
        weight."""
        lines = [f'graph "{name}" {{', "  node [shape=circle];"]
        for v, c in enumerate(self.charges):
            label = {1: "+", -1: "-", 0: ""}.get(c, str(c))
            lines.append(f'  v{v} [label="{label}"];')
        for (u, v), w in sorted(self.weights.items()):
            attrs = []
            if w.b == 0:
                if w.a < 0:
                    attrs.append("style=dashed")
                if abs(w.a) != 1:
                    attrs.append(f'label="{format_element(w)}"')
            else:
                attrs.append("dir=forward")
                attrs.append(f"penwidth={w.norm()}")
                attrs.append(f'label="{format_element(w)}"')
            att = (" [" + ", ".join(attrs) + "]") if attrs else ""
            lines.append(f"  v{u} -- v{v}{att};")
        lines.append("}")
        return "\n".join(lines)


def single_vertex(ring: RingId, charge: int = 0) -> HGraph:
    return HGraph(ring, [charge], {})


def single_edge(weight: QuadInt, charges=(0, 0)) -> HGraph:
    return HGraph(weight.ring, charges, {(0, 1): weight})


def disjoint_union(a: HGraph, b: HGraph) -> HGraph:
    if a.ring != b.ring:
        raise RingMismatch("disjoint union needs a common ring")
    wt = dict(a.weights)
    for (u, v), w in b.weights.items():
        wt[(u + a.n, v + a.n)] = w
    return HGraph(a.ring, a.charges + b.charges, wt)
