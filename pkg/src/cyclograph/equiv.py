"""Equivalence of Hermitian matrix graphs via canonical forms.

Two graphs are strongly equivalent when one arises from the other by unit
switchings, relabelling and componentwise Galois conjugation; merely
equivalent when additionally a global sign flip is allowed.  Keys are
computed as the minimum serialized form over all admissible relabellings,
with partition-refinement backtracking to prune the permutation search and
a spanning-tree switching normalization making the serialization
switching-invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import HGraph
from .ring import RATIONAL, QuadInt, RingMismatch, units


@dataclass(frozen=True)
class EquivFlags:
    allow_negation: bool
    allow_galois: bool


STRONG = EquivFlags(allow_negation=False, allow_galois=True)
FULL = EquivFlags(allow_negation=True, allow_galois=True)


@dataclass(frozen=True)
class CanonicalKey:
    bytes: bytes

    def hex(self) -> str:
        return self.bytes.hex()

    def __lt__(self, other):
        return self.bytes < other.bytes


# -- elementary moves -----------------------------------------------------


def switch(g: HGraph, v: int, u: QuadInt) -> HGraph:
    """u-switching at v: out-weights of v pick up u, in-weights conj(u)."""
    if u.ring != g.ring:
        u = u.promote(g.ring)
    if not u.is_unit():
        raise ValueError("switching requires a unit")
    uc = u.conj()
    wt = {}
    for (a, b), w in g.weights.items():
        if a == v:
            wt[(a, b)] = u * w
        elif b == v:
            wt[(a, b)] = w * uc
        else:
            wt[(a, b)] = w
    return HGraph(g.ring, g.charges, wt)


def galois_conj(g: HGraph) -> HGraph:
    return HGraph(g.ring, g.charges,
                  {e: w.conj() for e, w in g.weights.items()})


def negate(g: HGraph) -> HGraph:
    return HGraph(g.ring, [-c for c in g.charges],
                  {e: -w for e, w in g.weights.items()})


def permute(g: HGraph, perm) -> HGraph:
    """Relabel: vertex v moves to position perm[v]."""
    perm = list(perm)
    wt = {}
    for (a, b), w in g.weights.items():
        na, nb = perm[a], perm[b]
        if na < nb:
            wt[(na, nb)] = w
        else:
            wt[(nb, na)] = w.conj()
    charges = [0] * g.n
    for v, c in enumerate(g.charges):
        charges[perm[v]] = c
    return HGraph(g.ring, charges, wt)


# -- canonical forms -------------------------------------------------------

_orbit_rep_cache: dict = {}


def _orbit_rep(a: int, b: int, ring) -> tuple[tuple[int, int], tuple[int, int]]:
    """Representative of the unit orbit of a + b*tau and the unit reaching it.

    Returns (rep_pair, s_pair) with x * s == rep; rep minimizes
    (norm, a, b) over the orbit.
    """
    key = (a, b, ring.tag)
    got = _orbit_rep_cache.get(key)
    if got is not None:
        return got
    x = QuadInt(a, b, ring)
    best = None
    for u in units(ring):
        y = x * u
        cand = ((y.norm(), y.a, y.b), y, u)
        if best is None or cand[0] < best[0]:
            best = cand
    result = (best[1].pair(), best[2].pair())
    _orbit_rep_cache[key] = result
    return result


def _adjacency(g: HGraph):
    """adj[v] = list of (u, norm, weight_pair_as_entry_a_vu)."""
    adj = [[] for _ in range(g.n)]
    for (a, b), w in g.weights.items():
        nw = w.norm()
        adj[a].append((b, nw))
        adj[b].append((a, nw))
    return adj


def _refine(cells, adj_norm):
    """Stable partition refinement by (edge norm, neighbour colour) multisets."""
    while True:
        color = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                color[v] = idx
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict = {}
            for v in cell:
                sig = tuple(sorted((nw, color[u]) for u, nw in adj_norm[v]))
                buckets.setdefault(sig, []).append(v)
            if len(buckets) > 1:
                changed = True
            for sig in sorted(buckets):
                new_cells.append(buckets[sig])
        cells = new_cells
        if not changed:
            return cells


def _serialize_with_switching(g: HGraph, order) -> tuple:
    """Serialize the relabelled graph with tree-normalized switchings.

    ``order[i]`` is the old vertex placed at new position i.  Assumes the
    graph is connected.  Hot path: raw (a, b) integer pairs throughout.
    """
    n = g.n
    ring = g.ring
    p_, q_ = ring._tau_sq
    eis = ring.tag == "Eisenstein"

    def mul(xa, xb, ya, yb):
        cross = xb * yb
        return xa * ya + p_ * cross, xa * yb + xb * ya + q_ * cross

    def conj(a, b):
        return (a + b, -b) if eis else (a, -b)

    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i

    # weights in new labels, as pairs
    wnew: dict = {}
    nbrs = [[] for _ in range(n)]
    for (a, b), w in g.weights.items():
        i, j = pos[a], pos[b]
        if i < j:
            wnew[(i, j)] = (w.a, w.b)
        else:
            wnew[(j, i)] = conj(w.a, w.b)
        nbrs[i].append(j)
        nbrs[j].append(i)

    # BFS switching normalization from new vertex 0
    d = [None] * n
    d[0] = (1, 0)
    queue = [0]
    qi = 0
    while qi < len(queue):
        p = queue[qi]
        qi += 1
        dpa, dpb = d[p]
        for c in sorted(nbrs[p]):
            if d[c] is not None:
                continue
            wa, wb = wnew[(p, c)] if p < c else conj(*wnew[(c, p)])
            xa, xb = mul(dpa, dpb, wa, wb)
            _, (sa, sb) = _orbit_rep(xa, xb, ring)
            d[c] = conj(sa, sb)
            queue.append(c)

    edges = []
    for (i, j), (wa, wb) in wnew.items():
        ya, yb = mul(*d[i], wa, wb)
        ya, yb = mul(ya, yb, *conj(*d[j]))
        edges.append((i, j, ya, yb))
    edges.sort()
    return (tuple(g.charges[v] for v in order), tuple(edges))


def _min_form_connected(g: HGraph) -> tuple:
    """Minimum serialization over admissible relabellings (connected g)."""
    n = g.n
    if n == 1:
        return ((g.charges[0],), ())
    adj_norm = _adjacency(g)
    degs = g.degrees()
    init: dict = {}
    for v in range(n):
        inv = (g.charges[v], degs[v],
               tuple(sorted(nw for _, nw in adj_norm[v])))
        init.setdefault(inv, []).append(v)
    cells = [init[s] for s in sorted(init)]
    cells = _refine(cells, adj_norm)

    best = [None]

    def descend(cells):
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    rest = [u for u in cell if u != v]
                    new_cells = cells[:idx] + [[v], rest] + cells[idx + 1:]
                    descend(_refine(new_cells, adj_norm))
                return
        order = [cell[0] for cell in cells]
        form = _serialize_with_switching(g, order)
        if best[0] is None or form < best[0]:
            best[0] = form

    descend(cells)
    return best[0]


def _variants(g: HGraph, flags: EquivFlags):
    out = [g]
    if flags.allow_galois and any(w.b for w in g.weights.values()):
        out.append(galois_conj(g))
    if flags.allow_negation:
        out.extend([negate(h) for h in out])
    return out


def _pack(form) -> bytes:
    def flat(x):
        if isinstance(x, tuple):
            return "(" + ",".join(flat(y) for y in x) + ")"
        return str(x)
    return flat(form).encode("ascii")


def _class_form(g: HGraph, flags: EquivFlags):
    """Cached minimum serialized form of g's class (componentwise)."""
    cache = g._cache.setdefault("form", {})
    got = cache.get(flags)
    if got is not None:
        return got
    comps = g.components()
    if len(comps) == 1:
        parts = (min(_min_form_connected(h) for h in _variants(g, flags)),)
    else:
        parts = tuple(sorted(
            min(_min_form_connected(h)
                for h in _variants(g.induced_subgraph(comp), flags))
            for comp in comps))
    cache[flags] = parts
    return parts


def canonical_key(g: HGraph, flags: EquivFlags = FULL) -> CanonicalKey:
    """Key equal across a full/strong equivalence class (per flags).

    Disconnected graphs canonicalize componentwise with components sorted
    by their serialized form; note global negation then applies per
    component, which treats a disjoint union's sign freedom independently
    on each part (used only for dedup during growing, before connectivity
    filtering).
    """
    cache = g._cache.setdefault("canon", {})
    got = cache.get(flags)
    if got is not None:
        return got
    parts = _class_form(g, flags)
    tag = "C" if len(parts) == 1 else "D"
    key = CanonicalKey(_pack((tag, g.ring.tag) + parts))
    cache[flags] = key
    return key


def canonical_representative(g: HGraph, flags: EquivFlags = FULL) -> HGraph:
    """The distinguished member of g's equivalence class (same key).

    Rebuilt from the minimum serialized form, so the result is independent
    of which class member it is computed from.
    """
    from .ring import QuadInt as QI

    def from_form(form):
        charges, edges = form
        wt = {(u, v): QI(a, b, g.ring) for (u, v, a, b) in edges}
        return HGraph(g.ring, charges, wt)

    out = None
    for form in _class_form(g, flags):
        piece = from_form(form)
        out = piece if out is None else _disjoint(out, piece)
    return out


def _disjoint(a: HGraph, b: HGraph) -> HGraph:
    wt = dict(a.weights)
    for (u, v), w in b.weights.items():
        wt[(u + a.n, v + a.n)] = w
    return HGraph(a.ring, a.charges + b.charges, wt)


def are_equivalent(a: HGraph, b: HGraph, flags: EquivFlags = FULL) -> bool:
    if a.ring != b.ring:
        if a.ring is RATIONAL:
            a = a.promote(b.ring)
        elif b.ring is RATIONAL:
            b = b.promote(a.ring)
        else:
            raise RingMismatch("graphs live in incompatible rings")
    if a.n != b.n or len(a.weights) != len(b.weights):
        return False
    return canonical_key(a, flags) == canonical_key(b, flags)


def _connected_subsets(g: HGraph, size: int):
    """All vertex subsets of the given size inducing a connected subgraph."""
    if size == 0:
        return
    nbrs = [g.neighbors(v) for v in range(g.n)]
    for root in range(g.n):
        # canonical generation: subsets whose minimum vertex is root
        stack = [(frozenset([root]), frozenset(
            u for u in nbrs[root] if u > root))]
        seen = set()
        while stack:
            cur, frontier = stack.pop()
            if len(cur) == size:
                yield tuple(sorted(cur))
                continue
            for u in sorted(frontier):
                nxt = cur | {u}
                if nxt in seen:
                    continue
                seen.add(nxt)
                new_frontier = (frontier | frozenset(
                    x for x in nbrs[u] if x > root)) - nxt
                # restrict to extensions above u to avoid duplicates
                stack.append((nxt, frozenset(x for x in new_frontier)))


def contains_up_to_equiv(g: HGraph, h: HGraph, flags: EquivFlags = FULL) -> bool:
    """True iff some induced subgraph of g is equivalent to h."""
    if h.n > g.n:
        return False
    if g.ring != h.ring:
        if h.ring is RATIONAL:
            h = h.promote(g.ring)
        elif g.ring is RATIONAL:
            g = g.promote(h.ring)
        else:
            raise RingMismatch("graphs live in incompatible rings")
    hkey = canonical_key(h, flags)
    habs_charges = tuple(sorted(abs(c) for c in h.charges))
    hnorms = tuple(sorted(w.norm() for w in h.weights.values()))
    subsets = (_connected_subsets(g, h.n) if h.is_connected()
               else itertools.combinations(range(g.n), h.n))
    for subset in subsets:
        sub = g.induced_subgraph(subset)
        if len(sub.weights) != len(hnorms):
            continue
        if tuple(sorted(abs(c) for c in sub.charges)) != habs_charges:
            continue
        if tuple(sorted(w.norm() for w in sub.weights.values())) != hnorms:
            continue
        if canonical_key(sub, flags) == hkey:
            return True
    return False
