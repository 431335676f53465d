"""Named graphs: maximal families, sporadics, excluded subgraphs, anchors.

Families are generated from index formulas; the sporadic and excluded
graphs ship as explicit adjacency data in ``fixed_graphs.json`` (the same
schema as the CLI graph file format) because the source figures encode
geometry, not adjacency.  ``validate()`` re-derives every structural
invariant (A^2 = 4I and maximality for the maximal entries, the
cyclotomic/non-cyclotomic polarity split for excluded entries) so a
transcription slip cannot survive silently.

ASCII name conventions (daggers and primes are not CLI-safe):

=========  ==============
name       figure name
=========  ==============
S_2t       S_2-dagger
S_4t       S_4-dagger
S_4tt      S_4-double-dagger
S_8p       S_8-prime
S_8t       S_8-dagger
S_8tt      S_8-dagger-dagger
S_8d       S_8-double-dagger
Ti_2k      T^(i)_2k
Tw_2k      T^(omega)_2k
Cpp_2k     C^{++}_2k
Cpm_2k     C^{+-}_2k
C_n        C_n (even: 1+i caps; odd: mixed family)
XE_j       j-th unnamed charged Eisenstein type-I graph
=========  ==============
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..graph import HGraph
from ..ring import (EISENSTEIN, GAUSSIAN, RATIONAL, QuadInt, RingId, one,
                    units)

# -- infinite families -----------------------------------------------------


def _ladder_block(wt, top_a, bot_a, top_b, bot_b, x: QuadInt):
    """Column block of the toral tessellation: weights x, x, -x, -x."""
    def put(u, v, w):
        if u < v:
            wt[(u, v)] = w
        else:
            wt[(v, u)] = w.conj()
    put(top_a, top_b, x)
    put(top_a, bot_b, x)
    put(bot_a, top_b, -x)
    put(bot_a, bot_b, -x)


def make_T(k: int, variant: str = "plain") -> HGraph:
    """The 2k-vertex torus family; variant closes with 1, i or omega."""
    if k < 3:
        raise ValueError("T family needs k >= 3")
    ring = {"plain": RATIONAL, "i": GAUSSIAN, "omega": EISENSTEIN}[variant]
    x_close = one(ring) if variant == "plain" else QuadInt(0, 1, ring)
    wt: dict = {}
    for j in range(k):
        x = x_close if j == k - 1 else one(ring)
        j2 = (j + 1) % k
        _ladder_block(wt, j, k + j, j2, k + j2, x)
    return HGraph(ring, [0] * (2 * k), wt)


def make_C(k: int) -> HGraph:
    """2k-vertex family with weight-(1+i) end caps (Gaussian)."""
    if k < 2:
        raise ValueError("C family needs k >= 2")
    ring = GAUSSIAN
    cap = QuadInt(1, 1, ring)
    # vertices: 0 = left cap, columns j=1..k-1 at (2j-1, 2j), 2k-1 = right cap
    wt: dict = {}
    top = lambda j: 2 * j - 1
    bot = lambda j: 2 * j
    wt[(0, top(1))] = cap.conj()        # w(top, L) = 1+i
    wt[(0, bot(1))] = cap.conj()
    for j in range(1, k - 1):
        _ladder_block(wt, top(j), bot(j), top(j + 1), bot(j + 1), one(ring))
    right = 2 * k - 1
    wt[(top(k - 1), right)] = cap       # w(top, R) = 1+i
    wt[(bot(k - 1), right)] = -cap
    return HGraph(ring, [0] * (2 * k), wt)


def make_C_charged(k: int, same_sign: bool) -> HGraph:
    """2k-vertex charged family C^{++} (same_sign) or C^{+-} (rational)."""
    if k < 2:
        raise ValueError("charged C family needs k >= 2")
    ring = RATIONAL
    wt: dict = {}
    top = lambda j: 2 * j
    bot = lambda j: 2 * j + 1
    for j in range(k - 1):
        _ladder_block(wt, top(j), bot(j), top(j + 1), bot(j + 1), one(ring))
    charges = [0] * (2 * k)
    charges[top(0)] = charges[bot(0)] = 1
    wt[(top(0), bot(0))] = one(ring)
    if same_sign:
        charges[top(k - 1)] = charges[bot(k - 1)] = 1
        wt[(top(k - 1), bot(k - 1))] = -one(ring)
    else:
        charges[top(k - 1)] = charges[bot(k - 1)] = -1
        wt[(top(k - 1), bot(k - 1))] = one(ring)
    return HGraph(ring, charges, wt)


def make_C_odd(k: int) -> HGraph:
    """(2k+1)-vertex family: 1+i cap on one end, charged pair on the other."""
    if k < 1:
        raise ValueError("odd C family needs k >= 1")
    ring = GAUSSIAN
    cap = QuadInt(1, 1, ring)
    n = 2 * k + 1
    # 0 = cap vertex; columns j=1..k at (2j-1, 2j); column k is the charged pair
    wt: dict = {}
    top = lambda j: 2 * j - 1
    bot = lambda j: 2 * j
    wt[(0, top(1))] = cap.conj()
    wt[(0, bot(1))] = cap.conj()
    for j in range(1, k):
        _ladder_block(wt, top(j), bot(j), top(j + 1), bot(j + 1), one(ring))
    charges = [0] * n
    charges[top(k)] = charges[bot(k)] = 1
    wt[(top(k), bot(k))] = -one(ring)
    return HGraph(ring, charges, wt)


def make_O_cycle(n: int, s: QuadInt) -> HGraph:
    """n-cycle with one edge of weight s (a unit), the rest weight 1."""
    if n < 3:
        raise ValueError("cycles need n >= 3")
    if not s.is_unit():
        raise ValueError("the marked edge weight must be a unit")
    ring = s.ring
    wt = {(j, j + 1): one(ring) for j in range(n - 1)}
    wt[(0, n - 1)] = s
    return HGraph(ring, [0] * n, wt)


# -- path anchors ----------------------------------------------------------


def make_P(l: int, r: int) -> HGraph:
    """Path v_-l .. v_r plus the doubled middle vertex v_0'.

    Vertex order: v_j at index j + l for -l <= j <= r; v_0' last.
    """
    if l < 0 or r < 0 or l + r < 1:
        raise ValueError("need l, r >= 0 with l + r >= 1")
    ring = RATIONAL
    n = l + r + 2
    wt: dict = {}
    for j in range(l + r):
        wt[(j, j + 1)] = one(ring)
    mid = l + r + 1  # v_0'
    if l >= 1:
        wt[(l - 1, mid)] = one(ring)      # w(v_-1, v_0') = 1
    if r >= 1:
        wt[(l + 1, mid)] = -one(ring)     # w(v_0', v_1) = -1
    return HGraph(ring, [0] * n, wt)


def make_P_primed(l: int, r: int) -> HGraph:
    """Full two-row ladder on columns -l .. r (2(l+r+1) vertices)."""
    if l < 0 or r < 0 or l + r < 1:
        raise ValueError("need l, r >= 0 with l + r >= 1")
    ring = RATIONAL
    cols = l + r + 1
    wt: dict = {}
    for j in range(cols - 1):
        _ladder_block(wt, j, cols + j, j + 1, cols + j + 1, one(ring))
    return HGraph(ring, [0] * (2 * cols), wt)


def p_lr_primed_index(l: int, r: int, j: int, primed: bool) -> int:
    """Index of v_j (or v_j') in make_P_primed's vertex order."""
    if not -l <= j <= r:
        raise ValueError("column out of range")
    return (l + r + 1 if primed else 0) + (j + l)


def make_P_odd(r: int) -> HGraph:
    """v_0 --(1+i)-- v_1 -- ... -- v_r (r+1 vertices, Gaussian)."""
    if r < 1:
        raise ValueError("need r >= 1")
    ring = GAUSSIAN
    wt = {(0, 1): QuadInt(1, -1, ring)}   # w(v_1, v_0) = 1+i
    for j in range(1, r):
        wt[(j, j + 1)] = one(ring)
    return HGraph(ring, [0] * (r + 1), wt)


def make_P_odd_primed(r: int) -> HGraph:
    """Cap vertex plus a full ladder: v_0, v_1..v_r, v_1'..v_r'."""
    if r < 1:
        raise ValueError("need r >= 1")
    ring = GAUSSIAN
    cap = QuadInt(1, -1, ring)            # entry a(v_0, v_1) = conj(1+i)
    wt = {(0, 1): cap, (0, r + 1): cap}
    for j in range(1, r):
        _ladder_block(wt, j, r + j, j + 1, r + j + 1, one(ring))
    return HGraph(ring, [0] * (2 * r + 1), wt)


def p_odd_cap_weight() -> QuadInt:
    """The 1+i appearing in the hollow-vertex identities of P_{2r+1}."""
    return QuadInt(1, 1, GAUSSIAN)


def make_P_charged(r: int) -> HGraph:
    """Charge -1 vertex followed by a unit path: r vertices over Z."""
    if r < 1:
        raise ValueError("need r >= 1")
    ring = RATIONAL
    charges = [0] * r
    charges[0] = -1
    wt = {(j, j + 1): one(ring) for j in range(r - 1)}
    return HGraph(ring, charges, wt)


def make_P_charged_primed(r: int) -> HGraph:
    """Two-row ladder with a charge -1 pair: v_1..v_r, v_1'..v_r'."""
    if r < 1:
        raise ValueError("need r >= 1")
    ring = RATIONAL
    charges = [0] * (2 * r)
    charges[0] = charges[r] = -1
    wt = {(0, r): -one(ring)}             # w(v_1, v_1') = -1
    for j in range(r - 1):
        _ladder_block(wt, j, r + j, j + 1, r + j + 1, one(ring))
    return HGraph(ring, charges, wt)


# -- fixed graphs (sporadics and excluded subgraphs) -------------------------

SPORADIC_NAMES = (
    "S_1", "S_2", "S_2t", "S_4", "S_4t", "S_4tt", "S_5", "S_6", "S_6t",
    "S_7", "S_8", "S_8p", "S_8t", "S_8tt", "S_8d", "S_10", "S_12",
    "S_14", "S_16",
)

EXCLUDED_NAMES = (
    tuple(f"XA_{j}" for j in range(1, 3))
    + tuple(f"YA_{j}" for j in range(1, 8))
    + tuple(f"XB_{j}" for j in range(1, 11))
    + tuple(f"YB_{j}" for j in range(1, 5))
    + tuple(f"XC_{j}" for j in range(1, 17))
    + tuple(f"YC_{j}" for j in range(1, 9))
    + tuple(f"YD_{j}" for j in range(1, 9))
    + tuple(f"XE_{j}" for j in range(1, 17))
    + tuple(f"YE_{j}" for j in range(1, 10))
)

_UNICODE_ALIASES = {
    "S_2†": "S_2t", "S_4†": "S_4t", "S_4‡": "S_4tt",
    "S_8′": "S_8p", "S_8'": "S_8p", "S_8†": "S_8t",
    "S_8††": "S_8tt", "S_8‡": "S_8d",
}

_fixed_cache: dict | None = None


def _fixed() -> dict:
    global _fixed_cache
    if _fixed_cache is None:
        text = (resources.files(__package__) / "fixed_graphs.json").read_text()
        raw = json.loads(text)
        _fixed_cache = {name: HGraph.from_json_obj(obj)
                        for name, obj in raw.items()}
    return _fixed_cache


def sporadic(name: str) -> HGraph:
    name = _UNICODE_ALIASES.get(name, name)
    if name not in SPORADIC_NAMES:
        raise KeyError(f"unknown sporadic {name!r}")
    return _fixed()[name]


def excluded(name: str) -> HGraph:
    if name not in EXCLUDED_NAMES:
        raise KeyError(f"unknown excluded subgraph {name!r}")
    return _fixed()[name]


# -- instantiated-name access (CLI surface) ---------------------------------


def emit(name: str, param=None) -> HGraph:
    """Build a catalog graph from an instantiated or parametric name.

    Accepts sporadics (S_14), excluded names (YA_4), instantiated family
    names (T_10, Ti_8, Tw_6, C_4, C_5, Cpp_6, Cpm_4), anchors (P_0_3,
    Pp_1_2, Podd_3, Pch_3 and primed variants), and family letters with an
    explicit ``param`` (T with param=5).
    """
    name = _UNICODE_ALIASES.get(name, name)
    if name in SPORADIC_NAMES:
        return sporadic(name)
    if name in EXCLUDED_NAMES:
        return excluded(name)
    head, _, tail = name.partition("_")
    from_name = param is None and bool(tail)
    if from_name:
        try:
            param = tuple(int(t) for t in tail.split("_"))
        except ValueError:
            raise KeyError(f"unknown catalog name {name!r}") from None
        if len(param) == 1:
            param = param[0]
    # numbers embedded in names count vertices; an explicit param is the
    # family index k
    if head in ("T", "Ti", "Tw"):
        k = int(param)
        if from_name:
            if k % 2:
                raise ValueError("T families have an even vertex count")
            k //= 2
        variant = {"T": "plain", "Ti": "i", "Tw": "omega"}[head]
        return make_T(k, variant)
    if head == "C":
        m = int(param) if from_name else 2 * int(param)
        return make_C(m // 2) if m % 2 == 0 else make_C_odd((m - 1) // 2)
    if head in ("Cpp", "Cpm"):
        k = int(param) // 2 if from_name else int(param)
        return make_C_charged(k, same_sign=head == "Cpp")
    if head == "P" and isinstance(param, tuple) and len(param) == 2:
        return make_P(*param)
    if head == "Pp" and isinstance(param, tuple) and len(param) == 2:
        return make_P_primed(*param)
    if head == "Podd":
        return make_P_odd(int(param))
    if head == "Poddp":
        return make_P_odd_primed(int(param))
    if head == "Pch":
        return make_P_charged(int(param))
    if head == "Pchp":
        return make_P_charged_primed(int(param))
    if head == "O" and isinstance(param, tuple) and len(param) >= 1:
        # O_n with optional trailing unit selector handled by the CLI
        return make_O_cycle(param[0], one(RATIONAL))
    raise KeyError(f"unknown catalog name {name!r}")


def list_names() -> list[str]:
    """Every fixed name plus the family/anchor name patterns."""
    fams = ["T_<2k> (k>=3)", "Ti_<2k> (k>=3)", "Tw_<2k> (k>=3)",
            "C_<2k> (k>=2)", "C_<2k+1> (k>=1)", "Cpp_<2k> (k>=2)",
            "Cpm_<2k> (k>=2)", "P_<l>_<r>", "Pp_<l>_<r>", "Podd_<r>",
            "Poddp_<r>", "Pch_<r>", "Pchp_<r>", "O_<n>"]
    return list(SPORADIC_NAMES) + list(EXCLUDED_NAMES) + fams


# -- classification lists ----------------------------------------------------


def maximal_names_for_ring(ring: RingId, max_family_vertices: int) -> list[str]:
    """Instantiated names of every maximal graph over the ring, with the
    infinite families cut at the given vertex count."""
    names: list[str] = []
    if ring is GAUSSIAN:
        sp = ["S_1", "S_2", "S_4", "S_4t", "S_7", "S_8", "S_8p",
              "S_8t", "S_8tt", "S_8d", "S_14", "S_16"]
        fams = [("T", 6), ("Ti", 6), ("C", 4), ("Cpp", 4), ("Cpm", 4)]
        odd = True
    elif ring is EISENSTEIN:
        sp = ["S_1", "S_2", "S_2t", "S_4tt", "S_5", "S_6", "S_6t",
              "S_7", "S_8", "S_8p", "S_10", "S_12", "S_14", "S_16"]
        fams = [("T", 6), ("Tw", 6), ("Cpp", 4), ("Cpm", 4)]
        odd = False
    else:
        sp = ["S_1", "S_2", "S_7", "S_8", "S_8p", "S_14", "S_16"]
        fams = [("T", 6), ("Cpp", 4), ("Cpm", 4)]
        odd = False
    names.extend(sp)
    for head, start in fams:
        m = start
        while m <= max_family_vertices:
            names.append(f"{head}_{m}")
            m += 2
    if odd:
        m = 3
        while m <= max_family_vertices:
            names.append(f"C_{m}")
            m += 2
    return names


def maximals_for_ring(ring: RingId, max_family_vertices: int) -> list[tuple[str, HGraph]]:
    out = []
    for name in maximal_names_for_ring(ring, max_family_vertices):
        g = emit(name)
        out.append((name, g.promote(ring) if g.ring is RATIONAL else g))
    return out


# -- exclusion lists ---------------------------------------------------------


@dataclass
class ExclusionList:
    name: str
    ring: RingId
    members: list  # (name, HGraph)

    def graphs(self):
        return [g for _, g in self.members]


def _charged_vertex_members(ring, with_two=True):
    out = [("charge+1", HGraph(ring, [1], {})),
           ("charge-1", HGraph(ring, [-1], {}))]
    if with_two:
        out += [("charge+2", HGraph(ring, [2], {})),
                ("charge-2", HGraph(ring, [-2], {}))]
    return out


def exclusion_list(name: str) -> ExclusionList:
    """The named exclusion lists used by the growing computations.

    Type-I (non-cyclotomic) members can never occur inside the cyclotomic
    candidates the growing process keeps, so carrying them is harmless;
    they are retained to mirror the stated lists.
    """
    def graphs_named(names):
        return [(n, excluded(n)) for n in names]

    ya = [f"YA_{j}" for j in range(1, 8)]
    xa = ["XA_1", "XA_2"]
    xb = [f"XB_{j}" for j in range(1, 11)]
    yb = [f"YB_{j}" for j in range(1, 5)]
    xc = [f"XC_{j}" for j in range(1, 17)]
    yc = [f"YC_{j}" for j in range(1, 9)]
    yd = [f"YD_{j}" for j in range(1, 9)]
    xe = [f"XE_{j}" for j in range(1, 17)]
    ye = [f"YE_{j}" for j in range(1, 10)]
    if name == "L1":
        members = _charged_vertex_members(GAUSSIAN, with_two=False) \
            + graphs_named(xa + ya)
        return ExclusionList("L1", GAUSSIAN, members)
    if name == "L2":
        members = _charged_vertex_members(GAUSSIAN) \
            + graphs_named(xa + ya + xb + yb)
        return ExclusionList("L2", GAUSSIAN, members)
    if name == "L3":
        members = graphs_named(xa + ya + xb + yb + xc + yc)
        return ExclusionList("L3", GAUSSIAN, members)
    if name == "Lw_uncharged":
        members = _charged_vertex_members(EISENSTEIN) \
            + graphs_named(xa + yd)
        return ExclusionList("Lw_uncharged", EISENSTEIN, members)
    if name == "Lw_charged":
        members = graphs_named(xa + yd + xe + ye)
        return ExclusionList("Lw_charged", EISENSTEIN, members)
    raise KeyError(f"unknown exclusion list {name!r}")


# -- containment tables -------------------------------------------------------


@dataclass
class ContainmentTable:
    name: str
    ring: RingId
    rows: list  # (excluded_name, [maximal names])


_TABLES = {
    "tab3": (GAUSSIAN, [
        ("YA_1", ["S_14", "S_16"]),
        ("YA_2", ["S_14", "S_16"]),
        ("YA_3", ["S_14", "S_16"]),
        ("YA_4", ["T_6", "S_7"]),
        ("YA_5", ["Ti_6", "S_8t"]),
        ("YA_6", ["Ti_8", "S_8tt"]),
        ("YA_7", ["Ti_10"]),
    ]),
    "tab4": (GAUSSIAN, [
        ("YB_1", ["S_8d"]),
        ("YB_2", ["S_8d"]),
        ("YB_3", ["S_8tt"]),
        ("YB_4", ["S_2"]),
    ]),
    "tab5": (GAUSSIAN, [
        ("YC_1", ["Cpm_4", "S_4", "S_4t", "S_7", "S_8", "S_8p"]),
        ("YC_2", ["S_4"]),
        ("YC_3", ["C_3"]),
        ("YC_4", ["Cpp_6", "S_7"]),
        ("YC_5", ["Cpm_6", "S_8p"]),
        ("YC_6", ["S_7", "S_8p"]),
        ("YC_7", ["S_4t"]),
        ("YC_8", ["S_1"]),
    ]),
    "tab6": (EISENSTEIN, [
        ("YD_1", ["S_12", "S_14", "S_16"]),
        ("YD_2", ["S_12", "S_14", "S_16"]),
        ("YD_3", ["S_12", "S_14", "S_16"]),
        ("YD_4", ["S_5", "T_6", "S_7"]),
        ("YD_5", ["Tw_6"]),
        ("YD_6", ["Tw_8"]),
        ("YD_7", ["Tw_8", "S_10", "S_12"]),
        ("YD_8", ["Tw_10"]),
    ]),
    "tab7": (EISENSTEIN, [
        ("YE_1", ["S_2"]),
        ("YE_2", ["S_4tt"]),
        ("YE_3", ["Cpm_4", "S_6", "S_6t", "S_7", "S_8", "S_8p"]),
        ("YE_4", ["S_2t"]),
        ("YE_5", ["S_5", "Cpp_6", "S_7"]),
        ("YE_6", ["Cpm_6", "S_8p"]),
        ("YE_7", ["S_6t", "S_7", "S_8p"]),
        ("YE_8", ["S_5"]),
        ("YE_9", ["S_1"]),
    ]),
}


def containment_table(name: str) -> ContainmentTable:
    if name not in _TABLES:
        raise KeyError(f"unknown table {name!r}")
    ring, rows = _TABLES[name]
    return ContainmentTable(name, ring, [(e, list(ms)) for e, ms in rows])


# -- validation gate -----------------------------------------------------------


def validate(max_family_k: int = 4) -> list[str]:
    """Re-derive the structural invariants of every catalog entry.

    Returns a list of human-readable failures (empty when the catalog is
    sound).  Family generators are spot-checked at k <= max_family_k; the
    fixed data is checked in full.
    """
    from .. import spectra
    from ..equiv import FULL, canonical_key

    problems = []

    def expect(cond, msg):
        if not cond:
            problems.append(msg)

    maximal_fixed = [name for name in SPORADIC_NAMES]
    for name in maximal_fixed:
        g = sporadic(name)
        expect(g.is_connected(), f"{name}: not connected")
        expect(g.square_is_4I(), f"{name}: A^2 != 4I")
        verdict = spectra.is_cyclotomic(g, cross_check=True)
        expect(verdict.is_cyclotomic, f"{name}: not cyclotomic")
        expect(spectra.is_maximal(g), f"{name}: not maximal")
    # five type-II entries coincide with their own containing maximal
    self_maximal = {"YB_4", "YC_8", "YE_1", "YE_4", "YE_9"}
    for name in EXCLUDED_NAMES:
        g = excluded(name)
        verdict = spectra.is_cyclotomic(g, cross_check=True)
        if name.startswith("X"):
            expect(not verdict.is_cyclotomic, f"{name}: unexpectedly cyclotomic")
        else:
            expect(verdict.is_cyclotomic, f"{name}: unexpectedly non-cyclotomic")
            expect(g.is_connected(), f"{name}: not connected")
            if name not in self_maximal:
                expect(not spectra.is_maximal(g), f"{name}: unexpectedly maximal")
    for k in range(3, max_family_k + 3):
        for variant in ("plain", "i", "omega"):
            g = make_T(k, variant)
            expect(g.square_is_4I(), f"T({k},{variant}): A^2 != 4I")
    for k in range(2, max_family_k + 2):
        expect(make_C(k).square_is_4I(), f"C_{2*k}: A^2 != 4I")
        expect(make_C_charged(k, True).square_is_4I(), f"Cpp_{2*k}: A^2 != 4I")
        expect(make_C_charged(k, False).square_is_4I(), f"Cpm_{2*k}: A^2 != 4I")
        expect(make_C_odd(k).square_is_4I(), f"C_{2*k+1}: A^2 != 4I")
    expect(make_C_odd(1).square_is_4I(), "C_3: A^2 != 4I")
    # anchors are cyclotomic and strictly non-maximal
    for g, label in [(make_P(1, 2), "P_1_2"), (make_P(0, 3), "P_0_3"),
                     (make_P_odd(3), "Podd_3"), (make_P_charged(3), "Pch_3")]:
        expect(spectra.is_cyclotomic(g).is_cyclotomic, f"{label}: not cyclotomic")
        expect(not spectra.is_maximal(g), f"{label}: unexpectedly maximal")
    # anchors embed in their families
    from ..equiv import contains_up_to_equiv
    expect(contains_up_to_equiv(make_T(4, "plain"), make_P(1, 1).promote(RATIONAL)),
           "P_1_1 does not embed in T_8")
    return problems
