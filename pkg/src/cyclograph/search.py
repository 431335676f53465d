"""The growing process and the classification verifiers.

``grow`` runs the paper-style breadth-first closure over one-vertex
attachments, keeping candidates that are connected, cyclotomic and free of
the configured excluded subgraphs, deduplicated by canonical key under
full equivalence.  ``verify_type2`` runs the unrestricted closure from a
cyclotomic graph and checks everything reachable embeds in a fixed list of
maximal graphs.  ``verify_classification`` enumerates all connected
cyclotomic graphs over a ring up to a size bound and checks each one
embeds into some catalog maximal.

Pruning order inside the candidate pipeline: degree budget (free, inside
the attachment enumerator), canonical dedup, exact PSD cyclotomicity,
exclusion containment.  The exclusion scan is the most expensive step
here because the PSD elimination undercuts a Sturm count by an order of
magnitude, so it runs last and only once per new class.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field

from . import catalog, spectra
from .equiv import (FULL, CanonicalKey, canonical_key,
                    canonical_representative)
from .graph import HGraph
from .ring import QuadInt, RingId, orbit_representative, units


@dataclass
class GrowConfig:
    ring: RingId
    charge_set: tuple
    weight_set: tuple
    exclusions: object            # catalog.ExclusionList or None
    max_n: int
    seeds: tuple = ()             # default: single vertices per charge
    require_connected: bool = True

    def __post_init__(self):
        self.charge_set = tuple(sorted(set(int(c) for c in self.charge_set)))
        self.weight_set = tuple(sorted(set(self.weight_set),
                                       key=lambda w: (w.norm(), w.a, w.b)))
        if any(abs(c) > 2 for c in self.charge_set):
            raise ValueError("charges must lie in {0,+-1,+-2}")
        ws = set(self.weight_set)
        for w in self.weight_set:
            if w.ring != self.ring:
                raise ValueError("weight outside the configured ring")
            if not w or w.norm() > 4:
                raise ValueError("weights must be nonzero of norm <= 4")
            if w.conj() not in ws:
                raise ValueError("weight set not closed under conjugation")
            for u in units(self.ring):
                if u * w not in ws:
                    raise ValueError(
                        "weight set not closed under unit multiplication")
        if not self.seeds:
            # one seed per charge class (-c is equivalent to c)
            charges = sorted(set(abs(c) for c in self.charge_set)) or [0]
            self.seeds = tuple(HGraph(self.ring, [c], {}) for c in charges)

    def describe(self) -> dict:
        return {
            "ring": self.ring.tag,
            "charges": list(self.charge_set),
            "weights": [[w.a, w.b] for w in self.weight_set],
            "exclusions": self.exclusions.name if self.exclusions else None,
            "max_n": self.max_n,
            "require_connected": self.require_connected,
        }


def config_for_exclusions(name: str, max_n: int, seeds=(),
                          weight_norm_cap: int = 1) -> GrowConfig:
    """Convenience constructor for the paper's L-free growing runs."""
    from .ring import elements_of_norm_at_most
    excl = catalog.exclusion_list(name)
    ring = excl.ring
    weights = tuple(w for w in elements_of_norm_at_most(ring, 4)
                    if w.norm() <= weight_norm_cap)
    charges = (0,) if name in ("L1", "L2", "Lw_uncharged") else (-1, 0, 1)
    return GrowConfig(ring, charges, weights, excl, max_n, seeds=tuple(seeds))


def full_config(ring: RingId, max_n: int, seeds=()) -> GrowConfig:
    """Ring-complete alphabet: every weight of norm <= 4, charges 0,+-1,+-2."""
    from .ring import elements_of_norm_at_most
    return GrowConfig(ring, (-2, -1, 0, 1, 2),
                      tuple(elements_of_norm_at_most(ring, 4)),
                      None, max_n, seeds=tuple(seeds))


@dataclass
class GrowReport:
    config: dict
    counts_by_n: dict
    representatives: list         # (key, HGraph) sorted by (n, key)
    frontier_exhausted: bool
    rejected_counts: dict = field(default_factory=dict)

    def classes_of_size(self, n: int):
        return [g for k, g in self.representatives if g.n == n]

    def to_json_obj(self) -> dict:
        return {
            "config": self.config,
            "counts_by_n": {str(n): c for n, c in sorted(self.counts_by_n.items())},
            "frontier_exhausted": self.frontier_exhausted,
            "representatives": [
                {"key": k.hex(), "graph": g.to_json_obj()}
                for k, g in self.representatives
            ],
        }


class _ExclusionFilter:
    """Containment tests against an exclusion list, incremental-friendly.

    Non-cyclotomic members never occur inside the cyclotomic candidates the
    growing keeps (interlacing), so only cyclotomic members are scanned.
    """

    def __init__(self, exclusions, ring):
        self.members = []
        self.charge_bound = None
        if exclusions is None:
            return
        for name, h in exclusions.members:
            if h.ring != ring:
                h = h.promote(ring)
            if not spectra.is_cyclotomic_fast(h):
                continue
            if h.n == 1 and not h.weights:
                c = abs(h.charges[0])
                if self.charge_bound is None or c < self.charge_bound:
                    self.charge_bound = c
                continue
            self.members.append((
                h.n,
                tuple(sorted(abs(c) for c in h.charges)),
                tuple(sorted(w.norm() for w in h.weights.values())),
                canonical_key(h, FULL),
                name,
            ))
        self.members.sort()

    def blocks(self, g: HGraph, new_vertex=None) -> bool:
        """True if g contains an excluded member (optionally only checking
        subsets through new_vertex, valid when g minus that vertex already
        passed)."""
        if self.charge_bound is not None:
            if new_vertex is not None:
                if abs(g.charges[new_vertex]) >= self.charge_bound:
                    return True
            elif any(abs(c) >= self.charge_bound for c in g.charges):
                return True
        for hn, habs, hnorms, hkey, _ in self.members:
            if hn > g.n:
                continue
            for subset in _connected_subsets_through(g, hn, new_vertex):
                sub = g.induced_subgraph(subset)
                if len(sub.weights) != len(hnorms):
                    continue
                if tuple(sorted(abs(c) for c in sub.charges)) != habs:
                    continue
                if tuple(sorted(w.norm() for w in sub.weights.values())) != hnorms:
                    continue
                if canonical_key(sub, FULL) == hkey:
                    return True
        return False


def _connected_subsets_through(g: HGraph, size: int, required=None):
    """Connected size-subsets, optionally only those containing ``required``."""
    nbrs = [g.neighbors(v) for v in range(g.n)]
    if size == 1:
        for v in ([required] if required is not None else range(g.n)):
            yield (v,)
        return

    def expand(root, restrict_above):
        # grow from root; with restrict_above only vertices > root join,
        # making root the subset minimum (each subset appears once overall)
        seen = set()
        allowed = (lambda x: x > root) if restrict_above else (lambda x: True)
        start = frozenset([root])
        stack = [(start, frozenset(u for u in nbrs[root] if allowed(u)))]
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
                grown = frontier | frozenset(x for x in nbrs[u] if allowed(x))
                stack.append((nxt, grown - nxt))

    if required is not None:
        yield from expand(required, restrict_above=False)
    else:
        for root in range(g.n):
            yield from expand(root, restrict_above=True)


def _expand_parent(parent, config, filt, seen):
    """Candidate pipeline below one parent; returns kept (key, rep) pairs.

    ``seen`` is read-only here: duplicates discovered within the same level
    by other parents are re-derived and merged away by the caller, which
    keeps the result independent of scheduling.
    """
    out = []
    bad = []
    local_seen = set()
    for charge, incident in spectra.attachment_candidates(
            parent, config.weight_set, config.charge_set):
        h = parent.attach_vertex(charge, incident)
        # cyclotomicity first: the coefficient-sign test is cheaper than a
        # canonical key and rejects the bulk of the candidates
        if not spectra.is_cyclotomic_fast(h):
            continue
        key = canonical_key(h, FULL)
        if key in seen or key in local_seen:
            continue
        local_seen.add(key)
        if filt.blocks(h, new_vertex=h.n - 1):
            bad.append(key)
            continue
        out.append((key, canonical_representative(h, FULL)))
    return out, bad


def grow(config: GrowConfig, progress=None, checkpoint=None,
         jobs: int = 1) -> GrowReport:
    """Breadth-first closure over one-vertex attachments.

    Candidates are kept iff connected (per config), cyclotomic (exact PSD
    oracle) and exclusion-free; classes are deduplicated by canonical key
    under full equivalence, with the canonical representative stored.
    Deterministic: the report depends only on the config, not on ``jobs``.
    """
    filt = _ExclusionFilter(config.exclusions, config.ring)
    seen: set = set()
    kept: dict = {}
    frontier: list = []
    rejected = {"not_cyclotomic": 0, "excluded": 0, "duplicate": 0}
    state = _load_checkpoint(checkpoint) if checkpoint else None
    if state is not None:
        seen = state["seen"]
        kept = state["kept"]
        frontier = state["frontier"]
        level = state["level"]
    else:
        level = None
        for seed in config.seeds:
            if seed.ring != config.ring:
                seed = seed.promote(config.ring)
            key = canonical_key(seed, FULL)
            if key in seen:
                continue
            seen.add(key)
            if config.require_connected and not seed.is_connected():
                continue
            if not spectra.is_cyclotomic_fast(seed):
                continue
            if filt.blocks(seed):
                continue
            rep = canonical_representative(seed, FULL)
            kept[key] = rep
            frontier.append(rep)
        level = max((g.n for g in frontier), default=0)
        if checkpoint:
            _save_checkpoint(checkpoint, config, level, seen, kept, frontier)

    while frontier and level < config.max_n:
        level += 1
        parents = [g for g in sorted(frontier, key=lambda h: canonical_key(h, FULL))
                   if g.n < config.max_n]
        if jobs > 1 and len(parents) > 1:
            import multiprocessing
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(jobs) as pool:
                batches = pool.starmap(
                    _expand_parent,
                    [(g, config, filt, seen) for g in parents])
        else:
            batches = [_expand_parent(g, config, filt, seen) for g in parents]
        new_frontier = []
        for kept_batch, bad_batch in batches:
            for key in bad_batch:
                if key not in seen:
                    seen.add(key)
                    rejected["filtered"] = rejected.get("filtered", 0) + 1
            for key, rep in kept_batch:
                if key in seen:
                    rejected["duplicate"] += 1
                    continue
                seen.add(key)
                kept[key] = rep
                new_frontier.append(rep)
        frontier = sorted(new_frontier, key=lambda h: canonical_key(h, FULL))
        if progress:
            progress(level, len(new_frontier))
        if checkpoint:
            _save_checkpoint(checkpoint, config, level, seen, kept, frontier)

    counts: dict = {}
    for g in kept.values():
        counts[g.n] = counts.get(g.n, 0) + 1
    reps = sorted(kept.items(), key=lambda kv: (kv[1].n, kv[0]))
    return GrowReport(config.describe(), counts, reps,
                      frontier_exhausted=not frontier, rejected_counts=rejected)


def _save_checkpoint(path, config, level, seen, kept, frontier):
    obj = {
        "config": config.describe(),
        "level": level,
        "seen": sorted(k.bytes.decode("ascii") for k in seen),
        "kept": [{"key": k.bytes.decode("ascii"), "graph": g.to_json_obj()}
                 for k, g in sorted(kept.items())],
        "frontier": [g.to_json_obj() for g in frontier],
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(obj, fh)
    os.replace(tmp, path)


def _load_checkpoint(path):
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        obj = json.load(fh)
    return {
        "level": obj["level"],
        "seen": {CanonicalKey(s.encode("ascii")) for s in obj["seen"]},
        "kept": {CanonicalKey(e["key"].encode("ascii")):
                 HGraph.from_json_obj(e["graph"]) for e in obj["kept"]},
        "frontier": [HGraph.from_json_obj(o) for o in obj["frontier"]],
    }


# -- embedding into maximal graphs -------------------------------------------

_subkey_cache: dict = {}


def subgraph_keys(m: HGraph, size: int) -> frozenset:
    """Canonical keys of all connected size-vertex induced subgraphs of m."""
    mkey = (canonical_key(m, FULL), size)
    got = _subkey_cache.get(mkey)
    if got is not None:
        return got
    keys = set()
    for subset in _connected_subsets_through(m, size):
        keys.add(canonical_key(m.induced_subgraph(subset), FULL))
    out = frozenset(keys)
    _subkey_cache[mkey] = out
    return out


def embeds_in(g: HGraph, m: HGraph) -> bool:
    """g equivalent to an induced subgraph of m (g connected)."""
    if g.n > m.n:
        return False
    if g.ring != m.ring:
        g = g.promote(m.ring)
    return canonical_key(g, FULL) in subgraph_keys(m, g.n)


@dataclass
class Type2Result:
    ok: bool
    counterexample: HGraph | None
    classes_checked: int


def verify_type2(h: HGraph, expected_maximals, config: GrowConfig) -> Type2Result:
    """Closure of one-vertex cyclotomic extensions of h, each checked to
    embed in some member of expected_maximals.

    Returns ok=False with the first reachable graph that does not embed.
    The closure is capped at the largest expected maximal's size; anything
    forced beyond that is itself a counterexample.
    """
    if h.ring != config.ring:
        h = h.promote(config.ring)
    if not spectra.is_cyclotomic_fast(h):
        raise ValueError("type-II closure needs a cyclotomic seed")
    maximals = [m.promote(config.ring) if m.ring != config.ring else m
                for m in expected_maximals]
    cap = max((m.n for m in maximals), default=0)
    seen = {canonical_key(h, FULL)}
    frontier = [h]
    checked = 0
    if not any(embeds_in(h, m) for m in maximals):
        return Type2Result(False, h, 1)
    while frontier:
        new = []
        for g in frontier:
            for charge, incident in spectra.attachment_candidates(
                    g, config.weight_set, config.charge_set):
                cand = g.attach_vertex(charge, incident)
                key = canonical_key(cand, FULL)
                if key in seen:
                    continue
                seen.add(key)
                if not spectra.is_cyclotomic_fast(cand):
                    continue
                checked += 1
                if cand.n > cap or not any(embeds_in(cand, m) for m in maximals):
                    return Type2Result(False, cand, checked)
                new.append(cand)
        frontier = new
    return Type2Result(True, None, checked)


def verify_table(name: str, progress=None) -> dict:
    """Re-derive one containment table row by row (and in full)."""
    table = catalog.containment_table(name)
    config = full_config(table.ring, max_n=20)
    results = {}
    for excluded_name, maximal_names in table.rows:
        h = catalog.excluded(excluded_name)
        if h.ring != table.ring:
            h = h.promote(table.ring)
        ms = [catalog.emit(mn) for mn in maximal_names]
        res = verify_type2(h, ms, config)
        results[excluded_name] = res
        if progress:
            progress(excluded_name, res.ok)
    return results


@dataclass
class ClassificationReport:
    ring_tag: str
    max_n: int
    counts_by_n: dict
    orphans: list                  # HGraphs embedding in no catalog maximal
    maximal_names_found: list      # catalog names realized by enumerated classes

    @property
    def ok(self) -> bool:
        return not self.orphans

    def to_json_obj(self) -> dict:
        return {
            "ring": self.ring_tag,
            "max_n": self.max_n,
            "counts_by_n": {str(n): c for n, c in sorted(self.counts_by_n.items())},
            "orphans": [g.to_json_obj() for g in self.orphans],
            "maximal_names_found": self.maximal_names_found,
        }


def verify_classification(ring: RingId, max_n: int, progress=None) -> ClassificationReport:
    """Enumerate every connected cyclotomic class up to max_n and check each
    embeds into a catalog maximal (families instantiated to 2*max_n + 2)."""
    config = full_config(ring, max_n)
    report = grow(config, progress=progress)
    maximals = catalog.maximals_for_ring(ring, 2 * max_n + 2)
    by_size: dict = {}
    for name, m in maximals:
        by_size.setdefault(m.n, []).append((name, m))
    ordered = [(mn, m) for size in sorted(by_size) for mn, m in by_size[size]]
    orphans = []
    found_names = set()
    for key, g in report.representatives:
        hit = None
        for mn, m in ordered:
            if m.n >= g.n and embeds_in(g, m):
                hit = mn
                break
        if hit is None:
            orphans.append(g)
        elif g.square_is_4I():
            # same-size embedding of a visibly maximal class means equality,
            # so `hit` names the catalog maximal this class realizes
            found_names.add(hit)
    return ClassificationReport(ring.tag, max_n, report.counts_by_n,
                                orphans, sorted(found_names))


def verify_weight_heavy_edges(ring: RingId) -> dict:
    """Closures from single heavy edges stay inside their fixed maximals.

    Over the Eisenstein integers: a 1+w edge closes inside S_4tt and a
    weight-2 edge inside S_2; over the Gaussian integers the weight-2 edge
    closes inside S_2 likewise.
    """
    from .ring import EISENSTEIN, GAUSSIAN
    from .graph import single_edge
    config = full_config(ring, max_n=8)
    results = {}
    two = single_edge(QuadInt(2, 0, ring))
    results["weight_2"] = verify_type2(
        two, [catalog.sporadic("S_2").promote(ring)], config)
    if ring is EISENSTEIN:
        heavy = single_edge(QuadInt(1, 1, ring))
        results["weight_1+w"] = verify_type2(
            heavy, [catalog.sporadic("S_4tt")], config)
    if ring is GAUSSIAN:
        # the 1+i edge grows into the unbounded C family, so only the
        # weight-2 statement is a finite closure over Z[i]
        pass
    return results
