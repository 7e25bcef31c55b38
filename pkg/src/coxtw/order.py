"""The twisted weak order attached to a biclosed set B.

All comparisons reduce to finite symmetric-difference conditions on
inversion sets: x ≤_B y iff Φ_x ∖ Φ_y ⊆ B and (Φ_y ∖ Φ_x) ∩ B = ∅.
Meets are constructed, not searched: a common lower bound z is read off a
witness word for B, the problem is translated to the ordinary weak order
at z, and the result is verified before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .biclosed import BiclosedOracle, Complement
from .elements import GroupElement, ball, identity
from .errors import (ClassificationError, JoinSearchError, OrderError,
                     UnsupportedOracleError)
from .infwords import classify

_WITNESS_GUARD = 100000


def twisted_length(w: GroupElement, oracle: BiclosedOracle) -> int:
    """l_B(w) = l(w) - 2|Φ_w ∩ B|."""
    hit = oracle._tlen_memo.get(w)
    if hit is None:
        inside = sum(1 for rho in w.inversion_set() if oracle.member(rho))
        hit = w.length - 2 * inside
        oracle._tlen_memo[w] = hit
    return hit


def is_up_cover(w: GroupElement, s: int, oracle: BiclosedOracle) -> bool:
    """Does w·s cover w (twisted length goes up by one)?"""
    rho = w.apply(w.system.simple_root(s))
    if rho.is_positive:
        return not oracle.member(rho)
    return oracle.member(-rho)


def cover_neighbors(w: GroupElement, oracle: BiclosedOracle):
    """(covers above w, covers below w), each sorted by generator index."""
    ups, downs = [], []
    for s in range(w.system.ngens):
        y = w.mul_simple(s)
        (ups if is_up_cover(w, s, oracle) else downs).append(y)
    return tuple(ups), tuple(downs)


def le(x: GroupElement, y: GroupElement, oracle: BiclosedOracle) -> bool:
    """x ≤_B y."""
    if x.system.key != y.system.key or x.system.key != oracle.system.key:
        raise OrderError("order comparison needs a single common system")
    inv_x = x.inversion_set()
    inv_y = y.inversion_set()
    return (all(oracle.member(r) for r in inv_x - inv_y)
            and not any(oracle.member(r) for r in inv_y - inv_x))


def chain(x: GroupElement, y: GroupElement,
          oracle: BiclosedOracle) -> tuple[GroupElement, ...]:
    """A saturated cover chain from x up to y; fails unless x ≤_B y.

    Walking any reduced word of x⁻¹y does the job: the interval [x,y]_B is
    a translate of an ordinary weak order interval."""
    if not le(x, y, oracle):
        raise OrderError("chain endpoints are not comparable in this order")
    out = [x]
    z = x
    for s in (x.inverse() * y).word:
        assert is_up_cover(z, s, oracle)
        z = z.mul_simple(s)
        out.append(z)
    return tuple(out)


def interval(x: GroupElement, y: GroupElement,
             oracle: BiclosedOracle) -> tuple[GroupElement, ...]:
    """All z with x ≤_B z ≤_B y, sorted by (twisted length, length, word).

    The interval equals x·[e, x⁻¹y] in the ordinary right weak order, so it
    is collected by the usual inversion-subset search below x⁻¹y."""
    if not le(x, y, oracle):
        raise OrderError("interval endpoints are not comparable in this order")
    d = x.inverse() * y
    target = d.inversion_set()
    system = x.system
    found = {}
    frontier = [identity(system)]
    found[frontier[0].matrix] = frontier[0]
    while frontier:
        grown = []
        for z in frontier:
            for s in range(system.ngens):
                rho = z.apply(system.simple_root(s))
                if rho in target:
                    nxt = z.mul_simple(s)
                    if nxt.matrix not in found:
                        found[nxt.matrix] = nxt
                        grown.append(nxt)
        frontier = grown
    out = [x * z for z in found.values()]
    out.sort(key=lambda w: (twisted_length(w, oracle), w.length, w.word))
    return tuple(out)


def _witness_truncations(oracle: BiclosedOracle):
    cls = classify(oracle)
    if cls.kind == "finite":
        word = cls.element.word
        el = identity(oracle.system)
        yield el
        for s in word:
            el = el.mul_simple(s)
            yield el
        return
    if cls.kind == "infinite":
        yield from cls.word.truncations()
        return
    raise UnsupportedOracleError(
        "B is not an inversion set, so no witness word exists"
    )


def lower_bound(x: GroupElement, y: GroupElement,
                oracle: BiclosedOracle) -> GroupElement:
    """The first witness-word prefix z with Φ_z ⊇ (Φ_x ∪ Φ_y) ∩ B.

    Such a z satisfies z ≤_B x and z ≤_B y, and taking the first prefix
    makes it deterministic."""
    target = {r for r in x.inversion_set() | y.inversion_set()
              if oracle.member(r)}
    count = 0
    for z in _witness_truncations(oracle):
        count += 1
        if count > _WITNESS_GUARD:
            break
        if target <= z.inversion_set():
            assert le(z, x, oracle) and le(z, y, oracle)
            return z
    raise OrderError("witness word never covered the required inversions")


def ordinary_meet(a: GroupElement, b: GroupElement) -> GroupElement:
    """Meet in the ordinary right weak order, by greedy ascent inside
    Φ_a ∩ Φ_b (the common lower bounds are exactly the elements whose
    inversion sets sit inside the intersection)."""
    shared = a.inversion_set() & b.inversion_set()
    system = a.system
    m = identity(system)
    while True:
        for s in range(system.ngens):
            if m.apply(system.simple_root(s)) in shared:
                m = m.mul_simple(s)
                break
        else:
            return m


def meet(x: GroupElement, y: GroupElement,
         oracle: BiclosedOracle) -> GroupElement:
    """Greatest lower bound of {x, y} in ≤_B, for B an inversion set.

    Construction: pick the witness prefix z below both, pull the problem to
    the ordinary weak order at z, meet there, and push back.  The result is
    re-verified as a common lower bound with no common upper cover."""
    z = lower_bound(x, y, oracle)
    zinv = z.inverse()
    m = z * ordinary_meet(zinv * x, zinv * y)
    if not (le(m, x, oracle) and le(m, y, oracle)):
        raise OrderError("meet construction produced a non lower bound")
    for s in range(m.system.ngens):
        if is_up_cover(m, s, oracle):
            u = m.mul_simple(s)
            if le(u, x, oracle) and le(u, y, oracle):
                raise OrderError("meet construction was not maximal")
    return m


_JOIN_SLACK = 4


def join(x: GroupElement, y: GroupElement,
         oracle: BiclosedOracle) -> GroupElement:
    """Least upper bound of {x, y} in ≤_B.

    ≤_{Φ⁺∖B} is the reverse order, so when the complement is an inversion
    set this is a meet there.  Otherwise upper bounds are searched in a
    ball of radius l(x)+l(y)+4; a unique minimal one below all others is
    returned, anything else raises JoinSearchError."""
    comp = getattr(oracle, "_complement_instance", None)
    if comp is None:
        comp = Complement(oracle)
        oracle._complement_instance = comp
    try:
        cls = classify(comp)
    except ClassificationError:
        cls = None
    if cls is not None and cls.kind != "neither":
        return meet(x, y, comp)
    radius = x.length + y.length + _JOIN_SLACK
    bounds = [u for u in ball(x.system, radius)
              if le(x, u, oracle) and le(y, u, oracle)]
    if not bounds:
        raise JoinSearchError("no common upper bound within the search ball")
    bounds.sort(key=lambda u: twisted_length(u, oracle))
    m = bounds[0]
    for u in bounds[1:]:
        if not le(m, u, oracle):
            raise JoinSearchError("no least upper bound within the search ball")
    return m


# -- Hasse diagrams ----------------------------------------------------


@dataclass(frozen=True)
class HasseGraph:
    oracle_key: str
    radius: int
    nodes: tuple  # (GroupElement, twisted length), sorted
    edges: tuple  # (i, j) index pairs, lower -> higher

    def to_json(self) -> dict:
        return {
            "nodes": [{"word": list(w.word), "tlen": t} for w, t in self.nodes],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self, labels: dict | None = None) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, (w, _) in enumerate(self.nodes):
            text = labels[w] if labels is not None else w.label()
            lines.append(f'  n{i} [label="{text}"];')
        by_tlen: dict[int, list[int]] = {}
        for i, (_, t) in enumerate(self.nodes):
            by_tlen.setdefault(t, []).append(i)
        for t in sorted(by_tlen):
            row = "; ".join(f"n{i}" for i in by_tlen[t])
            lines.append(f"  {{ rank=same; {row}; }}")
        for i, j in self.edges:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse(system, oracle: BiclosedOracle, radius: int,
          elements=None) -> HasseGraph:
    """Cover graph of ≤_B restricted to the ball (or a given element set)."""
    if elements is None:
        elements = ball(system, radius)
    nodes = sorted(
        ((w, twisted_length(w, oracle)) for w in elements),
        key=lambda pair: (pair[1], pair[0].length, pair[0].word),
    )
    index = {w.matrix: i for i, (w, _) in enumerate(nodes)}
    edges = []
    for i, (w, _) in enumerate(nodes):
        for s in range(system.ngens):
            if is_up_cover(w, s, oracle):
                j = index.get(w.mul_simple(s).matrix)
                if j is not None:
                    edges.append((i, j))
    edges.sort()
    return HasseGraph(oracle.key(), radius, tuple(nodes), tuple(edges))


# -- semilattice checking ----------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    status: str  # "ok" | "counterexample" | "inconclusive"
    pair: tuple | None
    checked: int

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "pair": None if self.pair is None else
                    [list(self.pair[0].word), list(self.pair[1].word)],
            "checked": self.checked,
        }


class _MaskOrder:
    """Bitmask views of inversion sets for fast ≤_B sweeps over a ball."""

    def __init__(self, oracle: BiclosedOracle, elements):
        self.elements = list(elements)
        roots = sorted({r for w in self.elements for r in w.inversion_set()},
                       key=lambda r: r.key)
        bit = {r: 1 << i for i, r in enumerate(roots)}
        self.inv = [0] * len(self.elements)
        for idx, w in enumerate(self.elements):
            m = 0
            for r in w.inversion_set():
                m |= bit[r]
            self.inv[idx] = m
        self.bmask = 0
        for r in roots:
            if oracle.member(r):
                self.bmask |= bit[r]
        self.tlen = [w.length - 2 * (self.inv[i] & self.bmask).bit_count()
                     for i, w in enumerate(self.elements)]

    def le(self, i: int, j: int) -> bool:
        a, b = self.inv[i], self.inv[j]
        return (a & ~b & ~self.bmask) == 0 and (b & ~a & self.bmask) == 0

    def maximals(self, indices) -> list[int]:
        order = sorted(indices, key=lambda i: -self.tlen[i])
        kept: list[int] = []
        for i in order:
            if not any(self.le(i, j) for j in kept):
                kept.append(i)
        return kept


def check_meet_semilattice(system, oracle: BiclosedOracle,
                           radius: int) -> CheckResult:
    """Search ball(radius) pairs for a meet failure.

    When B is an inversion set the theory bounds where a meet must live:
    z ≤_B m ≤_B x forces l(m) ≤ l(z) + l(z⁻¹x), so searching up to that
    length catches it.  A pair whose bounded common lower bounds then have
    two maximal elements is a genuine counterexample, and a clean sweep is
    a proof over the ball ("ok").
    Otherwise lower bounds are only searched within ball(3·radius), and a
    clean sweep is merely "inconclusive"."""
    elems = ball(system, radius)
    try:
        cls = classify(oracle)
    except ClassificationError:
        cls = None
    sound = cls is not None and cls.kind != "neither"

    if sound:
        pair_cut = {}
        big = 0
        for ai in range(len(elems)):
            for bi in range(ai + 1, len(elems)):
                z = lower_bound(elems[ai], elems[bi], oracle)
                zinv = z.inverse()
                cut = z.length + min((zinv * elems[ai]).length,
                                     (zinv * elems[bi]).length)
                pair_cut[(ai, bi)] = cut
                big = max(big, cut)
        universe = ball(system, big)
    else:
        universe = ball(system, 3 * radius)

    mask = _MaskOrder(oracle, universe)
    pos = {w.matrix: i for i, w in enumerate(mask.elements)}
    checked = 0
    for ai in range(len(elems)):
        for bi in range(ai + 1, len(elems)):
            checked += 1
            i, j = pos[elems[ai].matrix], pos[elems[bi].matrix]
            if sound:
                cut = pair_cut[(ai, bi)]
                lower = [t for t, u in enumerate(mask.elements)
                         if u.length <= cut and mask.le(t, i) and mask.le(t, j)]
            else:
                lower = [t for t in range(len(mask.elements))
                         if mask.le(t, i) and mask.le(t, j)]
            if sound:
                if len(mask.maximals(lower)) != 1:
                    return CheckResult("counterexample", (elems[ai], elems[bi]), checked)
            else:
                if not lower or len(mask.maximals(lower)) != 1:
                    return CheckResult("counterexample", (elems[ai], elems[bi]), checked)
    return CheckResult("ok" if sound else "inconclusive", None, checked)
