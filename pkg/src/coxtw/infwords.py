"""Eventually periodic reduced words and their (possibly infinite) inversion sets.

A word prefix·period^∞ is accepted only with a certificate: both parts
reduced and l(prefix·period^k) = l(prefix) + k·l(period) for k up to twice
the order of the period's Weyl part.  Past that point the period powers are
pure translations, whose lengths grow linearly, so a defect would already
have shown up.

The classifier inverts this: given a biclosed oracle it decides whether the
set is the inversion set of an element, of a validated infinite word, or of
nothing at all (witnessed by two roots whose finite parts are opposite).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .biclosed import BiclosedOracle, biclosed_check, level_displacement
from .elements import (GroupElement, from_word, identity, translation,
                       translation_vector, weyl_part)
from .errors import ClassificationError, DomainError, NotReducedError
from .system import CoxeterSystem, Root

_ORDER_GUARD = 10000


def _weyl_order(el: GroupElement) -> int:
    acc = el
    for m in range(1, _ORDER_GUARD + 1):
        if acc.is_identity:
            return m
        acc = acc * el
    raise DomainError("element order exceeded the search guard")


def _apply_fin(el: GroupElement, vec) -> tuple[Fraction, ...]:
    """Finite Weyl block acting on a rational vector in simple-root coordinates."""
    k = el.system.rank_finite
    m = el.matrix
    return tuple(
        sum((Fraction(m[r][c]) * vec[c] for c in range(k)), Fraction(0))
        for r in range(k)
    )


class PeriodicWord:
    """A validated reduced word prefix·period^∞ (period may be empty)."""

    __slots__ = ("system", "prefix", "period", "prefix_el", "period_el",
                 "weyl_order", "lam", "mu", "_neg_powers")

    def __init__(self, system, prefix, period, prefix_el, period_el,
                 weyl_order, lam, mu, neg_powers):
        self.system = system
        self.prefix = prefix
        self.period = period
        self.prefix_el = prefix_el
        self.period_el = period_el
        self.weyl_order = weyl_order
        self.lam = lam
        self.mu = mu
        self._neg_powers = neg_powers

    def __repr__(self):
        return f"PeriodicWord({list(self.prefix)}; {list(self.period)})"

    def tail_member(self, sigma: Root) -> bool:
        """Is the positive root σ in Φ_{period^∞}?

        σ lies there iff some period^{-k} sends it negative; writing
        k = i·m + j with m the Weyl order reduces that to finitely many j
        plus the sign of (fin σ, μ) for the drift μ = Σ_j ū^{-j}λ."""
        if not self.period:
            return False
        if self.system.inner_vec(sigma.fin(), self.mu) > 0:
            return True
        return any(p.apply(sigma).is_negative for p in self._neg_powers[1:])

    def member(self, rho: Root) -> bool:
        """Is the positive root ρ an inversion of this infinite word?"""
        sigma = self.prefix_el.inverse().apply(rho)
        if sigma.is_negative:
            return True
        return self.tail_member(sigma)

    def tail_limit_roots(self) -> frozenset[Root]:
        """Finite roots whose δ-string eventually lies in Φ_{period^∞}."""
        if not self.period:
            return frozenset()
        return frozenset(
            beta for beta in self.system.finite_roots
            if self.system.inner_vec(beta, self.mu) > 0
        )

    def truncations(self):
        """The elements of the finite prefixes: prefix, then period letters forever."""
        el = self.prefix_el
        yield el
        if not self.period:
            return
        i = 0
        while True:
            el = el.mul_simple(self.period[i % len(self.period)])
            i += 1
            yield el


def validate_periodic(system: CoxeterSystem, prefix, period) -> PeriodicWord:
    """Check the reducedness certificate and package the word.

    Raises NotReducedError carrying the first failing power (0 when one of
    the two finite words is itself not reduced)."""
    prefix = tuple(int(s) for s in prefix)
    period = tuple(int(s) for s in period)
    for s in prefix + period:
        if not 0 <= s < system.ngens:
            raise DomainError(f"letter {s} is out of range")
    prefix_el = from_word(system, prefix)
    if prefix_el.length != len(prefix):
        raise NotReducedError("prefix word is not reduced", failing_power=0)
    if not period:
        return PeriodicWord(system, prefix, period, prefix_el, None, 0,
                            None, None, ())
    period_el = from_word(system, period)
    if period_el.length != len(period):
        raise NotReducedError("period word is not reduced", failing_power=0)

    order = _weyl_order(weyl_part(period_el))
    acc = prefix_el
    # In a finite system this always fails by k = order, since period^order
    # is the identity there; no separate rejection path is needed.
    for k in range(1, 2 * order + 1):
        acc = acc * period_el
        if acc.length != len(prefix) + k * len(period):
            raise NotReducedError(
                f"word stops being reduced at period power {k}",
                failing_power=k,
            )

    lam = translation_vector(period_el)
    winv = weyl_part(period_el).inverse()
    mu = list(lam)
    vec = lam
    for _ in range(1, order):
        vec = _apply_fin(winv, vec)
        mu = [a + b for a, b in zip(mu, vec)]
    mu = tuple(mu)
    # period^order must be the pure translation by the drift vector
    power = identity(system)
    for _ in range(order):
        power = power * period_el
    assert power == translation(system, mu)

    inv = period_el.inverse()
    neg_powers = [identity(system)]
    for _ in range(1, order):
        neg_powers.append(neg_powers[-1] * inv)
    return PeriodicWord(system, prefix, period, prefix_el, period_el,
                        order, lam, mu, tuple(neg_powers))


class WordInvSet(BiclosedOracle):
    """The inversion set Φ_x of a validated eventually periodic word x."""

    def __init__(self, word: PeriodicWord):
        super().__init__(word.system)
        self.word = word

    def _member(self, rho: Root) -> bool:
        return self.word.member(rho)

    def key(self) -> str:
        pre = ",".join(str(s) for s in self.word.prefix)
        per = ",".join(str(s) for s in self.word.period)
        return f"word-inf[{pre};{per}]"

    def limit_roots(self) -> frozenset[Root]:
        pbar = weyl_part(self.word.prefix_el)
        return frozenset(pbar.apply(beta) for beta in self.word.tail_limit_roots())

    def stable_level(self) -> int:
        word = self.word
        disp = level_displacement(word.prefix_el.inverse())
        tail_disp = 0
        for p in word._neg_powers[1:]:
            tail_disp = max(tail_disp, level_displacement(p))
        return disp + tail_disp + 1


def limit_set(oracle: BiclosedOracle) -> frozenset[Root]:
    """I_B: finite roots whose δ-string is eventually in B.  Biclosed in Φ."""
    cached = getattr(oracle, "_limit_set_cache", None)
    if cached is not None:
        return cached
    raw = oracle.limit_roots()
    report = biclosed_check(oracle.system, raw,
                            oracle.system.finite_roots, mode="two_closure")
    assert report.ok, f"limit set of {oracle.key()} is not biclosed: {report}"
    oracle._limit_set_cache = raw
    return raw


@dataclass(frozen=True)
class Classification:
    kind: str  # "finite" | "infinite" | "neither"
    element: GroupElement | None = None
    word: PeriodicWord | None = None
    bad_pair: tuple[Root, Root] | None = None

    def witness_json(self):
        if self.kind == "finite":
            return list(self.element.word)
        if self.kind == "infinite":
            return {"prefix": list(self.word.prefix),
                    "period": list(self.word.period)}
        return [list(r.coeffs) + [r.delta] for r in self.bad_pair]


def _peel_inversion_set(system: CoxeterSystem, roots) -> GroupElement:
    """Reconstruct x with Φ_x equal to the given finite set, or fail."""
    remaining = set(roots)
    word = []
    simples = [system.simple_root(s) for s in range(system.ngens)]
    while remaining:
        for s in range(system.ngens):
            if simples[s] in remaining:
                break
        else:
            raise ClassificationError("set contains no simple root while nonempty")
        word.append(s)
        refl = from_word(system, [s])
        nxt = set()
        for rho in remaining:
            if rho == simples[s]:
                continue
            img = refl.apply(rho)
            if not img.is_positive:
                raise ClassificationError("set is not closed under descent peeling")
            nxt.add(img)
        if len(nxt) != len(remaining) - 1:
            raise ClassificationError("descent peeling collapsed two roots")
        remaining = nxt
    x = from_word(system, word)
    if x.inversion_set() != frozenset(roots):
        raise ClassificationError("peeled word does not reproduce the set")
    return x


def _materialize_finite(oracle: BiclosedOracle) -> frozenset[Root]:
    level = max(oracle.stable_level(), 1)
    return frozenset(r for r in oracle.system.positive_roots_up_to(level)
                     if oracle.member(r))


def _find_bad_pair(oracle: BiclosedOracle, overlap) -> tuple[Root, Root]:
    bound = max(oracle.stable_level(), 1) + 1
    alphas = sorted((a for a in overlap if a.is_positive), key=lambda r: r.key)
    for total in range(2, 2 * bound + 1):
        for k in range(max(1, total - bound), min(bound, total - 1) + 1):
            t = total - k
            for alpha in alphas:
                rho1 = Root(alpha.coeffs, k)
                rho2 = Root(tuple(-c for c in alpha.coeffs), t)
                if oracle.member(rho1) and oracle.member(rho2):
                    return rho1, rho2
    raise ClassificationError("limit overlap without a witnessing pair")


def _positive_system_descent(system: CoxeterSystem, candidate):
    """Given a genuine positive system Ψ (as level-0 roots), return u with
    u(Φ⁺) = Ψ, by reflecting missing simples back in.  None if Ψ is not one."""
    psi = set(candidate)
    npos = len(system.positive_roots)
    if len(psi) != npos:
        return None
    simples = [system.simple_root(s) for s in range(system.rank_finite)]
    word = []
    for _ in range(npos + 1):
        for i in range(system.rank_finite):
            if simples[i] not in psi:
                word.append(i)
                refl = from_word(system, [i])
                psi = {refl.apply(rho) for rho in psi}
                break
        else:
            return from_word(system, word)
    return None


def _try_prefix(oracle: BiclosedOracle, limits, prefix: GroupElement,
                stable: int):
    system = oracle.system
    pbar_inv = weyl_part(prefix).inverse()
    j_set = {pbar_inv.apply(beta) for beta in limits}
    candidate = set(j_set)
    for beta in system.positive_roots:
        if beta not in j_set and -beta not in j_set:
            candidate.add(beta)
    u = _positive_system_descent(system, candidate)
    if u is None:
        return None
    off = frozenset(i for i in range(system.rank_finite)
                    if u.apply(system.simple_root(i)) in j_set)
    gamma = [Fraction(0)] * system.rank_finite
    n = system.connection_index
    for i in off:
        w_i = _apply_fin(u, system.fundamental_coweights[i])
        gamma = [g + n * c for g, c in zip(gamma, w_i)]
    if not any(gamma):
        return None
    period = translation(system, gamma).word
    try:
        pword = validate_periodic(system, prefix.word, period)
    except NotReducedError:
        return None
    cand = WordInvSet(pword)
    if cand.limit_roots() != limits:
        return None
    horizon = max(stable, cand.stable_level())
    for rho in system.positive_roots_up_to(horizon):
        if oracle.member(rho) != cand.member(rho):
            return None
    return pword


_PREFIX_SEARCH_LIMIT = 16


def classify(oracle: BiclosedOracle,
             max_prefix: int = _PREFIX_SEARCH_LIMIT) -> Classification:
    """Decide whether B is Φ_x (finite x), Φ of an infinite word, or neither.

    Finite and empty-limit cases are settled by materializing the set up to
    its stable level and peeling.  Otherwise prefixes p with Φ_p ⊆ B are
    searched in ShortLex order; each one proposes a translation period read
    off the limit set, and the first proposal whose inversion set matches B
    exactly (equal limits, equal membership up to both stable levels) wins.
    """
    if oracle._classification is not None:
        return oracle._classification
    system = oracle.system
    result = None
    if system.kind == "finite":
        roots = frozenset(r for r in system.positive_roots if oracle.member(r))
        result = Classification("finite", element=_peel_inversion_set(system, roots))
    else:
        limits = limit_set(oracle)
        overlap = limits & {-r for r in limits}
        if overlap:
            pair = _find_bad_pair(oracle, overlap)
            result = Classification("neither", bad_pair=pair)
        elif not limits:
            roots = _materialize_finite(oracle)
            result = Classification("finite",
                                    element=_peel_inversion_set(system, roots))
        else:
            stable = max(oracle.stable_level(), 1)
            frontier = [identity(system)]
            seen = {frontier[0].matrix}
            depth = 0
            while frontier and result is None:
                for p in frontier:
                    word = _try_prefix(oracle, limits, p, stable)
                    if word is not None:
                        result = Classification("infinite", word=word)
                        break
                else:
                    if depth >= max_prefix:
                        break
                    grown = {}
                    for p in frontier:
                        for s in range(system.ngens):
                            rho = p.apply(system.simple_root(s))
                            if rho.is_positive and oracle.member(rho):
                                y = p.mul_simple(s)
                                if y.matrix not in seen:
                                    seen.add(y.matrix)
                                    grown.setdefault(y.matrix, y)
                    frontier = sorted(grown.values(), key=lambda el: el.word)
                    depth += 1
            if result is None:
                raise ClassificationError(
                    "no eventually periodic witness found within the prefix bound"
                )
    oracle._classification = result
    return result


def t_gamma_infinity(system: CoxeterSystem, gamma) -> tuple:
    """The inversion set of t_γ^∞ as a hat-form oracle, with its word.

    γ must be a nonzero coroot-lattice vector (simple-root coordinates)."""
    from .biclosed import HatForm

    vec = tuple(Fraction(x) for x in gamma)
    if system.kind != "affine":
        raise DomainError("infinite translation powers need an affine system")
    if not any(vec):
        raise DomainError("translation direction must be nonzero")
    t_el = translation(system, vec)
    j_set = frozenset(beta for beta in system.finite_roots
                      if system.inner_vec(beta, vec) > 0)
    candidate = set(j_set)
    for beta in system.positive_roots:
        if beta not in j_set and -beta not in j_set:
            candidate.add(beta)
    u = _positive_system_descent(system, candidate)
    assert u is not None
    d1 = frozenset(i for i in range(system.rank_finite)
                   if u.apply(system.simple_root(i)) not in j_set)
    oracle = HatForm(system, u, d1, ())
    word = validate_periodic(system, (), t_el.word)
    assert oracle.limit_roots() == j_set
    return oracle, word
