"""Membership oracles for biclosed sets of positive roots, and closure checks.

Oracles answer membership for arbitrary positive roots of the system, so a
single object can describe an infinite subset of an affine positive system.
Every oracle also reports its limit roots (the finite roots α whose string
α + nδ eventually stays inside or outside the set) and a stable level from
which that eventual behaviour has set in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ClassificationError, DomainError, ResourceError, ValidationError
from .feasibility import solve_nonneg
from .elements import GroupElement, ball, identity, weyl_part
from .system import CoxeterSystem, Root


def _support(rho: Root) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(rho.coeffs) if c)


def level_displacement(w: GroupElement) -> int:
    """max |δ-level of w(β)| over the finite roots β."""
    if w.system.kind != "affine":
        return 0
    return max(abs(w.apply(beta).delta) for beta in w.system.finite_roots)


class BiclosedOracle:
    """Base class: handles positivity validation and memoization."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self._memo: dict[Root, bool] = {}
        self._tlen_memo: dict = {}
        self._classification = None

    def member(self, rho: Root) -> bool:
        hit = self._memo.get(rho)
        if hit is not None:
            return hit
        if not rho.is_positive or not self.system.is_root(rho.fin()):
            raise DomainError(f"{rho} is not a positive root of this system")
        val = self._member(rho)
        self._memo[rho] = val
        return val

    def _member(self, rho: Root) -> bool:
        raise NotImplementedError

    def key(self) -> str:
        raise NotImplementedError

    def limit_roots(self) -> frozenset[Root]:
        """Finite roots whose δ-string is eventually inside the set."""
        raise NotImplementedError

    def stable_level(self) -> int:
        """Level L so that for n >= L, membership of α + nδ matches limit_roots."""
        raise NotImplementedError

    def __repr__(self):
        return self.key()


class Explicit(BiclosedOracle):
    """A finite, explicitly listed set of positive roots."""

    def __init__(self, system: CoxeterSystem, roots):
        super().__init__(system)
        roots = frozenset(roots)
        for rho in roots:
            if not rho.is_positive or not system.is_root(rho.fin()):
                raise ValidationError(f"{rho} is not a positive root of this system")
        self.roots = roots

    def _member(self, rho: Root) -> bool:
        return rho in self.roots

    def key(self) -> str:
        body = ",".join(r.literal() for r in sorted(self.roots, key=lambda r: r.key))
        return f"explicit[{body}]"

    def limit_roots(self) -> frozenset[Root]:
        return frozenset()

    def stable_level(self) -> int:
        return max((r.delta for r in self.roots), default=0) + 1


class HatForm(BiclosedOracle):
    """hat(Ψ⁺) for the twisted positive system u((Φ⁺ ∖ R≥0Δ1) ∪ RΔ2∩Φ).

    Δ1 and Δ2 are disjoint index sets of simple roots, orthogonal to each
    other; u is an element of the finite Weyl subgroup.
    """

    def __init__(self, system: CoxeterSystem, u: GroupElement, delta1, delta2):
        super().__init__(system)
        if system.kind != "affine":
            raise ValidationError("hat-form oracles require an affine system")
        if u.system.key != system.key:
            raise DomainError("element belongs to a different system")
        if weyl_part(u) != u:
            raise ValidationError("hat-form element must lie in the finite Weyl subgroup")
        d1 = frozenset(int(i) for i in delta1)
        d2 = frozenset(int(i) for i in delta2)
        k = system.rank_finite
        if any(not 0 <= i < k for i in d1 | d2):
            raise ValidationError("simple-root index out of range in hat form")
        if d1 & d2:
            raise ValidationError("hat-form subsets must be disjoint")
        for i in d1:
            for j in d2:
                if system.form[i][j] != 0:
                    raise ValidationError(
                        f"hat-form subsets must be orthogonal; ({i},{j}) pair is not"
                    )
        self.u = u
        self.delta1 = d1
        self.delta2 = d2
        expanded = set()
        for beta in system.positive_roots:
            image = u.apply(beta)
            if not _support(beta) <= d1:
                expanded.add(image)
            if _support(beta) <= d2:
                expanded.add(image)
                expanded.add(-image)
        self.positive_system = frozenset(expanded)

    def _member(self, rho: Root) -> bool:
        return rho.fin() in self.positive_system

    def key(self) -> str:
        word = ",".join(str(s) for s in self.u.word)
        d1 = ",".join(str(i) for i in sorted(self.delta1))
        d2 = ",".join(str(i) for i in sorted(self.delta2))
        return f"hat[{word}|{d1}|{d2}]"

    def limit_roots(self) -> frozenset[Root]:
        return self.positive_system

    def stable_level(self) -> int:
        return 1


class Twisted(BiclosedOracle):
    """w·B = (Φ_w ∖ w(-B)) ∪ (w(B) ∖ -Φ_w), answered through w⁻¹."""

    def __init__(self, w: GroupElement, inner: BiclosedOracle):
        super().__init__(inner.system)
        if w.system.key != inner.system.key:
            raise DomainError("element and oracle belong to different systems")
        self.w = w
        self.inner = inner
        self._w_inv = w.inverse()

    def _member(self, rho: Root) -> bool:
        sigma = self._w_inv.apply(rho)
        if sigma.is_positive:
            return self.inner.member(sigma)
        return not self.inner.member(-sigma)

    def key(self) -> str:
        word = ",".join(str(s) for s in self.w.word)
        return f"twist[{word}]({self.inner.key()})"

    def limit_roots(self) -> frozenset[Root]:
        wbar = weyl_part(self.w)
        return frozenset(wbar.apply(alpha) for alpha in self.inner.limit_roots())

    def stable_level(self) -> int:
        return self.inner.stable_level() + level_displacement(self._w_inv)


class Complement(BiclosedOracle):
    """Φ⁺ ∖ B."""

    def __init__(self, inner: BiclosedOracle):
        super().__init__(inner.system)
        self.inner = inner

    def _member(self, rho: Root) -> bool:
        return not self.inner.member(rho)

    def key(self) -> str:
        return f"complement({self.inner.key()})"

    def limit_roots(self) -> frozenset[Root]:
        return frozenset(self.system.finite_roots) - self.inner.limit_roots()

    def stable_level(self) -> int:
        return self.inner.stable_level()


def act_on_biclosed(w: GroupElement, oracle: BiclosedOracle) -> BiclosedOracle:
    """w·B; twisting by a twist collapses to a single twist by the product."""
    if isinstance(oracle, Twisted):
        return act_on_biclosed(w * oracle.w, oracle.inner)
    if w.is_identity:
        return oracle
    return Twisted(w, oracle)


# -- closure -----------------------------------------------------------


@dataclass(frozen=True)
class ClosureReport:
    closed: bool
    witness: tuple | None


@dataclass(frozen=True)
class BiclosedReport:
    ok: bool
    side: str | None
    witness: tuple | None


def cone_contains(system: CoxeterSystem, generators, target: Root) -> bool:
    """Is target a nonnegative rational combination of the generators?"""
    gens = list(generators)
    dim = system.dim
    def coords(r: Root):
        return list(r.coeffs) + ([Fraction(r.delta)] if dim > system.rank_finite else [])
    cols = [coords(g) for g in gens]
    rows = [[Fraction(cols[j][i]) for j in range(len(gens))] for i in range(dim)]
    rhs = [Fraction(c) for c in coords(target)]
    return solve_nonneg(rows, rhs) is not None


def closure_check(system: CoxeterSystem, gamma, ambient,
                  mode: str = "two_closure") -> ClosureReport:
    """Check Γ against the roots of `ambient` under the chosen closure notion.

    two_closure: every pair cone from Γ may only capture ambient roots in Γ.
    cone_closure: the full cone of Γ may only capture ambient roots in Γ.
    The witness is (generators, captured_root) for the first failure in
    sorted order.
    """
    gamma = frozenset(gamma)
    ambient = sorted(frozenset(ambient), key=lambda r: r.key)
    if not gamma <= set(ambient):
        raise DomainError("closure check needs gamma inside the ambient set")
    outside = [r for r in ambient if r not in gamma]
    members = sorted(gamma, key=lambda r: r.key)
    if mode == "two_closure":
        for g1, g2 in combinations(members, 2):
            for t in outside:
                if cone_contains(system, (g1, g2), t):
                    return ClosureReport(False, ((g1, g2), t))
        return ClosureReport(True, None)
    if mode == "cone_closure":
        for t in outside:
            if cone_contains(system, members, t):
                return ClosureReport(False, (tuple(members), t))
        return ClosureReport(True, None)
    raise DomainError(f"unknown closure mode {mode!r}")


def biclosed_check(system: CoxeterSystem, gamma, ambient,
                   mode: str = "two_closure") -> BiclosedReport:
    """Closedness of Γ and of its complement inside the ambient set."""
    gamma = frozenset(gamma)
    ambient = frozenset(ambient)
    first = closure_check(system, gamma, ambient, mode)
    if not first.closed:
        return BiclosedReport(False, "set", first.witness)
    second = closure_check(system, ambient - gamma, ambient, mode)
    if not second.closed:
        return BiclosedReport(False, "complement", second.witness)
    return BiclosedReport(True, None, None)


_ENUM_LIMIT = 24


def enumerate_biclosed(system: CoxeterSystem, ambient,
                       mode: str = "two_closure") -> tuple[frozenset[Root], ...]:
    """All biclosed subsets of a finite ambient root collection, by bitmask scan."""
    roots = sorted(frozenset(ambient), key=lambda r: r.key)
    n = len(roots)
    if n > _ENUM_LIMIT:
        raise ResourceError(f"ambient set of {n} roots exceeds the enumeration limit {_ENUM_LIMIT}")
    if mode == "two_closure":
        cones = {}
        for i, j in combinations(range(n), 2):
            mask = 0
            for t in range(n):
                if t in (i, j) or cone_contains(system, (roots[i], roots[j]), roots[t]):
                    mask |= 1 << t
            cones[(i, j)] = mask

        def closed(s: int) -> bool:
            idx = [t for t in range(n) if s >> t & 1]
            return all(cones[(i, j)] & ~s == 0 for i, j in combinations(idx, 2))
    elif mode == "cone_closure":
        def closed(s: int) -> bool:
            inside = [roots[t] for t in range(n) if s >> t & 1]
            for t in range(n):
                if not s >> t & 1 and cone_contains(system, inside, roots[t]):
                    return False
            return True
    else:
        raise DomainError(f"unknown closure mode {mode!r}")

    full = (1 << n) - 1
    found = []
    for s in range(1 << n):
        if closed(s) and closed(full & ~s):
            found.append(frozenset(roots[t] for t in range(n) if s >> t & 1))
    return tuple(sorted(found, key=lambda f: (len(f), sorted(r.key for r in f))))


def is_separable(system: CoxeterSystem, oracle: BiclosedOracle,
                 level: int) -> tuple[bool, tuple | None]:
    """Can Γ (truncated at δ-level `level`) be split from its complement by
    a linear functional?  Equivalently: the two cones meet only at 0.
    Returns (separable, common_point) where the point is a nonzero witness
    in (simple-root, δ) coordinates when the cones overlap."""
    trunc = system.positive_roots_up_to(level)
    inside = [r for r in trunc if oracle.member(r)]
    outside = [r for r in trunc if not oracle.member(r)]
    dim = system.dim

    def coords(r: Root):
        out = [Fraction(c) for c in r.coeffs]
        if dim > system.rank_finite:
            out.append(Fraction(r.delta))
        return out

    nvars = len(inside) + len(outside)
    rows = []
    for d in range(dim):
        row = [coords(r)[d] for r in inside] + [-coords(r)[d] for r in outside]
        rows.append(row)
    # normalize: a common ray can be scaled so the Γ-side coefficients sum to 1
    rows.append([Fraction(1)] * len(inside) + [Fraction(0)] * len(outside))
    rhs = [Fraction(0)] * dim + [Fraction(1)]
    sol = solve_nonneg(rows, rhs)
    if sol is None:
        return True, None
    point = [Fraction(0)] * dim
    for x, r in zip(sol[: len(inside)], inside):
        for d, c in enumerate(coords(r)):
            point[d] += x * c
    return False, tuple(point)


# -- finite classification ---------------------------------------------


def expand_psi(system: CoxeterSystem, u: GroupElement, delta1, delta2) -> frozenset[Root]:
    """The twisted positive system u((Φ⁺ ∖ R≥0Δ1) ∪ RΔ2∩Φ) in a finite system."""
    d1 = frozenset(int(i) for i in delta1)
    d2 = frozenset(int(i) for i in delta2)
    k = system.rank_finite
    if any(not 0 <= i < k for i in d1 | d2):
        raise ValidationError("simple-root index out of range")
    if d1 & d2:
        raise ValidationError("subsets must be disjoint")
    for i in d1:
        for j in d2:
            if system.form[i][j] != 0:
                raise ValidationError("subsets must be orthogonal")
    out = set()
    for beta in system.positive_roots:
        image = u.apply(beta)
        if not _support(beta) <= d1:
            out.add(image)
        if _support(beta) <= d2:
            out.add(image)
            out.add(-image)
    return frozenset(out)


_CLASSIFY_RANK_LIMIT = 4


def _subsets_sorted(indices):
    idx = sorted(indices)
    subs = []
    for mask in range(1 << len(idx)):
        subs.append(tuple(idx[t] for t in range(len(idx)) if mask >> t & 1))
    return sorted(subs, key=lambda s: (len(s), s))


def classify_finite_biclosed(system: CoxeterSystem, gamma):
    """Find (u, Δ1, Δ2) whose twisted positive system equals Γ ⊆ Φ, Φ finite.

    Searches u through the whole group and the subset pairs in sorted order,
    so the returned witness is deterministic.
    """
    if system.kind != "finite":
        raise DomainError("finite classification requires a finite system")
    if system.rank_finite > _CLASSIFY_RANK_LIMIT:
        raise ResourceError(
            f"finite classification is limited to rank {_CLASSIFY_RANK_LIMIT}"
        )
    gamma = frozenset(gamma)
    k = system.rank_finite
    npos = len(system.positive_roots)
    for u in ball(system, npos):
        for d1 in _subsets_sorted(range(k)):
            compatible = [
                j for j in range(k)
                if j not in d1 and all(system.form[i][j] == 0 for i in d1)
            ]
            for d2 in _subsets_sorted(compatible):
                if expand_psi(system, u, d1, d2) == gamma:
                    return u, frozenset(d1), frozenset(d2)
    raise ClassificationError("set is not a twisted positive system of this kind")
