"""Coxeter systems: Cartan data, root generation, bilinear form, coweights.

A system is either finite crystallographic or the untwisted affine
extension of one.  Roots are integer coordinate vectors over the finite
simple basis plus an integer δ-level; all arithmetic is exact (ints and
Fractions), so root identities hold on the nose rather than up to epsilon.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .errors import DomainError, ExprError, ValidationError

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True, order=True)
class Root:
    """A real root β + nδ: finite coordinates over the simple basis, δ-level n."""

    delta: int
    coeffs: tuple[int, ...]

    def __init__(self, coeffs, delta: int = 0):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))
        object.__setattr__(self, "delta", int(delta))

    @property
    def key(self) -> tuple:
        return (self.delta, self.coeffs)

    @property
    def is_zero(self) -> bool:
        return self.delta == 0 and not any(self.coeffs)

    @property
    def is_positive(self) -> bool:
        if self.delta != 0:
            return self.delta > 0
        return any(self.coeffs) and all(c >= 0 for c in self.coeffs)

    @property
    def is_negative(self) -> bool:
        return (-self).is_positive

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs), -self.delta)

    def fin(self) -> "Root":
        """The level-0 part β of β + nδ."""
        return Root(self.coeffs, 0)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "delta": self.delta}

    def literal(self) -> str:
        body = ".".join(str(c) for c in self.coeffs)
        return f"{body}:{self.delta}" if self.delta else body

    def __str__(self) -> str:
        return self.literal()


def parse_root(text: str, rank: int) -> Root:
    """Parse the literal form `c1.c2...ck[:n]`, e.g. `1.0:1` or `-1.1`."""
    text = text.strip()
    delta = 0
    if ":" in text:
        body, _, lev = text.partition(":")
        try:
            delta = int(lev)
        except ValueError:
            raise ExprError(f"bad delta level in root literal {text!r}")
    else:
        body = text
    parts = body.split(".") if body else []
    if len(parts) != rank:
        raise ExprError(f"root literal {text!r} needs {rank} coefficients")
    try:
        coeffs = tuple(int(p) for p in parts)
    except ValueError:
        raise ExprError(f"bad coefficient in root literal {text!r}")
    return Root(coeffs, delta)


def _validate_cartan(cartan) -> tuple[tuple[int, ...], ...]:
    k = len(cartan)
    if k == 0 or any(len(row) != k for row in cartan):
        raise ValidationError("Cartan matrix must be square and nonempty")
    a = tuple(tuple(int(x) for x in row) for row in cartan)
    for i in range(k):
        if a[i][i] != 2:
            raise ValidationError(f"Cartan diagonal entry a[{i}][{i}] must be 2")
        for j in range(k):
            if i != j:
                if a[i][j] > 0:
                    raise ValidationError(
                        f"off-diagonal Cartan entry a[{i}][{j}] must be <= 0"
                    )
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValidationError(
                        f"asymmetric zero pattern at Cartan entries ({i},{j})"
                    )
    return a


def _auto_symmetrizer(cartan) -> tuple[Fraction, ...]:
    # d_i a_ij = d_j a_ji forces the ratios along every edge of the Coxeter
    # graph; propagate per component, then scale to coprime positive ints.
    k = len(cartan)
    d: list = [None] * k
    for start in range(k):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(k):
                if cartan[i][j] == 0 or i == j:
                    continue
                val = d[i] * Fraction(cartan[i][j], cartan[j][i])
                if d[j] is None:
                    d[j] = val
                    component.append(j)
                    stack.append(j)
                elif d[j] != val:
                    raise ValidationError("Cartan matrix admits no symmetrizer")
        denom_lcm = 1
        for i in component:
            denom_lcm = denom_lcm * d[i].denominator // gcd(denom_lcm, d[i].denominator)
        nums = [d[i] * denom_lcm for i in component]
        g = 0
        for x in nums:
            g = gcd(g, int(x))
        for i in component:
            d[i] = d[i] * denom_lcm / g
    return tuple(d)


def _check_positive_definite(form) -> None:
    k = len(form)
    for t in range(1, k + 1):
        minor = tuple(row[:t] for row in form[:t])
        if linalg.det(minor) <= 0:
            raise ValidationError(
                "symmetrized Cartan matrix is not positive definite "
                f"(leading minor {t} is non-positive)"
            )


def _generate_positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    k = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for v in frontier:
            for i in range(k):
                c = sum(cartan[i][j] * v[j] for j in range(k))
                w = list(v)
                w[i] -= c
                w = tuple(w)
                if all(x >= 0 for x in w) and any(w) and w not in seen:
                    seen.add(w)
                    new.append(w)
        frontier = new
    return tuple(sorted(seen))


class CoxeterSystem:
    """Immutable Cartan data plus everything derived from it.

    `cartan` and `symmetrizer` always describe the finite part; affine
    systems carry one extra generator s_{δ-γ} for γ the highest root, so
    their matrices act on the basis (simple roots, δ).
    """

    def __init__(self, cartan, symmetrizer=None, affine: bool = False,
                 type_string: str | None = None):
        self.cartan = _validate_cartan(cartan)
        k = len(self.cartan)
        self.rank_finite = k
        if symmetrizer is None:
            self.symmetrizer = _auto_symmetrizer(self.cartan)
        else:
            d = tuple(Fraction(x) for x in symmetrizer)
            if len(d) != k or any(x <= 0 for x in d):
                raise ValidationError("symmetrizer must be a positive vector of length rank")
            self.symmetrizer = d
        # form[i][j] = (α_i, α_j) = d_i a_ij
        self.form = tuple(
            tuple(self.symmetrizer[i] * self.cartan[i][j] for j in range(k))
            for i in range(k)
        )
        for i in range(k):
            for j in range(k):
                if self.form[i][j] != self.form[j][i]:
                    raise ValidationError("symmetrizer does not symmetrize the Cartan matrix")
        _check_positive_definite(self.form)

        self.kind = "affine" if affine else "finite"
        self.type_string = type_string
        self._pos_coeffs = _generate_positive_roots(self.cartan)
        self._root_coeff_set = frozenset(self._pos_coeffs) | frozenset(
            tuple(-c for c in v) for v in self._pos_coeffs
        )

        if affine:
            if not self._is_irreducible():
                raise ValidationError("affine extension requires an irreducible finite part")
            self.highest_root = self._find_highest_root()
            self.ngens = k + 1
            self.dim = k + 1
        else:
            self.highest_root = None
            self.ngens = k
            self.dim = k

        names = [_LETTERS[i] for i in range(k)]
        if affine:
            parts = []
            for i, c in enumerate(self.highest_root.coeffs):
                if c:
                    parts.append(f"-{c if c > 1 else ''}{names[i]}")
            names.append("d" + "".join(parts))
        self.simple_names = tuple(names)

        self.key = (self.kind, self.cartan, self.symmetrizer)
        self._simple_matrices = tuple(self._build_simple_matrix(i) for i in range(self.ngens))
        self._caches: dict = {}

    def __eq__(self, other):
        return isinstance(other, CoxeterSystem) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        tag = self.type_string or f"rank {self.rank_finite}"
        return f"CoxeterSystem({tag}, {self.kind})"

    def _is_irreducible(self) -> bool:
        k = self.rank_finite
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(k):
                if j not in seen and self.cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == k

    def _find_highest_root(self) -> Root:
        candidates = []
        for v in self._pos_coeffs:
            ok = True
            for i in range(self.rank_finite):
                w = list(v)
                w[i] += 1
                if tuple(w) in self._root_coeff_set:
                    ok = False
                    break
            if ok:
                candidates.append(v)
        if len(candidates) != 1:
            raise ValidationError("finite part has no unique highest root")
        return Root(candidates[0], 0)

    # -- roots ---------------------------------------------------------

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        """Positive roots of the finite part, sorted."""
        if "pos_roots" not in self._caches:
            self._caches["pos_roots"] = tuple(Root(v, 0) for v in self._pos_coeffs)
        return self._caches["pos_roots"]

    @property
    def finite_roots(self) -> tuple[Root, ...]:
        if "fin_roots" not in self._caches:
            self._caches["fin_roots"] = tuple(
                sorted((Root(v, 0) for v in self._root_coeff_set), key=lambda r: r.key)
            )
        return self._caches["fin_roots"]

    def is_root(self, rho: Root) -> bool:
        if len(rho.coeffs) != self.rank_finite:
            return False
        if self.kind == "finite" and rho.delta != 0:
            return False
        return rho.coeffs in self._root_coeff_set

    def simple_root(self, i: int) -> Root:
        if not 0 <= i < self.ngens:
            raise DomainError(f"no simple reflection with index {i}")
        if i < self.rank_finite:
            return Root(tuple(1 if j == i else 0 for j in range(self.rank_finite)), 0)
        return Root(tuple(-c for c in self.highest_root.coeffs), 1)

    def roots_up_to(self, level: int) -> tuple[Root, ...]:
        """All roots; affine systems truncate to |δ-level| <= level."""
        if self.kind == "finite":
            return self.finite_roots
        out = [
            Root(v.coeffs, n)
            for n in range(-level, level + 1)
            for v in self.finite_roots
        ]
        return tuple(sorted(out, key=lambda r: r.key))

    def positive_roots_up_to(self, level: int) -> tuple[Root, ...]:
        if self.kind == "finite":
            return self.positive_roots
        return tuple(r for r in self.roots_up_to(level) if r.is_positive)

    # -- bilinear form -------------------------------------------------

    def inner(self, u: Root, v: Root) -> Fraction:
        """(u, v); δ-components contribute nothing."""
        total = Fraction(0)
        for i, ci in enumerate(u.coeffs):
            if ci:
                row = self.form[i]
                for j, cj in enumerate(v.coeffs):
                    if cj:
                        total += ci * cj * row[j]
        return total

    def inner_vec(self, u: Root, vec) -> Fraction:
        """(u, λ) for λ a rational vector in simple-root coordinates."""
        total = Fraction(0)
        for i, ci in enumerate(u.coeffs):
            if ci:
                row = self.form[i]
                for j in range(self.rank_finite):
                    if vec[j]:
                        total += ci * row[j] * vec[j]
        return total

    def pair_coroot(self, u: Root, v: Root) -> Fraction:
        """(u, v^∨) = 2(u,v)/(v,v); v must have a nonzero finite part."""
        vv = self.inner(v.fin(), v.fin())
        if vv == 0:
            raise DomainError("coroot pairing needs a root with nonzero finite part")
        return 2 * self.inner(u, v) / vv

    def coroot_vector(self, rho: Root) -> tuple[Fraction, ...]:
        """2ρ/(ρ,ρ) in (simple-root, δ) coordinates; the δ-part is retained."""
        norm = self.inner(rho, rho)
        if norm == 0:
            raise DomainError("cannot form the coroot of an isotropic vector")
        scale = Fraction(2, 1) / norm
        out = [scale * c for c in rho.coeffs]
        if self.kind == "affine":
            out.append(scale * rho.delta)
        return tuple(out)

    # -- coweights -----------------------------------------------------

    @property
    def fundamental_coweights(self) -> tuple[tuple[Fraction, ...], ...]:
        """ω_i with (ω_i, α_j) = δ_ij, as vectors in simple-root coordinates."""
        if "coweights" not in self._caches:
            inv = linalg.inverse(self.form)
            self._caches["coweights"] = tuple(
                tuple(inv[i][j] for j in range(self.rank_finite))
                for i in range(self.rank_finite)
            )
        return self._caches["coweights"]

    @property
    def connection_index(self) -> int:
        det = linalg.det(tuple(tuple(Fraction(x) for x in row) for row in self.cartan))
        assert det.denominator == 1 and det != 0
        return abs(int(det))

    def dominant_coweight_for(self, avoid: frozenset | set) -> tuple[Fraction, ...]:
        """n·Σ_{i∉L} ω_i: vanishes on the simples in L, positive elsewhere,
        and lies in the coroot lattice thanks to the connection-index scale."""
        n = self.connection_index
        k = self.rank_finite
        total = [Fraction(0)] * k
        for i in range(k):
            if i not in avoid:
                w = self.fundamental_coweights[i]
                for j in range(k):
                    total[j] += n * w[j]
        return tuple(total)

    def coroot_coordinates(self, vec) -> tuple[Fraction, ...]:
        """Coordinates of a vector over the simple coroots: c_i = λ_i d_i."""
        return tuple(Fraction(vec[i]) * self.symmetrizer[i] for i in range(self.rank_finite))

    def in_coroot_lattice(self, vec) -> bool:
        return all(c.denominator == 1 for c in self.coroot_coordinates(vec))

    # -- reflection matrices -------------------------------------------

    def _build_simple_matrix(self, i: int):
        k = self.rank_finite
        dim = self.dim
        m = [[1 if r == c else 0 for c in range(dim)] for r in range(dim)]
        if i < k:
            for j in range(k):
                m[i][j] -= self.cartan[i][j]
        else:
            gamma = self.highest_root
            d_gamma = self.inner(gamma, gamma) / 2
            for j in range(k):
                cj = self.inner(self.simple_root(j), gamma) / d_gamma
                assert cj.denominator == 1
                cj = int(cj)
                if cj:
                    for r in range(k):
                        m[r][j] -= cj * gamma.coeffs[r]
                    m[k][j] += cj
        return tuple(tuple(row) for row in m)

    def simple_matrix(self, i: int):
        if not 0 <= i < self.ngens:
            raise DomainError(f"no simple reflection with index {i}")
        return self._simple_matrices[i]

    def metadata(self) -> dict:
        """Normalization notes for serialized output."""
        return {
            "kind": self.kind,
            "type": self.type_string,
            "cartan": [list(row) for row in self.cartan],
            "symmetrizer": [str(d) for d in self.symmetrizer],
            "simple_names": list(self.simple_names),
        }


_TYPE_RE = re.compile(r"^([A-G])(~?)([0-9]+)$")

_TYPE_RANKS = {"A": (1, 26), "B": (2, 26), "C": (2, 26), "D": (4, 26),
               "E": (6, 8), "F": (4, 4), "G": (2, 2)}


def _chain(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def _cartan_for(letter: str, n: int) -> list[list[int]]:
    if letter == "A":
        return _chain(n)
    if letter == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if letter == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if letter == "D":
        a = _chain(n - 1) if n > 1 else [[2]]
        a = [row + [0] for row in a] + [[0] * n]
        a[n - 1][n - 1] = 2
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if letter == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            a[i][j] = a[j][i] = -1
        a[1][3] = a[3][1] = -1
        return a
    if letter == "F":
        a = _chain(4)
        a[2][1] = -2
        return a
    if letter == "G":
        return [[2, -1], [-3, 2]]
    raise ExprError(f"unknown type letter {letter!r}")


def build_system(spec: str | None = None, *, cartan=None, symmetrizer=None,
                 affine: bool = False) -> CoxeterSystem:
    """Build a system from a type string like "B2" / "A~2", or explicit Cartan data."""
    if spec is not None:
        m = _TYPE_RE.match(spec.strip())
        if not m:
            raise ExprError(f"unknown type string {spec!r}")
        letter, tilde, digits = m.groups()
        n = int(digits)
        lo, hi = _TYPE_RANKS[letter]
        if not lo <= n <= hi:
            raise ExprError(f"rank {n} is out of range for type {letter}")
        return CoxeterSystem(_cartan_for(letter, n), affine=bool(tilde),
                             type_string=spec.strip())
    if cartan is None:
        raise ExprError("build_system needs a type string or a Cartan matrix")
    return CoxeterSystem(cartan, symmetrizer=symmetrizer, affine=affine)


def parse_cartan_file(text: str) -> CoxeterSystem:
    """Parse the plain-text matrix format:

        rank k [affine]
        k integer rows
        [symmetrizer d1 ... dk]   (rationals as p/q)
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValidationError("empty Cartan file")
    head = lines[0].split()
    if len(head) < 2 or head[0] != "rank":
        raise ValidationError("Cartan file must start with 'rank k [affine]'")
    try:
        k = int(head[1])
    except ValueError:
        raise ValidationError(f"bad rank {head[1]!r} in Cartan file")
    affine = False
    if len(head) > 2:
        if head[2] != "affine" or len(head) > 3:
            raise ValidationError("rank line may only carry the single flag 'affine'")
        affine = True
    if len(lines) < 1 + k:
        raise ValidationError(f"expected {k} matrix rows in Cartan file")
    rows = []
    for ln in lines[1:1 + k]:
        try:
            row = [int(x) for x in ln.split()]
        except ValueError:
            raise ValidationError(f"non-integer Cartan row {ln!r}")
        if len(row) != k:
            raise ValidationError(f"Cartan row {ln!r} does not have {k} entries")
        rows.append(row)
    symmetrizer = None
    rest = lines[1 + k:]
    if rest:
        parts = rest[0].split()
        if parts[0] != "symmetrizer" or len(rest) > 1:
            raise ValidationError("unexpected trailing content in Cartan file")
        try:
            symmetrizer = [Fraction(p) for p in parts[1:]]
        except (ValueError, ZeroDivisionError):
            raise ValidationError("bad symmetrizer entries in Cartan file")
    return CoxeterSystem(rows, symmetrizer=symmetrizer, affine=affine)
