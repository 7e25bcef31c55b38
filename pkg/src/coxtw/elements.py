"""Group elements as exact integer matrices acting on the root lattice.

An element is the matrix of its action on the basis (α_1,...,α_k) for a
finite system, or (α_1,...,α_k,δ) for an affine one; column j is the image
of basis vector j.  Equality of elements is equality of matrices, so words
never need to be compared up to braid moves.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import DomainError
from .system import CoxeterSystem, Root

_WORD_GUARD = 100000


class GroupElement:
    __slots__ = ("system", "matrix", "_word", "_inverse", "_invset")

    def __init__(self, system: CoxeterSystem, matrix):
        self.system = system
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self._word = None
        self._inverse = None
        self._invset = None

    # -- identity, equality --------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, GroupElement)
                and self.system.key == other.system.key
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.system.key, self.matrix))

    def __repr__(self):
        return f"GroupElement({list(self.word)})"

    @property
    def is_identity(self) -> bool:
        n = self.system.dim
        return all(self.matrix[r][c] == (1 if r == c else 0)
                   for r in range(n) for c in range(n))

    # -- multiplication ------------------------------------------------

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.system.key != other.system.key:
            raise DomainError("cannot multiply elements of different systems")
        n = self.system.dim
        a, b = self.matrix, other.matrix
        prod = tuple(
            tuple(sum(a[r][m] * b[m][c] for m in range(n)) for c in range(n))
            for r in range(n)
        )
        return GroupElement(self.system, prod)

    def mul_simple(self, s: int) -> "GroupElement":
        m = self.system.simple_matrix(s)
        n = self.system.dim
        a = self.matrix
        prod = tuple(
            tuple(sum(a[r][t] * m[t][c] for t in range(n)) for c in range(n))
            for r in range(n)
        )
        return GroupElement(self.system, prod)

    def inverse(self) -> "GroupElement":
        if self._inverse is None:
            frac = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
            inv = linalg.inverse(frac)
            for row in inv:
                assert all(x.denominator == 1 for x in row)
            el = GroupElement(self.system, tuple(tuple(int(x) for x in row) for row in inv))
            el._inverse = self
            self._inverse = el
        return self._inverse

    # -- action on roots -----------------------------------------------

    def apply(self, rho: Root) -> Root:
        """Image of a root-lattice vector; no root-validity check."""
        k = self.system.rank_finite
        if self.system.kind == "affine":
            vec = rho.coeffs + (rho.delta,)
        else:
            vec = rho.coeffs
        m = self.matrix
        out = [sum(m[r][c] * vec[c] for c in range(len(vec))) for r in range(len(vec))]
        if self.system.kind == "affine":
            return Root(tuple(out[:k]), out[k])
        return Root(tuple(out), 0)

    def act(self, rho: Root) -> Root:
        """Like apply, but requires ρ to be a root (or a δ-multiple)."""
        fin_ok = self.system.is_root(rho.fin()) or not any(rho.coeffs)
        if not fin_ok or (self.system.kind == "finite" and rho.delta != 0):
            raise DomainError(f"{rho} is not a root of this system")
        return self.apply(rho)

    # -- words and lengths ---------------------------------------------

    @property
    def word(self) -> tuple[int, ...]:
        """The ShortLex-minimal reduced word, by smallest-left-descent peeling."""
        if self._word is None:
            simples = [self.system.simple_root(s) for s in range(self.system.ngens)]
            v = self.inverse()
            out = []
            for _ in range(_WORD_GUARD):
                for s in range(self.system.ngens):
                    if v.apply(simples[s]).is_negative:
                        out.append(s)
                        v = v.mul_simple(s)
                        break
                else:
                    break
            else:
                raise DomainError("word extraction did not terminate")
            assert v.is_identity
            self._word = tuple(out)
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def right_descents(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.system.ngens)
                     if self.apply(self.system.simple_root(s)).is_negative)

    def left_descents(self) -> tuple[int, ...]:
        return self.inverse().right_descents()

    def inversion_set(self) -> frozenset[Root]:
        """Φ_w = {positive roots sent negative by w^{-1}}, via any reduced word."""
        if self._invset is None:
            prefix = identity(self.system)
            roots = []
            for s in self.word:
                rho = prefix.apply(self.system.simple_root(s))
                assert rho.is_positive
                roots.append(rho)
                prefix = prefix.mul_simple(s)
            inv = frozenset(roots)
            assert len(inv) == len(roots)
            self._invset = inv
        return self._invset

    def label(self) -> str:
        if self.is_identity:
            return "e"
        names = self.system.simple_names
        parts = []
        for s in self.word:
            nm = names[s]
            parts.append(f"s_{nm}" if len(nm) == 1 else f"s_{{{nm}}}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"word": list(self.word), "length": self.length}


def identity(system: CoxeterSystem) -> GroupElement:
    n = system.dim
    return GroupElement(system, tuple(
        tuple(1 if r == c else 0 for c in range(n)) for r in range(n)
    ))


def simple(system: CoxeterSystem, s: int) -> GroupElement:
    return GroupElement(system, system.simple_matrix(s))


def from_word(system: CoxeterSystem, word) -> GroupElement:
    el = identity(system)
    for s in word:
        el = el.mul_simple(int(s))
    return el


def ball(system: CoxeterSystem, radius: int) -> tuple[GroupElement, ...]:
    """All elements of length <= radius, sorted by (length, ShortLex word)."""
    if radius < 0:
        raise DomainError("ball radius must be nonnegative")
    levels = system._caches.setdefault("ball_levels", [[identity(system)]])
    simples = [system.simple_root(s) for s in range(system.ngens)]
    while len(levels) <= radius:
        grown = {}
        for w in levels[-1]:
            for s in range(system.ngens):
                if w.apply(simples[s]).is_positive:
                    y = w.mul_simple(s)
                    grown.setdefault(y.matrix, y)
        level = sorted(grown.values(), key=lambda el: el.word)
        if not level:
            levels.append([])
            break
        levels.append(level)
    out = []
    for lv in levels[: radius + 1]:
        out.extend(lv)
    return tuple(out)


def weyl_part(w: GroupElement) -> GroupElement:
    """The finite Weyl component of w = w̄·t_λ, embedded back as an affine element."""
    if w.system.kind != "affine":
        return w
    k = w.system.rank_finite
    m = [[w.matrix[r][c] for c in range(k)] + [0] for r in range(k)]
    m.append([0] * k + [1])
    return GroupElement(w.system, m)


def translation_vector(w: GroupElement) -> tuple[Fraction, ...]:
    """λ with w = w̄·t_λ, in simple-root coordinates: read the δ-row of w."""
    if w.system.kind != "affine":
        raise DomainError("translation parts only exist in affine systems")
    k = w.system.rank_finite
    rhs = tuple(Fraction(w.matrix[k][j]) for j in range(k))
    return tuple(linalg.solve(w.system.form, rhs))


def translation(system: CoxeterSystem, lam) -> GroupElement:
    """t_λ for λ in the coroot lattice, given in simple-root coordinates."""
    if system.kind != "affine":
        raise DomainError("translations only exist in affine systems")
    vec = tuple(Fraction(x) for x in lam)
    if len(vec) != system.rank_finite:
        raise DomainError("translation vector has the wrong length")
    if not system.in_coroot_lattice(vec):
        raise DomainError("translation vector is not in the coroot lattice")
    k = system.rank_finite
    m = [[1 if r == c else 0 for c in range(k + 1)] for r in range(k + 1)]
    for j in range(k):
        pairing = system.inner_vec(system.simple_root(j), vec)
        assert pairing.denominator == 1
        m[k][j] = int(pairing)
    return GroupElement(system, m)
