"""Canonical-form calculus for words in the modes L(n), J(n).

A lowest-weight module with 1-dimensional top level and parameters
(h, k) is spanned by ordered monomials

    L(-m1)...L(-mp) J(-n1)...J(-nq) w,   m1 >= ... >= mp >= 1,
                                         n1 >= ... >= nq >= 1,

and every word of modes is rewritten into this form using the
commutation relations of the W(2,3) algebra at central charge 6/5:

    [L(m), L(n)] = (m-n) L(m+n) + (m^3-m)/12 * 6/5 * delta(m+n)
    [L(m), J(n)] = (2m-n) J(m+n)
    [J(m), J(n)] = (m-n)(22(m+n+2)(m+n+3) + 35(m+2)(n+2)) L(m+n)
                   - 120(m-n)( sum_{j<=-2} L(j)L(m+n-j)
                               + sum_{j>=-1} L(m+n-j)L(j) )
                   - 7/10 m(m^2-1)(m^2-4) delta(m+n)

The normally ordered tail of [J, J] is infinite as written; on a graded
vector of degree d only the summands whose annihilating factor has index
<= d survive, so each application is a finite sum.

Coefficients belong to any commutative ring containing Q(sqrt(-3)); in
practice QuadScalar or Poly (for symbolic parameters).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from .poly import Poly
from .scalars import ONE, QuadScalar

CENTRAL_CHARGE = Fraction(6, 5)


class Mode(NamedTuple):
    generator: str  # 'L' or 'J'
    index: int

    @property
    def weight(self) -> int:
        return 2 if self.generator == "L" else 3

    def __str__(self) -> str:
        return f"{self.generator}({self.index})"


class PbwMonomial(NamedTuple):
    """Ordered monomial; parts are stored positive and weakly decreasing."""

    lparts: Tuple[int, ...]
    jparts: Tuple[int, ...]

    def degree(self) -> int:
        return sum(self.lparts) + sum(self.jparts)

    def is_empty(self) -> bool:
        return not self.lparts and not self.jparts

    def head(self) -> Mode:
        if self.lparts:
            return Mode("L", -self.lparts[0])
        return Mode("J", -self.jparts[0])

    def rest(self) -> "PbwMonomial":
        if self.lparts:
            return PbwMonomial(self.lparts[1:], self.jparts)
        return PbwMonomial(self.lparts, self.jparts[1:])

    def prepend(self, mode: Mode) -> "PbwMonomial":
        m = -mode.index
        if mode.generator == "L":
            return PbwMonomial((m,) + self.lparts, self.jparts)
        return PbwMonomial(self.lparts, (m,) + self.jparts)

    def modes(self) -> List[Mode]:
        return [Mode("L", -m) for m in self.lparts] + [
            Mode("J", -n) for n in self.jparts
        ]

    def __str__(self) -> str:
        if self.is_empty():
            return "w"
        return "".join(str(m) for m in self.modes()) + "w"


EMPTY_MONOMIAL = PbwMonomial((), ())


class ModuleParams(NamedTuple):
    """Top-level eigenvalues: L(0)w = h w, J(0)w = k w; c = 6/5 is fixed."""

    h: object  # QuadScalar or Poly
    k: object

    def ring_one(self):
        if isinstance(self.h, Poly):
            return self.h.ring.one
        if isinstance(self.k, Poly):
            return self.k.ring.one
        return ONE


class PbwVector:
    """Finite linear combination of PbwMonomials (no zero coefficients)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[PbwMonomial, object] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, mon: PbwMonomial, coeff=ONE) -> "PbwVector":
        return cls({mon: coeff})

    @classmethod
    def lowest_weight(cls, coeff=ONE) -> "PbwVector":
        return cls({EMPTY_MONOMIAL: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "PbwVector") -> "PbwVector":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return PbwVector(out)

    def __sub__(self, other: "PbwVector") -> "PbwVector":
        return self + other.scale(-1)

    def scale(self, c) -> "PbwVector":
        if not c:
            return PbwVector()
        return PbwVector({m: x * c for m, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PbwVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("PbwVector is not hashable")

    def degrees(self) -> set:
        return {m.degree() for m in self.terms}

    def degree(self) -> int:
        """Degree of a homogeneous vector (max degree for mixed ones)."""
        return max((m.degree() for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def flip_j(self) -> "PbwVector":
        """Apply the sign flip J(n) -> -J(n) to every monomial."""
        return PbwVector(
            {m: c * (-1 if len(m.jparts) % 2 else 1) for m, c in self.terms.items()}
        )

    def coefficient(self, mon: PbwMonomial):
        return self.terms.get(mon, 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=lambda x: (x.degree(), x.lparts, x.jparts)):
            bits.append(f"({self.terms[m]})*{m}")
        return " + ".join(bits)

    __repr__ = __str__


def _partitions(n: int, max_part: int | None = None) -> Iterable[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def graded_basis(degree: int) -> List[PbwMonomial]:
    """All monomials of the given degree, sorted graded-lexicographically."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    for l_deg in range(degree + 1):
        for lp in _partitions(l_deg):
            for jp in _partitions(degree - l_deg):
                out.append(PbwMonomial(lp, jp))
    out.sort(key=lambda m: (m.lparts, m.jparts))
    return out


def _canonical_before(x: Mode, y: Mode) -> bool:
    """True when x may sit immediately left of y in a canonical monomial."""
    if x.generator == "L":
        return y.generator == "J" or x.index <= y.index
    return y.generator == "J" and x.index <= y.index


class ModeAlgebra:
    """Rewriting engine bound to one set of module parameters.

    Results of single-mode applications are memoized per monomial, which
    keeps repeated rewriting at degree 6 and above cheap.
    """

    def __init__(self, params: ModuleParams):
        self.params = params
        self.one = params.ring_one()
        self._cache: Dict[Tuple[Mode, PbwMonomial], Dict[PbwMonomial, object]] = {}

    # -- public API -------------------------------------------------------

    def apply_mode(self, mode: Mode, v: PbwVector) -> PbwVector:
        out: Dict[PbwMonomial, object] = {}
        for mon, c in v.terms.items():
            for m2, c2 in self._apply(mode, mon).items():
                s = out.get(m2, 0) + c * c2
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        return PbwVector(out)

    def apply_word(self, word: Sequence[Mode], v: PbwVector) -> PbwVector:
        """Apply a word of modes, rightmost mode first."""
        for mode in reversed(word):
            v = self.apply_mode(mode, v)
        return v

    def monomial_vector(self, word: Sequence[Mode], coeff=None) -> PbwVector:
        """Canonicalize ``word`` applied to the lowest-weight vector."""
        if coeff is None:
            coeff = self.one
        return self.apply_word(word, PbwVector.lowest_weight(coeff))

    def bracket_apply(self, x: Mode, y: Mode, v: PbwVector) -> PbwVector:
        """Apply the commutator [x, y] as given by the defining relations."""
        out: Dict[PbwMonomial, object] = {}
        for mon, c in v.terms.items():
            for m2, c2 in self._bracket(x, y, mon).items():
                s = out.get(m2, 0) + c * c2
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        return PbwVector(out)

    # -- internals --------------------------------------------------------

    def _scaled(self, terms: Dict[PbwMonomial, object], c) -> Dict[PbwMonomial, object]:
        if not c:
            return {}
        return {m: x * c for m, x in terms.items()}

    @staticmethod
    def _acc(out: Dict[PbwMonomial, object], terms: Dict[PbwMonomial, object], c=1):
        for m, x in terms.items():
            s = out.get(m, 0) + x * c
            if s:
                out[m] = s
            else:
                out.pop(m, None)

    def _apply(self, mode: Mode, mon: PbwMonomial) -> Dict[PbwMonomial, object]:
        key = (mode, mon)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if mon.is_empty():
            if mode.index > 0:
                out: Dict[PbwMonomial, object] = {}
            elif mode.index == 0:
                val = self.params.h if mode.generator == "L" else self.params.k
                out = {EMPTY_MONOMIAL: val} if val else {}
            else:
                out = {EMPTY_MONOMIAL.prepend(mode): self.one}
        else:
            head = mon.head()
            if mode.index < 0 and _canonical_before(mode, head):
                out = {mon.prepend(mode): self.one}
            else:
                rest = mon.rest()
                out = {}
                # x y = y x + [x, y], applied to rest
                for m2, c2 in self._apply(mode, rest).items():
                    self._acc(out, self._apply(head, m2), c2)
                self._acc(out, self._bracket(mode, head, rest))
        self._cache[key] = out
        return out

    def _apply_terms(
        self, mode: Mode, terms: Dict[PbwMonomial, object]
    ) -> Dict[PbwMonomial, object]:
        out: Dict[PbwMonomial, object] = {}
        for mon, c in terms.items():
            self._acc(out, self._apply(mode, mon), c)
        return out

    def _bracket(self, x: Mode, y: Mode, mon: PbwMonomial) -> Dict[PbwMonomial, object]:
        m, n = x.index, y.index
        out: Dict[PbwMonomial, object] = {}
        if x.generator == "L" and y.generator == "L":
            self._acc(out, self._apply(Mode("L", m + n), mon), m - n)
            if m + n == 0:
                c = Fraction(m**3 - m, 12) * CENTRAL_CHARGE
                if c:
                    self._acc(out, {mon: self.one}, c)
        elif x.generator == "L" and y.generator == "J":
            self._acc(out, self._apply(Mode("J", m + n), mon), 2 * m - n)
        elif x.generator == "J" and y.generator == "L":
            # [J(m), L(n)] = -[L(n), J(m)]
            self._acc(out, self._apply(Mode("J", m + n), mon), -(2 * n - m))
        else:
            s = m + n
            lin = (m - n) * (22 * (s + 2) * (s + 3) + 35 * (m + 2) * (n + 2))
            self._acc(out, self._apply(Mode("L", s), mon), lin)
            d = mon.degree()
            quad: Dict[PbwMonomial, object] = {}
            # sum_{j <= -2} L(j) L(s-j): right factor has index s-j >= s+2;
            # it kills a degree-d vector unless s-j <= d.
            for j in range(s - d, -1):
                inner = self._apply(Mode("L", s - j), mon)
                self._acc(quad, self._apply_terms(Mode("L", j), inner))
            # sum_{j >= -1} L(s-j) L(j): right factor L(j) kills unless j <= d.
            for j in range(-1, d + 1):
                inner = self._apply(Mode("L", j), mon)
                self._acc(quad, self._apply_terms(Mode("L", s - j), inner))
            self._acc(out, quad, -120 * (m - n))
            if s == 0:
                c = -Fraction(7, 10) * m * (m * m - 1) * (m * m - 4)
                if c:
                    self._acc(out, {mon: self.one}, c)
        return out
