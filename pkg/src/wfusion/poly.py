"""Small multivariate polynomial ring over Q(sqrt(-3)).

Used wherever the lowest-weight parameters (h, k) or the evaluation
eigenvalues (h2, k2, h3, k3) are kept symbolic: bracket-consistency
property tests, parameter solving, and the symbolic Zhu relation rows.
Only the operations the rewriting engine needs are provided.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .scalars import ONE, ZERO, QuadScalar

Exponents = Tuple[int, ...]


class PolyRing:
    """Polynomial ring Q(sqrt(-3))[v1, ..., vn] with named generators."""

    def __init__(self, variables: Tuple[str, ...]):
        self.variables = tuple(variables)
        self._zero_exp = (0,) * len(self.variables)
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._zero_exp: ONE})

    def gen(self, name: str) -> "Poly":
        i = self.variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return Poly(self, {exp: ONE})

    def const(self, c) -> "Poly":
        c = QuadScalar.coerce(c)
        if c.is_zero():
            return self.zero
        return Poly(self, {self._zero_exp: c})

    def coerce(self, x) -> "Poly":
        if isinstance(x, Poly):
            if x.ring is not self:
                raise ValueError("mixed polynomial rings")
            return x
        return self.const(x)


class Poly:
    """Immutable polynomial: map from exponent tuples to QuadScalar."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Dict[Exponents, QuadScalar]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if c})

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Poly is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(e == self.ring._zero_exp for e in self.terms)

    def constant_value(self) -> QuadScalar:
        if not self.terms:
            return ZERO
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[self.ring._zero_exp]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficient(self, exps: Exponents) -> QuadScalar:
        return self.terms.get(tuple(exps), ZERO)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadScalar)):
            c0 = QuadScalar.coerce(other)
            return Poly(self.ring, {e: c * c0 for e, c in self.terms.items()})
        if not isinstance(other, Poly) or other.ring is not self.ring:
            return NotImplemented
        out: Dict[Exponents, QuadScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                return NotImplemented
            return other
        if isinstance(other, (int, Fraction, QuadScalar)):
            return self.ring.const(other)
        return NotImplemented

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, values: Mapping[str, QuadScalar]) -> QuadScalar:
        vals = [QuadScalar.coerce(values[v]) for v in self.ring.variables]
        out = ZERO
        for e, c in self.terms.items():
            term = c
            for v, p in zip(vals, e):
                if p:
                    term = term * (v ** p)
            out = out + term
        return out

    # -- comparison / display ---------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda x: (sum(x), x), reverse=True):
            mono = "*".join(
                f"{v}^{p}" if p > 1 else v
                for v, p in zip(self.ring.variables, e)
                if p
            )
            c = self.terms[e]
            cs = f"({c})"
            bits.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(bits)

    __repr__ = __str__
