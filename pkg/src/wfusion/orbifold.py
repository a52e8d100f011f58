"""Finite-group machinery for fusion-rule lower bounds.

A finite group G acts on a stable set S of module labels.  The twisted
group-set algebra A_alpha(G, S) has basis {a (x) e(L)} with product

    (a (x) e(L)) (b (x) e(M)) = alpha_M(a, b) delta_{L.b, M} (ab (x) e(M)).

Its simple modules are induced from characters of stabilizers (trivial
cocycle, abelian stabilizers -- the supported scope).  The span of
intertwining-operator triples carries an A_alpha(G, S3)-module
structure, and the multiplicity of a simple module in it is a lower
bound on the corresponding fusion rule of the orbifold subalgebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from .scalars import ONE, ZERO, OMEGA, QuadScalar

Element = str
Label = str


class FiniteGroup:
    """Finite group given by its multiplication table."""

    def __init__(self, elements: Sequence[Element], table: Mapping[Tuple[Element, Element], Element]):
        self.elements = tuple(elements)
        self.table = dict(table)
        self.identity = self._find_identity()
        self.inverse = {a: self._find_inverse(a) for a in self.elements}
        self._check_axioms()

    def mul(self, a: Element, b: Element) -> Element:
        return self.table[(a, b)]

    def order(self) -> int:
        return len(self.elements)

    def _find_identity(self) -> Element:
        for e in self.elements:
            if all(self.mul(e, a) == a and self.mul(a, e) == a for a in self.elements):
                return e
        raise ValueError("multiplication table has no identity")

    def _find_inverse(self, a: Element) -> Element:
        for b in self.elements:
            if self.mul(a, b) == self.identity and self.mul(b, a) == self.identity:
                return b
        raise ValueError(f"element {a!r} has no inverse")

    def _check_axioms(self):
        for a, b, c in product(self.elements, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError(f"multiplication is not associative at ({a}, {b}, {c})")

    @classmethod
    def cyclic(cls, n: int, generator: str = "t") -> "FiniteGroup":
        names = {0: "e"}
        for i in range(1, n):
            names[i] = generator if i == 1 else f"{generator}{i}"
        elements = [names[i] for i in range(n)]
        table = {
            (names[i], names[j]): names[(i + j) % n]
            for i in range(n)
            for j in range(n)
        }
        return cls(elements, table)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        if n > 4:
            raise ValueError("symmetric groups beyond S4 are not needed here")
        perms = []

        def gen(prefix, remaining):
            if not remaining:
                perms.append(tuple(prefix))
                return
            for i, x in enumerate(remaining):
                gen(prefix + [x], remaining[:i] + remaining[i + 1 :])

        gen([], list(range(n)))
        name = {p: "".join(str(x + 1) for x in p) for p in perms}
        table = {}
        for p in perms:
            for q in perms:
                pq = tuple(p[q[i]] for i in range(n))
                table[(name[p], name[q])] = name[pq]
        return cls([name[p] for p in perms], table)


class CocycleError(ValueError):
    pass


@dataclass(frozen=True)
class StableSet:
    """A G-stable set of module labels with action and 2-cocycle data."""

    name: str
    labels: Tuple[Label, ...]
    group: FiniteGroup
    action: Mapping[Tuple[Label, Element], Label]  # (L, a) -> L.a
    cocycle: Optional[Mapping[Tuple[Label, Element, Element], QuadScalar]] = None

    def __post_init__(self):
        g = self.group
        for lab in self.labels:
            if self.action[(lab, g.identity)] != lab:
                raise ValueError(f"identity moves label {lab!r}")
        for lab in self.labels:
            for a, b in product(g.elements, repeat=2):
                if self.act(self.act(lab, a), b) != self.act(lab, g.mul(a, b)):
                    raise ValueError(f"not a right action at ({lab}, {a}, {b})")
        self._check_cocycle()

    def act(self, lab: Label, a: Element) -> Label:
        return self.action[(lab, a)]

    def alpha(self, lab: Label, a: Element, b: Element) -> QuadScalar:
        if self.cocycle is None:
            return ONE
        return self.cocycle[(lab, a, b)]

    def _check_cocycle(self):
        g = self.group
        for lab in self.labels:
            for a, b, c in product(g.elements, repeat=3):
                m = self.act(lab, g.inverse[a])
                lhs = self.alpha(lab, c, g.mul(b, a)) * self.alpha(lab, b, a)
                rhs = self.alpha(m, c, b) * self.alpha(lab, g.mul(c, b), a)
                if lhs != rhs:
                    raise CocycleError(
                        f"cocycle identity fails at (L={lab}, a={a}, b={b}, c={c})"
                    )

    def orbits(self) -> List[Tuple[Label, ...]]:
        seen = set()
        out = []
        for lab in self.labels:
            if lab in seen:
                continue
            orbit = sorted({self.act(lab, a) for a in self.group.elements})
            seen.update(orbit)
            out.append(tuple(orbit))
        return out

    def stabilizer(self, lab: Label) -> Tuple[Element, ...]:
        return tuple(a for a in self.group.elements if self.act(lab, a) == lab)


BasisPair = Tuple[Element, Label]


class GroupSetAlgebra:
    """The algebra A_alpha(G, S) with its structure constants."""

    def __init__(self, group: FiniteGroup, stable_set: StableSet):
        self.group = group
        self.stable_set = stable_set
        self.basis: List[BasisPair] = [
            (a, lab) for a in group.elements for lab in stable_set.labels
        ]
        if len(self.basis) <= 64:
            self._check_associativity()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def product(self, x: BasisPair, y: BasisPair) -> Optional[Tuple[QuadScalar, BasisPair]]:
        """(a(x)e(L)) (b(x)e(M)) as (coefficient, basis pair), or None if zero."""
        (a, lab), (b, m) = x, y
        if self.stable_set.act(lab, b) != m:
            return None
        coeff = self.stable_set.alpha(m, a, b)
        return coeff, (self.group.mul(a, b), m)

    def identity_element(self) -> Dict[BasisPair, QuadScalar]:
        return {(self.group.identity, lab): ONE for lab in self.stable_set.labels}

    def _mul_vectors(
        self, u: Dict[BasisPair, QuadScalar], v: Dict[BasisPair, QuadScalar]
    ) -> Dict[BasisPair, QuadScalar]:
        out: Dict[BasisPair, QuadScalar] = {}
        for x, cx in u.items():
            for y, cy in v.items():
                res = self.product(x, y)
                if res is None:
                    continue
                c, z = res
                s = out.get(z, ZERO) + cx * cy * c
                if s:
                    out[z] = s
                else:
                    out.pop(z, None)
        return out

    def _check_associativity(self):
        ident = self.identity_element()
        for x in self.basis:
            if self._mul_vectors(ident, {x: ONE}) != {x: ONE}:
                raise ValueError(f"left identity fails on {x}")
            if self._mul_vectors({x: ONE}, ident) != {x: ONE}:
                raise ValueError(f"right identity fails on {x}")
        for x, y, z in product(self.basis, repeat=3):
            lhs = self._mul_vectors(self._mul_vectors({x: ONE}, {y: ONE}), {z: ONE})
            rhs = self._mul_vectors({x: ONE}, self._mul_vectors({y: ONE}, {z: ONE}))
            if lhs != rhs:
                raise ValueError(f"associativity fails at ({x}, {y}, {z})")


def _characters(group: FiniteGroup, subgroup: Sequence[Element]) -> List[Dict[Element, QuadScalar]]:
    """All characters of an abelian subgroup, with values in mu_6.

    Enumerated by backtracking over value assignments; requires the
    subgroup exponent to divide 6 so that values lie in Q(sqrt(-3)).
    """
    subgroup = list(subgroup)
    for a, b in product(subgroup, repeat=2):
        if group.mul(a, b) != group.mul(b, a):
            raise CocycleError("stabilizer is not abelian; unsupported scope")
    n = len(subgroup)
    if 6 % _exponent(group, subgroup) != 0:
        raise CocycleError("stabilizer exponent does not divide 6")
    mu6 = []
    z = ONE
    zeta6 = -(OMEGA * OMEGA)  # primitive 6th root: -omega^2 = e^{pi i/3}
    for _ in range(6):
        mu6.append(z)
        z = z * zeta6
    chars = []
    table = {(a, b): group.mul(a, b) for a in subgroup for b in subgroup}

    def backtrack(assigned: Dict[Element, QuadScalar], todo: List[Element]):
        if not todo:
            chars.append(dict(assigned))
            return
        elem = todo[0]
        for val in mu6:
            assigned[elem] = val
            if _consistent(assigned, table):
                backtrack(assigned, todo[1:])
            del assigned[elem]

    identity_assigned = {group.identity: ONE}
    rest = [a for a in subgroup if a != group.identity]
    backtrack(identity_assigned, rest)
    unique = []
    for ch in chars:
        if ch not in unique:
            unique.append(ch)
    unique.sort(key=lambda ch: [str(ch[a]) for a in subgroup])
    if len(unique) != n:
        raise CocycleError(
            f"found {len(unique)} characters for a subgroup of order {n}"
        )
    return unique


def _exponent(group: FiniteGroup, subgroup: Sequence[Element]) -> int:
    exp = 1
    for a in subgroup:
        k = 1
        x = a
        while x != group.identity:
            x = group.mul(x, a)
            k += 1
        exp = exp * k // _gcd(exp, k)
    return exp


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _consistent(assigned: Dict[Element, QuadScalar], table) -> bool:
    for (a, b), ab in table.items():
        if a in assigned and b in assigned and ab in assigned:
            if assigned[a] * assigned[b] != assigned[ab]:
                return False
    return True


@dataclass(frozen=True)
class SimpleModule:
    """A simple A_alpha(G, S)-module induced from a stabilizer character.

    The basis is indexed by the orbit labels; the vector at label L
    lives in the component e(L), realized via the chosen coset
    representative with orbit_rep . rep(L)^{-1} = L.
    """

    algebra: GroupSetAlgebra
    orbit: Tuple[Label, ...]
    orbit_rep: Label
    stabilizer: Tuple[Element, ...]
    character: Mapping[Element, QuadScalar]
    coset_reps: Mapping[Label, Element]

    @property
    def dimension(self) -> int:
        return len(self.orbit)

    def action_entry(self, a: Element, basis_label: Label) -> Tuple[Label, QuadScalar]:
        """Image of the basis vector at ``basis_label`` under phi(a).

        phi(a) maps the component e(L) to e(L . a^{-1}); on the induced
        module, a . rep(L) factors as rep(L') s with s in the
        stabilizer, contributing the scalar character(s).
        """
        group = self.algebra.group
        sset = self.algebra.stable_set
        r = self.coset_reps[basis_label]
        ar = group.mul(a, r)
        target = sset.act(self.orbit_rep, group.inverse[ar])
        s = group.mul(group.inverse[self.coset_reps[target]], ar)
        return target, self.character[s]

    def generator_matrix_entry(
        self, a: Element, component: Label, basis_label: Label
    ) -> Tuple[Label, QuadScalar] | None:
        """Action of a (x) e(component): zero unless it matches the vector."""
        if component != basis_label:
            return None
        return self.action_entry(a, basis_label)

    def trace(self, a: Element, component: Label) -> QuadScalar:
        total = ZERO
        for lab in self.orbit:
            res = self.generator_matrix_entry(a, component, lab)
            if res is not None and res[0] == lab:
                total = total + res[1]
        return total


def simple_modules(algebra: GroupSetAlgebra) -> List[SimpleModule]:
    """Complete list of simple modules, one family per orbit."""
    if algebra.stable_set.cocycle is not None:
        for key, value in algebra.stable_set.cocycle.items():
            if value != ONE:
                raise CocycleError(
                    "nontrivial cocycles are outside the supported scope"
                )
    group = algebra.group
    sset = algebra.stable_set
    out: List[SimpleModule] = []
    for orbit in sset.orbits():
        rep = orbit[0]
        stab = sset.stabilizer(rep)
        reps: Dict[Label, Element] = {}
        for lab in orbit:
            for a in group.elements:
                if sset.act(rep, group.inverse[a]) == lab:
                    reps[lab] = a
                    break
        reps[rep] = group.identity
        for char in _characters(group, stab):
            out.append(SimpleModule(algebra, orbit, rep, stab, char, reps))
    # Wedderburn check per orbit: sum of squared dimensions = |G| |orbit|
    for orbit in sset.orbits():
        total = sum(
            s.dimension**2 for s in out if s.orbit == orbit
        )
        if total != group.order() * len(orbit):
            raise CocycleError(
                f"Wedderburn dimension count fails on orbit {orbit}"
            )
    return out


Triple = Tuple[Label, Label, Label]


@dataclass(frozen=True)
class IntertwinerModule:
    """The A_alpha(G, S3)-module spanned by intertwining-operator triples.

    Basis vectors are pairs of basis labels of the two chosen simple
    modules together with a target label L3 such that the underlying
    fusion dimension of (L3; L1, L2) is 1.  The generator a (x) e(M)
    permutes triples by the diagonal action of a^{-1} and multiplies by
    the product of the two phi-scalars and the transport scalar of the
    intertwiner label.
    """

    algebra: GroupSetAlgebra  # over S3
    simple1: SimpleModule
    simple2: SimpleModule
    basis: Tuple[Tuple[Label, Label, Label], ...]  # (L1, L2, L3)
    iso_scalars: Mapping[Tuple[Element, Triple], QuadScalar]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _transport(self, a: Element, triple: Triple) -> QuadScalar:
        return self.iso_scalars.get((a, triple), ONE)

    def apply_generator(
        self, a: Element, component: Label, index: int
    ) -> Tuple[int, QuadScalar] | None:
        l1, l2, l3 = self.basis[index]
        if component != l3:
            return None
        t1, c1 = self.simple1.action_entry(a, l1)
        t2, c2 = self.simple2.action_entry(a, l2)
        group = self.algebra.group
        t3 = self.algebra.stable_set.act(l3, group.inverse[a])
        coeff = self._transport(a, (l1, l2, l3)) * c1 * c2
        target = (t1, t2, t3)
        return self.basis.index(target), coeff

    def trace(self, a: Element, component: Label) -> QuadScalar:
        total = ZERO
        for i in range(len(self.basis)):
            res = self.apply_generator(a, component, i)
            if res is not None and res[0] == i:
                total = total + res[1]
        return total


def intertwiner_module(
    simple1: SimpleModule,
    simple2: SimpleModule,
    algebra3: GroupSetAlgebra,
    fusion_triples: FrozenSet[Triple],
    iso_scalars: Optional[Mapping[Tuple[Element, Triple], QuadScalar]] = None,
) -> IntertwinerModule:
    """Build the intertwiner module for a pair of simples and a target set.

    ``fusion_triples`` is the set of (L1, L2, L3) with underlying fusion
    dimension 1 (the supported scope; higher multiplicities would need
    an extra f-index).
    """
    s3_labels = set(algebra3.stable_set.labels)
    basis = tuple(
        (l1, l2, l3)
        for l1 in simple1.orbit
        for l2 in simple2.orbit
        for l3 in sorted(s3_labels)
        if (l1, l2, l3) in fusion_triples
    )
    module = IntertwinerModule(
        algebra3, simple1, simple2, basis, dict(iso_scalars or {})
    )
    return module


def lower_bound(module: IntertwinerModule, target: SimpleModule) -> int:
    """Multiplicity of ``target`` in the intertwiner module.

    Computed by averaging traces against the stabilizer character;
    valid because the algebra is semisimple and the simple modules are
    induced from characters of abelian stabilizers.
    """
    group = module.algebra.group
    stab = target.stabilizer
    total = ZERO
    for a in stab:
        total = total + target.character[group.inverse[a]] * module.trace(
            a, target.orbit_rep
        )
    value = total / QuadScalar(len(stab))
    if value.b != 0 or value.a.denominator != 1 or value.a < 0:
        raise ValueError(f"multiplicity is not a nonnegative integer: {value}")
    return int(value.a)


def group_tensor_bound(
    group: FiniteGroup,
    chi1: Mapping[Element, QuadScalar],
    chi2: Mapping[Element, QuadScalar],
    chi3: Mapping[Element, QuadScalar],
) -> int:
    """Multiplicity of chi3 in chi1 (x) chi2 via character orthogonality."""
    total = ZERO
    for a in group.elements:
        total = total + chi1[a] * chi2[a] * chi3[group.inverse[a]]
    value = total / QuadScalar(group.order())
    if value.b != 0 or value.a.denominator != 1 or value.a < 0:
        raise ValueError(f"multiplicity is not a nonnegative integer: {value}")
    return int(value.a)
