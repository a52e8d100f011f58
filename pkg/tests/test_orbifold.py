"""Group-set algebras, their simple modules, and intertwiner multiplicities."""

import itertools

import pytest

from wfusion.orbifold import (
    FiniteGroup,
    GroupSetAlgebra,
    StableSet,
    group_tensor_bound,
    intertwiner_module,
    lower_bound,
    simple_modules,
)
from wfusion.scalars import OMEGA, ONE, ZERO, QuadScalar


@pytest.fixture(scope="module")
def z3():
    return FiniteGroup.cyclic(3)


def singleton_set(group, label="M0"):
    action = {(label, a): label for a in group.elements}
    return StableSet("fixed", (label,), group, action)


def free_set(group, labels=("Ma", "Mb", "Mc")):
    # right action: label_i . t = label_{i-1}, a 3-cycle
    action = {}
    for i, lab in enumerate(labels):
        for j, a in enumerate(group.elements):
            action[(lab, a)] = labels[(i - j) % 3]
    return StableSet("free", labels, group, action)


def test_cyclic_group_structure(z3):
    assert z3.order() == 3
    assert z3.identity == "e"
    assert z3.mul("t", "t2") == "e"
    assert z3.inverse["t"] == "t2"


def test_symmetric_group_structure():
    s3 = FiniteGroup.symmetric(3)
    assert s3.order() == 6
    assert s3.identity == "123"
    assert s3.mul("213", "213") == "123"


def test_bad_multiplication_table_rejected():
    with pytest.raises(ValueError):
        FiniteGroup(["e", "x"], {(a, b): "e" for a in "ex" for b in "ex"})


def test_stable_set_requires_right_action(z3):
    bad = {("Ma", a): "Ma" for a in z3.elements}
    bad.update({("Mb", a): "Mb" for a in z3.elements})
    bad[("Ma", "t")] = "Mb"  # not invertible at t
    with pytest.raises(ValueError):
        StableSet("broken", ("Ma", "Mb"), z3, bad)


def test_algebra_associativity_exhaustive(z3):
    for sset in (singleton_set(z3), free_set(z3)):
        algebra = GroupSetAlgebra(z3, sset)  # checks associativity on build
        for x, y, w in itertools.product(algebra.basis, repeat=3):
            left = algebra._mul_vectors(
                algebra._mul_vectors({x: ONE}, {y: ONE}), {w: ONE}
            )
            right = algebra._mul_vectors(
                {x: ONE}, algebra._mul_vectors({y: ONE}, {w: ONE})
            )
            assert left == right


def test_identity_element(z3):
    algebra = GroupSetAlgebra(z3, free_set(z3))
    e = algebra.identity_element()
    for x in algebra.basis:
        assert algebra._mul_vectors(e, {x: ONE}) == {x: ONE}
        assert algebra._mul_vectors({x: ONE}, e) == {x: ONE}


def test_fixed_point_gives_three_characters(z3):
    simples = simple_modules(GroupSetAlgebra(z3, singleton_set(z3)))
    assert len(simples) == 3
    assert all(s.dimension == 1 for s in simples)
    eigenvalues = {s.character["t"] for s in simples}
    assert eigenvalues == {ONE, OMEGA, OMEGA * OMEGA}


def test_free_orbit_gives_one_simple(z3):
    simples = simple_modules(GroupSetAlgebra(z3, free_set(z3)))
    assert len(simples) == 1
    assert simples[0].dimension == 3


def test_wedderburn_dimension_count(z3):
    # sum of dim^2 over the simples equals |G| x |orbit| for each orbit
    for sset, expected in ((singleton_set(z3), 3), (free_set(z3), 9)):
        simples = simple_modules(GroupSetAlgebra(z3, sset))
        assert sum(s.dimension ** 2 for s in simples) == expected


def test_mixed_stable_set(z3):
    labels = ("M0", "Ma", "Mb", "Mc")
    action = {("M0", a): "M0" for a in z3.elements}
    action.update(free_set(z3).action)
    sset = StableSet("mixed", labels, z3, action)
    simples = simple_modules(GroupSetAlgebra(z3, sset))
    assert sorted(s.dimension for s in simples) == [1, 1, 1, 3]


def test_action_entry_composition(z3):
    # the permutation matrices form a representation: entry-wise
    # composition of t twice agrees with acting by t^2
    simples = simple_modules(GroupSetAlgebra(z3, free_set(z3)))
    module = simples[0]
    for lab in module.orbit:
        mid, c1 = module.action_entry("t", lab)
        out, c2 = module.action_entry("t", mid)
        direct, c = module.action_entry("t2", lab)
        assert out == direct
        assert c1 * c2 == c


def test_group_tensor_bound_cyclic(z3):
    chars = {
        i: {"e": ONE, "t": OMEGA**i, "t2": OMEGA ** (2 * i)} for i in range(3)
    }
    for i in range(3):
        for j in range(3):
            for m in range(3):
                expected = 1 if (i + j - m) % 3 == 0 else 0
                assert group_tensor_bound(z3, chars[i], chars[j], chars[m]) == expected


def test_group_tensor_bound_symmetric():
    s3 = FiniteGroup.symmetric(3)

    def cycle_type(name):
        perm = {i: int(name[i]) - 1 for i in range(3)}
        fixed = sum(1 for i in perm if perm[i] == i)
        return {3: "id", 1: "swap", 0: "threecycle"}[fixed]

    values = {
        "trivial": {"id": 1, "swap": 1, "threecycle": 1},
        "sign": {"id": 1, "swap": -1, "threecycle": 1},
        "standard": {"id": 2, "swap": 0, "threecycle": -1},
    }
    chars = {
        name: {g: QuadScalar(v[cycle_type(g)]) for g in s3.elements}
        for name, v in values.items()
    }
    std = chars["standard"]
    assert group_tensor_bound(s3, std, std, chars["trivial"]) == 1
    assert group_tensor_bound(s3, std, std, chars["sign"]) == 1
    assert group_tensor_bound(s3, std, std, std) == 1
    assert group_tensor_bound(s3, chars["sign"], chars["sign"], chars["trivial"]) == 1


def triples_mixed():
    # V-level fusion dimensions for {M0} x {Ma, Mb, Mc}: M0 acts as a unit
    # and distinct twisted labels fuse to the third
    out = set()
    abc = ("Ma", "Mb", "Mc")
    out.update(("M0", x, x) for x in ("M0",) + abc)
    out.update((x, "M0", x) for x in abc)
    out.update(
        (x, y, z)
        for x, y, z in itertools.permutations(abc)
    )
    return frozenset(out)


@pytest.fixture(scope="module")
def mixed_setup(z3):
    sfix = singleton_set(z3)
    sfree = free_set(z3)
    alg_fix = GroupSetAlgebra(z3, sfix)
    alg_free = GroupSetAlgebra(z3, sfree)
    return z3, alg_fix, alg_free


def test_intertwiner_fixed_times_fixed(mixed_setup):
    # both factors at the fixed point: one basis triple, eigenvalue
    # xi^(i+j), so the multiplicity is 1 at target i+j and 0 elsewhere
    _, alg_fix, _ = mixed_setup
    simples = sorted(
        simple_modules(alg_fix), key=lambda s: (s.character["t"].a, s.character["t"].b)
    )
    by_eig = {s.character["t"]: s for s in simples}
    triples = frozenset({("M0", "M0", "M0")})
    for i in range(3):
        for j in range(3):
            module = intertwiner_module(
                by_eig[OMEGA**i], by_eig[OMEGA**j], alg_fix, triples
            )
            assert module.dimension == 1
            for m in range(3):
                expected = 1 if (i + j - m) % 3 == 0 else 0
                assert lower_bound(module, by_eig[OMEGA**m]) == expected


def test_intertwiner_free_times_free(mixed_setup):
    # both factors on the free orbit, target on the free orbit: the
    # six permuted triples split as two copies of the 3-dim simple
    z3, _, alg_free = mixed_setup
    free = simple_modules(alg_free)[0]
    module = intertwiner_module(free, free, alg_free, triples_mixed())
    assert module.dimension == 6
    assert lower_bound(module, free) == 2


def test_intertwiner_free_times_free_to_fixed(mixed_setup):
    # target at the fixed point: three triples (x, x, M0)... none exist in
    # the mixed table, so every multiplicity is 0
    z3, alg_fix, alg_free = mixed_setup
    free = simple_modules(alg_free)[0]
    module = intertwiner_module(free, free, alg_fix, triples_mixed())
    assert module.dimension == 0
    for target in simple_modules(alg_fix):
        assert lower_bound(module, target) == 0


def test_lower_bound_counts_add_up_to_dimension(mixed_setup):
    # multiplicities weighted by target dimensions recover dim of the
    # intertwiner module (semisimplicity)
    z3, _, alg_free = mixed_setup
    free = simple_modules(alg_free)[0]
    module = intertwiner_module(free, free, alg_free, triples_mixed())
    total = sum(
        lower_bound(module, s) * s.dimension for s in simple_modules(alg_free)
    )
    assert total == module.dimension


def test_registry_lower_bounds(registry):
    # the shipped configuration reproduces the sample multiplicities
    assert registry.lower_bound("W0_1", "W0_1", "W0_2") == 1
    assert registry.lower_bound("W0_1", "W0_1", "W0_0") == 0
    assert registry.lower_bound("Ma", "Ma", "Ma") == 2
    assert registry.lower_bound("Ma", "Ma", "M0_0") == 1
    assert registry.lower_bound("Wa", "Wa", "Wa") == 2
    assert registry.lower_bound("M0_1", "Ma", "Ma") == 1
    assert registry.lower_bound("W0_1", "Ma", "Wa") == 1
