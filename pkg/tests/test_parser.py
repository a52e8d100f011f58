"""The operator-expression grammar used by the shipped vector files."""

from fractions import Fraction

import pytest

from wfusion.exprparse import (
    ExprSyntaxError,
    load_records,
    parse_terms,
    parse_vector,
)
from wfusion.pbw import Mode, ModeAlgebra, ModuleParams
from wfusion.scalars import QuadScalar

L = lambda n: Mode("L", n)
J = lambda n: Mode("J", n)


def test_single_word():
    terms = parse_terms("L(-2)*J(-1)^2")
    assert terms == [(QuadScalar(1), [L(-2), J(-1), J(-1)])]


def test_coefficients():
    terms = parse_terms("-36720*s3*L(-3) + (7/2)*J(-2)*J(-1) - L(-1)^3")
    assert terms == [
        (QuadScalar(0, -36720), [L(-3)]),
        (QuadScalar(Fraction(7, 2)), [J(-2), J(-1)]),
        (QuadScalar(-1), [L(-1), L(-1), L(-1)]),
    ]


def test_bare_s3_coefficient():
    terms = parse_terms("s3*J(-1)")
    assert terms == [(QuadScalar(0, 1), [J(-1)])]


def test_leading_sign():
    terms = parse_terms("- 5*L(-1) + 3*J(-1)")
    assert [c for c, _ in terms] == [QuadScalar(-5), QuadScalar(3)]


def test_canonical_words_skip_rewriting():
    # already-canonical words need no algebra
    v = parse_vector("2*L(-2)*L(-1)*J(-3) - J(-1)^2")
    assert v.degrees() == {6, 2}


def test_noncanonical_word_requires_algebra():
    algebra = ModeAlgebra(ModuleParams(QuadScalar(1), QuadScalar(0)))
    v = parse_vector("J(-1)*L(-1)", algebra)
    # [L(-1), J(-1)] = (2(-1) - (-1)) J(-2), so J(-1)L(-1) = L(-1)J(-1) + J(-2)
    expected = algebra.monomial_vector([L(-1), J(-1)]) + algebra.monomial_vector(
        [J(-2)]
    )
    assert v == expected
    with pytest.raises(ValueError):
        parse_vector("J(-1)*L(-1)")


def test_syntax_errors_carry_position():
    for bad in ("L(-1", "L(-1) +", "Q(-1)", "3**L(-1)", "L(-1)J(-1)", "L(-1)^"):
        with pytest.raises(ExprSyntaxError):
            parse_terms(bad)


def test_load_records_blank_line_separated(tmp_path):
    path = tmp_path / "v.vectors"
    path.write_text(
        "# comment\n"
        "L(-1)\n"
        "\n"
        "2*L(-2)\n"
        " + J(-1)^2\n"
        "\n"
    )
    records = load_records(path)
    assert len(records) == 2
    assert parse_vector(records[0]).degree() == 1
    assert parse_vector(records[1]).degree() == 2
