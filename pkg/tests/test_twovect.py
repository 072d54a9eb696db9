from fractions import Fraction

import pytest

from homlie2.errors import InputError
from homlie2.exactlin import Matrix
from homlie2.twovect import (check_linear_functor, end0_basis, end1_basis,
                             end_dgla_check, from_complex)

F = Fraction


def test_zero_differential_makes_source_equal_target():
    tvs = from_complex(Matrix.zeros(2, 3))
    mor = ((F(1), F(2)), (F(5), F(0), F(-1)))
    assert tvs.source(mor) == tvs.target(mor)


def test_identity_differential_shifts_target():
    tvs = from_complex(Matrix.identity(2))
    mor = ((F(1), F(0)), (F(3), F(4)))
    assert tvs.target(mor) == (F(4), F(4))


def test_compose_requires_matching_endpoints():
    tvs = from_complex(Matrix.identity(2))
    a = ((F(0), F(0)), (F(1), F(0)))
    b = (tvs.target(a), (F(0), F(2)))
    assert tvs.compose(a, b) == ((F(0), F(0)), (F(1), F(2)))
    with pytest.raises(InputError):
        tvs.compose(a, a)


def test_vertical_composition_associativity_and_units():
    tvs = from_complex(Matrix(2, 2, [[1, 2], [0, 1]]))
    m1 = ((F(1), F(1)), (F(1), F(-1)))
    m2 = (tvs.target(m1), (F(2), F(0)))
    m3 = (tvs.target(m2), (F(0), F(5)))
    lhs = tvs.compose(tvs.compose(m1, m2), m3)
    rhs = tvs.compose(m1, tvs.compose(m2, m3))
    assert lhs == rhs
    assert tvs.compose(tvs.ident(tvs.source(m1)), m1) == m1
    assert tvs.compose(m1, tvs.ident(tvs.target(m1))) == m1


def test_check_linear_functor():
    tvs = from_complex(Matrix.identity(2))
    assert check_linear_functor((Matrix.identity(2), Matrix.identity(2)), tvs)
    a0 = Matrix(2, 2, [[1, 1], [0, 1]])
    assert not check_linear_functor((a0, Matrix.identity(2)), tvs)
    # with d = Id membership forces A0 == A1
    assert check_linear_functor((a0, a0), tvs)


def test_string_complex_twist_is_a_functor():
    from homlie2.constructions import sl2_example, string_from_semisimple
    v = string_from_semisimple(sl2_example())
    tvs = from_complex(v.d)
    assert check_linear_functor((v.phi0, v.phi1), tvs)


def test_end0_basis_membership():
    tvs = from_complex(Matrix(2, 3, [[1, 0, 0], [0, 1, 0]]))
    basis = end0_basis(tvs)
    assert basis
    for pair in basis:
        assert check_linear_functor(pair, tvs)


def test_delta_lands_at_zero_when_d_is_zero():
    tvs = from_complex(Matrix.zeros(2, 2))
    for alpha in end1_basis(tvs):
        assert (tvs.d * alpha).is_zero()
        assert (alpha * tvs.d).is_zero()


@pytest.mark.parametrize("d", [
    Matrix.zeros(1, 1),
    Matrix.identity(2),
    Matrix(2, 2, [[1, 1], [0, 0]]),
    Matrix(3, 1, [[0], [1], [0]]),
])
def test_end_dgla_laws(d):
    report = end_dgla_check(from_complex(d))
    assert report.ok, report.table()


def test_end_dgla_rejects_bad_samples():
    tvs = from_complex(Matrix.identity(2))
    bad = (Matrix(2, 2, [[1, 1], [0, 1]]), Matrix.identity(2))
    with pytest.raises(InputError):
        end_dgla_check(tvs, functors=[bad])


def test_every_two_term_fixture_twist_is_a_functor():
    from pathlib import Path
    from homlie2.modelfile import load_model
    fixdir = Path(__file__).parent.parent / "fixtures"
    seen = 0
    for path in sorted(fixdir.glob("*.json")):
        record = load_model(path)
        if type(record).__name__ != "TwoTermHL":
            continue
        tvs = from_complex(record.d)
        assert check_linear_functor((record.phi0, record.phi1), tvs), path
        seen += 1
    assert seen >= 3


def test_identity_pair_brackets_to_zero():
    tvs = from_complex(Matrix.identity(2))
    ident = (Matrix.identity(2), Matrix.identity(2))
    for a0, a1 in end0_basis(tvs):
        lhs = (ident[0] * a0 - a0 * ident[0], ident[1] * a1 - a1 * ident[1])
        assert lhs[0].is_zero() and lhs[1].is_zero()
