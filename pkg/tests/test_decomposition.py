import cmath
import math

import numpy as np
import pytest
from conftest import CATALOGUE, RANDOM_FIXTURES

from npotent.errors import DegenerateRange, NotApplicable, UnknownEigenvalue
from npotent.examples import gen_diag_full, gen_nonhermitian, gen_random_npotent, gen_reflection
from npotent.linalg import identity, norm, numerical_rank, projection_rank
from npotent.potency import certify
from npotent.decomposition import (
    eigenspace_basis,
    reconstruct,
    renorm_isometry_check,
    spectral_decomposition,
    verify_alternate_form,
)

NAMES = [name for name, _ in CATALOGUE]
OPS = [op for _, op in CATALOGUE]


def test_diag_model_gives_coordinate_projectors():
    dec = spectral_decomposition(certify(gen_diag_full(5)))
    assert [t.exponent for t in dec.terms] == [None, 0, 1, 2, 3]
    for i, t in enumerate(dec.terms):
        e = np.zeros((5, 5))
        e[i, i] = 1
        assert np.allclose(t.projection, e, atol=1e-15)
        assert t.rank == 1
    assert np.allclose(reconstruct(dec), gen_diag_full(5), atol=1e-15)


def test_nonhermitian_terms():
    dec = spectral_decomposition(certify(gen_nonhermitian()))
    assert np.array_equal(dec.term(0).projection, [[0, -1], [0, 1]])
    assert np.array_equal(dec.term(1).projection, [[1, 1], [0, 0]])


def test_identity_single_term():
    dec = spectral_decomposition(certify(identity(3)))
    assert len(dec.terms) == 1
    assert np.array_equal(reconstruct(dec), identity(3))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_reflection_terms(k):
    t = gen_reflection(k, 64)
    n = 2 * k + 1
    dec = spectral_decomposition(certify(t, n=n))
    lam = -cmath.exp(1j * math.pi / k)
    t2k = np.linalg.matrix_power(t, 2 * k)
    assert norm(dec.term(lam).projection - t2k) <= 1e-10
    assert norm(dec.term(0).projection - (identity(64) - t2k)) <= 1e-10
    assert norm(lam * t2k - t) <= 1e-9
    assert [tm.rank for tm in dec.terms] == [32, 32]


@pytest.mark.parametrize("op", OPS, ids=NAMES)
def test_residuals_and_ranks(op):
    dec = spectral_decomposition(op)
    for value in dec.residuals.as_dict().values():
        assert value <= 1e-10
    assert sum(t.rank for t in dec.terms) == op.dim
    for t in dec.terms:
        assert abs(t.eigenvalue ** op.order - t.eigenvalue) <= 1e-14
        assert t.rank > 0
    if dec.terms[0].exponent is None:
        assert projection_rank(dec.terms[0].projection) == op.dim - numerical_rank(op.matrix)


def _conditioned(dim, seed, bound=1e3):
    r = np.random.default_rng(seed)
    while True:
        s = r.standard_normal((dim, dim)) + 1j * r.standard_normal((dim, dim))
        if np.linalg.cond(s) <= bound:
            return s


@pytest.mark.parametrize("name, op", RANDOM_FIXTURES)
def test_uniqueness_under_conjugation(name, op):
    s = _conditioned(op.dim, 99)
    s_inv = np.linalg.inv(s)
    dec = spectral_decomposition(op)
    other = spectral_decomposition(certify(s @ op.matrix @ s_inv, n=op.order))
    assert [t.exponent for t in other.terms] == [t.exponent for t in dec.terms]
    for a, b in zip(dec.terms, other.terms):
        assert norm(s_inv @ b.projection @ s - a.projection) <= 1e-7


def test_eigenspace_basis_diag():
    dec = spectral_decomposition(certify(gen_diag_full(5)))
    (v,) = eigenspace_basis(dec, 1j)
    assert abs(abs(v[2]) - 1) <= 1e-15
    assert np.allclose(np.delete(v, 2), 0, atol=1e-15)
    with pytest.raises(UnknownEigenvalue):
        eigenspace_basis(dec, 2)


def test_eigenspace_basis_reflection_symmetry():
    t = gen_reflection(3, 64)
    dec = spectral_decomposition(certify(t, n=7))
    even = eigenspace_basis(dec, 0)
    odd = eigenspace_basis(dec, cmath.exp(4j * math.pi / 3))
    assert len(even) == len(odd) == 32
    for v in even:
        assert norm(v - v[::-1]) <= 1e-10
    for v in odd:
        assert norm(v + v[::-1]) <= 1e-10
    gram = np.array(even).conj() @ np.array(even).T
    assert norm(gram - identity(32)) <= 1e-12


@pytest.mark.parametrize("op", [op for op in OPS if op.order >= 3], ids=[n for n, op in CATALOGUE if op.order >= 3])
def test_alternate_form(op):
    assert verify_alternate_form(spectral_decomposition(op)) <= 1e-10


def test_alternate_form_examples():
    assert verify_alternate_form(spectral_decomposition(certify(gen_diag_full(5)))) <= 1e-12
    with pytest.raises(NotApplicable):
        verify_alternate_form(spectral_decomposition(certify(gen_nonhermitian())))


def test_tripotent_specialisation():
    op = certify([[1, -6], [0, -1]])
    dec = spectral_decomposition(op)
    p1, pm1 = dec.term(1).projection, dec.term(-1).projection
    eye = identity(2)
    assert norm(op.matrix - 0.5 * ((2 * p1 + eye) - (2 * pm1 + eye))) <= 1e-12


@pytest.mark.parametrize("name, op", RANDOM_FIXTURES + [("reflection", certify(gen_reflection(3, 64), n=7))])
def test_renorm_isometry(name, op):
    assert renorm_isometry_check(op, samples=100, seed=0) <= 1e-9


def test_renorm_periodic_is_tight():
    op = certify(gen_random_npotent(5, {1: 2, 1j: 2, -1j: 1}, seed=3), n=5)
    assert renorm_isometry_check(op, samples=50, seed=1) <= 1e-12


def test_renorm_degenerate():
    with pytest.raises(DegenerateRange):
        renorm_isometry_check(certify(np.zeros((3, 3))))
