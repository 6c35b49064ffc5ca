import numpy as np
import pytest
from hypothesis import given, settings

from kronrep.exactlin import Field
from kronrep.forms import euler_form
from kronrep.quiver_rep import (InvalidModuleError, KroneckerModule, Morphism, combine, direct_sum, dual,
                                end_dim, hom_basis, hom_dim, identity, is_indecomposable, is_isomorphic,
                                random_module, validate)
from kronrep.testfamily import Subspace, injective, projective, ringel_e, x_u_module
from kronrep.ar import ext_dim_presentation
from kronrep import exactlin as el

from strategies import module_pairs, modules

F5 = Field.prime(5)


def test_validate_accepts_p2_and_reports_problems():
    P2 = projective(F5, 3, 2)
    assert validate(F5, 3, P2.dim, P2.maps) is None
    assert "shape" in validate(F5, 3, (1, 3), [F5.zeros(3, 1), F5.zeros(3, 1), F5.zeros(2, 1)])
    assert validate(F5, 1, (1, 1), [F5.zeros(1, 1)]).startswith("r:")
    with pytest.raises(InvalidModuleError):
        KroneckerModule(F5, 1, 1, 1, (F5.zeros(1, 1),))
    with pytest.raises(InvalidModuleError):
        KroneckerModule(F5, 2, 1, 1, (F5.zeros(1, 1),))


def test_hom_between_projectives():
    P1, P2 = projective(F5, 3, 1), projective(F5, 3, 2)
    assert len(hom_basis(P1, P2)) == 3
    assert hom_basis(P2, P1) == []


def test_hom_from_test_module_into_e():
    E = ringel_e(F5)
    W = Subspace.span(F5, [[0, 1, 0]])
    assert hom_dim(x_u_module(W).module, E) == 1


def test_hom_requires_same_category():
    with pytest.raises(InvalidModuleError):
        hom_dim(projective(F5, 3, 1), projective(F5, 4, 1))
    with pytest.raises(InvalidModuleError):
        hom_dim(projective(F5, 3, 1), projective(Field.prime(3), 3, 1))


@settings(max_examples=40, deadline=None)
@given(modules(nonzero=True))
def test_endomorphisms_and_commuting_squares(M):
    basis = hom_basis(M, M)
    assert len(basis) >= 1
    assert all(f.commutes() for f in basis)


def test_non_commuting_pair_is_rejected():
    P2 = projective(F5, 2, 2)
    with pytest.raises(InvalidModuleError):
        Morphism(P2, P2, F5.eye(1), F5.array([[1, 1], [0, 1]]))


@settings(max_examples=40, deadline=None)
@given(module_pairs())
def test_direct_sum_dimensions_and_hom_additivity(pair):
    M, N = pair
    S = direct_sum(M, N)
    assert S.dim == M.dim + N.dim
    assert hom_dim(S, M) == hom_dim(M, M) + hom_dim(N, M)


def test_sum_with_zero():
    E = ringel_e(F5)
    assert is_isomorphic(direct_sum(E, KroneckerModule.zero(F5, 3)), E).status == "yes"


def test_duals_of_projectives():
    assert dual(projective(F5, 3, 1)).dim == (1, 0)
    assert injective(F5, 4, 2).dim == (4, 1)
    E = ringel_e(F5)
    assert dual(dual(E)) == E


@settings(max_examples=40, deadline=None)
@given(module_pairs())
def test_duality_reverses_hom(pair):
    M, N = pair
    assert hom_dim(M, N) == hom_dim(dual(N), dual(M))


@settings(max_examples=40, deadline=None)
@given(module_pairs(nonzero_first=True))
def test_euler_form_identity(pair):
    M, N = pair
    assert hom_dim(M, N) - ext_dim_presentation(M, N) == euler_form(M.r, M.dim, N.dim)


def test_isomorphism_examples():
    E = ringel_e(F5)
    v = is_isomorphic(E, E)
    assert v.status == "yes" and v.witness.is_isomorphism()
    U, V = Subspace.span(F5, [[1, 0, 0]]), Subspace.span(F5, [[0, 1, 0]])
    assert is_isomorphic(x_u_module(U).module, x_u_module(V).module).status == "no"
    assert "dimension" in is_isomorphic(projective(F5, 3, 1), projective(F5, 3, 2)).reason


@settings(max_examples=30, deadline=None)
@given(modules(nonzero=True))
def test_change_of_basis_is_detected(M):
    F = M.field
    rng = np.random.default_rng(M.total_dim)
    g1 = _invertible(F, M.d1, rng)
    g2 = _invertible(F, M.d2, rng)
    N = KroneckerModule(F, M.r, M.d1, M.d2, tuple(F.matmul(g2, F.matmul(m, el.inverse(F, g1))) if M.d1 and M.d2
                                                   else m for m in M.maps))
    v = is_isomorphic(M, N, budget=512)
    assert v.status in ("yes", "undetermined")
    if v.status == "yes":
        assert v.witness.is_isomorphism() and v.witness.commutes()


def _invertible(F, n, rng):
    while True:
        g = F.random((n, n), rng)
        if n == 0 or el.is_invertible(F, g):
            return g


def test_indecomposability_verdicts():
    U = Subspace.span(F5, [[1, 2, 0, 4], [0, 0, 1, 1]])
    assert is_indecomposable(x_u_module(U).module).status == "indecomposable"
    E = ringel_e(F5)
    assert end_dim(E) == 1
    assert is_indecomposable(E).status == "indecomposable"
    split = is_indecomposable(direct_sum(E, E))
    assert split.status == "decomposable"
    (A, ia), (B, ib) = split.summands
    assert A.dim + B.dim == (4, 4)
    assert ia.is_injective() and ib.is_injective()
    with pytest.raises(InvalidModuleError):
        is_indecomposable(KroneckerModule.zero(F5, 3))


def test_decomposition_over_q():
    Q = Field.rational()
    E = ringel_e(Q)
    assert is_indecomposable(direct_sum(E, projective(Q, 3, 2))).status == "decomposable"


def test_kernel_image_cokernel():
    E = ringel_e(F5)
    P2 = projective(F5, 3, 2)
    basis = hom_basis(P2, E)
    f = combine(basis, [1, 0])
    K, inc = f.kernel()
    I, _ = f.image()
    C, proj = f.cokernel()
    assert K.dim + I.dim == P2.dim
    assert I.dim + C.dim == E.dim
    assert inc.commutes() and proj.commutes()
    assert identity(E).is_isomorphism()


def test_random_module_shape():
    M = random_module(F5, 4, (2, 3), np.random.default_rng(0))
    assert M.dim == (2, 3) and len(M.maps) == 4
