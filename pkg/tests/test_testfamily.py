import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kronrep import exactlin as el
from kronrep.exactlin import Field
from kronrep.forms import RootKind, classify_dimvector
from kronrep.quiver_rep import (InvalidModuleError, KroneckerModule, combine, direct_sum, dual, hom_basis,
                                hom_dim, is_indecomposable, random_module)
from kronrep.testfamily import (Subspace, SubspaceError, injective, projective, rad, rad_dim, recover_subspace,
                                ringel_e, soc, soc_dim, t_bar, x_alpha_operator, x_t_operator, x_u_module,
                                y_t_operator)

from strategies import matrices, modules

F3, F5 = Field.prime(3), Field.prime(5)


def test_projective_and_injective_dims():
    assert projective(F5, 4, 1).dim == (0, 1)
    assert projective(F5, 4, 2).dim == (1, 4)
    assert injective(F5, 4, 2).dim == (4, 1)
    with pytest.raises(ValueError):
        projective(F5, 3, 3)


def test_subspace_canonical_form():
    U = Subspace.span(F5, [[2, 4, 1], [0, 0, 3]])
    assert U.basis.tolist() == [[1, 2, 0], [0, 0, 1]]
    assert U == Subspace.span(F5, [[1, 2, 3], [0, 0, 1]])
    assert len({U, Subspace.span(F5, [[0, 0, 2], [3, 1, 0]])}) == 1
    with pytest.raises(SubspaceError):
        Subspace(F5, F5.array([[2, 4, 1]]))


def test_coordinate_test_module():
    r, d = 4, 2
    X = x_u_module(Subspace.coordinate(F5, r, range(d))).module
    assert all(el.is_zero(X.maps[i]) for i in range(d))
    assert np.array_equal(np.hstack(X.maps[d:]), F5.eye(r - d))


@pytest.mark.parametrize("r", [2, 3, 5])
def test_test_module_dims(r):
    U = Subspace.span(F5, np.eye(r, dtype=int)[: r - 1] + np.eye(r, k=1, dtype=int)[: r - 1])
    assert x_u_module(U).module.dim == (1, 1)
    X = x_u_module(Subspace.span(F5, [[1] * r])).module
    assert X.dim == (1, r - 1)
    if r >= 3:
        assert classify_dimvector(r, X.dim).kind is RootKind.IMAGINARY


def test_test_module_is_a_cokernel_of_t_bar():
    U = Subspace.span(F5, [[1, 2, 0, 3], [0, 1, 1, 1]])
    C, _ = t_bar(F5, 4, U.basis).cokernel()
    assert C == x_u_module(U).module


def test_recover_subspace_after_change_of_basis():
    rng = np.random.default_rng(7)
    U = Subspace.span(F5, [[1, 4, 0, 2]])
    X = x_u_module(U).module
    g = F5.random((3, 3), rng)
    while not el.is_invertible(F5, g):
        g = F5.random((3, 3), rng)
    Y = KroneckerModule(F5, 4, 1, 3, tuple(F5.matmul(g, m) for m in X.maps))
    assert recover_subspace(Y) == U


def test_recover_subspace_errors():
    with pytest.raises(SubspaceError):
        recover_subspace(injective(F5, 3, 1))
    with pytest.raises(SubspaceError):
        recover_subspace(projective(F5, 3, 2))
    M = direct_sum(KroneckerModule(F5, 3, 1, 0, (F5.zeros(0, 1),) * 3), projective(F5, 3, 1))
    with pytest.raises(InvalidModuleError):
        recover_subspace(M)


def test_x_t_of_zero_vectors_is_zero():
    E = ringel_e(F5)
    assert el.is_zero(x_t_operator(E, F5.zeros(2, 3)))
    with pytest.raises(ValueError):
        x_t_operator(E, F5.zeros(1, 4))


def test_kernels_of_x_alpha_on_e():
    E = ringel_e(F5)
    assert E.total_dim - el.rank(F5, x_alpha_operator(E, [1, 0, 0])) == 2
    assert E.total_dim - el.rank(F5, x_alpha_operator(E, [0, 1, 0])) == 3


@settings(max_examples=40, deadline=None)
@given(modules(field=F5, r=3, max_dim=3), st.data())
def test_dual_of_x_t_is_y_t_of_the_dual(M, data):
    T = data.draw(matrices(F5, 2, 3))
    x = x_t_operator(M, T)
    y = y_t_operator(dual(M), T)
    n, d1, d2 = M.total_dim, M.d1, M.d2
    perm = [d2 + a for a in range(d1)] + list(range(d2))  # M coordinates inside DM
    perm_d = [k * n + i for k in range(2) for i in perm]
    assert np.array_equal(y[np.ix_(perm, perm_d)], x.T)


def test_socle_of_simple_and_radical_of_p2():
    S = projective(F5, 3, 1)
    U = Subspace.span(F5, [[1, 1, 0]])
    assert soc(S, U).dim == 1
    P2 = projective(F5, 4, 2)
    for rows in ([[1, 0, 0, 2]], [[1, 0, 0, 0], [0, 1, 1, 1]], [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 3]]):
        U = Subspace.span(F5, rows)
        assert rad(P2, U).dim == U.d == rad_dim(P2, U)


@settings(max_examples=60, deadline=None)
@given(modules(field=F5, r=3, max_dim=3), st.data())
def test_socle_identity_and_basis_independence(M, data):
    A = data.draw(matrices(F5, 2, 3))
    if el.rank(F5, A) < 2:
        A = F5.array([[1, 0, 2], [0, 1, 1]])
    U = Subspace.span(F5, A)
    assert hom_dim(x_u_module(U).module, M) == soc_dim(M, U) - M.d2
    S = soc(M, U)
    assert S.dim == soc_dim(M, U)
    assert np.array_equal(S.basis, el.column_basis(F5, el.kernel(F5, x_t_operator(M, A))))
    R = rad(M, U)
    assert np.array_equal(R.basis, el.column_basis(F5, y_t_operator(M, A)))


def test_quotients_of_test_modules_are_indecomposable():
    rng = np.random.default_rng(11)
    X = x_u_module(Subspace.span(F5, [[1, 3, 0, 0]])).module
    seen = 0
    for _ in range(40):
        N = random_module(F5, 4, tuple(rng.integers(0, 3, size=2)), rng, density=0.5)
        basis = hom_basis(N, X)
        if not basis:
            continue
        f = combine(basis, F5.random(len(basis), rng))
        C, _ = f.cokernel()
        if not C.is_zero():
            assert is_indecomposable(C).status == "indecomposable"
            seen += 1
    assert seen >= 5
