import numpy as np
import pytest

from dwfnet.errors import DegeneracyError, NonCommutingError
from dwfnet.matkernel import (
    adjoint,
    commutes,
    factorize_tensor,
    joint_eigenprojectors,
    mul,
    tensor,
    trace,
)

I2 = np.eye(2)
X = np.array([[0.0, 1.0], [1.0, 0.0]])
Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
Z = np.diag([1.0, -1.0])
XZ = mul(X, Z)


def test_basic_ops():
    assert np.allclose(mul(X, X), I2)
    assert np.allclose(tensor(X, Z), np.kron(X, Z))
    assert np.allclose(adjoint(XZ), -XZ)
    assert trace(mul(X, X)) == pytest.approx(2.0)
    assert commutes(X, I2)
    assert not commutes(X, Z)


def test_joint_eigenprojectors_z():
    projs = joint_eigenprojectors([I2, Z])
    assert len(projs) == 2
    # +1 eigenvector first: |0>, then |1>
    assert np.allclose(projs[0], np.diag([1.0, 0.0]))
    assert np.allclose(projs[1], np.diag([0.0, 1.0]))


def test_joint_eigenprojectors_x():
    projs = joint_eigenprojectors([I2, X])
    plus = np.full((2, 2), 0.5)
    minus = np.array([[0.5, -0.5], [-0.5, 0.5]])
    assert np.allclose(projs[0], plus)
    assert np.allclose(projs[1], minus)


def test_joint_eigenprojectors_xz():
    # XZ has eigenvalues +/- i with eigenvectors (|0> -+ i|1>)/sqrt(2);
    # phase order puts the +i projector first
    projs = joint_eigenprojectors([I2, XZ])
    left = np.array([[0.5, 0.5j], [-0.5j, 0.5]])
    right = np.array([[0.5, -0.5j], [0.5j, 0.5]])
    assert np.allclose(projs[0], left)
    assert np.allclose(projs[1], right)
    for p in projs:
        assert np.allclose(mul(p, p), p)
        assert np.allclose(adjoint(p), p)


def test_joint_eigenprojectors_two_qubit():
    ops = [np.eye(4), tensor(Z, I2), tensor(I2, Z), tensor(Z, Z)]
    projs = joint_eigenprojectors(ops)
    assert len(projs) == 4
    total = sum(projs)
    assert np.allclose(total, np.eye(4))
    for p in projs:
        assert trace(p) == pytest.approx(1.0)
        for op in ops:
            assert commutes(p, op)


def test_joint_eigenprojectors_rejects_noncommuting():
    with pytest.raises(NonCommutingError):
        joint_eigenprojectors([X, Z])


def test_joint_eigenprojectors_rejects_degenerate():
    with pytest.raises(DegeneracyError):
        joint_eigenprojectors([tensor(Z, I2)])


def test_joint_eigenprojectors_deterministic():
    ops = [np.eye(4), tensor(X, Z)]
    try:
        joint_eigenprojectors(ops)
        raised = False
    except DegeneracyError:
        raised = True
    assert raised  # a single two-qubit operator cannot resolve 4 spaces

    ops = [np.eye(4), tensor(X, I2), tensor(I2, Z), tensor(X, Z)]
    a = joint_eigenprojectors(ops)
    b = joint_eigenprojectors([o.copy() for o in ops])
    for pa, pb in zip(a, b):
        assert np.array_equal(pa, pb)


def test_factorize_tensor_product():
    m = tensor(X, Z)
    out = factorize_tensor(m, (2, 2))
    assert out is not None
    a, b = out
    assert np.allclose(tensor(a, b), m)


def test_factorize_tensor_recovers_weird_scalars():
    m = tensor(1.7j * XZ + 0.3 * X, Z + 0.25 * Y)
    out = factorize_tensor(m, (2, 2))
    assert out is not None
    a, b = out
    assert np.allclose(tensor(a, b), m)
    # convention: left factor has unit Frobenius norm
    assert np.linalg.norm(a) == pytest.approx(1.0)


def test_factorize_tensor_entangled_returns_none():
    m = tensor(X, X) + tensor(Z, Z)
    assert factorize_tensor(m, (2, 2)) is None
