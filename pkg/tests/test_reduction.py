import numpy as np
import pytest

from dwfnet import (
    DensityState,
    KeepSet,
    build_net,
    concurrence_from_dwf,
    convert_net,
    detect_product_structure,
    dwf_from_rho,
    shortcut_reduce,
    net_context,
    random_density,
    reduce_dwf,
    reduction_map,
    rho_from_dwf,
    selection_matrix,
)
from dwfnet.errors import (
    NetMismatchError,
    PurityError,
    UnsupportedNetError,
    ValidationError,
)
from dwfnet.verify import partial_trace


def dwf(rho, n, net_id):
    ctx = net_context(n)
    return dwf_from_rho(DensityState(n, rho), build_net(ctx, net_id))


def bell_rho():
    psi = np.zeros(4)
    psi[0] = psi[3] = 1.0 / np.sqrt(2.0)
    return np.outer(psi, psi)


def test_keepset_validation():
    ks = KeepSet(3, (0, 2))
    assert ks.k == 2
    with pytest.raises(ValidationError):
        KeepSet(2, ())
    with pytest.raises(ValidationError):
        KeepSet(2, (0, 2))
    with pytest.raises(ValidationError):
        KeepSet(2, (1, 0))
    with pytest.raises(ValidationError):
        KeepSet(2, (0, 0))


def test_selection_matrix_keep_all_is_identity():
    t = selection_matrix(KeepSet(2, (0, 1)))
    assert np.array_equal(t, np.eye(16))


def test_selection_matrix_two_to_one():
    # keep qubit 0 of 2: column j1*4 + j2 survives iff j2 = 0
    t = selection_matrix(KeepSet(2, (0,)))
    assert t.shape == (4, 16)
    expect = np.zeros((4, 16))
    for j1 in range(4):
        expect[j1, j1 * 4] = 1.0
    assert np.array_equal(t, expect)


def test_selection_matrix_three_to_two():
    t = selection_matrix(KeepSet(3, (0, 2)))
    assert t.shape == (16, 64)
    for j1 in range(4):
        for j3 in range(4):
            row = np.zeros(64)
            row[j1 * 16 + j3] = 1.0  # j2 = 0
            assert np.array_equal(t[j1 * 4 + j3], row)


def test_reduce_bell_state_is_uniform():
    w = dwf(bell_rho(), 2, 7)
    rmap = reduction_map(
        build_net(net_context(2), 7),
        build_net(net_context(1), 3),
        KeepSet(2, (0,)),
    )
    wa = reduce_dwf(w, rmap)
    assert wa.n == 1
    assert wa.net_id == 3
    assert np.allclose(wa.w, 0.25)


def test_reduce_product_state():
    plus = np.full((2, 2), 0.5)
    zero = np.diag([1.0, 0.0])
    rho = np.kron(zero, plus)
    w = dwf(rho, 2, 0)
    target = build_net(net_context(1), 0)
    rmap = reduction_map(build_net(net_context(2), 0), target, KeepSet(2, (1,)))
    wa = reduce_dwf(w, rmap)
    assert np.allclose(rho_from_dwf(wa, target).rho, plus, atol=1e-10)


def test_reduce_matches_partial_trace_oracle():
    rng = np.random.default_rng(21)
    ctx2 = net_context(2)
    ctx1 = net_context(1)
    for _ in range(5):
        rho = random_density(2, rng)
        src = build_net(ctx2, int(rng.integers(1024)))
        dst = build_net(ctx1, int(rng.integers(8)))
        w = dwf_from_rho(rho, src)
        for keep in [(0,), (1,)]:
            rmap = reduction_map(src, dst, KeepSet(2, keep))
            wa = reduce_dwf(w, rmap)
            back = rho_from_dwf(wa, dst).rho
            assert np.allclose(back, partial_trace(rho.rho, 2, keep), atol=1e-10)


def test_reduce_three_qubits():
    rng = np.random.default_rng(22)
    ctx3 = net_context(3)
    ctx1 = net_context(1)
    ghz = np.zeros(8)
    ghz[0] = ghz[7] = 1.0 / np.sqrt(2.0)
    rho = np.outer(ghz, ghz)
    src = build_net(ctx3, 123456)
    dst = build_net(ctx1, 0)
    w = dwf_from_rho(DensityState(3, rho), src)
    rmap = reduction_map(src, dst, KeepSet(3, (0,)))
    wa = reduce_dwf(w, rmap)
    # each GHZ marginal is maximally mixed
    assert np.allclose(rho_from_dwf(wa, dst).rho, np.eye(2) / 2, atol=1e-10)
    # two-qubit marginal against the oracle
    dst2 = build_net(net_context(2), int(rng.integers(1024)))
    rmap2 = reduction_map(src, dst2, KeepSet(3, (0, 2)))
    wb = reduce_dwf(w, rmap2)
    assert np.allclose(
        rho_from_dwf(wb, dst2).rho, partial_trace(rho, 3, (0, 2)), atol=1e-10
    )


def test_reduction_composes():
    # reducing 3 -> 2 -> 1 equals reducing 3 -> 1 directly
    rng = np.random.default_rng(23)
    rho = random_density(3, rng)
    src = build_net(net_context(3), 55555)
    mid = build_net(net_context(2), 77)
    dst = build_net(net_context(1), 2)
    w = dwf_from_rho(rho, src)
    two_step = reduce_dwf(
        reduce_dwf(w, reduction_map(src, mid, KeepSet(3, (0, 1)))),
        reduction_map(mid, dst, KeepSet(2, (0,))),
    )
    one_step = reduce_dwf(w, reduction_map(src, dst, KeepSet(3, (0,))))
    assert np.allclose(two_step.w, one_step.w, atol=1e-10)


def test_convert_net_preserves_state():
    rng = np.random.default_rng(24)
    ctx = net_context(2)
    rho = random_density(2, rng)
    a, b = build_net(ctx, 10), build_net(ctx, 901)
    w = dwf_from_rho(rho, a)
    wb = convert_net(w, b)
    assert wb.net_id == 901
    assert np.allclose(wb.w, dwf_from_rho(rho, b).w, atol=1e-10)
    assert np.allclose(convert_net(wb, a).w, w.w, atol=1e-10)


def test_net_mismatch_in_reduce():
    ctx = net_context(2)
    w = dwf(bell_rho(), 2, 7)
    rmap = reduction_map(
        build_net(ctx, 8), build_net(net_context(1), 0), KeepSet(2, (0,))
    )
    with pytest.raises(NetMismatchError):
        reduce_dwf(w, rmap)


def test_shortcut_marginal():
    rng = np.random.default_rng(25)
    ctx = net_context(2)
    net = build_net(ctx, 10)  # product net, form eq6
    report = detect_product_structure(net)
    assert report.is_product
    for _ in range(5):
        rho = random_density(2, rng)
        w = dwf_from_rho(rho, net)
        wa = shortcut_reduce(w, net, "A")
        assert wa.net_id == report.factor_a_net
        back = rho_from_dwf(wa, build_net(net_context(1), wa.net_id)).rho
        assert np.allclose(back, partial_trace(rho.rho, 2, (0,)), atol=1e-10)


def test_shortcut_sign_kernel():
    rng = np.random.default_rng(26)
    ctx = net_context(2)
    net = build_net(ctx, 17)  # product net, form eq7
    report = detect_product_structure(net)
    for _ in range(5):
        rho = random_density(2, rng)
        w = dwf_from_rho(rho, net)
        wb = shortcut_reduce(w, net, "B")
        assert wb.net_id == report.factor_b_conj_net
        back = rho_from_dwf(wb, build_net(net_context(1), wb.net_id)).rho
        assert np.allclose(back, partial_trace(rho.rho, 2, (1,)), atol=1e-10)


def test_shortcut_rejects_non_product_net():
    ctx = net_context(2)
    net = build_net(ctx, 0)
    w = dwf(bell_rho(), 2, 0)
    with pytest.raises(UnsupportedNetError):
        shortcut_reduce(w, net, "A")


def test_shortcut_agrees_with_general_reduction():
    rng = np.random.default_rng(27)
    ctx = net_context(2)
    net = build_net(ctx, 10)
    report = detect_product_structure(net)
    rho = random_density(2, rng)
    w = dwf_from_rho(rho, net)
    wa = shortcut_reduce(w, net, "A")
    rmap = reduction_map(
        net, build_net(net_context(1), report.factor_a_net), KeepSet(2, (0,))
    )
    assert np.allclose(wa.w, reduce_dwf(w, rmap).w, atol=1e-10)


def test_concurrence_bell():
    w = dwf(bell_rho(), 2, 7)
    c = concurrence_from_dwf(w, build_net(net_context(2), 7))
    assert c == pytest.approx(1.0, abs=1e-10)


def test_concurrence_separable():
    psi = np.zeros(4)
    psi[0] = 1.0
    w = dwf(np.outer(psi, psi), 2, 7)
    c = concurrence_from_dwf(w, build_net(net_context(2), 7))
    assert c == pytest.approx(0.0, abs=1e-8)


def test_concurrence_partial_entanglement():
    theta = np.pi / 6.0
    psi = np.zeros(4)
    psi[0], psi[3] = np.cos(theta), np.sin(theta)
    w = dwf(np.outer(psi, psi), 2, 0)
    c = concurrence_from_dwf(w, build_net(net_context(2), 0))
    assert c == pytest.approx(np.sin(2 * theta), abs=1e-10)


def test_concurrence_rejects_mixed_state():
    w = dwf(np.eye(4) / 4.0, 2, 0)
    with pytest.raises(PurityError):
        concurrence_from_dwf(w, build_net(net_context(2), 0))
