from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import nonuniform_vectors, positive_vectors, prob_vectors
from entcat.catalysis import (
    catalyst_useful,
    construct_catalyst,
    decompose,
    demonstrate,
    flatten_target,
    geometric,
    grid_catalyst_search,
    in_kd,
    k_useful,
    kd_nonempty,
    kd_witness,
    least_power_below,
    min_useful_k,
    mlocc_witness_check,
    necessary_segment,
    power_condition,
    rational_ratio,
    sufficient_condition,
    targets_for_catalyst,
)
from entcat.certificates import NotUseful
from entcat.errors import (
    AlphaOutOfRange,
    EmptyKd,
    IndexOutOfRange,
    IntervalEmpty,
    NoCertificate,
    UniformCatalyst,
    ZeroComponent,
)
from entcat.majorization import majorizes, strictly_majorized
from entcat.vectors import (
    canonicalize,
    direct_sum,
    global_uniformity,
    local_uniformity,
    normalize,
    tensor,
    tensor_power,
    uniform,
    vector,
)

Y_JP = vector("0.5", "0.25", "0.25", "0")


def brute_catalyst_useful(y, c):
    """Direct strict checks of the flattened target against every block, no fast kernel."""
    n = y.dim
    if n <= 3 or y.is_uniform:
        return None
    blocks = decompose(c, global_uniformity(y)).blocks
    for d in range(2, n - 1):
        if not kd_nonempty(y, d):
            continue
        flat = flatten_target(y, d).vector
        if all(strictly_majorized(tensor(flat, b), tensor(y, b)) for b in blocks):
            return d
    return None


# --- decomposition -----------------------------------------------------------


def test_decompose_examples():
    c = vector("0.5", "0.3", "0.12", "0.08")
    dec = decompose(c, F(1, 2))
    assert [b.components for b in dec.blocks] == [(F(1, 2), F(3, 10)), (F(3, 25), F(2, 25))]
    assert list(dec.starts) == [1, 3]
    assert len(decompose(c, 0).blocks) == 1
    assert len(decompose(uniform(4), F(1, 2)).blocks) == 1


def test_decompose_errors():
    with pytest.raises(AlphaOutOfRange):
        decompose(vector("0.6", "0.4"), 1)
    with pytest.raises(ZeroComponent):
        decompose(vector(1, 0), F(1, 2))


@given(positive_vectors(min_dim=1, max_dim=7, high=40), st.fractions(0, 1, max_denominator=20).filter(lambda a: a < 1))
def test_decomposition_clauses(c, alpha):
    blocks = decompose(c, alpha).blocks
    assert tuple(v for b in blocks for v in b) == c.components
    for b in blocks:
        if b.dim >= 2:
            assert local_uniformity(b) > alpha
    for upper, lower in zip(blocks, blocks[1:]):
        assert lower[0] / upper[-1] <= alpha


# --- flat targets and split regions ---------------------------------------------


def test_flatten_target_examples():
    assert flatten_target(Y_JP, 2).vector.components == (F(3, 8), F(3, 8), F(1, 8), F(1, 8))
    assert flatten_target(uniform(4), 2).vector == uniform(4)
    assert flatten_target(vector("0.6", "0.2", "0.2", "0"), 2).vector == vector("0.4", "0.4", "0.1", "0.1")
    with pytest.raises(IndexOutOfRange):
        flatten_target(Y_JP, 4)


def test_kd_nonempty_examples():
    assert kd_nonempty(Y_JP, 2)
    assert not kd_nonempty(uniform(4), 2)
    assert not kd_nonempty(vector("0.4", "0.4", "0.2", "0.1"), 2)
    with pytest.raises(IndexOutOfRange):
        kd_nonempty(Y_JP, 1)


def test_kd_witness_examples():
    assert kd_witness(Y_JP, 2).components == (F(3, 8), F(3, 8), F(1, 8), F(1, 8))
    assert kd_witness(vector("0.5", "0.3", "0.15", "0.05"), 2) == vector("0.4", "0.4", "0.1", "0.1")
    with pytest.raises(EmptyKd):
        kd_witness(vector("0.4", "0.4", "0.1", "0.1"), 2)


@given(nonuniform_vectors(min_dim=4, max_dim=6), st.data())
def test_flat_target_is_majorized_by_split_members(y, data):
    d = data.draw(st.integers(2, y.dim - 2))
    assume(kd_nonempty(y, d))
    w = kd_witness(y, d)
    assert in_kd(w, y, d)
    assert majorizes(w, y) and not strictly_majorized(w, y)


# --- single catalyst ------------------------------------------------------------------


def test_sufficient_condition_examples():
    assert sufficient_condition(Y_JP, vector("0.6", "0.4"), 2)
    assert not sufficient_condition(Y_JP, uniform(3), 2)
    assert sufficient_condition(vector("0.6", "0.2", "0.2", "0"), vector("0.6", "0.4"), 2)


def test_catalyst_useful_jp():
    cert = catalyst_useful(Y_JP, vector("0.6", "0.4"))
    assert cert and cert.d == 2
    assert len(cert.transcript) == 7
    assert all(i.op == "<" and i.holds() for i in cert.transcript)
    assert cert.verify()
    x = demonstrate(cert)
    assert not majorizes(x, Y_JP)
    assert majorizes(tensor(x, cert.catalyst), tensor(Y_JP, cert.catalyst))


def test_catalyst_useful_negative_cases():
    assert isinstance(catalyst_useful(Y_JP, uniform(3)), NotUseful)
    assert not catalyst_useful(uniform(5), vector("0.6", "0.4"))
    assert not catalyst_useful(vector("0.5", "0.3", "0.2"), vector("0.6", "0.4"))
    with pytest.raises(ZeroComponent):
        catalyst_useful(Y_JP, vector(1, 0))


def test_tampered_certificate_fails_verification():
    from dataclasses import replace

    cert = catalyst_useful(Y_JP, vector("0.6", "0.4"))
    assert not replace(cert, witness=vector("0.4", "0.4", "0.1", "0.1")).verify()


def test_necessary_segment_examples():
    c = vector("0.6", "0.4")
    seg = necessary_segment(Y_JP, c)
    assert (seg.start_index, seg.end_index) == (1, 2)
    padded = canonicalize([F(3, 5), F(2, 5), F(1, 100), F(1, 100)])
    seg = necessary_segment(Y_JP, padded)
    assert seg.values == (F(3, 5), F(2, 5))
    with pytest.raises(NoCertificate):
        necessary_segment(Y_JP, uniform(2))


@given(nonuniform_vectors(min_dim=4, max_dim=6), positive_vectors(max_dim=4, high=30))
def test_fast_kernel_matches_direct_checks(y, c):
    cert = catalyst_useful(y, c)
    expected = brute_catalyst_useful(y, c)
    assert (cert.d if cert else None) == expected
    if cert:
        assert cert.verify()
        assert sufficient_condition(y, necessary_segment(y, c, cert).as_vector(), cert.d)


@given(nonuniform_vectors(min_dim=4, max_dim=5), positive_vectors(max_dim=3, high=30), prob_vectors(4, 5))
def test_useless_catalyst_never_helps(y, c, x):
    assume(x.dim == y.dim)
    if not catalyst_useful(y, c) and majorizes(tensor(x, c), tensor(y, c)):
        assert majorizes(x, y)


@given(nonuniform_vectors(min_dim=4, max_dim=6), st.integers(1, 4), st.integers(1, 4), st.integers(1, 12),
       st.integers(1, 12))
def test_two_level_catalysts_are_decided_by_the_simple_test(y, m, r, a, b):
    assume(a != b)
    c = normalize(canonicalize([max(a, b)] * m + [min(a, b)] * r))
    simple = any(sufficient_condition(y, c, d) for d in range(2, y.dim - 1))
    assert simple == bool(catalyst_useful(y, c))


@given(nonuniform_vectors(min_dim=4, max_dim=6), positive_vectors(max_dim=4, high=30), st.data())
def test_sufficient_condition_is_sound(y, c, data):
    d = data.draw(st.integers(2, y.dim - 2))
    if sufficient_condition(y, c, d):
        assert catalyst_useful(y, c)


def test_targets_for_catalyst():
    z = vector("0.6", "0.4")
    y = targets_for_catalyst(z, 4, 2)
    assert y == normalize(canonicalize([1, F(1, 3), F(5, 18), F(5, 54)]))
    assert catalyst_useful(y, z)
    with pytest.raises(UniformCatalyst):
        targets_for_catalyst(uniform(2), 4, 2)


@given(positive_vectors(max_dim=4, high=20), st.integers(4, 7), st.data())
def test_targets_for_catalyst_are_catalysed(z, n, data):
    assume(not z.is_uniform)
    d = data.draw(st.integers(2, n - 2))
    y = targets_for_catalyst(z, n, d)
    assert y.dim == n and sufficient_condition(y, z, d)


# --- copies and catalyst dimension ------------------------------------------------


def test_k_useful_examples(four_level_y):
    assert not k_useful(four_level_y, 3)
    cert = k_useful(four_level_y, 4)
    assert cert and cert.d == 2 and cert.verify()
    cert = k_useful(Y_JP, 2)
    assert cert.d == 2
    assert Y_JP[1] ** 2 < Y_JP[0] * Y_JP[2] and Y_JP[2] ** 2 > 0


def test_min_useful_k_examples(four_level_y):
    assert min_useful_k(Y_JP) == 2
    assert min_useful_k(four_level_y) == 4
    assert min_useful_k(vector("0.5", "0.3", "0.2")) is None


def test_min_useful_k_scales_with_parameter():
    for k in (2, 5, 9, 16):
        y = normalize(canonicalize([1, F(1, 2), F(1, 2) ** k, F(1, 2) ** (k + 3)]))
        assert min_useful_k(y) == k + 1


def test_construct_catalyst_examples(four_level_y):
    assert construct_catalyst(Y_JP, 2, 2) == vector(F(4, 7), F(3, 7))
    c = construct_catalyst(four_level_y, 2, 4)
    alpha = c[1] / c[0]
    assert F(1, 8) < alpha**3 < F(1, 4)
    assert sufficient_condition(four_level_y, c, 2)
    with pytest.raises(IntervalEmpty):
        construct_catalyst(four_level_y, 2, 3)


def test_mlocc_witness_check_examples(four_level_y):
    assert mlocc_witness_check(Y_JP, 2, 2)
    assert not mlocc_witness_check(four_level_y, 2, 3)
    # A split-region witness ties with the target at l=d, so one copy is never strict.
    assert not mlocc_witness_check(Y_JP, 2, 1)


@given(nonuniform_vectors(min_dim=4, max_dim=5), st.integers(1, 4), st.data())
def test_power_condition_matches_direct_tensor_powers(y, k, data):
    d = data.draw(st.integers(2, y.dim - 2))
    assume(kd_nonempty(y, d))
    w = kd_witness(y, d)
    assert power_condition(y, d, k) == strictly_majorized(tensor_power(w, k), tensor_power(y, k))


@given(nonuniform_vectors(min_dim=4, max_dim=6))
def test_min_useful_k_matches_linear_scan(y):
    m = min_useful_k(y)
    limit = 40 if m is None else m
    first = next((k for k in range(2, limit + 1) if k_useful(y, k)), None)
    assert first == m


@given(nonuniform_vectors(min_dim=4, max_dim=6))
def test_never_case_matches_flat_split_condition(y):
    never = all(y[0] == y[d - 1] or y[d] == y[-1] for d in range(2, y.dim - 1))
    assert (min_useful_k(y) is None) == never


@given(nonuniform_vectors(min_dim=4, max_dim=6), st.integers(1, 6))
def test_usefulness_is_monotone_in_k(y, k):
    if k_useful(y, k):
        assert k_useful(y, k + 1)


@given(nonuniform_vectors(min_dim=4, max_dim=5), st.integers(2, 6), st.data())
def test_constructed_catalyst_certifies(y, k, data):
    d = data.draw(st.integers(2, y.dim - 2))
    assume(kd_nonempty(y, d) and power_condition(y, d, k))
    c = construct_catalyst(y, d, k)
    assert c.dim == k and c.total == 1
    w = kd_witness(y, d)
    assert strictly_majorized(tensor(w, c), tensor(y, c))


def test_rational_ratio_and_helpers():
    a = rational_ratio(F(1, 2), F(1, 2), 3)
    assert F(1, 2) < a < 1 and a**3 < F(1, 2)
    with pytest.raises(IntervalEmpty):
        rational_ratio(F(1, 2), F(1, 8), 3)
    assert geometric(F(1, 2), 3).components == (1, F(1, 2), F(1, 4))
    assert least_power_below(F(1, 2), F(1, 8)) == 4
    assert least_power_below(F(0), F(1, 8)) == 1


def test_grid_catalyst_search(jp, four_level_y):
    x, y, _ = jp
    assert grid_catalyst_search(x, y, 2, 10) == vector("0.6", "0.4")
    assert grid_catalyst_search(uniform(4), y, 2, 10) == uniform(2)
    cert = k_useful(four_level_y, 4)
    hard = demonstrate(cert)
    assert grid_catalyst_search(hard, four_level_y, 3, 12) is None


def test_split_region_membership():
    w = direct_sum(vector("0.2", "0.2"), vector("0.3", "0.3"))
    assert in_kd(vector("0.375", "0.375", "0.125", "0.125"), Y_JP, 2)
    assert not in_kd(normalize(w), Y_JP, 2)
    assert not in_kd(vector("0.5", "0.25", "0.25", "0"), Y_JP, 2)
