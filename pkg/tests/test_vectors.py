from decimal import Decimal
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import positive_vectors, prob_vectors
from entcat.errors import (
    AllZero,
    DimensionTooSmall,
    EmptyVector,
    IndexOutOfRange,
    InvalidVector,
    NegativeComponent,
    ParseError,
    SizeCapExceeded,
    TotalMismatch,
    ZeroComponent,
)
from entcat.vectors import (
    E_sum,
    ProbVector,
    SIZE_CAP_ENV,
    canonicalize,
    direct_sum,
    e_sum,
    format_vector,
    global_uniformity,
    local_uniformity,
    pad,
    parse_vector,
    read_vector,
    read_vectors,
    segments_of,
    tensor,
    tensor_power,
    to_fraction,
    uniform,
    vector,
)


def test_canonicalize_sorts():
    x = canonicalize([F(1, 10), F(2, 5), F(2, 5), F(1, 10)])
    assert x.components == (F(2, 5), F(2, 5), F(1, 10), F(1, 10))
    assert x.total == 1


def test_canonicalize_keeps_unnormalized_totals():
    assert canonicalize([F(1, 2), F(1, 2)]).total == 1
    x = canonicalize([1, F(3, 4), F(9, 16)])
    assert x.components == (1, F(3, 4), F(9, 16))
    assert x.total == F(37, 16)


@pytest.mark.parametrize(
    "raw, error",
    [([], EmptyVector), ([F(1, 2), -F(1, 2)], NegativeComponent), ([0, 0], AllZero)],
)
def test_canonicalize_rejects(raw, error):
    with pytest.raises(error):
        canonicalize(raw)


def test_constructor_checks_order_and_total():
    with pytest.raises(InvalidVector):
        ProbVector((F(1, 4), F(3, 4)))
    with pytest.raises(TotalMismatch):
        ProbVector((F(1, 2), F(1, 2)), total=2)


def test_decimal_strings_are_exact():
    assert to_fraction("0.25") == F(1, 4)
    assert to_fraction("1/3") == F(1, 3)
    assert to_fraction(0.1) == F(1, 10)
    assert to_fraction(Decimal("0.3")) == F(3, 10)
    with pytest.raises(ParseError):
        to_fraction("abc")


def test_partial_sums():
    x = vector("0.4", "0.4", "0.1", "0.1")
    assert e_sum(x, 2) == F(4, 5)
    assert E_sum(x, 2) == F(1, 5)
    assert e_sum(x, 0) == 0
    y = vector("0.5", "0.25", "0.25", "0")
    assert e_sum(y, 4) == 1
    assert E_sum(y, 1) == 0
    assert E_sum(uniform(4), 3) == F(3, 4)
    with pytest.raises(IndexOutOfRange):
        e_sum(x, 5)


def test_direct_sum_examples():
    x = direct_sum(vector("0.6", "0.4"), vector("0.5", "0.5"))
    assert x.components == (F(3, 5), F(1, 2), F(1, 2), F(2, 5))
    assert x.total == 2
    assert direct_sum(vector(1), vector(1)).components == (1, 1)


def test_tensor_examples():
    assert tensor(vector("0.6", "0.4"), vector("0.5", "0.5")).as_strings() == ["3/10", "3/10", "1/5", "1/5"]
    x = vector("0.4", "0.4", "0.1", "0.1")
    assert tensor(x, vector(1)) == x
    expected = ["0.24", "0.24", "0.16", "0.16", "0.06", "0.06", "0.04", "0.04"]
    assert tensor(x, vector("0.6", "0.4")).components == tuple(F(v) for v in expected)


def test_tensor_power_examples():
    x = vector("0.4", "0.4", "0.1", "0.1")
    assert tensor_power(x, 1) == x
    assert tensor_power(vector("0.6", "0.4"), 2).components == (F(9, 25), F(6, 25), F(6, 25), F(4, 25))
    cube = tensor_power(x, 3)
    assert cube.dim == 64
    assert cube[0] == F(64, 1000)
    assert cube[-1] == F(1, 1000)


def test_tensor_power_size_cap(monkeypatch):
    with pytest.raises(SizeCapExceeded):
        tensor_power(uniform(4), 3, cap=63)
    monkeypatch.setenv(SIZE_CAP_ENV, "10")
    with pytest.raises(SizeCapExceeded):
        tensor_power(uniform(4), 2)


def test_uniformity_indices():
    c = vector("0.6", "0.4")
    assert local_uniformity(c) == F(2, 3)
    alpha = F(3, 5)
    geo = canonicalize([alpha**i for i in range(5)])
    assert local_uniformity(geo) == alpha
    assert global_uniformity(geo) == alpha**4
    assert local_uniformity(uniform(3)) == 1
    assert global_uniformity(uniform(3)) == 1
    assert global_uniformity(vector("0.5", "0.25", "0.25", "0")) == 0


def test_local_uniformity_uses_last_ratio():
    # The last ratio is the smallest one here; skipping it would report 1.
    assert local_uniformity(vector(4, 4, 1)) == F(1, 4)


def test_local_uniformity_errors():
    with pytest.raises(DimensionTooSmall):
        local_uniformity(vector(1))
    with pytest.raises(ZeroComponent):
        local_uniformity(vector(1, 0))


@pytest.mark.parametrize("n", range(2, 7))
def test_segment_count(n):
    segs = list(segments_of(uniform(n)))
    assert len(segs) == n * (n - 1) // 2
    assert all(len(s) >= 2 for s in segs)


def test_segments_of_three():
    assert [(s.start_index, s.end_index) for s in segments_of(vector(3, 2, 1))] == [(1, 2), (2, 3), (1, 3)]


def test_parse_formats(tmp_path):
    assert parse_vector("0.25, 1/4 ; 0.5") == vector("1/2", "1/4", "1/4")
    assert parse_vector("(0.5 0.5)  # comment") == vector("0.5", "0.5")
    with pytest.raises(ParseError):
        parse_vector("   # nothing")
    f = tmp_path / "v.txt"
    f.write_text("# two vectors\n0.4 0.4 0.1 0.1\n1/2,1/4,1/4,0\n")
    assert read_vectors(f) == [vector("0.4", "0.4", "0.1", "0.1"), vector("0.5", "0.25", "0.25", "0")]
    g = tmp_path / "w.txt"
    g.write_text("0.6\n0.4\n")
    assert read_vector(g) == vector("0.6", "0.4")
    assert format_vector(vector("0.6", "0.4")) == "(3/5, 2/5)"


@given(prob_vectors(), st.data())
def test_top_and_bottom_sums_partition_total(x, data):
    l = data.draw(st.integers(0, x.dim))
    assert e_sum(x, l) + E_sum(x, x.dim - l) == x.total


@given(positive_vectors(max_dim=6))
def test_uniformity_sandwich(x):
    lu, gu = local_uniformity(x), global_uniformity(x)
    assert lu ** (x.dim - 1) <= gu <= lu


@given(prob_vectors(max_dim=4), prob_vectors(max_dim=4), prob_vectors(max_dim=3))
def test_tensor_commutative_associative(x, y, z):
    assert tensor(x, y) == tensor(y, x)
    assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))
    assert tensor(x, y).total == x.total * y.total


@given(prob_vectors(normalized=False), prob_vectors(normalized=False))
def test_direct_sum_totals_and_order(x, y):
    s = direct_sum(x, y)
    assert s.total == x.total + y.total
    assert canonicalize(s.components) == s
    assert sorted(s.components) == sorted(x.components + y.components)


@given(prob_vectors(max_dim=4), st.integers(1, 4))
def test_tensor_power_matches_repeated_products(x, k):
    expected = x
    for _ in range(k - 1):
        expected = tensor(expected, x)
    assert tensor_power(x, k) == expected


@given(prob_vectors(max_dim=5), st.integers(0, 3))
def test_padding_keeps_total(x, extra):
    p = pad(x, x.dim + extra)
    assert p.total == x.total
    assert p.components[: x.dim] == x.components
