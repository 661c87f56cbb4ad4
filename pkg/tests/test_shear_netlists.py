import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qimrot.arithmetic import FixedPointValue
from qimrot.core import run
from qimrot.neqr import PixelTerm, encode
from qimrot.patterns import random_raster
from qimrot.shear import RotationSpec, ShearSpec, apply_shear, rotate, shear_term
from qimrot.shear_netlists import (
    MAX_NETLIST_EXPONENT,
    NetlistModeError,
    build_shear_netlist,
    netlist_apply_shear,
    netlist_rotate,
    run_shear_phase,
)


def spec_for(axis, q16, sign, n):
    return ShearSpec(axis, FixedPointValue(q16 // 16, q16 % 16), sign, n)


@pytest.mark.parametrize("axis", ["horizontal", "vertical"])
@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("q16", [0, 4, 7, 8, 11, 16])
@pytest.mark.parametrize("n", [2, 3])
def test_gate_path_matches_semantic_shears_exhaustively(n, q16, sign, axis):
    side = 1 << n
    spec = spec_for(axis, q16, sign, n)
    terms = [PixelTerm(y, x, 1) for y in range(side) for x in range(side)]
    assert run_shear_phase(terms, n, spec) == [shear_term(t, spec) for t in terms]


def test_working_registers_restored_on_every_input():
    n = 2
    netlist = build_shear_netlist(n, "horizontal", 1)
    for y in range(4):
        for x in range(4):
            for q16 in (0, 7, 16):
                out = run(netlist, y=y, x=x, q=q16, med=2)
                for name in netlist.ancillas:
                    assert out[name] == 0, (name, out[name])
                assert out["med"] == 2 and out["q"] == q16
                assert out["y"] == y  # horizontal shear moves x only


def test_wrong_half_segment_is_exact_passthrough():
    # each half's segment must leave the other half's terms untouched,
    # which is what makes the two-segment netlist order independent
    n = 3
    spec = spec_for("horizontal", 16, 1, n)
    terms = [PixelTerm(y, x, 1) for y in range(8) for x in range(8)]
    assert run_shear_phase(terms, n, spec, order="tb") == run_shear_phase(
        terms, n, spec, order="bt"
    )


@settings(max_examples=100, deadline=None)
@given(
    q16=st.integers(min_value=0, max_value=16),
    sign=st.sampled_from([1, -1]),
    y=st.integers(min_value=0, max_value=7),
    x=st.integers(min_value=0, max_value=7),
    vertical=st.booleans(),
)
def test_gate_path_matches_semantic_shears_random(q16, sign, y, x, vertical):
    n = 3
    spec = spec_for("vertical" if vertical else "horizontal", q16, sign, n)
    term = PixelTerm(y, x, 200)
    assert run_shear_phase([term], n, spec) == [shear_term(term, spec)]


@pytest.mark.parametrize("theta", [30, 45, -30])
def test_netlist_rotate_equals_semantic_rotate(theta):
    img = encode(random_raster(16, seed=11))
    a = rotate(img, RotationSpec(theta))
    b = netlist_rotate(img, RotationSpec(theta))
    assert (a.final, a.phase1, a.phase2) == (b.final, b.phase1, b.phase2)


def test_netlist_apply_shear_equals_semantic():
    img = encode(random_raster(8, seed=12))
    for axis in ("horizontal", "vertical"):
        spec = ShearSpec.from_factor(axis, 0.7, 3)
        assert netlist_apply_shear(img, spec) == apply_shear(img, spec)


@pytest.mark.parametrize("order", ["tb", "bt"])
def test_half_order_does_not_change_results(order):
    img = encode(random_raster(16, seed=13))
    base = netlist_rotate(img, RotationSpec(45), order="tb")
    other = netlist_rotate(img, RotationSpec(45), order=order)
    assert base.final == other.final


def test_size_limit_enforced():
    big = encode(random_raster(1 << (MAX_NETLIST_EXPONENT + 1), seed=1))
    with pytest.raises(NetlistModeError):
        netlist_rotate(big, RotationSpec(30))


def test_out_of_frame_terms_rejected():
    spec = spec_for("horizontal", 8, 1, 2)
    with pytest.raises(NetlistModeError):
        run_shear_phase([PixelTerm(5, 0, 1)], 2, spec)


def test_netlists_are_cached_per_parameters():
    assert build_shear_netlist(3, "horizontal", 1) is build_shear_netlist(
        3, "horizontal", 1
    )
