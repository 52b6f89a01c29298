import pytest
from hypothesis import given, strategies as st

from cm_degrees.dual_isogeny import (AbelianPair, TorsionModuleSpec, dual_image, inert,
                                     kernel_intersection, module_structure, ramified, split)
from cm_degrees.orders import InvalidInput
from cm_degrees.sweeps import dual_specs


def test_module_structure_examples():
    assert module_structure(ramified(5, 3, 0)) == AbelianPair(2, 3)
    assert module_structure(split(2, 3, 2, 0)) == AbelianPair(2, 3)
    assert module_structure(inert(2, 5, 0)) == AbelianPair(2, 2)


def test_kernel_examples():
    assert kernel_intersection(split(2, 3, 2, 1)) == 1
    assert kernel_intersection(ramified(5, 3, 1)) == 1
    assert kernel_intersection(inert(4, 2, 0)) == 0


def test_image_examples():
    assert dual_image(split(2, 3, 2, 1)) == AbelianPair(1, 3)
    assert dual_image(ramified(5, 3, 1)) == AbelianPair(1, 3)
    assert dual_image(inert(3, 7, 0)) == AbelianPair(3, 3)


@pytest.mark.parametrize("bad", [
    lambda: TorsionModuleSpec("split", (3, 2), 2, 0),
    lambda: TorsionModuleSpec("ramified", (1, 2), 2, 0),
    lambda: TorsionModuleSpec("cuspidal", (1,), 2, 0),
    lambda: inert(2, 4, 0),
    lambda: inert(-1, 2, 0),
    lambda: ramified(2, 3, -1),
])
def test_invalid_specs(bad):
    with pytest.raises(InvalidInput):
        bad()


def test_abelian_pair_invariant():
    with pytest.raises(ValueError):
        AbelianPair(3, 2)


specs = st.sampled_from(dual_specs())


@given(specs)
def test_order_conservation(spec):
    ell = spec.ell
    s, k, img = module_structure(spec), kernel_intersection(spec), dual_image(spec)
    assert ell**k * img.order(ell) == s.order(ell)


@given(specs)
def test_exponent_preserved(spec):
    ell = spec.ell
    assert dual_image(spec).exponent(ell) == module_structure(spec).exponent(ell)


@given(specs)
def test_image_is_valid_pair(spec):
    img = dual_image(spec)
    assert 0 <= img.inv1 <= img.inv2


def test_spec_grid_size():
    assert len(dual_specs()) == 945
