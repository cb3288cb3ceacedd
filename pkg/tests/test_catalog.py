"""Built-in algebras and frames are valid and correctly described."""

import pytest

from monalg.algebra import validate_algebra
from monalg.catalog import builtin_algebra, builtin_frames, list_builtins
from monalg.errors import SpecFormatError
from monalg.frames import validate_frame
from monalg.predicates import theorem5_predicate, theorem6_predicate


@pytest.mark.parametrize("name", ["example1", "example2", "example3", "example4",
                                  "semisimple:m=1", "semisimple:m=3"])
def test_builtins_validate(name):
    spec = builtin_algebra(name)
    assert validate_algebra(spec).ok
    for frame in builtin_frames(spec).values():
        validate_frame(frame, spec)


def test_builtins_satisfy_a_lambda_condition():
    for name in ("example1", "example2", "example3", "example4"):
        assert theorem5_predicate(builtin_algebra(name)).holds


def test_in_s_frames_stay_in_semisimple_part():
    for name in ("example1", "example2", "example3", "example4"):
        spec = builtin_algebra(name)
        assert theorem6_predicate(builtin_frames(spec)["in-s"], spec)


def test_listing_is_stable():
    names = [name for name, _ in list_builtins()]
    assert names == ["example1", "example2", "example3", "example4", "semisimple:m=K"]


def test_unknown_name_rejected():
    with pytest.raises(SpecFormatError, match="unknown built-in"):
        builtin_algebra("example((")
    with pytest.raises(SpecFormatError, match="m >= 1"):
        builtin_algebra("semisimple:m=0")
