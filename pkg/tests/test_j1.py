import numpy as np
import pytest

from isospec.groups import (
    GeneratorFileError,
    MatrixElement,
    build_field,
    check_standard_generators,
    closure,
    enumerate_j1,
    load_generator_file,
    load_j1_generators,
)
from isospec.groups.j1 import default_data_path

JANKO = default_data_path().with_name("j1_janko.txt")
J1_COUNTS = {1: 1, 2: 1463, 3: 5852, 5: 11704, 6: 29260, 7: 25080, 10: 35112, 11: 15960, 15: 23408, 19: 27720}


def test_bundled_generators_pass_sanity(j1_generators):
    a, b = j1_generators
    assert a.dimension == 7 and a.field.p == 11
    assert check_standard_generators(a, b) == {"a": 2, "b": 3, "ab": 7, "abab^2": 19}


def test_enumerate_j1(j1_enumeration):
    assert j1_enumeration.order == 175560
    assert j1_enumeration.spectrum.mu == (6, 7, 10, 11, 15, 19)


def test_j1_class_sizes(j1_enumeration):
    # element counts per order, from the centralizer orders of J1's classes
    assert j1_enumeration.order_counts == J1_COUNTS


def test_janko_original_generators_span_same_group(j1_enumeration):
    gens = load_generator_file(JANKO)
    e = enumerate_j1(gens)
    assert e.order == j1_enumeration.order
    assert e.order_counts == j1_enumeration.order_counts


def test_trivial_generator():
    f = build_field(11)
    e = enumerate_j1([MatrixElement.identity(f, 7)])
    assert e.order == 1 and e.spectrum.mu == (1,)


def test_closure_limit():
    f = build_field(11)
    m = MatrixElement(f, np.array([[1, 1], [0, 1]]))
    assert len(closure([m])) == 11
    with pytest.raises(RuntimeError):
        closure([m], limit=5)


def write(tmp_path, text):
    path = tmp_path / "gens.txt"
    path.write_text(text)
    return path


def test_loader_errors_carry_line_numbers(tmp_path):
    good = default_data_path().read_text()
    with pytest.raises(GeneratorFileError, match="gens.txt:4"):
        load_generator_file(write(tmp_path, "GF 11\nDIM 7\n# a\n1 2 3\n"))
    with pytest.raises(GeneratorFileError, match=":1:"):
        load_generator_file(write(tmp_path, "GF eleven\n"))
    with pytest.raises(GeneratorFileError, match="entries must lie"):
        load_generator_file(write(tmp_path, good.replace("4 10 1 7 1 4 4", "4 10 1 7 1 4 11")))
    with pytest.raises(GeneratorFileError, match="multiple"):
        load_generator_file(write(tmp_path, "\n".join(good.splitlines()[:-1])))
    with pytest.raises(GeneratorFileError, match="cannot read"):
        load_generator_file(tmp_path / "missing.txt")


def test_loader_rejects_wrong_relations(tmp_path):
    with pytest.raises(GeneratorFileError, match="sanity"):
        load_j1_generators(JANKO)
    swapped = default_data_path().read_text().replace("0 4 7 8 3 5 5", "0 4 7 8 3 5 6")
    with pytest.raises(GeneratorFileError):
        load_j1_generators(write(tmp_path, swapped))
