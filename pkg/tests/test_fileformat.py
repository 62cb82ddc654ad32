import importlib.util
import io
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_spec
from thermoent.corpus import EXAMPLES, example_text, load_example
from thermoent.critical import scan
from thermoent.errors import (
    DimensionMismatch,
    HamiltonianSyntaxError,
    InputError,
    NotOrthonormal,
    UnsupportedDimension,
)
from thermoent.fileformat import (
    CSV_HEADER,
    dump_report,
    format_hamiltonian,
    load_report,
    parse_hamiltonian,
    read_scan_csv,
    write_scan_csv,
)
from thermoent.linalg import QUBIT_QUBIT, QUBIT_QUTRIT

ROOT = Path(__file__).resolve().parents[1]
GOOD = """\
# two qubits
label: demo
dims: 2 2
eigenvalues: 3 4 5 6
eigenvector: 1 0 0 0
eigenvector: 0 1 0 0
eigenvector: 0 0 [0, 1] 0
eigenvector: 0 0 0 1
"""


class TestCorpus:
    def test_fig1_second_vector(self):
        np.testing.assert_allclose(load_example("fig1").eigenvectors[1], [0, 0.5, np.sqrt(0.75), 0], atol=1e-15)

    def test_fig3_second_vector(self):
        np.testing.assert_allclose(
            load_example("fig3").eigenvectors[1], [0, 0, 0.2, 0, 0.2, np.sqrt(0.92)], atol=1e-15
        )

    def test_fig4_hadamard_block(self):
        E = load_example("fig4").eigenvectors
        block = E[np.ix_([1, 3, 4, 5], [1, 3, 4, 5])].real * 2
        np.testing.assert_array_equal(np.abs(block), np.ones((4, 4)))
        np.testing.assert_allclose(block @ block.T, 4 * np.eye(4))

    def test_fig2_solid_is_bell_basis(self):
        E = load_example("fig2-solid").eigenvectors
        r = 1 / np.sqrt(2)
        bell = np.array([[r, 0, 0, r], [r, 0, 0, -r], [0, r, r, 0], [0, r, -r, 0]])
        np.testing.assert_allclose(E, bell, atol=1e-15)

    def test_files_match_generator(self):
        spec = importlib.util.spec_from_file_location("make_corpus", ROOT / "tools" / "make_corpus.py")
        mod = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(mod)
        for name in EXAMPLES:
            assert mod.render(name) == example_text(name)

    def test_unknown_name(self):
        with pytest.raises(KeyError, match="unknown example"):
            example_text("fig9")


class TestParse:
    def test_good_file(self):
        spec = parse_hamiltonian(GOOD)
        assert spec.label == "demo"
        np.testing.assert_array_equal(spec.eigenvalues, [0, 1, 2, 3])
        assert spec.eigenvectors[2, 2] == 1j

    def test_bytes(self):
        assert parse_hamiltonian(GOOD.encode()).label == "demo"

    def test_non_unit_vector_names_index(self):
        bad = GOOD.replace("eigenvector: 0 1 0 0", "eigenvector: 0 1.1 0 0")
        with pytest.raises(NotOrthonormal) as err:
            parse_hamiltonian(bad)
        assert err.value.pair == (1, 1)
        assert "1" in str(err.value)

    def test_unknown_key_has_line_number(self):
        with pytest.raises(HamiltonianSyntaxError) as err:
            parse_hamiltonian(GOOD.replace("dims: 2 2", "dimz: 2 2"))
        assert err.value.line == 3

    def test_bad_number_has_line_number(self):
        with pytest.raises(HamiltonianSyntaxError) as err:
            parse_hamiltonian(GOOD.replace("0 0 0 1", "0 0 0 one"))
        assert err.value.line == 8

    def test_complex_eigenvalue_rejected(self):
        with pytest.raises(HamiltonianSyntaxError):
            parse_hamiltonian(GOOD.replace("3 4 5 6", "3 4 [5, 1] 6"))

    def test_missing_sections(self):
        with pytest.raises(HamiltonianSyntaxError, match="dims"):
            parse_hamiltonian(GOOD.replace("dims: 2 2\n", ""))
        with pytest.raises(HamiltonianSyntaxError, match="eigenvalues"):
            parse_hamiltonian(GOOD.replace("eigenvalues: 3 4 5 6\n", ""))

    def test_counts(self):
        with pytest.raises(DimensionMismatch):
            parse_hamiltonian(GOOD.replace("3 4 5 6", "3 4 5"))
        with pytest.raises(DimensionMismatch):
            parse_hamiltonian(GOOD.replace("eigenvector: 0 0 0 1\n", ""))
        with pytest.raises(DimensionMismatch):
            parse_hamiltonian(GOOD.replace("0 0 0 1", "0 0 0 1 0"))

    def test_unsupported_dims(self):
        with pytest.raises(UnsupportedDimension):
            parse_hamiltonian(GOOD.replace("dims: 2 2", "dims: 3 3"))

    def test_all_input_errors_share_base(self):
        for text in ("", "dims: 2\n", GOOD.replace("1 0 0 0", "1 0 0")):
            with pytest.raises(InputError):
                parse_hamiltonian(text)

    @pytest.mark.parametrize("name", EXAMPLES)
    def test_format_round_trip(self, name):
        spec = load_example(name)
        again = parse_hamiltonian(format_hamiltonian(spec))
        np.testing.assert_allclose(again.eigenvalues, spec.eigenvalues, atol=1e-12)
        np.testing.assert_allclose(again.eigenvectors, spec.eigenvectors, atol=1e-12)
        assert again.label == spec.label

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.sampled_from([QUBIT_QUBIT, QUBIT_QUTRIT]))
    def test_round_trip_random(self, seed, shape):
        spec = random_spec(shape, np.random.default_rng(seed))
        again = parse_hamiltonian(format_hamiltonian(spec))
        np.testing.assert_allclose(again.matrix, spec.matrix, atol=1e-12)


class TestCsv:
    def test_round_trip(self):
        pts = scan(load_example("fig3"), 2.0, 11)
        text = write_scan_csv(pts)
        assert text.splitlines()[0] == ",".join(CSV_HEADER)
        data = read_scan_csv(text)
        np.testing.assert_allclose(data["purity"], [p.purity for p in pts], rtol=1e-8)
        np.testing.assert_allclose(data["lambda_min"], [p.lambda_min for p in pts], rtol=1e-8, atol=1e-300)

    def test_stream(self):
        buf = io.StringIO()
        text = write_scan_csv(scan(load_example("fig1"), 1.0, 3), buf)
        assert buf.getvalue() == text and text.count("\n") == 4

    def test_bad_header(self):
        with pytest.raises(HamiltonianSyntaxError):
            read_scan_csv("a,b\n1,2\n")


def test_report_json_round_trip():
    d = {"label": "x", "t_e": 0.296947, "boundaries": [0.1, 0.2], "wehrl_pair": None}
    assert load_report(dump_report(d)) == d
