"""
Unit tests for the wave-function file formats.

Tests cover:
- Parsing step-function and expansion documents
- Deterministic serialization
- Error messages that locate the first problem
"""
import pytest

from dyadic.core import DyadicInterval
from dyadic.haar import DyadicStepFunction, HaarExpansion
from dyadic.io import InputFormatError, dumps, load_wave_function, parse_wave_function, save_wave_function


class TestParsing:
    """Tests for reading documents."""

    def test_step_function(self, load_fixture):
        """Test the step-function fixture loads on its grid."""
        f = load_fixture("haar_unit.json")
        assert isinstance(f, DyadicStepFunction)
        assert f.grid_level == 1
        assert f.cells() == [(0, 1.0), (1, -1.0)]

    def test_expansion(self, load_fixture):
        """Test the expansion fixture loads its coefficients."""
        expansion = load_fixture("expansion_two_terms.json")
        assert isinstance(expansion, HaarExpansion)
        assert expansion.as_dict() == {DyadicInterval(0, 0): 0.6, DyadicInterval(1, 0): 0.8}

    def test_dumps_matches_fixture(self, load_fixture, fixture_dir):
        """Test serialization reproduces the fixture files byte for byte."""
        for name in ("haar_unit.json", "haar_unit_expansion.json", "expansion_two_terms.json"):
            assert dumps(load_fixture(name)) == (fixture_dir / name).read_text()

    def test_save_and_load(self, tmp_path, unit_haar_step):
        """Test a saved step function loads back unchanged."""
        path = tmp_path / "h.json"
        save_wave_function(unit_haar_step, path)
        assert load_wave_function(path).cells() == unit_haar_step.cells()


class TestErrors:
    """Tests for malformed input."""

    @pytest.mark.edge_case
    def test_json_error_names_position(self, fixture_dir):
        """Test broken JSON reports line and column."""
        with pytest.raises(InputFormatError, match=r"line 1 column \d+"):
            load_wave_function(fixture_dir / "malformed.json")

    @pytest.mark.edge_case
    @pytest.mark.parametrize("text, where", [
        ('{"gridLevel": 1, "cells": [{"k": -1, "v": 1.0}]}', "cells.0.k"),
        ('{"gridLevel": 1, "cells": [{"k": 0, "v": 1.0, "w": 2}]}', "cells.0.w"),
        ('{"coeffs": [{"j": 0, "k": 0}]}', "coeffs.0.c"),
        ('{"gridLevel": "a", "cells": []}', "gridLevel"),
    ])
    def test_validation_error_names_field(self, text, where):
        """Test schema errors name the offending field path."""
        with pytest.raises(InputFormatError, match=f"at {where}"):
            parse_wave_function(text)

    @pytest.mark.edge_case
    def test_unordered_cells(self):
        """Test cells must be strictly increasing."""
        with pytest.raises(InputFormatError, match="strictly increasing"):
            parse_wave_function('{"gridLevel": 0, "cells": [{"k": 2, "v": 1.0}, {"k": 1, "v": 1.0}]}')

    @pytest.mark.edge_case
    def test_duplicate_coefficients(self):
        """Test coefficient intervals must be distinct."""
        with pytest.raises(InputFormatError, match="distinct"):
            parse_wave_function('{"coeffs": [{"j": 0, "k": 0, "c": 1}, {"j": 0, "k": 0, "c": 2}]}')

    @pytest.mark.edge_case
    @pytest.mark.parametrize("text", ["[]", '{"other": 1}'])
    def test_unknown_document(self, text):
        """Test documents of neither kind are rejected at the root."""
        with pytest.raises(InputFormatError, match="at <root>"):
            parse_wave_function(text)

    def test_missing_file(self, tmp_path):
        """Test an absent file raises InputFormatError."""
        with pytest.raises(InputFormatError, match="cannot read"):
            load_wave_function(tmp_path / "absent.json")
