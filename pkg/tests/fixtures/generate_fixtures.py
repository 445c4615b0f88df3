"""
Generate JSON wave-function fixtures.
Run once to (re)create the test fixtures.

Usage:
    python tests/fixtures/generate_fixtures.py
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[2]))

from dyadic.core import DyadicInterval  # noqa: E402
from dyadic.haar import HaarExpansion, synthesize  # noqa: E402
from dyadic.io import save_wave_function  # noqa: E402

FIXTURE_DIR = Path(__file__).parent
UNIT = DyadicInterval(0, 0)


def generate_fixture(obj, output_file: str):
    """Serialize a wave function and save it next to this script."""
    output_path = FIXTURE_DIR / output_file
    save_wave_function(obj, output_path)
    print(f"[OK] Generated {output_path}")


if __name__ == "__main__":
    print("=" * 70)
    print("Generating wave-function fixtures")
    print("=" * 70)

    unit = HaarExpansion(((UNIT, 1.0),))
    generate_fixture(synthesize(unit), "haar_unit.json")
    generate_fixture(unit, "haar_unit_expansion.json")
    generate_fixture(HaarExpansion(((UNIT, 0.6), (DyadicInterval(1, 0), 0.8))), "expansion_two_terms.json")

    # a missing comma after "k": 0, for parse-error tests
    (FIXTURE_DIR / "malformed.json").write_text('{"gridLevel": 1, "cells": [{"k": 0 "v": 1.0}]}\n')
    print(f"[OK] Generated {FIXTURE_DIR / 'malformed.json'}")

    print("=" * 70)
    print("[OK] All fixtures generated successfully!")
    print("=" * 70)
