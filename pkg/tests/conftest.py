"""Shared fixtures: reference-table loading and printed-digit tolerances.

The golden CSVs hold the reference tables with their printed precision
intact (values stored as strings). Tolerances are
derived per value:

* pole quantities (k, z, gamma_R): one unit in the last printed place;
* sharp observables: 4 significant figures or the printed place,
  whichever is looser (some reference entries carry fewer digits);
* quadrature observables: 3 significant figures or the printed place.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import pytest

from deltashell import PotentialSpec, table_records

GOLDEN_DIR = Path(__file__).parent / "golden"
TABLE_LAMBDAS = (100.0, 10.0, 0.5, -0.5, -10.0, -100.0)


def golden_rows(lam: float) -> list[dict]:
    name = f"table_{lam:g}.csv"
    with open(GOLDEN_DIR / name, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def printed_place(text: str) -> float:
    """Magnitude of one unit in the last printed decimal place."""
    mantissa = text.strip().lstrip("+-")
    if "." not in mantissa:
        return 1.0
    return 10.0 ** -(len(mantissa.split(".")[1]))


def place_tol(text: str) -> float:
    return 1.000001 * printed_place(text)


def sigfig_tol(text: str, n_digits: int) -> float:
    """Half a unit in the n-th significant figure, floored by the printed place."""
    value = abs(float(text))
    if value == 0.0:
        return place_tol(text)
    band = 0.5 * 10.0 ** (math.floor(math.log10(value)) - n_digits + 1)
    return max(band, place_tol(text))


def assert_printed(computed: float, printed: str, label: str, tol: float | None = None):
    tol = place_tol(printed) if tol is None else tol
    assert abs(computed - float(printed)) <= tol, (
        f"{label}: computed {computed!r} vs printed {printed} (tol {tol:g})"
    )


@pytest.fixture(scope="session")
def specs() -> dict[float, PotentialSpec]:
    return {lam: PotentialSpec(lam=lam) for lam in TABLE_LAMBDAS}


@pytest.fixture(scope="session")
def all_records(specs):
    """Computed observables for every reference table (cached per session)."""
    return {lam: table_records(specs[lam], 8) for lam in TABLE_LAMBDAS}
