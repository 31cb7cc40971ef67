"""Bundled reference coefficient tables and their re-derivation.

Each JSON fixture under data/ is a hand transcription of one printed
coefficient table (ids 3.1, 3.2, 3.3, 3.4, 5.1, 5.2).  A row pairs a target
form (a theta-product quadruple or an eta-quotient exponent vector) with
its claimed coordinates over the space basis. verify_table recomputes every
row with the exact solver and reports any disagreement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .eta import EtaQuotient
from .spaces import solve_in_basis
from .theta import theta_product_series

TABLE_IDS = ("3.1", "3.2", "3.3", "3.4", "5.1", "5.2")


def load_table(table_id):
    if table_id not in TABLE_IDS:
        raise KeyError(f"unknown table id {table_id!r}; expected one of {TABLE_IDS}")
    path = resources.files("eta24.data").joinpath(f"table_{table_id}.json")
    with path.open() as fh:
        return json.load(fh)


def _row_target(table, row, prec):
    if table["target"] == "theta":
        return theta_product_series(tuple(row["form"]), prec)
    exponents = dict(zip(table["divisors"], row["exponents"]))
    return EtaQuotient(exponents).series(prec)


def _row_name(table, row):
    if table["target"] == "theta":
        return "theta" + str(tuple(row["form"]))
    return "eta" + str(tuple(row["exponents"]))


@dataclass(frozen=True)
class RowReport:
    name: str
    matches: bool
    mismatches: tuple  # (label, printed, recomputed)


@dataclass(frozen=True)
class TableReport:
    table_id: str
    rows: tuple

    @property
    def n_matching(self):
        return sum(r.matches for r in self.rows)

    @property
    def all_match(self):
        return self.n_matching == len(self.rows)


def verify_table(table_id, verify_to=60, table=None):
    """Re-derive every row of a fixture table with the exact solver.

    A row matches when the solver reproduces every printed coefficient and
    every basis element missing from the table's columns gets coefficient 0.
    """
    if table is None:
        table = load_table(table_id)
    prec = verify_to + 1
    reports = []
    for row in table["rows"]:
        target = _row_target(table, row, prec + 1)
        result = solve_in_basis(target, table["character"], verify_to)
        printed = {
            label: Fraction(value)
            for label, value in zip(table["labels"], row["coefficients"])
        }
        mismatches = []
        for label, value in result.coefficients.items():
            expected = printed.get(label, Fraction(0))
            if value != expected:
                mismatches.append((label, str(expected), str(value)))
        reports.append(
            RowReport(
                name=_row_name(table, row),
                matches=not mismatches,
                mismatches=tuple(mismatches),
            )
        )
    return TableReport(table_id=table["id"], rows=tuple(reports))
