"""Decompositions of polydifferentials on Fermat curves into irreducible modules."""

from ._core import (
    decompose,
    dim_vm,
    irreps,
    lattice_probe,
    multiplicity,
    multiplicity_oracle,
    series,
    table_row,
    taylor,
)

__all__ = [
    "decompose",
    "dim_vm",
    "irreps",
    "lattice_probe",
    "multiplicity",
    "multiplicity_oracle",
    "series",
    "table_row",
    "taylor",
]
