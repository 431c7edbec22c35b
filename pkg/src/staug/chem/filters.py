"""Dataset admission filters.

Molecules with a single heavy atom are rejected (no graph to convolve),
and metal-containing molecules are rejected unless the task explicitly
allows them.
"""

from .mol import MolGraph

# Organic element set; everything else is classed metal/other.
ORGANIC_ELEMENTS = frozenset({1, 5, 6, 7, 8, 9, 14, 15, 16, 17, 35, 53})


def heavy_atom_count(mol: MolGraph) -> int:
    return sum(1 for a in mol.atoms if a.element != 1)


def contains_metal(mol: MolGraph) -> bool:
    return any(a.element not in ORGANIC_ELEMENTS for a in mol.atoms)


def admit_molecule(mol: MolGraph, allow_metals: bool = False) -> bool:
    """True when the molecule is admitted to the dataset."""
    if heavy_atom_count(mol) < 2:
        return False
    if not allow_metals and contains_metal(mol):
        return False
    return True
