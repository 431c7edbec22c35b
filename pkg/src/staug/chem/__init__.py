from .mol import (
    Atom,
    Bond,
    MolGraph,
    AROMATIC,
    ChemError,
    SmilesSyntaxError,
    ValenceError,
    UnsupportedFeatureError,
    KekulizationError,
)
from .smiles import parse_smiles
from .aromaticity import perceive_aromaticity, sssr
from .canonical import canonical_smiles
from .filters import admit_molecule, ORGANIC_ELEMENTS

__all__ = [
    "Atom",
    "Bond",
    "MolGraph",
    "AROMATIC",
    "ChemError",
    "SmilesSyntaxError",
    "ValenceError",
    "UnsupportedFeatureError",
    "KekulizationError",
    "parse_smiles",
    "perceive_aromaticity",
    "sssr",
    "canonical_smiles",
    "admit_molecule",
    "ORGANIC_ELEMENTS",
    "mol_from_smiles",
]


def mol_from_smiles(text: str) -> MolGraph:
    """Parse and perceive aromaticity in one step (the usual entry point)."""
    return perceive_aromaticity(parse_smiles(text))
