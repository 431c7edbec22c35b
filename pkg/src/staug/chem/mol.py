"""Molecular graph types: atoms, bonds and the graph that owns them.

Bond orders are kept in Kekulé form (1, 2, 3); aromaticity is a derived
flag on atoms and bonds, re-computable at any time from the orders.
"""

from dataclasses import dataclass, field

# Marker order for aromatic bonds in contexts where a numeric stand-in is
# needed (canonical invariants, valence sums during parsing).
AROMATIC = 1.5

SYMBOL_TO_NUMBER = {
    "H": 1, "B": 5, "C": 6, "N": 7, "O": 8, "F": 9, "Na": 11, "Mg": 12,
    "Al": 13, "Si": 14, "P": 15, "S": 16, "Cl": 17, "K": 19, "Ca": 20,
    "Fe": 26, "Cu": 29, "Zn": 30, "Se": 34, "Br": 35, "Ag": 47, "Sn": 50,
    "I": 53, "Pt": 78, "Au": 79, "Hg": 80, "Pb": 82,
}
NUMBER_TO_SYMBOL = {v: k for k, v in SYMBOL_TO_NUMBER.items()}

# Average atomic masses for the supported symbols.
ATOMIC_MASS = {
    1: 1.008, 5: 10.811, 6: 12.011, 7: 14.007, 8: 15.999, 9: 18.998,
    11: 22.990, 12: 24.305, 13: 26.982, 14: 28.086, 15: 30.974, 16: 32.06,
    17: 35.453, 19: 39.098, 20: 40.078, 26: 55.845, 29: 63.546, 30: 65.38,
    34: 78.971, 35: 79.904, 47: 107.868, 50: 118.710, 53: 126.904,
    78: 195.084, 79: 196.967, 80: 200.592, 82: 207.2,
}

# Default valence lists used to fill implicit hydrogens (organic subset).
DEFAULT_VALENCES = {
    5: (3,),          # B
    6: (4,),          # C
    7: (3,),          # N
    8: (2,),          # O
    9: (1,),          # F
    14: (4,),         # Si
    15: (3, 5),       # P
    16: (2, 4, 6),    # S
    17: (1,),         # Cl
    35: (1,),         # Br
    53: (1,),         # I
}


class ChemError(ValueError):
    """Base class for molecule parsing/processing errors."""


class SmilesSyntaxError(ChemError):
    """Malformed SMILES: unbalanced parens, dangling ring bonds, bad tokens."""


class ValenceError(ChemError):
    """Implicit hydrogen count would be negative."""


class UnsupportedFeatureError(ChemError):
    """Grammar feature outside the supported subset (isotopes, wildcards)."""


class KekulizationError(ChemError):
    """Aromatic input admits no valid alternating single/double assignment."""


@dataclass
class Atom:
    element: int                 # atomic number
    formal_charge: int = 0
    aromatic: bool = False
    implicit_h: int = 0
    ring_member: bool = False

    @property
    def symbol(self) -> str:
        return NUMBER_TO_SYMBOL[self.element]

    def copy(self) -> "Atom":
        return Atom(self.element, self.formal_charge, self.aromatic,
                    self.implicit_h, self.ring_member)


@dataclass
class Bond:
    a: int
    b: int
    order: int = 1               # Kekulé order: 1, 2 or 3
    aromatic: bool = False

    def other(self, idx: int) -> int:
        return self.b if idx == self.a else self.a

    def key(self) -> tuple:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)

    def copy(self) -> "Bond":
        return Bond(self.a, self.b, self.order, self.aromatic)


@dataclass
class MolGraph:
    atoms: list = field(default_factory=list)
    bonds: list = field(default_factory=list)
    _adjacency: list = field(default=None, repr=False)

    def add_atom(self, atom: Atom) -> int:
        self.atoms.append(atom)
        self._adjacency = None
        return len(self.atoms) - 1

    def add_bond(self, a: int, b: int, order: int = 1, aromatic: bool = False) -> Bond:
        n = len(self.atoms)
        if a == b:
            raise SmilesSyntaxError(f"bond between atom {a} and itself")
        if not (0 <= a < n and 0 <= b < n):
            raise SmilesSyntaxError(f"bond endpoint out of range: ({a},{b})")
        for bond in self.bonds:
            if bond.key() == (min(a, b), max(a, b)):
                raise SmilesSyntaxError(f"duplicate bond between atoms {a} and {b}")
        bond = Bond(a, b, order, aromatic)
        self.bonds.append(bond)
        self._adjacency = None
        return bond

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def adjacency(self):
        """Per-atom list of (neighbor index, bond); cached, rebuilt on edit."""
        if self._adjacency is None:
            adj = [[] for _ in self.atoms]
            for bond in self.bonds:
                adj[bond.a].append((bond.b, bond))
                adj[bond.b].append((bond.a, bond))
            self._adjacency = adj
        return self._adjacency

    def neighbors(self, idx: int):
        return [a for a, _ in self.adjacency[idx]]

    def degree(self, idx: int) -> int:
        return len(self.adjacency[idx])

    def bond_between(self, a: int, b: int):
        for nbr, bond in self.adjacency[a]:
            if nbr == b:
                return bond
        return None

    def total_hydrogens(self) -> int:
        """Explicit [H] atoms plus implicit counts; invariant under canonicalization."""
        return (sum(a.implicit_h for a in self.atoms)
                + sum(1 for a in self.atoms if a.element == 1))

    def copy(self) -> "MolGraph":
        return MolGraph([a.copy() for a in self.atoms],
                        [b.copy() for b in self.bonds])

    def relabel(self, perm) -> "MolGraph":
        """Return a copy with atom i moved to position perm[i]."""
        n = self.n_atoms
        atoms = [None] * n
        for i, a in enumerate(self.atoms):
            atoms[perm[i]] = a.copy()
        bonds = [Bond(perm[b.a], perm[b.b], b.order, b.aromatic) for b in self.bonds]
        return MolGraph(atoms, bonds)

    def components(self):
        """Connected components as sorted lists of atom indices."""
        seen = [False] * self.n_atoms
        out = []
        for start in range(self.n_atoms):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for nbr in self.neighbors(v):
                    if not seen[nbr]:
                        seen[nbr] = True
                        stack.append(nbr)
            out.append(sorted(comp))
        return out
