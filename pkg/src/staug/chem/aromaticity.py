"""Ring perception and the pinned aromaticity convention.

Rings come from a smallest-set-of-smallest-rings search (shortest cycle
through each edge, reduced to an independent basis over GF(2)). A simple
ring is aromatic when every member is sp2-capable and the ring's pi
electron count is 2 mod 4, with the fixed contribution table:

    ring double bond (to any ring atom)      1 per endpoint
    exocyclic double bond (e.g. C=O)         0, still sp2
    pyrrole-type N/P (3 sigma, neutral)      2
    O / S (2 sigma, neutral)                 2
    carbanion C- / amide N-                  2
    carbocation C+ / neutral B               0

Fused systems resolve per-ring only (azulene-style perimeters are a
documented limitation). Toolkits disagree on aromaticity; this module
pins one deterministic convention rather than chasing any of them.
"""

from collections import deque

from .mol import MolGraph


def _shortest_cycle_mask(mol, edge_idx, bond, edge_of):
    """Bitmask of the shortest cycle through `bond`, or None."""
    u, v = bond.a, bond.b
    parent = {u: (None, None)}
    q = deque([u])
    while q:
        x = q.popleft()
        if x == v:
            break
        for nbr, b in mol.adjacency[x]:
            if b is bond or nbr in parent:
                continue
            parent[nbr] = (x, b)
            q.append(nbr)
    if v not in parent:
        return None, None
    mask = 1 << edge_idx
    atoms = [v]
    x = v
    while parent[x][0] is not None:
        px, pb = parent[x]
        mask |= 1 << edge_of[pb.key()]
        atoms.append(px)
        x = px
    return mask, atoms


def sssr(mol: MolGraph):
    """Smallest set of smallest rings as (atom list, edge bitmask) pairs."""
    m = len(mol.bonds)
    n = mol.n_atoms
    n_rings = m - n + len(mol.components())
    if n_rings <= 0:
        return []
    edge_of = {b.key(): i for i, b in enumerate(mol.bonds)}
    candidates = []
    seen = set()
    for i, bond in enumerate(mol.bonds):
        mask, atoms = _shortest_cycle_mask(mol, i, bond, edge_of)
        if mask is not None and mask not in seen:
            seen.add(mask)
            candidates.append((bin(mask).count("1"), mask, atoms))
    candidates.sort(key=lambda t: (t[0], t[1]))

    pivots = {}  # highest set bit -> reduced basis vector
    rings = []
    for _, mask, atoms in candidates:
        reduced = mask
        while reduced:
            hb = reduced.bit_length()
            if hb not in pivots:
                pivots[hb] = reduced
                rings.append((atoms, mask))
                break
            reduced ^= pivots[hb]
        if len(rings) == n_rings:
            break
    return rings


def _pi_contribution(mol, idx):
    """Pi electrons the atom gives a ring, or None if not sp2-capable."""
    atom = mol.atoms[idx]
    doubles = []
    for nbr, bond in mol.adjacency[idx]:
        if bond.order == 3:
            return None
        if bond.order == 2:
            doubles.append(nbr)
    if len(doubles) >= 2:
        return None
    if doubles:
        return 1 if mol.atoms[doubles[0]].ring_member else 0
    el, q = atom.element, atom.formal_charge
    sigma = mol.degree(idx) + atom.implicit_h
    if el == 6:
        if q == -1 and sigma == 3:
            return 2
        if q == 1 and sigma == 3:
            return 0
        return None
    if el in (7, 15):
        if q == 0 and sigma == 3:
            return 2
        if q == -1 and sigma == 2:
            return 2
        return None
    if el in (8, 16):
        if q == 0 and sigma == 2:
            return 2
        return None
    if el == 5 and q == 0:
        return 0
    return None


def perceive_aromaticity(mol: MolGraph) -> MolGraph:
    """Re-derive all aromatic flags from structure (input flags are hints).

    Mutates and returns `mol`. Idempotent: Kekulé orders, charges and
    hydrogen counts are never touched, only the derived flags.
    """
    rings = sssr(mol)
    for atom in mol.atoms:
        atom.ring_member = False
        atom.aromatic = False
    ring_atom_ids = set()
    for atoms, _ in rings:
        ring_atom_ids.update(atoms)
    for i in ring_atom_ids:
        mol.atoms[i].ring_member = True

    edge_of = {b.key(): i for i, b in enumerate(mol.bonds)}
    aromatic_edges = 0
    for atoms, mask in rings:
        total = 0
        ok = True
        for i in atoms:
            pi = _pi_contribution(mol, i)
            if pi is None:
                ok = False
                break
            total += pi
        if ok and total % 4 == 2:
            for i in atoms:
                mol.atoms[i].aromatic = True
            aromatic_edges |= mask
    for bond in mol.bonds:
        bi = edge_of[bond.key()]
        bond.aromatic = bool(aromatic_edges >> bi & 1) \
            and mol.atoms[bond.a].aromatic and mol.atoms[bond.b].aromatic
    return mol


def ring_stats(mol: MolGraph):
    """(ring count, aromatic ring count) from the perceived structure."""
    rings = sssr(mol)
    edge_of = {b.key(): i for i, b in enumerate(mol.bonds)}
    n_arom = 0
    for atoms, mask in rings:
        bonds_in_ring = [b for b in mol.bonds if mask >> edge_of[b.key()] & 1]
        if all(b.aromatic for b in bonds_in_ring):
            n_arom += 1
    return len(rings), n_arom
