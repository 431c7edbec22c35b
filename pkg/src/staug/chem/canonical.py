"""Canonical SMILES emission.

Atom ranks come from Morgan-style iterative refinement of local
invariants (element, degree, charge, implicit hydrogens, aromatic flag,
incident bond orders). Residual ties are broken by individualizing each
candidate of the lowest tied class and keeping the lexicographically
smallest emitted string, which makes the result invariant under input
atom ordering even when refinement alone cannot separate atoms.

Not RDKit-compatible and not meant to be; stereochemistry is already
discarded at parse time. Fragments are canonicalized separately and
joined with '.' in sorted order.
"""

from .mol import MolGraph, NUMBER_TO_SYMBOL
from .smiles import ORGANIC_SUBSET, effective_valences

_ORGANIC_NUMBERS = set(ORGANIC_SUBSET.values())
_AROMATIC_LOWER = {5: "b", 6: "c", 7: "n", 8: "o", 15: "p", 16: "s"}

# Encodes bond order for invariants; aromatic bonds get their own symbol
# so that the ranking never depends on which Kekulé form was chosen.
_ORDER_CODE = {1: 2, 2: 4, 3: 6}


def _bond_code(bond):
    return 3 if bond.aromatic else _ORDER_CODE[bond.order]


def _dense_rank(invariants):
    order = sorted(set(invariants))
    lookup = {inv: r for r, inv in enumerate(order)}
    return [lookup[inv] for inv in invariants]


def _initial_ranks(mol, atoms):
    invs = []
    for i in atoms:
        a = mol.atoms[i]
        bonds = tuple(sorted(_bond_code(b) for _, b in mol.adjacency[i]))
        invs.append((a.element, len(bonds), a.formal_charge, a.implicit_h,
                     a.aromatic, bonds))
    return _dense_rank(invs)


def _refine(mol, atoms, pos, ranks):
    while True:
        invs = []
        for k, i in enumerate(atoms):
            nbr_ranks = tuple(sorted(
                (ranks[pos[j]], _bond_code(b)) for j, b in mol.adjacency[i]))
            invs.append((ranks[k], nbr_ranks))
        new_ranks = _dense_rank(invs)
        if new_ranks == ranks:
            return ranks
        ranks = new_ranks


def _bare_hcount(mol, idx):
    """Hydrogens the parser would assign to this atom written bare, or None."""
    atom = mol.atoms[idx]
    if atom.element not in _ORGANIC_NUMBERS or atom.formal_charge != 0:
        return None
    if atom.aromatic and atom.element not in _AROMATIC_LOWER:
        return None
    vals = effective_valences(atom.element, 0)
    if atom.aromatic:
        needs = True
        bond_sum = 0
        for _, b in mol.adjacency[idx]:
            if b.aromatic:
                bond_sum += 1
            else:
                bond_sum += b.order
                if b.order >= 2:
                    needs = False
        if needs and not (vals[0] - mol.degree(idx) >= 1):
            needs = False
        if needs:
            bond_sum += 1
    else:
        bond_sum = sum(b.order for _, b in mol.adjacency[idx])
    fitting = [v for v in vals if v >= bond_sum]
    if not fitting:
        return None
    return fitting[0] - bond_sum


def _atom_token(mol, idx):
    atom = mol.atoms[idx]
    if atom.aromatic:
        sym = _AROMATIC_LOWER[atom.element]
    else:
        sym = NUMBER_TO_SYMBOL[atom.element]
    if _bare_hcount(mol, idx) == atom.implicit_h:
        return sym
    h = atom.implicit_h
    hpart = "" if h == 0 else ("H" if h == 1 else f"H{h}")
    q = atom.formal_charge
    if q == 0:
        qpart = ""
    elif q == 1:
        qpart = "+"
    elif q == -1:
        qpart = "-"
    else:
        qpart = f"+{q}" if q > 0 else str(q)
    return f"[{sym}{hpart}{qpart}]"


def _bond_token(mol, bond):
    if bond.aromatic:
        return ""
    if bond.order == 1:
        if mol.atoms[bond.a].aromatic and mol.atoms[bond.b].aromatic:
            return "-"  # single link between two aromatic systems
        return ""
    return "=" if bond.order == 2 else "#"


def _emit_component(mol, atoms, ranks):
    """Write one connected component given discrete ranks over `atoms`."""
    pos = {i: k for k, i in enumerate(atoms)}
    start = min(atoms, key=lambda i: ranks[pos[i]])

    # DFS (children in rank order) splits edges into tree edges and ring
    # closures; closures are recorded at both endpoints.
    visited = {start}
    tree_children = {i: [] for i in atoms}
    tree_edge_keys = set()
    seen_ring = set()
    ring_pairs = []

    def build(v):
        for nbr, bond in sorted(mol.adjacency[v], key=lambda nb: ranks[pos[nb[0]]]):
            if nbr not in visited:
                visited.add(nbr)
                tree_edge_keys.add(bond.key())
                tree_children[v].append((nbr, bond))
                build(nbr)
            elif bond.key() not in tree_edge_keys and bond.key() not in seen_ring:
                seen_ring.add(bond.key())
                ring_pairs.append((v, nbr, bond))

    build(start)

    # Ring-closure digits: both endpoints get the same digit; the digit is
    # chosen (smallest free) when the first endpoint is written.
    closures_at = {i: [] for i in atoms}
    for v, nbr, bond in ring_pairs:
        closures_at[nbr].append((v, bond))  # nbr was visited first
        closures_at[v].append((nbr, bond))

    open_digits = {}
    used_digits = set()
    out = []

    def digit_str(d):
        return str(d) if d < 10 else f"%{d:02d}"

    def write(v):
        out.append(_atom_token(mol, v))
        for other, bond in closures_at[v]:
            key = bond.key()
            if key in open_digits:
                d = open_digits.pop(key)
                used_digits.discard(d)
                out.append(digit_str(d))
            else:
                d = 1
                while d in used_digits:
                    d += 1
                used_digits.add(d)
                open_digits[key] = d
                out.append(_bond_token(mol, bond) + digit_str(d))
        children = tree_children[v]
        for k, (child, bond) in enumerate(children):
            last = k == len(children) - 1
            if not last:
                out.append("(")
            out.append(_bond_token(mol, bond))
            write(child)
            if not last:
                out.append(")")

    write(start)
    return "".join(out)


def _canonical_component(mol, atoms):
    pos = {i: k for k, i in enumerate(atoms)}
    ranks = _refine(mol, atoms, pos, _initial_ranks(mol, atoms))

    def solve(ranks):
        counts = {}
        for r in ranks:
            counts[r] = counts.get(r, 0) + 1
        tied = sorted(r for r, c in counts.items() if c > 1)
        if not tied:
            return _emit_component(mol, atoms, ranks)
        target = tied[0]
        best = None
        for k in range(len(atoms)):
            if ranks[k] != target:
                continue
            bumped = [2 * r for r in ranks]
            bumped[k] -= 1
            s = solve(_refine(mol, atoms, pos, _dense_rank(bumped)))
            if best is None or s < best:
                best = s
        return best

    return solve(ranks)


def canonical_smiles(mol: MolGraph) -> str:
    """Deterministic SMILES, invariant under input atom ordering.

    Expects aromaticity to have been perceived; parse + perceive + write
    is idempotent on its own output.
    """
    parts = [_canonical_component(mol, comp) for comp in mol.components()]
    return ".".join(sorted(parts))
