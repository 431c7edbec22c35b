"""SMILES parser for the supported subset.

Grammar: organic-subset shorthand (B, C, N, O, P, S, F, Cl, Br, I and
aromatic b, c, n, o, p, s), bracket atoms with charge and explicit H
count, bond symbols ``- = # :``, branches, one- and two-digit (%nn) ring
closures, ``.`` fragment separators. Stereo markers (``/ \\ @``) are
accepted and discarded. Isotopes and the wildcard ``*`` are rejected.

Lowercase aromatic input is kekulized on the spot (backtracking perfect
matching over atoms that require a double bond), so the returned graph
always carries integer Kekulé orders. Aromatic flags on atoms/bonds are
hints from the input case; :func:`staug.chem.aromaticity.perceive_aromaticity`
re-derives them from structure.
"""

import re

from .mol import (
    AROMATIC,
    Atom,
    Bond,
    DEFAULT_VALENCES,
    KekulizationError,
    MolGraph,
    SmilesSyntaxError,
    SYMBOL_TO_NUMBER,
    UnsupportedFeatureError,
    ValenceError,
)

ORGANIC_SUBSET = {"B": 5, "C": 6, "N": 7, "O": 8, "P": 15, "S": 16,
                  "F": 9, "Cl": 17, "Br": 35, "I": 53}
AROMATIC_SUBSET = {"b": 5, "c": 6, "n": 7, "o": 8, "p": 15, "s": 16}

BOND_ORDERS = {"-": 1, "=": 2, "#": 3, ":": AROMATIC}

_BRACKET_RE = re.compile(
    r"^\[(?P<isotope>\d+)?"
    r"(?P<element>[A-Z][a-z]?|b|c|n|o|p|s|as|se|\*)"
    r"(?P<stereo>@{1,2})?"
    r"(?P<hcount>H\d*)?"
    r"(?P<charge>\+\+|--|[+-]\d*)?"
    r"(?P<cls>:\d+)?\]$"
)


def _tokenize(text):
    """Yield (kind, value) pairs; kind in {atom, bracket, bond, open, close,
    ring, dot}."""
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "[":
            j = text.find("]", i)
            if j < 0:
                raise SmilesSyntaxError(f"unterminated bracket atom at position {i}")
            yield "bracket", text[i:j + 1]
            i = j + 1
        elif c in "BC" and text[i:i + 2] in ("Cl", "Br"):
            yield "atom", text[i:i + 2]
            i += 2
        elif c in ORGANIC_SUBSET or c in AROMATIC_SUBSET:
            yield "atom", c
            i += 1
        elif c in BOND_ORDERS:
            yield "bond", c
            i += 1
        elif c == "(":
            yield "open", c
            i += 1
        elif c == ")":
            yield "close", c
            i += 1
        elif c.isdigit():
            yield "ring", int(c)
            i += 1
        elif c == "%":
            if i + 2 >= n or not text[i + 1:i + 3].isdigit():
                raise SmilesSyntaxError(f"bad %nn ring closure at position {i}")
            yield "ring", int(text[i + 1:i + 3])
            i += 3
        elif c == ".":
            yield "dot", c
            i += 1
        elif c in "/\\":
            i += 1  # stereo marker, discarded
        elif c == "*":
            raise UnsupportedFeatureError("wildcard atom '*' is not supported")
        else:
            raise SmilesSyntaxError(f"unknown token {c!r} at position {i}")


def _parse_bracket(token):
    """Return (element, charge, hcount, aromatic) from a [...] token."""
    m = _BRACKET_RE.match(token)
    if m is None:
        raise SmilesSyntaxError(f"malformed bracket atom {token}")
    if m.group("isotope"):
        raise UnsupportedFeatureError(f"isotope label in {token} is not supported")
    if m.group("cls"):
        raise UnsupportedFeatureError(f"atom class in {token} is not supported")
    sym = m.group("element")
    if sym == "*":
        raise UnsupportedFeatureError("wildcard atom '*' is not supported")
    aromatic = sym[0].islower()
    if aromatic:
        if sym not in AROMATIC_SUBSET:
            raise UnsupportedFeatureError(f"aromatic element {sym!r} is not supported")
        element = AROMATIC_SUBSET[sym]
    else:
        element = SYMBOL_TO_NUMBER.get(sym)
        if element is None:
            raise SmilesSyntaxError(f"unknown element symbol {sym!r}")
    h = m.group("hcount")
    if h is None:
        hcount = 0
    elif h == "H":
        hcount = 1
    else:
        hcount = int(h[1:])
    ch = m.group("charge")
    if ch is None:
        charge = 0
    elif ch == "++":
        charge = 2
    elif ch == "--":
        charge = -2
    elif len(ch) == 1:
        charge = 1 if ch == "+" else -1
    else:
        charge = int(ch)
    if element == 1 and hcount:
        raise SmilesSyntaxError("a hydrogen atom cannot carry hydrogens")
    return element, charge, hcount, aromatic


def effective_valences(element, charge):
    """Default valences shifted by formal charge; None for metals/others."""
    base = DEFAULT_VALENCES.get(element)
    if base is None:
        return None
    if charge == 0:
        return base
    if element in (6, 14):        # C, Si: both signs remove a bond
        shift = -abs(charge)
    elif element == 5:            # B: anion gains a bond
        shift = -charge
    else:                         # N, O, P, S, halogens
        shift = charge
    return tuple(max(0, v + shift) for v in base)


def _needs_double(mol, idx, hcount_known):
    """Whether an aromatic atom must receive a double bond on kekulization."""
    atom = mol.atoms[idx]
    for _, bond in mol.adjacency[idx]:
        if not bond.aromatic and bond.order >= 2:
            return False  # exocyclic double/triple already consumes the p orbital
    if atom.element == 6 and atom.formal_charge > 0:
        return False  # aromatic carbocation: empty orbital
    vals = effective_valences(atom.element, atom.formal_charge)
    if vals is None:
        return False
    budget = vals[0] - mol.degree(idx) - hcount_known
    return budget >= 1


def kekulize(mol, bracket_h):
    """Assign alternating double bonds to aromatic-flagged bonds in place.

    bracket_h maps atom index -> explicit H count (bracket atoms only);
    every other atom is assumed to have no declared hydrogens yet.
    """
    need = [False] * mol.n_atoms
    for i, atom in enumerate(mol.atoms):
        if atom.aromatic:
            need[i] = _needs_double(mol, i, bracket_h.get(i, 0))
    todo = [i for i in range(mol.n_atoms) if need[i]]
    if not todo:
        return
    # Candidate edges: aromatic bonds joining two atoms that need a double.
    nbrs = {i: [] for i in todo}
    for bond in mol.bonds:
        if bond.aromatic and need[bond.a] and need[bond.b]:
            nbrs[bond.a].append((bond.b, bond))
            nbrs[bond.b].append((bond.a, bond))
    matched = {}

    def match(order):
        if not order:
            return True
        i = order[0]
        if i in matched:
            return match(order[1:])
        for j, bond in nbrs[i]:
            if j not in matched:
                matched[i] = bond
                matched[j] = bond
                if match(order[1:]):
                    return True
                del matched[i]
                del matched[j]
        return False

    # Deterministic order: most-constrained atoms first speeds backtracking.
    todo.sort(key=lambda i: (len(nbrs[i]), i))
    if not match(todo):
        raise KekulizationError(
            "no alternating single/double assignment exists for the aromatic system")
    for bond in matched.values():
        bond.order = 2


def _fill_hydrogens(mol, bracket_idx, bracket_h):
    """Set implicit_h on every atom from Kekulé bond orders."""
    for i, atom in enumerate(mol.atoms):
        if i in bracket_idx:
            atom.implicit_h = bracket_h.get(i, 0)
            continue
        bond_sum = sum(b.order for _, b in mol.adjacency[i])
        vals = effective_valences(atom.element, atom.formal_charge)
        if vals is None:
            atom.implicit_h = 0
            continue
        fitting = [v for v in vals if v >= bond_sum]
        if not fitting:
            raise ValenceError(
                f"atom {i} ({atom.symbol}) has bond order sum {bond_sum} "
                f"exceeding its maximum valence {max(vals)}")
        atom.implicit_h = fitting[0] - bond_sum


def _mark_ring_membership(mol):
    """ring_member = incident to at least one non-bridge edge (Tarjan bridges)."""
    n = mol.n_atoms
    disc = [-1] * n
    low = [0] * n
    in_ring_edge = [False] * len(mol.bonds)
    bond_index = {}
    for bi, b in enumerate(mol.bonds):
        bond_index[b.key()] = bi
    timer = [0]

    def dfs(root):
        stack = [(root, -1, iter(mol.adjacency[root]))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for nbr, bond in it:
                bi = bond_index[bond.key()]
                if bi == parent_edge:
                    continue
                if disc[nbr] == -1:
                    disc[nbr] = low[nbr] = timer[0]
                    timer[0] += 1
                    stack.append((nbr, bi, iter(mol.adjacency[nbr])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[nbr])
                in_ring_edge[bi] = True  # back edge closes a cycle
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] <= disc[pv] and parent_edge >= 0:
                        in_ring_edge[parent_edge] = True

    for i in range(n):
        if disc[i] == -1:
            dfs(i)
    for atom in mol.atoms:
        atom.ring_member = False
    for bi, bond in enumerate(mol.bonds):
        if in_ring_edge[bi]:
            mol.atoms[bond.a].ring_member = True
            mol.atoms[bond.b].ring_member = True
    return in_ring_edge


def parse_smiles(text: str) -> MolGraph:
    """Parse a SMILES string into a :class:`MolGraph`.

    Ring closures are resolved, lowercase aromatic systems kekulized and
    implicit hydrogens assigned. Raises :class:`SmilesSyntaxError`,
    :class:`ValenceError`, :class:`UnsupportedFeatureError` or
    :class:`KekulizationError`.
    """
    if not text or not text.strip():
        raise SmilesSyntaxError("empty SMILES string")
    text = text.strip()

    mol = MolGraph()
    anchor = None
    pending = None          # explicit bond symbol awaiting its second atom
    branch_stack = []
    open_rings = {}         # ring number -> (atom index, pending order)
    bracket_idx = set()
    bracket_h = {}
    fragment_has_atom = False

    def connect(a, b, order):
        if order is None:
            if mol.atoms[a].aromatic and mol.atoms[b].aromatic:
                mol.add_bond(a, b, 1, aromatic=True)
            else:
                mol.add_bond(a, b, 1)
        elif order == AROMATIC:
            if not (mol.atoms[a].aromatic and mol.atoms[b].aromatic):
                raise SmilesSyntaxError(
                    "':' bond requires aromatic atoms at both ends")
            mol.add_bond(a, b, 1, aromatic=True)
        else:
            mol.add_bond(a, b, order)

    for kind, token in _tokenize(text):
        if kind in ("atom", "bracket"):
            if kind == "atom":
                aromatic = token in AROMATIC_SUBSET
                element = AROMATIC_SUBSET[token] if aromatic else ORGANIC_SUBSET[token]
                idx = mol.add_atom(Atom(element, aromatic=aromatic))
            else:
                element, charge, hcount, aromatic = _parse_bracket(token)
                idx = mol.add_atom(Atom(element, formal_charge=charge,
                                        aromatic=aromatic))
                bracket_idx.add(idx)
                bracket_h[idx] = hcount
            if anchor is not None:
                connect(anchor, idx, pending)
            elif pending is not None:
                raise SmilesSyntaxError("bond symbol with no preceding atom")
            pending = None
            anchor = idx
            fragment_has_atom = True
        elif kind == "bond":
            if pending is not None:
                raise SmilesSyntaxError("two consecutive bond symbols")
            pending = BOND_ORDERS[token]
        elif kind == "open":
            if anchor is None:
                raise SmilesSyntaxError("branch opened before any atom")
            if pending is not None:
                raise SmilesSyntaxError("bond symbol directly before '('")
            branch_stack.append(anchor)
        elif kind == "close":
            if not branch_stack:
                raise SmilesSyntaxError("unbalanced ')'")
            if pending is not None:
                raise SmilesSyntaxError("dangling bond symbol before ')'")
            anchor = branch_stack.pop()
        elif kind == "ring":
            if anchor is None:
                raise SmilesSyntaxError("ring closure digit before any atom")
            if token in open_rings:
                other, other_order = open_rings.pop(token)
                if pending is not None and other_order is not None \
                        and pending != other_order:
                    raise SmilesSyntaxError(
                        f"conflicting bond orders on ring closure {token}")
                order = pending if pending is not None else other_order
                connect(other, anchor, order)
                pending = None
            else:
                open_rings[token] = (anchor, pending)
                pending = None
        elif kind == "dot":
            if pending is not None:
                raise SmilesSyntaxError("bond symbol before '.'")
            if not fragment_has_atom:
                raise SmilesSyntaxError("empty fragment before '.'")
            if branch_stack:
                raise SmilesSyntaxError("'.' inside a branch")
            anchor = None
            fragment_has_atom = False

    if not fragment_has_atom and mol.n_atoms:
        raise SmilesSyntaxError("empty fragment after trailing '.'")
    if branch_stack:
        raise SmilesSyntaxError("unbalanced '(' in SMILES")
    if open_rings:
        raise SmilesSyntaxError(
            f"unclosed ring bond(s): {sorted(open_rings)}")
    if pending is not None:
        raise SmilesSyntaxError("dangling bond symbol at end of SMILES")
    if mol.n_atoms == 0:
        raise SmilesSyntaxError("SMILES contains no atoms")

    ring_edges = _mark_ring_membership(mol)
    for bi, bond in enumerate(mol.bonds):
        if bond.aromatic and not ring_edges[bi]:
            bond.aromatic = False  # e.g. biphenyl link written without '-'
    for i, atom in enumerate(mol.atoms):
        if atom.aromatic and not atom.ring_member:
            raise SmilesSyntaxError(
                f"aromatic atom {i} ({atom.symbol.lower()}) outside any ring")

    kekulize(mol, bracket_h)
    _fill_hydrogens(mol, bracket_idx, bracket_h)
    return mol
