"""Stabilizer tableaus: an independent check of the graph rule.

The graph rule (complement the neighbourhood) and the local unitary
sqrt(-iX) on the target times sqrt(iZ) on its neighbours must produce the
same state.  This module verifies that at the stabilizer-group level, with
exact sign tracking, and shares no code with the graph-side implementation
beyond the Graph type itself.

Pauli strings are stored as (x bitmask, z bitmask, phase mod 4): the qubit-q
bits (x_q, z_q) select the literal Pauli factor I/X/Z/Y there ((1,1) is Y),
and phase counts powers of i in front of the whole string.  Hermitian
generators always carry phase 0 or 2 (+1/-1).  The single-qubit conjugation
tables were derived from the matrix exponentials:

    sqrt(-iX) = (I - iX)/sqrt(2):  X -> X,   Z -> -Y,  Y -> Z
    sqrt(iZ)  = (I + iZ)/sqrt(2):  Z -> Z,   X -> -Y,  Y -> X
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits, local_complement


@dataclass(frozen=True)
class PauliString:
    x: int
    z: int
    phase: int  # power of i, mod 4

    def commutes_with(self, other: "PauliString") -> bool:
        a = (self.x & other.z).bit_count()
        b = (self.z & other.x).bit_count()
        return (a + b) % 2 == 0


def _pauli_mul(a: PauliString, b: PauliString, n: int) -> PauliString:
    """Exact product a*b with phase bookkeeping per qubit."""
    phase = a.phase + b.phase
    for q in range(n):
        ax, az = a.x >> q & 1, a.z >> q & 1
        bx, bz = b.x >> q & 1, b.z >> q & 1
        if not (ax or az) or not (bx or bz):
            continue
        if (ax, az) == (bx, bz):
            continue
        # distinct non-identity Paulis: XY=iZ, YZ=iX, ZX=iY and reverses
        cyclic = {(1, 0): 0, (1, 1): 1, (0, 1): 2}  # X -> Y -> Z
        ia, ib = cyclic[(ax, az)], cyclic[(bx, bz)]
        phase += 1 if (ib - ia) % 3 == 1 else 3
    return PauliString(x=a.x ^ b.x, z=a.z ^ b.z, phase=phase % 4)


@dataclass
class StabilizerTableau:
    """n commuting independent Pauli generators with signs."""

    n: int
    generators: list[PauliString]

    def validate(self) -> None:
        if len(self.generators) != self.n:
            raise ValueError("tableau needs exactly n generators")
        for g in self.generators:
            if g.phase % 2:
                raise ValueError("generator phase must be +1 or -1")
        for i, a in enumerate(self.generators):
            for b in self.generators[i + 1 :]:
                if not a.commutes_with(b):
                    raise ValueError("generators must pairwise commute")
        if _gf2_rank([g.x << self.n | g.z for g in self.generators]) != self.n:
            raise ValueError("generators must be independent")


def _gf2_rank(vectors: list[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def graph_to_tableau(g: Graph) -> StabilizerTableau:
    """Generator v is X_v times Z on every neighbour, sign +1."""
    gens = [
        PauliString(x=1 << v, z=g.rows[v], phase=0) for v in range(g.n)
    ]
    return StabilizerTableau(n=g.n, generators=gens)


def apply_lc_unitary(
    t: StabilizerTableau, a: int, neighbours: frozenset[int] | set[int]
) -> StabilizerTableau:
    """Conjugate every generator by sqrt(-iX) on a and sqrt(iZ) on each
    neighbour.  The caller supplies the neighbourhood of a in the graph the
    tableau represents."""
    if a in neighbours:
        raise ValueError("vertex cannot neighbour itself")
    nmask = 0
    for v in neighbours:
        nmask |= 1 << v
    out = []
    for gen in t.generators:
        x, z, phase = gen.x, gen.z, gen.phase
        # sqrt(-iX) on qubit a:  Z -> -Y,  Y -> Z  (X fixed)
        if z >> a & 1:
            if x >> a & 1:
                x &= ~(1 << a)  # Y -> Z
            else:
                x |= 1 << a  # Z -> -Y
                phase += 2
        # sqrt(iZ) on each neighbour:  X -> -Y,  Y -> X  (Z fixed)
        flips = x & nmask
        for q in _bits(flips):
            if z >> q & 1:
                z &= ~(1 << q)  # Y -> X
            else:
                z |= 1 << q  # X -> -Y
                phase += 2
        out.append(PauliString(x=x, z=z, phase=phase % 4))
    return StabilizerTableau(n=t.n, generators=out)


def _in_group_with_sign(target: PauliString, t: StabilizerTableau) -> bool:
    """Solve for a product of generators matching target exactly.

    GF(2) elimination on (x|z) picks the unique candidate subset; the
    actual Pauli product then either reproduces the sign or rules the
    target out.
    """
    n = t.n
    rows = [
        (g.x << n | g.z, 1 << i) for i, g in enumerate(t.generators)
    ]
    vec = target.x << n | target.z
    picked = 0
    basis: list[tuple[int, int]] = []
    for row, tag in rows:
        for brow, btag in basis:
            if row ^ brow < row:
                row ^= brow
                tag ^= btag
        if row:
            basis.append((row, tag))
            basis.sort(reverse=True)
    for brow, btag in basis:
        if vec ^ brow < vec:
            vec ^= brow
            picked ^= btag
    if vec:
        return False
    product = PauliString(x=0, z=0, phase=0)
    for i in _bits(picked):
        product = _pauli_mul(product, t.generators[i], n)
    return product == target


def stabilizer_groups_equal(a: StabilizerTableau, b: StabilizerTableau) -> bool:
    """Group equality with signs: each generator of one tableau must be a
    +1 product of the other's generators, both ways."""
    if a.n != b.n:
        raise ValueError("tableaus must have equal qubit count")
    return all(_in_group_with_sign(g, b) for g in a.generators) and all(
        _in_group_with_sign(g, a) for g in b.generators
    )


def verify_lc(g: Graph, a: int) -> bool:
    """True iff the unitary route and the graph route agree at vertex a."""
    if not 0 <= a < g.n:
        raise IndexError(f"vertex {a} out of range for n={g.n}")
    via_unitary = apply_lc_unitary(
        graph_to_tableau(g), a, set(g.neighbours(a))
    )
    via_graph = graph_to_tableau(local_complement(g, a))
    return stabilizer_groups_equal(via_unitary, via_graph)
