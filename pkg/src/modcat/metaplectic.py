"""Metaplectic fusion rings SO(N)_2 (N odd), their Z_2 boson condensation
at the Grothendieck-ring level, Tambara-Yamagami recognition, cyclic group
reconstruction on the condensed identity sector, and class enumeration.

Condensation here is pure fusion/dimension bookkeeping: free orbits of the
condensing boson merge, fixed simples split into halves, and the total
squared dimension halves.  No associator data is touched.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import product
from math import gcd

from .cyclic import canonical_invariant, classify
from .fusion import Coeffs, FusionRing, fp_dimensions, universal_grading
from .numthy import distinct_primes

DIM_TOL = 1e-9


class CondensationInputError(ValueError):
    """The condensing object does not satisfy the required fusion shape."""


class GroupReconstructionError(ValueError):
    """Condensed identity-sector fusion is inconsistent with a cyclic group."""


@lru_cache(maxsize=None)
def so_n2_fusion(n: int) -> FusionRing:
    """The SO(N)_2 fusion ring for odd N >= 3 (rank (N+7)/2).

    Simples: 1, Z, X1, X2, Y_1..Y_{(N-1)/2}, all self-dual.  Z swaps the
    two X's and fixes every Y; the X's square to 1 plus all Y's and mix
    to Z plus all Y's; Y_i (x) Y_j = Y_min(i+j, N-i-j) + Y_|i-j| with
    Y_i^2 = 1 + Z + Y_min(2i, N-2i).  Cached; treat the result as
    immutable.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd N >= 3, got {n}")
    half = (n - 1) // 2
    rank = 4 + half
    x1, x2 = 2, 3

    def y(i: int) -> int:
        return 3 + i

    coeffs: Coeffs = {}

    def add(i: int, j: int, k: int) -> None:
        coeffs[(i, j, k)] = coeffs.get((i, j, k), 0) + 1

    def add_sym(i: int, j: int, k: int) -> None:
        add(i, j, k)
        if i != j:
            add(j, i, k)

    for i in range(rank):
        add(0, i, i)
        if i != 0:
            add(i, 0, i)
    add(1, 1, 0)
    add_sym(1, x1, x2)
    add_sym(1, x2, x1)
    for i in range(1, half + 1):
        add_sym(1, y(i), y(i))
    for x in (x1, x2):
        add(x, x, 0)
        for i in range(1, half + 1):
            add(x, x, y(i))
    add_sym(x1, x2, 1)
    for i in range(1, half + 1):
        add_sym(x1, x2, y(i))
    for x in (x1, x2):
        for i in range(1, half + 1):
            add_sym(x, y(i), x1)
            add_sym(x, y(i), x2)
    for i in range(1, half + 1):
        for j in range(1, half + 1):
            if i == j:
                add(y(i), y(i), 0)
                add(y(i), y(i), 1)
                add(y(i), y(i), y(min(2 * i, n - 2 * i)))
            else:
                add(y(i), y(j), y(min(i + j, n - i - j)))
                add(y(i), y(j), y(abs(i - j)))

    labels = ("1", "Z", "X1", "X2") + tuple(f"Y{i}" for i in range(1, half + 1))
    return FusionRing(rank=rank, labels=labels, dual=tuple(range(rank)), coeffs=coeffs)


@dataclass(frozen=True)
class CondensedObject:
    """One simple object of the condensed category.

    sources are parent-ring indices (two for a merged free orbit); split
    distinguishes the two children of a fixed simple.  group_elem is filled
    by reconstruct_group on the identity sector.
    """

    sources: tuple[int, ...]
    source_labels: tuple[str, ...]
    split: int | None
    dim: float
    group_elem: int | None = None

    @property
    def name(self) -> str:
        if self.split is not None:
            return f"{self.source_labels[0]}^{self.split}"
        return "+".join(self.source_labels)

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "group_elem": self.group_elem, "source": self.name}


@dataclass(frozen=True)
class CondensedData:
    """Sector decomposition after condensing an invertible boson z.

    d0 is the identity sector (trivial residual grade), d1 everything
    else.  Keeps a handle on the parent ring and the z-action for the
    group-law reconstruction."""

    d0: tuple[CondensedObject, ...]
    d1: tuple[CondensedObject, ...]
    ring: FusionRing | None = None
    z: int | None = None
    warnings: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "D0": [obj.to_json_dict() for obj in self.d0],
            "D1": [obj.to_json_dict() for obj in self.d1],
        }

    def total_squared_dim(self) -> float:
        return sum(o.dim**2 for o in self.d0 + self.d1)


def _z_action(ring: FusionRing, z: int) -> list[int]:
    """The permutation i -> z (x) i, validating that z is an invertible
    involution and that every orbit has size 1 or 2."""
    if ring.n(z, z, 0) != 1 or ring.fuse(z, z) != {0: 1}:
        raise CondensationInputError(
            f"object {ring.labels[z]} is not an involution: z (x) z != 1"
        )
    sigma = []
    for i in range(ring.rank):
        targets = ring.fuse(z, i)
        if len(targets) != 1 or set(targets.values()) != {1}:
            raise CondensationInputError(
                f"object {ring.labels[z]} is not invertible: z (x) "
                f"{ring.labels[i]} is not simple"
            )
        sigma.append(next(iter(targets)))
    for i, j in enumerate(sigma):
        if sigma[j] != i:
            raise CondensationInputError(
                f"orbit structure violated at {ring.labels[i]}: the z-action "
                "does not square to the identity"
            )
    return sigma


def condense_z2(ring: FusionRing, z: int) -> CondensedData:
    """Condense the invertible involution z at the fusion-ring level.

    Free z-orbits {X, zX} merge into one object of dimension d_X; fixed
    simples split into two halves of dimension d_X / 2.  Sectors come
    from the universal grading of the ring with the grade of z quotiented
    out (identity sector = trivial residual grade).  For SO(N)_2 and
    z = Z this produces N invertibles in the identity sector and a single
    sqrt(N)-dimensional object in the other.
    """
    ring.require_verified()
    if z == 0:
        raise CondensationInputError("cannot condense the unit object")
    sigma = _z_action(ring, z)
    dims = fp_dimensions(ring)
    grading = universal_grading(ring)
    if not grading.cyclic:
        raise CondensationInputError(
            "universal grading is not cyclic; sector assignment unsupported"
        )
    # Condensation kills the grade of z: sectors live in Z_order / <grade(z)>.
    residual = gcd(grading.grades[z], grading.order)

    def sector(i: int) -> int:
        return 0 if grading.grades[i] % residual == 0 else 1

    warnings: list[str] = []
    d0: list[CondensedObject] = []
    d1: list[CondensedObject] = []
    for i in range(ring.rank):
        j = sigma[i]
        if j < i:
            continue  # orbit already handled from its smaller member
        if j == i:
            d = dims[i]
            if abs(d - round(d)) < 1e-6 and round(d) % 2 == 1:
                warnings.append(
                    f"fixed simple {ring.labels[i]} has odd dimension {d:g}; "
                    "its halves are non-integral"
                )
            children = [
                CondensedObject(
                    sources=(i,),
                    source_labels=(ring.labels[i],),
                    split=s,
                    dim=d / 2,
                )
                for s in (1, 2)
            ]
        else:
            children = [
                CondensedObject(
                    sources=(i, j),
                    source_labels=(ring.labels[i], ring.labels[j]),
                    split=None,
                    dim=dims[i],
                )
            ]
        (d0 if sector(i) == 0 else d1).extend(children)
    return CondensedData(
        d0=tuple(d0), d1=tuple(d1), ring=ring, z=z, warnings=tuple(warnings)
    )


@dataclass(frozen=True)
class ReconstructedGroup:
    """Group law recovered on the condensed identity sector."""

    order: int
    cyclic: bool
    assignment: dict  # condensed-object name -> residue in Z_order
    data: CondensedData  # identity-sector objects with group_elem filled


def _split_pairs(data: CondensedData) -> dict[int, tuple[int, int]]:
    """Map source index of each fixed simple in D0 to its pair of positions."""
    pairs: dict[int, list[int]] = {}
    for pos, obj in enumerate(data.d0):
        if obj.split is not None:
            pairs.setdefault(obj.sources[0], []).append(pos)
    for src, positions in pairs.items():
        if len(positions) != 2:
            raise GroupReconstructionError(
                f"split source index {src} has {len(positions)} children, need 2"
            )
    return {src: (p[0], p[1]) for src, p in pairs.items()}


def reconstruct_group(data: CondensedData) -> ReconstructedGroup:
    """Recover the cyclic group law on the identity sector of a condensed
    SO(N)_2 ring.

    The lowest-index split source plays the role of the generator pair:
    its children get residues +1 and -1, and fusing with it walks the
    remaining split sources in a chain, residues i and N - i.  Every
    lifted fusion rule is then checked: the residue multiset of the
    children of Y_i (x) Y_j must be {+-(i+j), +-(i-j)} mod N.  Fails
    (defensively) with a witnessing pair on inconsistent input.
    """
    ring, z = data.ring, data.z
    if ring is None or z is None:
        raise GroupReconstructionError("condensed data lost its parent ring")
    order = len(data.d0)
    unit_positions = [p for p, o in enumerate(data.d0) if 0 in o.sources]
    if len(unit_positions) != 1 or data.d1 == ():
        raise GroupReconstructionError(
            "identity sector does not have the condensed-SO(N)_2 shape"
        )
    pairs = _split_pairs(data)
    if len(pairs) * 2 + 1 != order:
        raise GroupReconstructionError(
            "identity sector must be one merged unit plus split pairs"
        )

    # Chain the split sources by repeated fusion with the first one.
    sources = sorted(pairs)
    y_index: dict[int, int] = {}
    if sources:
        first = sources[0]
        y_index[first] = 1
        cur = first
        for step in range(2, len(sources) + 1):
            comps = [c for c in ring.fuse(first, cur) if c in pairs and c not in y_index]
            if len(comps) != 1:
                raise GroupReconstructionError(
                    f"cannot extend generator chain past step {step}: "
                    f"witness pair ({ring.labels[first]}, {ring.labels[cur]})"
                )
            cur = comps[0]
            y_index[cur] = step
    if sorted(y_index.values()) != list(range(1, len(sources) + 1)):
        raise GroupReconstructionError("generator chain did not cover all splits")

    residue_of_pos: dict[int, int] = {unit_positions[0]: 0}
    for src, (pos1, pos2) in pairs.items():
        residue_of_pos[pos1] = y_index[src] % order
        residue_of_pos[pos2] = (order - y_index[src]) % order

    # Consistency of every lifted fusion rule.
    def child_residues(source: int) -> list[int]:
        if source in (0, z):
            return [0]
        if source not in pairs:
            raise GroupReconstructionError(
                f"component {ring.labels[source]} is not in the identity sector"
            )
        p1, p2 = pairs[source]
        return [residue_of_pos[p1], residue_of_pos[p2]]

    for a in sources:
        for b in sources:
            lifted = sorted(
                (ra + rb) % order
                for ra in child_residues(a)
                for rb in child_residues(b)
            )
            condensed = sorted(
                r
                for target, mult in ring.fuse(a, b).items()
                for r in child_residues(target) * mult
            )
            if lifted != condensed:
                raise GroupReconstructionError(
                    f"group law inconsistent: witness pair "
                    f"({ring.labels[a]}, {ring.labels[b]})"
                )

    cyclic = sorted(residue_of_pos.values()) == list(range(order))
    if not cyclic:  # pragma: no cover - chain construction forces this
        raise GroupReconstructionError("residues do not exhaust Z_N")
    filled = tuple(
        replace(obj, group_elem=residue_of_pos[pos])
        for pos, obj in enumerate(data.d0)
    )
    new_data = replace(data, d0=filled)
    assignment = {obj.name: residue_of_pos[pos] for pos, obj in enumerate(data.d0)}
    return ReconstructedGroup(
        order=order, cyclic=True, assignment=assignment, data=new_data
    )


@dataclass(frozen=True)
class TYReport:
    """Tambara-Yamagami recognition: a pointed identity sector forming a
    group A plus a single object m with d_m^2 = |A|."""

    is_ty: bool
    group_order: int | None = None
    cyclic: bool | None = None
    reason: str | None = None


def is_tambara_yamagami(data: CondensedData) -> TYReport:
    """Decide whether condensed data has Tambara-Yamagami shape."""
    if any(abs(o.dim - 1.0) > DIM_TOL for o in data.d0):
        return TYReport(False, reason="identity sector is not pointed")
    if len(data.d1) != 1:
        return TYReport(
            False, reason=f"non-trivial sector has {len(data.d1)} objects, need 1"
        )
    try:
        group = reconstruct_group(data)
    except GroupReconstructionError as exc:
        return TYReport(False, reason=str(exc))
    m = data.d1[0]
    if abs(m.dim**2 - group.order) > DIM_TOL:
        return TYReport(
            False,
            group_order=group.order,
            cyclic=group.cyclic,
            reason="d_m^2 != |A|: fusion m (x) m cannot be the sum of all a in A",
        )
    return TYReport(True, group_order=group.order, cyclic=group.cyclic)


@dataclass(frozen=True)
class MetaplecticDescriptor:
    """Invariant labelling one metaplectic class: a Jacobi sign for every
    prime of N plus one binary gauging choice (an opaque descriptor bit)."""

    n: int
    signs: tuple[tuple[int, int], ...]  # ((prime, eps), ...) ascending primes
    h3: int

    def to_json_dict(self) -> dict:
        return {
            "N": self.n,
            "signs": [{"p": p, "eps": e} for p, e in self.signs],
            "h3": self.h3,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MetaplecticDescriptor":
        return cls(
            n=int(data["N"]),
            signs=tuple((int(s["p"]), int(s["eps"])) for s in data["signs"]),
            h3=int(data["h3"]),
        )


def count_metaplectic(n: int) -> int:
    """Number of inequivalent metaplectic modular categories with SO(N)_2
    fusion rules: 2^(s+1), s the number of distinct primes of N."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd N >= 3, got {n}")
    return 2 ** (len(distinct_primes(n)) + 1)


def enumerate_metaplectic(n: int) -> list[MetaplecticDescriptor]:
    """All 2^(s+1) metaplectic class descriptors for modulus N.

    Every sign vector over the primes of N, crossed with the binary
    gauging bit; each sign vector is checked to be realized by exactly
    one representative of the cyclic classification of Z_N.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd N >= 3, got {n}")
    primes = distinct_primes(n)
    realized = {
        tuple(sign for _, sign in canonical_invariant(n, rep).factors)
        for rep in classify(n)
    }
    descriptors = []
    for signs in product((1, -1), repeat=len(primes)):
        if signs not in realized:  # pragma: no cover - classification is onto
            raise RuntimeError(f"sign vector {signs} not realized by any class")
        for h3 in (0, 1):
            descriptors.append(
                MetaplecticDescriptor(
                    n=n, signs=tuple(zip(primes, signs)), h3=h3
                )
            )
    return descriptors
