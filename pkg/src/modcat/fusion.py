"""Fusion rings: sparse integer fusion coefficients, axiom verification,
Frobenius-Perron dimensions, universal grading, and subring extraction.

A fusion ring here is commutative (every category in scope is braided)
with a distinguished unit at index 0 and a dual involution on indices.
Labels are display metadata only; all semantics are by index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

Coeffs = dict[tuple[int, int, int], int]


class InvalidFusionRingError(ValueError):
    """An operation required a ring that passes axiom verification."""


@dataclass
class FusionRing:
    """Sparse fusion-ring data.  Treat instances as immutable.

    coeffs maps (i, j, k) -> N_ij^k; absent triples mean multiplicity 0.
    """

    rank: int
    labels: tuple[str, ...]
    dual: tuple[int, ...]
    coeffs: Coeffs
    _tensor: np.ndarray | None = field(default=None, repr=False, compare=False)
    _rows: list | None = field(default=None, repr=False, compare=False)
    _report: "FusionReport | None" = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.labels) != self.rank or len(self.dual) != self.rank:
            raise ValueError("labels and dual must have length rank")
        if sorted(set(self.dual)) != list(range(self.rank)):
            raise ValueError("dual must be a permutation of the indices")
        for (i, j, k), m in self.coeffs.items():
            if not (0 <= i < self.rank and 0 <= j < self.rank and 0 <= k < self.rank):
                raise ValueError(f"coefficient index out of range: {(i, j, k)}")
            if m <= 0:
                raise ValueError(f"multiplicity must be positive, got N{(i, j, k)}={m}")

    def n(self, i: int, j: int, k: int) -> int:
        return self.coeffs.get((i, j, k), 0)

    def fuse(self, i: int, j: int) -> dict[int, int]:
        """Components of i (x) j as {target index: multiplicity}.

        Returns a shared internal dict; do not mutate.
        """
        if self._rows is None:
            rows: list = [[{} for _ in range(self.rank)] for _ in range(self.rank)]
            for (a, b, k), m in self.coeffs.items():
                rows[a][b][k] = m
            self._rows = rows
        return self._rows[i][j]

    def tensor(self) -> np.ndarray:
        """Dense (rank, rank, rank) coefficient tensor, cached."""
        if self._tensor is None:
            t = np.zeros((self.rank,) * 3)
            for (i, j, k), m in self.coeffs.items():
                t[i, j, k] = m
            self._tensor = t
        return self._tensor

    def fusion_matrix(self, i: int) -> np.ndarray:
        """Matrix of multiplication by object i: entry (j, k) = N_ij^k."""
        return self.tensor()[i]

    def verification(self) -> "FusionReport":
        if self._report is None:
            self._report = verify_fusion_ring(self)
        return self._report

    def require_verified(self) -> None:
        report = self.verification()
        if not report.all_passed:
            bad = ", ".join(c.name for c in report.checks if not c.passed)
            raise InvalidFusionRingError(f"fusion axioms violated: {bad}")

    def with_coefficient(self, i: int, j: int, k: int, m: int) -> "FusionRing":
        """Copy of the ring with one coefficient overridden (0 deletes)."""
        coeffs = dict(self.coeffs)
        if m == 0:
            coeffs.pop((i, j, k), None)
        else:
            coeffs[(i, j, k)] = m
        return FusionRing(self.rank, self.labels, self.dual, coeffs)

    def to_json_dict(self) -> dict:
        triples = sorted([i, j, k, m] for (i, j, k), m in self.coeffs.items())
        return {
            "rank": self.rank,
            "labels": list(self.labels),
            "dual": list(self.dual),
            "N": triples,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FusionRing":
        coeffs = {(i, j, k): m for i, j, k, m in data["N"]}
        return cls(
            rank=int(data["rank"]),
            labels=tuple(str(s) for s in data["labels"]),
            dual=tuple(int(d) for d in data["dual"]),
            coeffs=coeffs,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.labels == other.labels
            and self.dual == other.dual
            and self.coeffs == other.coeffs
        )


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class FusionReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "passed": self.all_passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "witness": list(c.witness) if c.witness else None,
                }
                for c in self.checks
            ],
        }


def _first_mismatch(a: np.ndarray, b: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(a != b)
    if bad.size == 0:
        return None
    return tuple(int(x) for x in bad[0])


def verify_fusion_ring(ring: FusionRing) -> FusionReport:
    """Check the fusion axioms; failures are data (witnesses), not errors.

    Axiom families: unit law, dual/Frobenius law, commutativity, and
    associativity over all index quadruples.  The associativity identity
    sum_m N_ij^m N_mk^l == sum_m N_jk^m N_im^l is evaluated as a dense
    tensor contraction; all entries are small integers, exact in float64.
    """
    t = ring.tensor()
    r = ring.rank
    dual = list(ring.dual)
    eye = np.eye(r)

    unit_w = _first_mismatch(t[0], eye)
    if unit_w is None:
        w = _first_mismatch(t[:, 0, :], eye)
        unit_w = None if w is None else (w[0], 0, w[1])
    else:
        unit_w = (0, unit_w[0], unit_w[1])
    checks = [AxiomCheck("unit", unit_w is None, unit_w)]

    # N_ij^0 = delta_{j, dual(i)}, then the two Frobenius rotations.
    dual_target = np.zeros((r, r))
    for i in range(r):
        dual_target[i, dual[i]] = 1.0
    w = _first_mismatch(t[:, :, 0], dual_target)
    witness = None if w is None else (w[0], w[1], 0)
    if witness is None:
        w = _first_mismatch(t, t[dual].transpose(0, 2, 1))
        witness = w
    if witness is None:
        w = _first_mismatch(t, t[:, dual, :].transpose(2, 1, 0))
        witness = w
    checks.append(AxiomCheck("dual", witness is None, witness))

    w = _first_mismatch(t, t.transpose(1, 0, 2))
    checks.append(AxiomCheck("commutativity", w is None, w))

    lhs = np.tensordot(t, t, axes=([2], [0]))  # (i,j,k,l) = sum_m t[i,j,m] t[m,k,l]
    rhs = np.tensordot(t, t, axes=([2], [1]))  # (j,k,i,l) = sum_m t[j,k,m] t[i,m,l]
    rhs = rhs.transpose(2, 0, 1, 3)
    w = _first_mismatch(lhs, rhs)
    checks.append(AxiomCheck("associativity", w is None, w))

    return FusionReport(tuple(checks))


def fp_dimensions(ring: FusionRing) -> list[float]:
    """Frobenius-Perron dimension of each simple object.

    The FP dimension of object i is the spectral radius of its fusion
    matrix, which for a non-negative integer matrix is its largest real
    eigenvalue.  Requires a ring that passes verification.
    """
    ring.require_verified()
    t = ring.tensor()
    return [float(np.max(np.linalg.eigvals(t[i]).real)) for i in range(ring.rank)]


def global_dimension(ring: FusionRing) -> float:
    """Sum of squared FP dimensions."""
    return sum(d * d for d in fp_dimensions(ring))


@dataclass(frozen=True)
class GradingResult:
    """Universal grading: the finest grade-additive abelian group.

    grades[i] is the residue of object i when the group is cyclic of the
    given order (identity component = 0); for a non-cyclic group the
    grades are opaque component ids.
    """

    order: int
    grades: tuple[int, ...]
    cyclic: bool


def _adjoint_closure(ring: FusionRing) -> set[int]:
    """Smallest fusion-closed set containing all components of i (x) i*."""
    adjoint = {0}
    for i in range(ring.rank):
        adjoint.update(ring.fuse(i, ring.dual[i]))
    frontier = list(adjoint)
    while frontier:
        fresh: set[int] = set()
        for a in adjoint:
            for b in frontier:
                for c in ring.fuse(a, b):
                    if c not in adjoint and c not in fresh:
                        fresh.add(c)
        adjoint.update(fresh)
        frontier = list(fresh)
    return adjoint


def universal_grading(ring: FusionRing) -> GradingResult:
    """Partition the simples into cosets of the adjoint subring.

    Fusion descends to the cosets and makes them an abelian group: the
    finest group grading of the ring.  Reported as cyclic (with residue
    grades) whenever it is.
    """
    ring.require_verified()
    adjoint = _adjoint_closure(ring)

    component = [-1] * ring.rank
    comp_members: list[list[int]] = []
    for i in range(ring.rank):
        if component[i] >= 0:
            continue
        cid = len(comp_members)
        members = [i]
        component[i] = cid
        queue = [i]
        while queue:
            x = queue.pop()
            for a in adjoint:
                for y in ring.fuse(a, x):
                    if component[y] < 0:
                        component[y] = cid
                        members.append(y)
                        queue.append(y)
        comp_members.append(sorted(members))

    order = len(comp_members)

    def comp_mul(a: int, b: int) -> int:
        i, j = comp_members[a][0], comp_members[b][0]
        targets = {component[k] for k in ring.fuse(i, j)}
        if len(targets) != 1:
            raise InvalidFusionRingError(
                f"fusion is not grade-additive on components {a}, {b}"
            )
        return targets.pop()

    identity = component[0]
    # Cyclic iff some component's powers sweep every component.
    for gen in range(order):
        residue: dict[int, int] = {identity: 0}
        cur = identity
        for step in range(1, order):
            cur = comp_mul(cur, gen)
            if cur in residue:
                break
            residue[cur] = step
        if len(residue) == order:
            grades = tuple(residue[component[i]] for i in range(ring.rank))
            return GradingResult(order=order, grades=grades, cyclic=True)
    return GradingResult(
        order=order, grades=tuple(component[i] for i in range(ring.rank)), cyclic=False
    )


def subring_generated(ring: FusionRing, generators: set[int]) -> FusionRing:
    """Smallest fusion- and dual-closed subring containing the generators.

    Simples keep their relative order and labels; coefficients are the
    restriction of the parent's.
    """
    ring.require_verified()
    if not generators:
        raise ValueError("need at least one generator")
    closed = {0} | {ring.dual[g] for g in generators} | set(generators)
    frontier = list(closed)
    while frontier:
        fresh: set[int] = set()
        for a in closed:
            for b in frontier:
                for c in ring.fuse(a, b):
                    if c not in closed and c not in fresh:
                        fresh.add(c)
                        fresh.add(ring.dual[c])
        closed.update(fresh)
        frontier = list(fresh)
    kept = sorted(closed)
    index = {old: new for new, old in enumerate(kept)}
    coeffs = {
        (index[i], index[j], index[k]): m
        for (i, j, k), m in ring.coeffs.items()
        if i in closed and j in closed and k in closed
    }
    return FusionRing(
        rank=len(kept),
        labels=tuple(ring.labels[i] for i in kept),
        dual=tuple(index[ring.dual[i]] for i in kept),
        coeffs=coeffs,
    )


def pointed_cyclic_ring(n: int) -> FusionRing:
    """Group ring of Z_n: n invertible simples, [i] (x) [j] = [i+j]."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    coeffs = {(i, j, (i + j) % n): 1 for i in range(n) for j in range(n)}
    return FusionRing(
        rank=n,
        labels=tuple(f"[{i}]" for i in range(n)),
        dual=tuple((n - i) % n for i in range(n)),
        coeffs=coeffs,
    )


def dihedral_fusion(n: int) -> FusionRing:
    """Character ring of the dihedral group of order 2n, n odd >= 3.

    Objects: two invertibles 1, Z and (n-1)/2 two-dimensional objects
    Y_i with Y_i (x) Y_j = Y_min(i+j, n-i-j) + Y_|i-j|, reading Y_0 as
    1 + Z.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    half = (n - 1) // 2
    rank = 2 + half

    def y(i: int) -> int:
        return 1 + i  # Y_i at index 1 + i, so Z = index 1, Y_1 = index 2

    coeffs: Coeffs = {}

    def add(i: int, j: int, k: int) -> None:
        coeffs[(i, j, k)] = coeffs.get((i, j, k), 0) + 1

    for i in range(rank):
        add(0, i, i)
        if i != 0:
            add(i, 0, i)
    add(1, 1, 0)
    for i in range(1, half + 1):
        add(1, y(i), y(i))
        add(y(i), 1, y(i))
    for i in range(1, half + 1):
        for j in range(1, half + 1):
            for target in (min(i + j, n - i - j), abs(i - j)):
                if target == 0:
                    add(y(i), y(j), 0)
                    add(y(i), y(j), 1)
                else:
                    add(y(i), y(j), y(target))

    labels = ("1", "Z") + tuple(f"Y{i}" for i in range(1, half + 1))
    return FusionRing(rank=rank, labels=labels, dual=tuple(range(rank)), coeffs=coeffs)
