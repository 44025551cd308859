"""Concrete unitary irreps of the built-in groups.

Symmetric groups use Young's orthogonal form, generated from the adjacent
transpositions; S(3) additionally carries the complex epsilon basis for its
two-dimensional irrep, which is the basis every worked channel example uses.
The quaternion irreps are written down directly.

The registry order per group is fixed (identity first) and drives the row and
column ordering of the eigenvalue linear system downstream:

    s3: id, sgn, (2,1)          s4: id, (3,1), (2,2), (2,1,1), sgn
    q8: id, t1, t2, t3, t4      s5: id, (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1), sgn
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InternalConsistencyError, NotSimplyReducibleError
from .groups import FiniteGroup
from .tolerances import eq_tol


def snap(values: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Round real and imaginary parts to the nearest integer where within tol.

    Character values of every built-in group are integers; snapping removes
    the float noise of root-of-unity sums so equality tests can be exact.
    """
    tol = eq_tol() if tol is None else tol
    values = np.asarray(values, dtype=complex)
    re, im = values.real.copy(), values.imag.copy()
    re_round, im_round = np.round(re), np.round(im)
    re = np.where(np.abs(re - re_round) <= tol, re_round, re)
    im = np.where(np.abs(im - im_round) <= tol, im_round, im)
    return re + 1j * im


@dataclass(frozen=True)
class Irrep:
    """A unitary matrix representation g -> matrices[g] with a display label."""

    group: FiniteGroup
    label: str
    matrices: np.ndarray  # (|G|, dim, dim) complex

    def __post_init__(self):
        mats = np.ascontiguousarray(self.matrices, dtype=complex)
        mats.flags.writeable = False
        object.__setattr__(self, "matrices", mats)

    @property
    def dim(self) -> int:
        return self.matrices.shape[1]

    def matrix(self, g: int) -> np.ndarray:
        return self.matrices[g]

    def character(self) -> np.ndarray:
        """Per-element character, snapped to integers where exact."""
        return snap(np.einsum("gii->g", self.matrices))

    def character_by_class(self) -> np.ndarray:
        """One character value per conjugacy class, in class order."""
        chi = self.character()
        return np.array([chi[cls[0]] for cls in self.group.classes])

    # --- verification -----------------------------------------------------

    def unitarity_defect(self) -> float:
        eye = np.eye(self.dim)
        prod = np.einsum("gij,gkj->gik", self.matrices, self.matrices.conj())
        return float(np.max(np.abs(prod - eye)))

    def homomorphism_defect(self) -> float:
        """max over (g, h) of |phi(g) phi(h) - phi(gh)|, entrywise."""
        mats = self.matrices
        products = np.einsum("gij,hjk->ghik", mats, mats)
        composed = mats[self.group.cayley]
        return float(np.max(np.abs(products - composed)))

    def irreducibility_index(self) -> float:
        """(1/|G|) sum_g |chi(g)|^2; equals 1 exactly for an irrep."""
        chi = self.character()
        return float(np.sum(np.abs(chi) ** 2).real / self.group.order)

    def __repr__(self) -> str:
        return f"Irrep({self.group.name}:{self.label}, dim={self.dim})"


def _irrep_from_generators(group: FiniteGroup, label: str,
                           images: dict[int, np.ndarray]) -> Irrep:
    """Extend generator images to the whole group along the Cayley graph."""
    dim = next(iter(images.values())).shape[0]
    mats = np.full((group.order, dim, dim), np.nan, dtype=complex)
    mats[group.identity] = np.eye(dim)
    known = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s, img in images.items():
                h = group.multiply(s, g)
                if h not in known:
                    mats[h] = img @ mats[g]
                    known.add(h)
                    nxt.append(h)
        frontier = nxt
    if len(known) != group.order:
        raise DomainError("generator images do not generate the group")
    return Irrep(group, label, mats)


# --- symmetric groups: Young's orthogonal form ------------------------------


def standard_tableaux(shape: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of the given shape, as tuples of rows.

    Ordered by ascending row-reading word; this ordering reproduces the
    conventional generator matrices for shape (3,1).
    """
    n = sum(shape)
    rows = len(shape)
    results = []

    def place(value: int, filled: list[list[int]], counts: list[int]):
        if value > n:
            results.append(tuple(tuple(r) for r in filled))
            return
        for r in range(rows):
            if counts[r] < shape[r] and (r == 0 or counts[r] < counts[r - 1]):
                filled[r].append(value)
                counts[r] += 1
                place(value + 1, filled, counts)
                filled[r].pop()
                counts[r] -= 1

    place(1, [[] for _ in range(rows)], [0] * rows)
    results.sort(key=lambda t: tuple(itertools.chain.from_iterable(t)))
    return results


def _validate_partition(partition: tuple[int, ...], n: int) -> tuple[int, ...]:
    partition = tuple(int(p) for p in partition)
    if (sum(partition) != n or any(p <= 0 for p in partition)
            or any(partition[i] < partition[i + 1] for i in range(len(partition) - 1))):
        raise DomainError(f"{partition} is not a partition of {n}")
    return partition


def yor_generator_matrices(shape: tuple[int, ...]) -> dict[int, np.ndarray]:
    """Young-orthogonal matrices for the adjacent transpositions (k, k+1).

    Keys are k = 1..n-1 (one-based values swapped).  Diagonal entries are the
    inverse axial distances 1/d with d = content(k+1) - content(k); a tableau
    couples to its k,k+1-swap (when standard) with weight sqrt(1 - 1/d^2) > 0.
    """
    tableaux = standard_tableaux(shape)
    index = {t: m for m, t in enumerate(tableaux)}
    n = sum(shape)
    dim = len(tableaux)
    gens = {}
    for k in range(1, n):
        mat = np.zeros((dim, dim))
        for m, tab in enumerate(tableaux):
            pos = {v: (r, c) for r, row in enumerate(tab) for c, v in enumerate(row)}
            (r1, c1), (r2, c2) = pos[k], pos[k + 1]
            d = (c2 - r2) - (c1 - r1)
            mat[m, m] = 1.0 / d
            if abs(d) >= 2:
                swapped = tuple(tuple(k + 1 if v == k else k if v == k + 1 else v
                                       for v in row) for row in tab)
                mat[m, index[swapped]] = np.sqrt(1.0 - 1.0 / d**2)
        gens[k] = mat
    return gens


def _adjacent_transposition_index(group: FiniteGroup, k: int) -> int:
    """Element index of (k, k+1) in a symmetric group (k one-based)."""
    n = len(group.permutations[0])
    perm = list(range(n))
    perm[k - 1], perm[k] = perm[k], perm[k - 1]
    return group.permutations.index(tuple(perm))


def _partition_label(partition: tuple[int, ...], n: int) -> str:
    if partition == (n,):
        return "id"
    if partition == (1,) * n:
        return "sgn"
    return "(" + ",".join(str(p) for p in partition) + ")"


def young_orthogonal_irrep(group: FiniteGroup, partition: tuple[int, ...]) -> Irrep:
    """The real orthogonal irrep of S(n) for an integer partition of n."""
    if not hasattr(group, "permutations"):
        raise DomainError("Young irreps are defined for symmetric groups only")
    n = len(group.permutations[0])
    partition = _validate_partition(partition, n)
    label = _partition_label(partition, n)
    if partition == (n,):
        return Irrep(group, label, np.ones((group.order, 1, 1)))
    if partition == (1,) * n:
        signs = [_perm_sign(p) for p in group.permutations]
        return Irrep(group, label, np.array(signs, dtype=complex).reshape(-1, 1, 1))
    gens = yor_generator_matrices(partition)
    images = {_adjacent_transposition_index(group, k): m for k, m in gens.items()}
    return _irrep_from_generators(group, label, images)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def s3_epsilon_irrep(group: FiniteGroup) -> Irrep:
    """The two-dimensional irrep of S(3) in the epsilon basis.

    Generated by phi(12) = [[0,1],[1,0]] and phi(23) = [[0,w^2],[w,0]] with
    w = exp(2 pi i / 3).
    """
    if group.name != "s3":
        raise DomainError("epsilon irrep is specific to s3")
    w = np.exp(2j * np.pi / 3)
    g12 = group.permutations.index((1, 0, 2))
    g23 = group.permutations.index((0, 2, 1))
    images = {
        g12: np.array([[0, 1], [1, 0]], dtype=complex),
        g23: np.array([[0, w**2], [w, 0]], dtype=complex),
    }
    return _irrep_from_generators(group, "(2,1)", images)


# --- quaternion group --------------------------------------------------------

_Q_BASE = {
    0: np.eye(2, dtype=complex),
    1: np.array([[1j, 0], [0, -1j]]),
    2: np.array([[0, 1], [-1, 0]], dtype=complex),
    3: np.array([[0, 1j], [1j, 0]]),
}

# 1-dim quaternion irreps: axes on which the character is -1.
_Q_SIGNS = {"t1": {1, 3}, "t2": {2, 3}, "t3": {1, 2}}


def quaternion_irrep(group: FiniteGroup, label: str) -> Irrep:
    """One of the five quaternion irreps: id, t1, t2, t3 (1-dim) or t4 (2-dim)."""
    if group.name != "q8":
        raise DomainError("quaternion irreps are specific to q8")
    units = group.quaternion_units
    if label == "id":
        return Irrep(group, label, np.ones((8, 1, 1)))
    if label in _Q_SIGNS:
        neg = _Q_SIGNS[label]
        vals = [(-1.0 if axis in neg else 1.0) for _, axis in units]
        return Irrep(group, label, np.array(vals, dtype=complex).reshape(-1, 1, 1))
    if label == "t4":
        mats = np.array([sign * _Q_BASE[axis] for sign, axis in units])
        return Irrep(group, label, mats)
    raise DomainError(f"unknown quaternion irrep {label!r}")


# --- registry ----------------------------------------------------------------

_SYMMETRIC_REGISTRY_PARTITIONS = {
    "s2": [(2,), (1, 1)],
    "s3": [(3,), (1, 1, 1), (2, 1)],
    "s4": [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)],
    "s5": [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)],
}

#: CSV/CLI-safe short names, also accepted as input aliases.
IRREP_SLUGS = {
    "s2": {"id": "id", "sgn": "sgn"},
    "s3": {"id": "id", "sgn": "sgn", "(2,1)": "lambda"},
    "s4": {"id": "id", "sgn": "sgn", "(3,1)": "lambda1", "(2,2)": "lambda2",
           "(2,1,1)": "lambda3"},
    "s5": {"id": "id", "sgn": "sgn", "(4,1)": "p41", "(3,2)": "p32",
           "(3,1,1)": "p311", "(2,2,1)": "p221", "(2,1,1,1)": "p2111"},
    "q8": {"id": "id", "t1": "t1", "t2": "t2", "t3": "t3", "t4": "t4"},
}


def irrep_registry(group: FiniteGroup) -> tuple[Irrep, ...]:
    """All inequivalent irreps of a built-in group, identity first.

    Cached on the group instance; there are as many irreps as conjugacy
    classes for every built-in group.
    """
    cached = getattr(group, "_irrep_registry", None)
    if cached is not None:
        return cached
    if group.name == "q8":
        irreps = tuple(quaternion_irrep(group, lbl) for lbl in ("id", "t1", "t2", "t3", "t4"))
    elif group.name in _SYMMETRIC_REGISTRY_PARTITIONS:
        irreps = []
        for part in _SYMMETRIC_REGISTRY_PARTITIONS[group.name]:
            if group.name == "s3" and part == (2, 1):
                irreps.append(s3_epsilon_irrep(group))
            else:
                irreps.append(young_orthogonal_irrep(group, part))
        irreps = tuple(irreps)
    else:
        raise DomainError(f"no irrep registry for group {group.name!r}")
    if len(irreps) != len(group.classes):
        raise InternalConsistencyError("irrep count does not match class count")
    group._irrep_registry = irreps
    return irreps


def resolve_irrep_label(group: FiniteGroup, text: str) -> str:
    """Map user input (canonical label, slug, or bare partition) to a canonical label."""
    slugs = IRREP_SLUGS[group.name]
    text = text.strip()
    for canonical, slug in slugs.items():
        if text == canonical or text == slug:
            return canonical
    cleaned = text.replace("(", "").replace(")", "").replace(" ", "")
    candidate = "(" + cleaned + ")"
    if candidate in slugs:
        return candidate
    raise DomainError(f"unknown irrep {text!r} for group {group.name};"
                      f" known: {sorted(slugs) + sorted(slugs.values())}")


def get_irrep(group: FiniteGroup, label: str) -> Irrep:
    canonical = resolve_irrep_label(group, label)
    for irr in irrep_registry(group):
        if irr.label == canonical:
            return irr
    raise DomainError(f"irrep {label!r} not registered for {group.name}")


def irrep_slug(group: FiniteGroup, label: str) -> str:
    return IRREP_SLUGS[group.name][resolve_irrep_label(group, label)]


# --- character table ---------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    """Characters of all registry irreps, one row per irrep, one column per class."""

    group: FiniteGroup
    labels: tuple[str, ...]
    values: np.ndarray  # (n_irreps, n_classes), snapped

    @classmethod
    def build(cls, group: FiniteGroup) -> "CharacterTable":
        irreps = irrep_registry(group)
        rows = np.array([irr.character_by_class() for irr in irreps])
        return cls(group, tuple(irr.label for irr in irreps), snap(rows))


# --- multiplicities and the simple-reducibility gate -------------------------


@dataclass(frozen=True)
class ThetaSet:
    """Irreps occurring (each exactly once) in U (x) conj(U), identity first."""

    labels: tuple[str, ...]
    irreps: tuple[Irrep, ...] = field(repr=False)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(irr.dim for irr in self.irreps)

    def __contains__(self, label: str) -> bool:
        return label in self.labels

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)


def _round_to_int(value: float, what: str) -> int:
    rounded = int(np.round(value))
    if abs(value - rounded) > eq_tol():
        raise InternalConsistencyError(f"{what} = {value} is not an integer")
    return rounded


def multiplicity(alpha: Irrep, U: Irrep) -> int:
    """Multiplicity of alpha in U (x) conj(U): (1/|G|) sum_g chi_a(g^-1) |chi_U(g)|^2."""
    if alpha.group is not U.group:
        raise DomainError("irreps must live on the same group instance")
    group = U.group
    chi_a = alpha.character()
    chi_ad = np.abs(U.character()) ** 2
    total = np.sum(chi_a[group.inverses] * chi_ad) / group.order
    if abs(total.imag) > eq_tol():
        raise InternalConsistencyError(f"multiplicity has imaginary part {total.imag}")
    return _round_to_int(total.real, f"multiplicity of {alpha.label} in Ad({U.label})")


def multiplicity_vector(U: Irrep) -> dict[str, int]:
    """Multiplicities of every registry irrep in U (x) conj(U)."""
    return {irr.label: multiplicity(irr, U) for irr in irrep_registry(U.group)}


def decompose_adjoint(U: Irrep) -> ThetaSet:
    """The multiplicity-free decomposition of U (x) conj(U).

    Raises NotSimplyReducibleError as soon as any irrep occurs with
    multiplicity >= 2; this is the standing assumption behind every channel
    construction in this library.
    """
    registry = irrep_registry(U.group)
    mults = multiplicity_vector(U)
    offenders = {lbl: m for lbl, m in mults.items() if m >= 2}
    if offenders:
        raise NotSimplyReducibleError(
            f"U (x) conj(U) for {U.group.name}:{U.label} is not multiplicity-free: {offenders}")
    members = [irr for irr in registry if mults[irr.label] == 1]
    if members[0].label != "id" or mults["id"] != 1:
        raise InternalConsistencyError("identity irrep missing from the decomposition")
    theta = ThetaSet(tuple(irr.label for irr in members), tuple(members))
    if sum(theta.dims) != U.dim**2:
        raise InternalConsistencyError(
            f"dimension mismatch: sum of Theta dims {sum(theta.dims)} != {U.dim**2}")
    return theta


def commutant_dimension(U: Irrep) -> int:
    """dim of the commutant of U (x) conj(U): the fourth-moment character sum."""
    chi = U.character()
    dim = _round_to_int(float(np.sum(np.abs(chi) ** 4).real / U.group.order),
                        "commutant dimension")
    mult_sq = sum(m * m for m in multiplicity_vector(U).values())
    if dim != mult_sq:
        raise InternalConsistencyError(
            f"fourth-moment dimension {dim} != sum of squared multiplicities {mult_sq}")
    return dim
