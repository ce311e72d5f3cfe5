"""Decision procedures for submodule and module properties.

Every predicate here is decided by scanning the exhaustive submodule
lattice, so the verdicts are proofs by inspection rather than heuristics.
The definitional scans (is_small, is_essential) have closed-form fast
paths (radical containment, socle containment) that hold at finite
length; the test suite asserts agreement on the whole corpus rather than
trusting either side alone.

Convention for the zero module: hollow and uniform raise ZeroModule
(both notions presuppose a nonzero module), while lifting and extending
hold vacuously.  Report assembly maps the ZeroModule error to a false
verdict so reports stay total.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import ShapeMismatch, TooLarge, ZeroModule
from .lattice import DEFAULT_CAP_DIM, DEFAULT_CAP_POINTS, SubmoduleLattice, enumerate_submodules
from .modules import RepModule, Submodule, make_submodule, quotient_module

PROPERTY_NAMES = (
    "small",
    "essential",
    "hollow",
    "uniform",
    "uniserial",
    "indecomposable",
    "lifting",
    "extending",
    "fiep",
    "end_local",
)


@lru_cache(maxsize=None)
def lattice_of(
    M: RepModule,
    cap_dim: int = DEFAULT_CAP_DIM,
    cap_points: int = DEFAULT_CAP_POINTS,
) -> SubmoduleLattice:
    """Memoized lattice: property scans over one module share the work."""
    return enumerate_submodules(M, cap_dim=cap_dim, cap_points=cap_points)


def radical(M: RepModule) -> Submodule:
    """Intersection of the maximal submodules (M itself if there are none)."""
    lat = lattice_of(M)
    return lat.members[radical_index(lat)]


def socle(M: RepModule) -> Submodule:
    """Sum of the minimal submodules (zero if there are none)."""
    lat = lattice_of(M)
    return lat.members[socle_index(lat)]


def radical_index(lat: SubmoduleLattice) -> int:
    maxs = lat.maximal_indices()
    if not maxs:
        return lat.full_index
    b = lat.bits[maxs[0]]
    for m in maxs[1:]:
        b &= lat.bits[m]
    return lat._index_by_bits[b]


def socle_index(lat: SubmoduleLattice) -> int:
    atoms = lat.atom_indices()
    if not atoms:
        return lat.zero_index
    union = 0
    for a in atoms:
        union |= lat.bits[a]
    # the join is the smallest member whose point set contains the union
    best = lat.full_index
    for k in range(len(lat.members)):
        if union & ~lat.bits[k] == 0 and lat.members[k].dim < lat.members[best].dim:
            best = k
    return best


# -- small / essential / coessential ------------------------------------------

def _member_index(lat: SubmoduleLattice, N: Submodule) -> int:
    if N.parent != lat.module:
        raise ShapeMismatch("submodule belongs to a different module")
    return lat.index_of(N)


def is_small(N: Submodule, M: RepModule) -> bool:
    """N + X != M for every proper submodule X, by scanning all X.

    The scan runs top-down so a non-small N fails on an early (large) X.
    """
    lat = lattice_of(M)
    i = _member_index(lat, N)
    for x in reversed(lat.proper_indices()):
        if not lat.sum_is_proper(i, x):
            return False
    return True


def is_small_fast(N: Submodule, M: RepModule) -> bool:
    """Radical-containment fast path; must agree with is_small at finite length."""
    lat = lattice_of(M)
    return lat.leq(_member_index(lat, N), radical_index(lat))


def is_essential(N: Submodule, M: RepModule) -> bool:
    """N meets every nonzero submodule nontrivially, by scanning all of them."""
    lat = lattice_of(M)
    i = _member_index(lat, N)
    for y in range(1, len(lat.members)):
        if lat.bits[i] & lat.bits[y] == 1:  # only the zero vector in common
            return False
    return True


def is_essential_fast(N: Submodule, M: RepModule) -> bool:
    """Socle-containment fast path; must agree with is_essential."""
    lat = lattice_of(M)
    return lat.leq(socle_index(lat), _member_index(lat, N))


@lru_cache(maxsize=None)
def _quotient_context(M: RepModule, K_basis: tuple):
    """Quotient module, projection and quotient lattice for M/K, shared."""
    K = Submodule(M, K_basis)
    Q, pi = quotient_module(M, K)
    return Q, pi, lattice_of(Q)


def is_coessential(K: Submodule, N: Submodule, M: RepModule) -> bool:
    """K is coessential in N (within M): N/K is small in M/K.

    Requires K <= N <= M; decided literally on the quotient M/K.
    """
    if K.parent != M or N.parent != M:
        raise ShapeMismatch("submodules belong to a different module")
    if not N.contains_submodule(K):
        raise ShapeMismatch("coessential test needs K contained in N")
    Q, pi, latQ = _quotient_context(M, K.basis)
    img = make_submodule(Q, tuple(pi.apply(b) for b in N.basis))
    i = latQ.index_of(img)
    for x in reversed(latQ.proper_indices()):
        if not latQ.sum_is_proper(i, x):
            return False
    return True


# -- module-level predicates ---------------------------------------------------

def _small_index(lat: SubmoduleLattice, i: int) -> bool:
    for x in reversed(lat.proper_indices()):
        if not lat.sum_is_proper(i, x):
            return False
    return True


def is_hollow(M: RepModule) -> bool:
    """Nonzero, and every proper submodule is small."""
    if M.dim == 0:
        raise ZeroModule("hollow is undefined for the zero module")
    lat = lattice_of(M)
    return all(_small_index(lat, i) for i in lat.proper_indices())


def is_uniform(M: RepModule) -> bool:
    """Nonzero, and every nonzero submodule is essential.

    Equivalent scan: no two nonzero submodules intersect in zero.
    """
    if M.dim == 0:
        raise ZeroModule("uniform is undefined for the zero module")
    lat = lattice_of(M)
    n = len(lat.members)
    for i in range(1, n):
        for j in range(i + 1, n):
            if lat.bits[i] & lat.bits[j] == 1:
                return False
    return True


def is_uniserial(M: RepModule) -> bool:
    """Submodules totally ordered by inclusion."""
    lat = lattice_of(M)
    n = len(lat.members)
    for i in range(n):
        for j in range(i + 1, n):
            if not lat.leq(i, j) and not lat.leq(j, i):
                return False
    return True


def is_indecomposable(M: RepModule) -> bool:
    """No pair of nonzero submodules with zero intersection spanning M."""
    lat = lattice_of(M)
    n = len(lat.members)
    full_dim = M.dim
    for i in range(1, n):
        di = lat.members[i].dim
        for j in range(i, n):
            if di + lat.members[j].dim == full_dim and lat.bits[i] & lat.bits[j] == 1:
                return False
    return True


# -- lifting / extending --------------------------------------------------------

@dataclass(frozen=True)
class CoverReport:
    """Outcome of a lifting or extending scan.

    ``witness_by_member`` maps each lattice index to the index of the
    direct summand that serves it (first in canonical order); on failure
    the scan stops at the first violating submodule, recorded with its
    basis so the report is meaningful without the lattice at hand.
    """

    property_name: str
    verdict: bool
    witness_by_member: tuple
    violating_index: int | None
    violating_basis: tuple | None

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {
            "property": self.property_name,
            "verdict": self.verdict,
            "witness_by_member": list(self.witness_by_member),
            "violating_index": self.violating_index,
            "violating_basis": [list(r) for r in self.violating_basis]
            if self.violating_basis is not None
            else None,
        }


def is_lifting(M: RepModule) -> CoverReport:
    """Every submodule N contains a direct summand coessential in it.

    For each lattice member N the scan tries the direct summands X <= N in
    canonical order and asks is_coessential(X, N, M) on the literal
    quotient M/X.  A miss for every X is a counterexample to lifting.
    """
    from .summands import summand_indices

    lat = lattice_of(M)
    summands = summand_indices(lat)
    witnesses = []
    for i, N in enumerate(lat.members):
        found = None
        for x in summands:
            if not lat.leq(x, i):
                continue
            if is_coessential(lat.members[x], N, M):
                found = x
                break
        if found is None:
            return CoverReport("lifting", False, tuple(witnesses), i, N.basis)
        witnesses.append(found)
    return CoverReport("lifting", True, tuple(witnesses), None, None)


def is_extending(M: RepModule) -> CoverReport:
    """Every submodule is essential in some direct summand.

    Essentiality of N in a candidate X is scanned inside the lattice:
    every nonzero member contained in X must meet N nontrivially.
    """
    from .summands import summand_indices

    lat = lattice_of(M)
    summands = summand_indices(lat)
    n = len(lat.members)
    witnesses = []
    for i in range(n):
        found = None
        for x in summands:
            if not lat.leq(i, x):
                continue
            ok = True
            for y in range(1, n):
                if lat.leq(y, x) and lat.bits[i] & lat.bits[y] == 1:
                    ok = False
                    break
            if ok:
                found = x
                break
        if found is None:
            return CoverReport("extending", False, tuple(witnesses), i, lat.members[i].basis)
        witnesses.append(found)
    return CoverReport("extending", True, tuple(witnesses), None, None)


# -- aggregate report ------------------------------------------------------------

@dataclass(frozen=True)
class PropertyReport:
    """All property verdicts for one module, with witnesses and errors.

    The submodule-relative properties report their canonical instances:
    ``small`` is the verdict for the radical (the largest small submodule
    at finite length) and ``essential`` for the socle (the smallest
    essential one); the witness entry records which submodule was tested.
    Properties that exceed a cap land in ``errors`` instead of being
    silently dropped.
    """

    subject: str
    verdicts: dict
    witnesses: dict
    errors: dict

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "subject": self.subject,
            "verdicts": {k: self.verdicts[k] for k in PROPERTY_NAMES if k in self.verdicts},
            "witnesses": self.witnesses,
            "errors": self.errors,
        }

    def to_text(self) -> str:
        lines = [f"module: {self.subject}"]
        for name in PROPERTY_NAMES:
            if name in self.verdicts:
                lines.append(f"  {name:15s} {str(self.verdicts[name]).lower()}")
            elif name in self.errors:
                err = self.errors[name]
                lines.append(f"  {name:15s} skipped ({err['error']}: {err['detail']})")
        return "\n".join(lines)


def property_report(
    M: RepModule,
    subject: str = "",
    cap_dim: int = DEFAULT_CAP_DIM,
    cap_hom: int = 1 << 20,
    n_max: int = 3,
    seed: int = 1789,
) -> PropertyReport:
    from .endring import endomorphism_ring, is_local
    from .summands import has_fiep

    verdicts: dict = {}
    witnesses: dict = {}
    errors: dict = {}
    subject = subject or (M.label or f"module-dim-{M.dim}")

    lattice_props = (
        "small",
        "essential",
        "hollow",
        "uniform",
        "uniserial",
        "indecomposable",
        "lifting",
        "extending",
        "fiep",
    )
    try:
        lattice_of(M, cap_dim=cap_dim)
        have_lattice = True
    except TooLarge as exc:
        have_lattice = False
        for name in lattice_props:
            errors[name] = {"error": "TooLarge", "detail": str(exc)}

    if have_lattice:
        rad = radical(M)
        soc = socle(M)
        verdicts["small"] = is_small(rad, M)
        witnesses["small"] = {"submodule": [list(r) for r in rad.basis], "role": "radical"}
        verdicts["essential"] = is_essential(soc, M)
        witnesses["essential"] = {"submodule": [list(r) for r in soc.basis], "role": "socle"}
        for name, fn in (("hollow", is_hollow), ("uniform", is_uniform)):
            try:
                verdicts[name] = fn(M)
            except ZeroModule:
                verdicts[name] = False
                witnesses[name] = {"note": "zero module"}
        verdicts["uniserial"] = is_uniserial(M)
        verdicts["indecomposable"] = is_indecomposable(M)
        for name, fn in (("lifting", is_lifting), ("extending", is_extending)):
            rep = fn(M)
            verdicts[name] = rep.verdict
            witnesses[name] = rep.to_json()
        fiep = has_fiep(M, n_max=n_max, seed=seed)
        verdicts["fiep"] = fiep.verdict
        witnesses["fiep"] = fiep.to_json()

    try:
        ring = endomorphism_ring(M, cap=cap_hom)
        verdicts["end_local"] = is_local(ring)
        witnesses["end_local"] = {"end_dim": len(ring.basis), "end_size": ring.size}
    except TooLarge as exc:
        errors["end_local"] = {"error": "TooLarge", "detail": str(exc)}

    return PropertyReport(subject, verdicts, witnesses, errors)


def report_to_json_text(report: PropertyReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True)
