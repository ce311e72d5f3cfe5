"""Exhaustive submodule lattices for small modules.

Every submodule over a finite ring is a sum of cyclic submodules, so the
enumeration seeds with all cyclic closures and then closes the member set
under member + cyclic sums; a single worklist pass reaches everything.

Each member carries a bitset of the point indices it contains, which makes
inclusion a subset test and intersection a bitwise AND plus one dictionary
lookup.  The lattice order is by (dimension, basis), so indices are stable
across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import TooLarge
from .linalg import rref, span_point_bits
from .modules import RepModule, Submodule, submodule_generated

DEFAULT_CAP_DIM = 8
DEFAULT_CAP_POINTS = 1 << 16


@dataclass(frozen=True)
class SubmoduleLattice:
    module: RepModule
    members: tuple  # Submodule, sorted by (dim, basis); [0] is zero, [-1] is full
    bits: tuple  # point-index bitsets, aligned with members
    hasse_edges: tuple  # (i, j) with member i covered by member j
    _index_by_basis: dict = dc_field(compare=False, repr=False, default=None)
    _index_by_bits: dict = dc_field(compare=False, repr=False, default=None)
    _join_cache: dict = dc_field(compare=False, repr=False, default_factory=dict)

    def __len__(self):
        return len(self.members)

    def index_of(self, sub: Submodule) -> int:
        return self._index_by_basis[sub.basis]

    @property
    def zero_index(self) -> int:
        return 0

    @property
    def full_index(self) -> int:
        return len(self.members) - 1

    def leq(self, i: int, j: int) -> bool:
        """Is member i contained in member j?"""
        return self.bits[i] & ~self.bits[j] == 0

    def meet(self, i: int, j: int) -> int:
        """Index of the intersection (the AND of the point sets)."""
        return self._index_by_bits[self.bits[i] & self.bits[j]]

    def join(self, i: int, j: int) -> int:
        """Index of the sum: the smallest member containing both."""
        if i > j:
            i, j = j, i
        cached = self._join_cache.get((i, j))
        if cached is not None:
            return cached
        union = self.bits[i] | self.bits[j]
        # Members are sorted by dimension, the join has dim >= both inputs,
        # and the smallest member containing the union is unique (it is the
        # sum), so the first containing member at index >= j is the join.
        result = self.full_index
        for k in range(j, len(self.members)):
            if union & ~self.bits[k] == 0:
                result = k
                break
        self._join_cache[(i, j)] = result
        return result

    def maximal_indices(self) -> tuple:
        return tuple(i for (i, j) in self.hasse_edges if j == self.full_index)

    def atom_indices(self) -> tuple:
        return tuple(j for (i, j) in self.hasse_edges if i == self.zero_index)

    def sum_is_proper(self, i: int, j: int) -> bool:
        """Is member i + member j a proper submodule?

        The sum is proper iff the union of the two point sets fits inside
        some maximal member, which avoids computing the join.
        """
        union = self.bits[i] | self.bits[j]
        return any(union & ~self.bits[m] == 0 for m in self.maximal_indices())

    def proper_indices(self) -> tuple:
        return tuple(range(len(self.members) - 1))

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "module_dim": self.module.dim,
            "p": self.module.field.p,
            "members": [
                {"index": i, "dim": s.dim, "basis": [list(r) for r in s.basis]}
                for i, s in enumerate(self.members)
            ],
            "hasse_edges": [list(e) for e in self.hasse_edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph lattice {", "  rankdir=BT;"]
        for i, s in enumerate(self.members):
            lines.append(f'  n{i} [label="{i}: dim {s.dim}"];')
        for i, j in self.hasse_edges:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def enumerate_submodules(
    M: RepModule,
    cap_dim: int = DEFAULT_CAP_DIM,
    cap_points: int = DEFAULT_CAP_POINTS,
) -> SubmoduleLattice:
    """Every submodule of M, with the full containment order.

    Raises TooLarge when the module dimension or the point count p^dim
    exceeds the caps; raise the caps explicitly to push further.
    """
    p = M.field.p
    n = M.dim
    if n > cap_dim:
        raise TooLarge("module dimension", n, cap_dim)
    n_points = p**n
    if n_points > cap_points:
        raise TooLarge("point count", n_points, cap_points)

    # batch-compute the action images of every point: the cyclic closure of
    # v is the span of {v . e_i}, so one numpy product per basis element
    # yields every generating set at once
    cyclic_bases = set()
    if n == 0:
        cyclic_bases.add(())
    else:
        coords = np.arange(n_points, dtype=np.int64)
        pts = np.empty((n_points, n), dtype=np.int64)
        for j in range(n):
            pts[:, j] = coords % p
            coords //= p
        acted = [pts @ np.array(M.actions[i], dtype=np.int64) % p for i in range(M.algebra.dim)]
        for idx in range(n_points):
            rows = [tuple(int(x) for x in a[idx]) for a in acted]
            cyclic_bases.add(rref(rows, p)[0])
    cyclic_list = [Submodule(M, b) for b in sorted(cyclic_bases)]

    seen = {(): Submodule(M, ())}
    queue = [Submodule(M, ())] + [c for c in cyclic_list if c.basis != ()]
    for c in cyclic_list:
        seen.setdefault(c.basis, c)
    out = 0
    while out < len(queue):
        member = queue[out]
        out += 1
        for c in cyclic_list:
            rows = member.basis + c.basis
            red, _ = rref(rows, p) if rows else ((), ())
            if red not in seen:
                s = Submodule(M, red)
                seen[red] = s
                queue.append(s)

    members = tuple(sorted(seen.values(), key=lambda s: s.sort_key()))
    bits = tuple(span_point_bits(s.basis, n, p) for s in members)

    N = len(members)
    leq = np.array(
        [[bits[i] & ~bits[j] == 0 for j in range(N)] for i in range(N)], dtype=bool
    )
    # strict containment with something in between, via one boolean product;
    # covers are the strict containments without a middle member
    proper = leq & ~np.eye(N, dtype=bool)
    through = (proper.astype(np.uint8) @ proper.astype(np.uint8)) > 0
    covers = proper & ~through
    edges = [(int(i), int(j)) for i, j in zip(*np.nonzero(covers))]

    return SubmoduleLattice(
        module=M,
        members=members,
        bits=bits,
        hasse_edges=tuple(sorted(edges)),
        _index_by_basis={s.basis: i for i, s in enumerate(members)},
        _index_by_bits={b: i for i, b in enumerate(bits)},
    )


def lattice_to_file(lat: SubmoduleLattice, path: str, fmt: str = "json") -> None:
    if fmt == "dot":
        text = lat.to_dot()
    else:
        text = json.dumps(lat.to_json(), indent=2, sort_keys=True)
    with open(path, "w") as fh:
        fh.write(text + "\n")
