"""Integer checker for extension routes of f: aℤ → ℤ along the inclusion.

Models f(a·n) = b·n against g: aℤ ↪ ℤ and asks which of the two repair
routes exists:

  route (i)   a hom h: ℤ → ℤ with f = h∘g.  h is multiplication by h(1),
              and h(g(a)) = h(a) = h(1)·a = b forces a | b.
  route (ii)  a submodule K ≤ ℤ and a monomorphism h: ℤ → ℤ/K with
              h∘f = π∘g.  ℤ is torsion-free and ℤ/K is torsion for
              K ≠ 0, so K = 0 and h is multiplication by h(1) into ℤ;
              h(f(a)) = h(1)·b = a forces b | a.

Each verdict carries its divisibility certificate and is cross-checked
by a bounded brute-force scan over candidate integers h(1).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ZeroInput


@dataclass(frozen=True)
class RouteReport:
    a: int
    b: int
    i_holds: bool
    ii_holds: bool
    i_certificate: str
    ii_certificate: str

    @property
    def neither(self) -> bool:
        return not (self.i_holds or self.ii_holds)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "i_holds": self.i_holds,
            "ii_holds": self.ii_holds,
            "i_certificate": self.i_certificate,
            "ii_certificate": self.ii_certificate,
            "neither": self.neither,
        }


def z_extension_routes(a: int, b: int) -> RouteReport:
    if a == 0 or b == 0:
        raise ZeroInput("a and b must be nonzero")
    i_holds = b % a == 0
    ii_holds = a % b == 0
    i_cert = (
        f"h(1) = {b // a} satisfies h(1)·{a} = {b}"
        if i_holds
        else f"{a} does not divide {b}"
    )
    ii_cert = (
        f"h(1) = {a // b} satisfies h(1)·{b} = {a} (and K = 0 since Z is torsion-free)"
        if ii_holds
        else f"{b} does not divide {a}"
    )
    return RouteReport(a, b, i_holds, ii_holds, i_cert, ii_cert)


def brute_route_scan(a: int, b: int) -> tuple:
    """(i_found, ii_found) by scanning every integer witness |h(1)| ≤ |ab|.

    Route (i) needs h(1)·a = b; route (ii) needs h(1)·b = a.  The witness,
    if any, satisfies |h(1)| ≤ |ab|, so the bounded scan is exhaustive.
    """
    if a == 0 or b == 0:
        raise ZeroInput("a and b must be nonzero")
    bound = abs(a * b)
    i_found = any(c * a == b for c in range(-bound, bound + 1))
    ii_found = any(c * b == a for c in range(-bound, bound + 1))
    return i_found, ii_found
