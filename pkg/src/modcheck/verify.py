"""The orchestrated verification run: every tracked claim, one manifest.

Each manifest entry is one (claim, fixture) pair, so a failure pinpoints
both the statement and the instance that broke it.  The static CLAIMS /
ANCHOR_CHECKS tables at the top are the coverage contract: every claim
anchor must own at least one manifest entry under the default config,
and the tests enforce that against a fresh run.

Entries record a sha256 digest of their witness data; the witness itself
is attached only on failure (success witnesses can be regenerated, a
failure must be inspectable from the manifest alone).  Manifests are
deterministic for a fixed config up to the duration fields.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction
from itertools import product

from .corpus import corpus, hollow_uniform_fixtures
from .errors import ModcheckError
from .exact import (
    brute_route_scan,
    fiep_failure_report,
    nonlocal_witness,
    verify_direct_case,
    verify_graph_decomposition,
    verify_partial_case,
    z_extension_routes,
)
from .graphs import graph_complement, graph_laws
from .homs import hom_from_coords, hom_space, restrict
from .modules import ModuleHom, direct_sum
from .properties import (
    is_extending,
    is_hollow,
    is_lifting,
    is_uniform,
    is_uniserial,
    lattice_of,
    radical,
)
from .summands import has_fiep, summand_indices
from .theorems import square_extending_criterion, square_lifting_criterion

CLAIMS = {
    "running-example": (
        "the width-4 row module over the 9-dimensional triangular shape "
        "algebra has exactly six submodules and is hollow and uniform but "
        "not uniserial"
    ),
    "summand-closure": (
        "every nonzero proper direct summand of a direct sum of hollow "
        "(resp. uniform) modules is hollow (resp. uniform)"
    ),
    "graph-laws": (
        "the graph of a homomorphism into the second component meets the "
        "first copy exactly in the kernel, complements the second copy "
        "exactly when the map is total, and fills the sum with the first "
        "copy exactly when the map is epi"
    ),
    "square-lifting": (
        "for hollow and uniform U the definitional lifting scan on U ⊕ U "
        "agrees with both case-analysis variants of the square criterion"
    ),
    "square-extending": (
        "for hollow and uniform U the definitional extending scan on U ⊕ U "
        "agrees with both case-analysis variants of the square criterion"
    ),
    "exchange-property": (
        "every finite-length corpus module satisfies the finite internal "
        "exchange property"
    ),
    "integer-routes": (
        "a partial endomorphism a·n ↦ b·n of the integers extends along "
        "route (i) exactly when a divides b and along route (ii) exactly "
        "when b divides a; for (a, b) = (2, 3) neither applies"
    ),
    "localization-counterexample": (
        "over the two-prime localization pair the pullback module U has a "
        "non-local endomorphism ring, U ⊕ U is lifting by explicit case "
        "analysis, and U ⊕ U fails the finite internal exchange property"
    ),
}

# static coverage table: claim anchor -> check-id prefixes owned by it
ANCHOR_CHECKS = {
    "running-example": ("running-example/",),
    "summand-closure": ("summand-closure/",),
    "graph-laws": ("graph-laws/",),
    "square-lifting": ("square-lifting/",),
    "square-extending": ("square-extending/",),
    "exchange-property": ("exchange-property/",),
    "integer-routes": ("integer-routes/",),
    "localization-counterexample": ("localization-counterexample/",),
}

RUN_ORDER = (
    "running-example",
    "summand-closure",
    "graph-laws",
    "square-lifting",
    "square-extending",
    "exchange-property",
    "integer-routes",
    "localization-counterexample",
)

GRAPH_LAW_PAIRS = (
    ("chain_f2_k2", "chain_f2_k2"),
    ("chain_f2_k3", "chain_f2_k2"),
    ("chain_f2_k2", "chain_f2_k3"),
    ("chain_f2_k4", "chain_f2_k3"),
    ("chain_f3_k3", "chain_f3_k2"),
    ("chain_f3_k4", "chain_f3_k4"),
    ("tri4_f2", "tri4_f2"),
    ("tri4_f3", "tri4_f3"),
    ("mat2_simple_f2", "mat2_simple_f2"),
)

EXAMPLE_SUBMODULE_BASES = frozenset(
    {
        (),
        ((0, 0, 0, 1),),
        ((0, 0, 1, 0), (0, 0, 0, 1)),
        ((0, 1, 0, 0), (0, 0, 0, 1)),
        ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
        ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    }
)


@dataclass(frozen=True)
class VerifyConfig:
    p: int = 2
    q: int = 3
    cap_dim: int = 8
    cap_hom: int = 1 << 20
    n_max: int = 3
    seed: int = 1789
    only: tuple | None = None  # anchors to run; None = all
    direct_xs: tuple = ("1", "3/5", "7/5")
    partial_xs: tuple = ("4/3", "10/9", "8/3")

    def to_json(self) -> dict:
        d = asdict(self)
        d["only"] = list(d["only"]) if d["only"] is not None else None
        d["direct_xs"] = list(d["direct_xs"])
        d["partial_xs"] = list(d["partial_xs"])
        return d


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    claim: str
    verdict: str  # "pass" | "fail"
    witness_digest: str
    duration: float
    witness: dict | None = None  # attached on failure only
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        out = {
            "check_id": self.check_id,
            "claim": self.claim,
            "verdict": self.verdict,
            "witness_digest": self.witness_digest,
            "duration_ms": round(self.duration * 1000, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass(frozen=True)
class Manifest:
    config: VerifyConfig
    checks: tuple  # CheckResult, ordered by check id

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "config": self.config.to_json(),
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"{c.verdict.upper():4s} {c.check_id}")
        lines.append(
            f"{'PASS' if self.passed else 'FAIL'} "
            f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)"
        )
        return "\n".join(lines)


def _digest(witness: dict) -> str:
    blob = json.dumps(witness, sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def _run_check(check_id: str, claim: str, fn) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, witness = fn()
        error = None
    except ModcheckError as exc:
        ok, witness = False, {"input": check_id}
        error = f"{type(exc).__name__}: {exc}"
    duration = time.perf_counter() - start
    return CheckResult(
        check_id,
        claim,
        "pass" if ok else "fail",
        _digest(witness),
        duration,
        witness=None if ok else witness,
        error=error,
    )


# -- check groups, in run order ----------------------------------------------


def _checks_running_example(cfg: VerifyConfig, fixtures) -> list:
    claim = CLAIMS["running-example"]
    out = []
    for fx in fixtures:
        if not fx.name.startswith("tri4_f") or fx.name.endswith("_sq"):
            continue

        def check(fx=fx):
            lat = lattice_of(fx.module, cap_dim=cfg.cap_dim)
            bases = frozenset(m.basis for m in lat.members)
            witness = {
                "submodules": sorted(
                    [list(r) for r in b] for b in bases
                ),
                "count": len(lat.members),
                "hollow": is_hollow(fx.module),
                "uniform": is_uniform(fx.module),
                "uniserial": is_uniserial(fx.module),
            }
            ok = (
                bases == EXAMPLE_SUBMODULE_BASES
                and witness["count"] == 6
                and witness["hollow"]
                and witness["uniform"]
                and not witness["uniserial"]
            )
            return ok, witness

        out.append(_run_check(f"running-example/{fx.name}", claim, check))
    return out


def _checks_summand_closure(cfg: VerifyConfig, fixtures) -> list:
    claim = CLAIMS["summand-closure"]
    out = []
    for fx in fixtures:
        if not fx.name.endswith("_sq"):
            continue

        def check(fx=fx):
            lat = lattice_of(fx.module, cap_dim=cfg.cap_dim)
            checked = 0
            for i in summand_indices(lat):
                part = lat.members[i]
                if part.dim == 0 or part.dim == fx.module.dim:
                    continue
                piece = part.as_module()
                if not (is_hollow(piece) and is_uniform(piece)):
                    return False, {
                        "fixture": fx.name,
                        "summand_basis": [list(r) for r in part.basis],
                    }
                checked += 1
            return checked > 0, {"fixture": fx.name, "summands_checked": checked}

        out.append(_run_check(f"summand-closure/{fx.name}", claim, check))
    return out


def _checks_graph_laws(cfg: VerifyConfig, fixtures) -> list:
    claim = CLAIMS["graph-laws"]
    by_name = {f.name: f for f in fixtures}
    out = []
    for an, bn in GRAPH_LAW_PAIRS:
        if an not in by_name or bn not in by_name:
            continue

        def check(an=an, bn=bn):
            A, B = by_name[an].module, by_name[bn].module
            p = A.algebra.field.p
            ds = direct_sum(A, B)
            basis = hom_space(A, B)
            homs_checked = 0
            rad = radical(A)
            for coeffs in product(range(p), repeat=len(basis)):
                h = hom_from_coords(A, B, basis, coeffs)
                for case in (h,) + (
                    (restrict(h, rad),) if 0 < rad.dim < A.dim else ()
                ):
                    laws = graph_laws(ds, case)
                    if not (
                        laws["kernel_law"] and laws["summand_law"] and laws["sum_law"]
                    ):
                        return False, {"pair": [an, bn], "laws": laws}
                    homs_checked += 1
            witness = {"pair": [an, bn], "homs_checked": homs_checked}
            if an == bn:
                ident = ModuleHom(
                    A, B, tuple(tuple(int(i == j) for j in range(A.dim)) for i in range(A.dim))
                )
                comp = graph_complement(ds, ident)
                witness["complement_parts"] = [q.dim for q in comp.decomposition.parts]
            return True, witness

        out.append(_run_check(f"graph-laws/{an}--{bn}", claim, check))
    return out


def _checks_square_criteria(cfg: VerifyConfig, fixtures, which: str) -> list:
    claim = CLAIMS[f"square-{which}"]
    scan = is_lifting if which == "lifting" else is_extending
    criterion = (
        square_lifting_criterion if which == "lifting" else square_extending_criterion
    )
    out = []
    for fx in hollow_uniform_fixtures(fixtures):
        if 2 * fx.module.dim > cfg.cap_dim:
            continue

        def check(fx=fx):
            square = direct_sum(fx.module, fx.module).module
            definitional = scan(square).verdict
            by_b = criterion(fx.module, "b").verdict
            by_c = criterion(fx.module, "c").verdict
            witness = {
                "fixture": fx.name,
                "definitional": definitional,
                "variant_b": by_b,
                "variant_c": by_c,
            }
            return definitional == by_b == by_c, witness

        out.append(_run_check(f"square-{which}/{fx.name}", claim, check))
    return out


def _checks_exchange(cfg: VerifyConfig, fixtures) -> list:
    claim = CLAIMS["exchange-property"]
    out = []
    for fx in fixtures:

        def check(fx=fx):
            lattice_of(fx.module, cap_dim=cfg.cap_dim)  # honest cap behavior
            rep = has_fiep(fx.module, n_max=cfg.n_max, seed=cfg.seed)
            witness = {
                "fixture": fx.name,
                "pairs_checked": rep.pairs_checked,
                "witnesses": len(rep.witnesses),
                "sampled": rep.sampled,
            }
            if rep.failure is not None:
                witness["failure"] = rep.failure
            return rep.verdict, witness

        out.append(_run_check(f"exchange-property/{fx.name}", claim, check))
    return out


def _checks_integer_routes(cfg: VerifyConfig) -> list:
    claim = CLAIMS["integer-routes"]

    def check():
        report = z_extension_routes(2, 3)
        brute = brute_route_scan(2, 3)
        witness = {
            "routes": report.to_json(),
            "brute": brute,
        }
        ok = (
            not report.i_holds
            and not report.ii_holds
            and brute == (report.i_holds, report.ii_holds)
        )
        return ok, witness

    return [_run_check("integer-routes/a2-b3", claim, check)]


def _checks_localization(cfg: VerifyConfig) -> list:
    claim = CLAIMS["localization-counterexample"]
    p, q = cfg.p, cfg.q
    out = []

    def case_check(x, runner):
        def check():
            report = runner(Fraction(x), p=p, q=q)
            ok = bool(report.verdict) and not report.unresolved
            return ok, report.to_json()

        return check

    for x in cfg.direct_xs:
        out.append(
            _run_check(
                f"localization-counterexample/direct/x={x}",
                claim,
                case_check(x, verify_direct_case),
            )
        )
    for x in cfg.partial_xs:
        out.append(
            _run_check(
                f"localization-counterexample/partial/x={x}",
                claim,
                case_check(x, verify_partial_case),
            )
        )
        out.append(
            _run_check(
                f"localization-counterexample/graph/x={x}",
                claim,
                case_check(x, verify_graph_decomposition),
            )
        )

    def witness_check():
        from .exact import endo_is_unit, mult_endo

        x, y = nonlocal_witness(p, q)  # certificate-checked internally
        cert_x = endo_is_unit(mult_endo(x, p, q))
        cert_y = endo_is_unit(mult_endo(y, p, q))
        ok = x + y == 1 and not cert_x.is_unit and not cert_y.is_unit
        return ok, {"x": cert_x.to_json(), "y": cert_y.to_json()}

    out.append(
        _run_check(
            "localization-counterexample/nonlocal-witness", claim, witness_check
        )
    )

    def failure_check():
        report = fiep_failure_report(p, q)
        doc = report.to_json()
        ok = (
            "does not satisfy the finite internal exchange property"
            in report.verdict
            and report.label == "CITED-IMPLICATION"
            and bool(report.citation)
        )
        return ok, doc

    out.append(
        _run_check(
            "localization-counterexample/exchange-failure", claim, failure_check
        )
    )
    return out


def verify_claims(config: VerifyConfig | None = None) -> Manifest:
    """Run every selected check group in order and assemble the manifest."""
    cfg = config or VerifyConfig()
    selected = RUN_ORDER if cfg.only is None else tuple(cfg.only)
    unknown = [a for a in selected if a not in CLAIMS]
    if unknown:
        raise ValueError(f"unknown check anchors: {unknown}")
    fixtures = corpus()
    results = []
    for anchor in RUN_ORDER:
        if anchor not in selected:
            continue
        if anchor == "running-example":
            results += _checks_running_example(cfg, fixtures)
        elif anchor == "summand-closure":
            results += _checks_summand_closure(cfg, fixtures)
        elif anchor == "graph-laws":
            results += _checks_graph_laws(cfg, fixtures)
        elif anchor == "square-lifting":
            results += _checks_square_criteria(cfg, fixtures, "lifting")
        elif anchor == "square-extending":
            results += _checks_square_criteria(cfg, fixtures, "extending")
        elif anchor == "exchange-property":
            results += _checks_exchange(cfg, fixtures)
        elif anchor == "integer-routes":
            results += _checks_integer_routes(cfg)
        elif anchor == "localization-counterexample":
            results += _checks_localization(cfg)
    results.sort(key=lambda c: c.check_id)
    return Manifest(cfg, tuple(results))
