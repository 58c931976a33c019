"""Seeded batch suites.

Each suite returns a :class:`SuiteOutcome`.  *Violations* are failures of
identities or proven inequalities and indicate a bug; *findings* are
discrepancies with printed formulas or constants and never fail a run.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..covers import QuadCoverSpec, genus_of_cover
from ..errors import ConfigError, VanishingSubsumError
from ..funfield import Place, RatFunc, SSet, height, theta
from ..moduli import (
    INF,
    STABILIZER,
    ConicTwoLines,
    apply_perm,
    coeff_to_moduli,
    coeff_to_moduli_closed_form,
    config_from_coeff,
    fourple,
    intersection_fourple,
    is_normal_crossing,
    lambda_prime,
)
from ..poly import Poly, poly_gcd
from ..vojta import (
    b_identity_holds,
    classify,
    compare_quadratics,
    cover_bound_check,
    cz_check,
    discriminant_bounds,
    printed_F,
    printed_G,
    resultant_F,
    resultant_G,
    sylvester_F,
    sylvester_G,
    zannier_check,
)
from .config import SUITE_NAMES, SearchConfig
from .generators import (
    rand_const,
    rand_identity_instance,
    rand_solution,
    rand_sset,
    rand_strict_instance,
    rand_unit,
)
from .report import RunManifest

__all__ = ["SuiteOutcome", "SUITES", "DEFAULT_SIZES", "run_suite", "run_suites"]


@dataclass
class SuiteOutcome:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    findings: Counter = field(default_factory=Counter)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "violations": list(self.violations),
            "findings": dict(sorted(self.findings.items())),
            "stats": dict(sorted(self.stats.items())),
        }


DEFAULT_SIZES = {
    "identities": 200,
    "cz": 500,
    "zannier": 500,
    "derivative-bound": 500,
    "moduli": 100,
    "cover": 50,
    "discriminant-bounds": 200,
}


def suite_identities(rng: random.Random, n: int) -> SuiteOutcome:
    out = SuiteOutcome("identities")
    for k in range(n):
        inst = rand_identity_instance(rng)
        F, G = resultant_F(inst), resultant_G(inst)
        if sylvester_F(inst) != F:
            out.violations.append(f"#{k}: fast F differs from the Sylvester determinant")
        if sylvester_G(inst) != G:
            out.violations.append(f"#{k}: fast G differs from the Sylvester determinant")
        if compare_quadratics(F, printed_F(inst)) == "drift":
            out.violations.append(f"#{k}: printed F differs from Res_Y beyond sign")
        g_cmp = compare_quadratics(G, printed_G(inst))
        if g_cmp != "equal":
            out.findings[f"printed G: {g_cmp}"] += 1
        if not b_identity_holds(inst):
            out.violations.append(f"#{k}: B(u1, u2) != (u1^2 + lam u1 + u2 + 1)'")
        out.checked += 1
    return out


def suite_cz(rng: random.Random, n: int) -> SuiteOutcome:
    out = SuiteOutcome("cz")
    S = SSet.from_points([0, 1])
    t = RatFunc.t()
    witness = cz_check(t, t * t, SSet.from_points([0]))
    if not (witness.gcd_sum == 1 and witness.bound == "g <= 1" and witness.holds):
        out.violations.append(f"(t, t^2) witness: {witness}")
    branches: Counter = Counter()
    while out.checked < n:
        a = rand_unit(rng, S, 3, cbound=3)
        b = rand_unit(rng, S, 3, cbound=3)
        if a == 1 or b == 1 or (a.is_constant() and b.is_constant()):
            continue
        rep = cz_check(a, b, S)
        branches[rep.branch] += 1
        if not rep.holds:
            out.violations.append(f"a={a}, b={b}: {rep.bound} fails with g={rep.gcd_sum}")
        out.checked += 1
    out.stats = dict(branches)
    return out


def suite_zannier(rng: random.Random, n: int) -> SuiteOutcome:
    out = SuiteOutcome("zannier")
    t = RatFunc.t()
    eq = zannier_check([t, RatFunc.const(1)], SSet.from_points([0]))
    if not (eq.lhs == 1 and eq.rhs == 1):
        out.violations.append(f"(t, 1) equality witness: {eq}")
    rejected = 0
    tight = 0
    while out.checked < n:
        S = rand_sset(rng, rng.randint(1, 3))
        m = rng.choice((2, 3, 4))
        thetas = [rand_unit(rng, S, 2, cbound=3) for _ in range(m)]
        if rng.random() < 0.15:
            i, j = rng.sample(range(m), 2)
            thetas[j] = -thetas[i]
        try:
            rep = zannier_check(thetas, S)
        except VanishingSubsumError as exc:
            acc = RatFunc()
            for i in exc.subset:
                acc = acc + thetas[i]
            if acc:
                out.violations.append(f"rejected subset {exc.subset} does not vanish")
            rejected += 1
            continue
        if not rep.holds:
            out.violations.append(f"{thetas} over {S}: {rep.lhs} < {rep.rhs}")
        tight += rep.lhs == rep.rhs
        out.checked += 1
    out.stats = {"rejected": rejected, "equality": tight}
    return out


def _alt_designation(S: SSet, rng: random.Random):
    fin = S.finite
    if len(fin) < 3:
        return None
    des = tuple(sorted(rng.sample(fin, 2), key=Place.sort_key))
    if des == S.designated:
        des = tuple(p for p in fin if p not in S.designated)[:1] + S.designated[:1]
    return des


def suite_derivative_bound(rng: random.Random, n: int) -> SuiteOutcome:
    """H(theta_u) <= chi_S, and designation invariance of classify.

    Changing the designated places multiplies every derivative by the
    S-unit ``m'/m``, so F scales by it and G by its square; the case set of
    a solution does not change at all.
    """
    out = SuiteOutcome("derivative-bound")
    worst = Fraction(0)
    for _ in range(n):
        # geometric size 2..5; the place t^2 + 1 counts twice
        size = rng.randint(2, 5)
        if size >= 3 and rng.random() < 0.25:
            S = rand_sset(rng, size - 2, quadratic=True)
        else:
            S = rand_sset(rng, size - 1)
        u = rand_unit(rng, S, 3)
        th = theta(u, S)
        h = height(th) if th else 0
        if h > S.chi:
            out.violations.append(f"H(theta({u})) = {h} > chi = {S.chi} over {S}")
        elif S.chi:
            worst = max(worst, Fraction(h, S.chi))
        out.checked += 1
    n_inv = max(1, n // 5)
    k = 0
    while k < n_inv:
        inst = rand_solution(rng)
        des = _alt_designation(inst.S, rng)
        if des is None:
            continue
        k += 1
        other = inst.with_designated(des)
        if classify(inst).to_dict() != classify(other).to_dict():
            out.violations.append(f"#{k}: classify changes with the designated places")
        ratio = RatFunc.from_poly(other.S.m) / RatFunc.from_poly(inst.S.m)
        F0, F1 = resultant_F(inst), resultant_F(other)
        G0, G1 = resultant_G(inst), resultant_G(other)
        if (F0.c2 * ratio, F0.c1 * ratio, F0.c0 * ratio) != (F1.c2, F1.c1, F1.c0):
            out.violations.append(f"#{k}: F is not of weight 1")
        r2 = ratio * ratio
        if (G0.c2 * r2, G0.c1 * r2, G0.c0 * r2) != (G1.c2, G1.c1, G1.c0):
            out.violations.append(f"#{k}: G is not of weight 2")
        out.checked += 1
    out.stats = {"max_height_over_chi": str(worst), "designation_checks": n_inv}
    return out


def suite_moduli(rng: random.Random, n: int) -> SuiteOutcome:
    out = SuiteOutcome("moduli")
    while out.checked < n:
        lam0 = rand_const(rng, 9)
        if lam0 * lam0 == 4:
            continue
        got = coeff_to_moduli(lam0)
        if got != coeff_to_moduli_closed_form(lam0) or got != Fraction(16) / (lam0 * lam0 - 4):
            out.violations.append(f"coeff_to_moduli({lam0}) = {got}")
        # independent route: generic rational parametrization of the same conic
        c = config_from_coeff(lam0)
        generic = ConicTwoLines(c.conic, c.line2, c.line3)
        if lambda_prime(intersection_fourple(generic)) != got:
            out.violations.append(f"parametrization dependence at lam0 = {lam0}")
        if not is_normal_crossing(c):
            out.violations.append(f"lam0 = {lam0} should be normal crossing")
        out.checked += 1
    for lam0 in (2, -2):
        if is_normal_crossing(config_from_coeff(lam0)):
            out.violations.append(f"lam0 = {lam0} must not be normal crossing")
    for _ in range(2 * n):
        pts: list = []
        while len(pts) < 4:
            v = INF if rng.random() < 0.1 else rand_const(rng, 9)
            if v not in pts:
                pts.append(v)
        f = fourple(*pts)
        ref = lambda_prime(f)
        if any(lambda_prime(apply_perm(g, f)) != ref for g in STABILIZER):
            out.violations.append(f"lambda' not invariant on {pts}")
        out.checked += 1
    return out


def _random_squarefree(rng: random.Random, n: int) -> Poly:
    while True:
        p = Poly([rng.randint(-4, 4) for _ in range(n)] + [rng.choice((-3, -2, -1, 1, 2, 3))])
        if poly_gcd(p, p.derivative()).degree == 0:
            return p


def suite_cover(rng: random.Random, n: int) -> SuiteOutcome:
    out = SuiteOutcome("cover")
    skipped = 0
    worst = Fraction(0)
    k = 0
    while k < n:
        inst = rand_strict_instance(rng)
        rep = cover_bound_check(inst)
        if rep.skipped:
            skipped += 1
            continue
        k += 1
        if not rep.holds_53:
            out.violations.append(f"#{k}: chi_U = {rep.chi_U} > {rep.bound_53}")
        if not rep.holds_58:
            out.violations.append(f"#{k}: chi_U = {rep.chi_U} > {rep.bound_58}")
        worst = max(worst, Fraction(rep.chi_U, rep.bound_53))
        out.checked += 1
    for deg in range(1, 9):
        for _ in range(5):
            d = _random_squarefree(rng, deg)
            g = genus_of_cover([QuadCoverSpec.from_poly(d)])
            if g != (deg - 1) // 2:
                out.violations.append(f"genus of w^2 = {d} is {g}, expected {(deg - 1) // 2}")
            out.checked += 1
    out.stats = {"skipped": skipped, "max_chi_ratio": str(worst)}
    return out


def suite_discriminants(rng: random.Random, n: int) -> SuiteOutcome:
    out = SuiteOutcome("discriminant-bounds")
    for k in range(n):
        inst = rand_strict_instance(rng)
        rep = discriminant_bounds(inst)
        if not rep.ok_F:
            out.violations.append(f"#{k}: H(Disc F) = {rep.height_F} > {rep.bound_F}")
        if not rep.ok_G:
            out.violations.append(f"#{k}: H(Disc G) = {rep.height_G} > {rep.bound_G}")
        if not rep.same_square_class:
            out.violations.append(f"#{k}: Disc G is not (lam th1 - lam')^2 Disc F")
        for f in rep.findings:
            out.findings[f] += 1
        out.checked += 1
    return out


SUITES: dict[str, Callable[[random.Random, int], SuiteOutcome]] = {
    "identities": suite_identities,
    "cz": suite_cz,
    "zannier": suite_zannier,
    "derivative-bound": suite_derivative_bound,
    "moduli": suite_moduli,
    "cover": suite_cover,
    "discriminant-bounds": suite_discriminants,
}
assert tuple(SUITES) == SUITE_NAMES


def run_suite(name: str, seed: int, size: int | None = None) -> SuiteOutcome:
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    rng = random.Random(f"{seed}:{name}")
    return SUITES[name](rng, DEFAULT_SIZES[name] if size is None else size)


def run_suites(config: SearchConfig, names=None) -> RunManifest:
    """Run the named suites (default: those in the config, else all)."""
    from .. import __version__

    names = list(names or config.suites or SUITE_NAMES)
    manifest = RunManifest(config.digest(), __version__)
    findings: Counter = Counter()
    for name in names:
        res = run_suite(name, config.seed, config.suite_sizes.get(name))
        manifest.suite_outcomes[name] = res.to_dict()
        manifest.violations += len(res.violations)
        findings.update(res.findings)
    manifest.findings = [f"{k} (x{v})" for k, v in sorted(findings.items())]
    return manifest
