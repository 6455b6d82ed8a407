"""
Catalogue of verifiable laws run by the suite.

Each property has a stable id `<module>.<name>`, an anchor quoting the statement
it checks and an applicability predicate. A property function receives the
semigroup and a `Trial` (seeded generator, trial count, optional residual
override) and returns an `Outcome`. It reports the first failing witness and
the largest residual seen.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from app.config import GRAM_TOL, LEMMA_TOL, SUITE_DEFAULTS
from app.errors import AlgebraError, NotRPDError, ZeroNotKilledError
from app.models.function import SFunction
from app.models.report import complex_pairs
from app.models.semigroup import InverseSemigroup
from app.services.constructors import chain_semilattice, direct_product
from app.services.function_algebra import (
    algebra_identity,
    delta,
    norm_p,
    polarization_rhs,
    restricted_convolve,
    support,
    tilde_involution,
)
from app.services.positive_definite import (
    chain_is_pd_oracle,
    evaluate_witness,
    extendibility_gap,
    godement_factorize,
    gram_pd,
    gram_rpd,
    is_extendible_pd,
    is_extendible_rpd,
    is_pd,
    is_rpd,
    positive_functional_check,
    quadratic_form_pd,
    quadratic_form_rpd,
    random_rpd,
    random_xi,
    tau_extend,
    tau_restrict,
    unitization_extend,
)
from app.services.representations import (
    coefficient_function,
    extend_to_Sr,
    is_restricted_representation,
    is_star_representation,
    lambda_r,
    lambda_r_apply,
    lift_lambda,
    lift_rho,
    restrict_from_Sr,
    rho_r,
    rho_r_apply,
    trivial_representation,
)
from app.services.semigroup_core import (
    commuting_idempotents,
    has_zero,
    idempotents,
    is_chain,
    is_group,
    restricted_product,
    restricted_semigroup,
    restricted_set_product,
    star_set,
    validate_table,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trial:
    rng: np.random.Generator
    trials: int
    tolerance: Optional[float] = None

    def limit(self, scale: float = 1.0) -> float:
        base = self.tolerance if self.tolerance is not None else LEMMA_TOL.residual
        return base * max(1.0, scale)


@dataclass(frozen=True)
class Outcome:
    passed: bool
    trials: int
    max_residual: float = 0.0
    witness: Any = None


class _Tally:
    def __init__(self) -> None:
        self.trials = 0
        self.max_residual = 0.0
        self.failed = False
        self.witness: Any = None

    def record(self, ok: bool, residual: float = 0.0, witness: Any = None) -> None:
        self.trials += 1
        self.max_residual = max(self.max_residual, float(residual))
        if not ok and not self.failed:
            self.failed = True
            self.witness = witness() if callable(witness) else witness

    def outcome(self) -> Outcome:
        return Outcome(not self.failed, self.trials, self.max_residual, self.witness)


PropertyFn = Callable[[InverseSemigroup, Trial], Outcome]


def _always(S: InverseSemigroup) -> bool:
    return True


@dataclass(frozen=True)
class Property:
    pid: str
    anchor: str
    fn: PropertyFn
    applies: Callable[[InverseSemigroup], bool] = _always

    @property
    def module(self) -> str:
        return self.pid.split(".", 1)[0]


REGISTRY: dict[str, Property] = {}


def register(pid: str, anchor: str, applies: Callable[[InverseSemigroup], bool] = _always):
    def decorator(fn: PropertyFn) -> PropertyFn:
        if pid in REGISTRY:
            raise ValueError(f"duplicate property id {pid}")
        REGISTRY[pid] = Property(pid, anchor, fn, applies)
        return fn

    return decorator


# Laws every module promises; the suite must carry an entry for each.
INVARIANTS: dict[str, tuple[str, ...]] = {
    "semigroup_core": (
        "semigroup_core.restricted_star_agrees",
        "semigroup_core.idempotents_commute",
        "semigroup_core.restricted_semigroup_valid",
        "semigroup_core.delta_product_rule",
        "semigroup_core.direct_product_zero_free",
    ),
    "function_algebra": (
        "function_algebra.associativity",
        "function_algebra.tilde_antimultiplicative",
        "function_algebra.support_lemma",
        "function_algebra.polarization",
        "function_algebra.submultiplicative",
        "function_algebra.identity_law",
    ),
    "representations": (
        "representations.regular_restricted",
        "representations.matrix_functional_agree",
        "representations.commutation",
        "representations.positivity",
        "representations.gram_identity",
        "representations.lift_lambda_homomorphism",
        "representations.sigma_r_roundtrip",
        "representations.coefficient_extendible",
    ),
    "positive_definite": (
        "positive_definite.factorization_roundtrip",
        "positive_definite.finite_case_collapse",
        "positive_definite.group_coincidence",
        "positive_definite.chain_characterization",
        "positive_definite.tau_cone",
        "positive_definite.extendible_cone_correspondence",
        "positive_definite.unitization_extension",
        "positive_definite.tuple_oracle",
        "positive_definite.witness_soundness",
        "positive_definite.functional_consistency",
        "positive_definite.random_rpd_deterministic",
    ),
}


# --- applicability ---


def _nontrivial_group(S: InverseSemigroup) -> bool:
    return is_group(S) and S.n > 1


def _small_chain(S: InverseSemigroup) -> bool:
    return is_chain(S) and S.n <= SUITE_DEFAULTS.chain_grid_max_length


def _zero_free(S: InverseSemigroup) -> bool:
    return not has_zero(S)


def _restricted_has_no_identity(S: InverseSemigroup) -> bool:
    return restricted_semigroup(S).identity is None


# --- random inputs ---


def _rand_int(S: InverseSemigroup, rng: np.random.Generator, low: int = -3, high: int = 4) -> SFunction:
    """Gaussian-integer values; products and sums stay exact in float64."""
    return SFunction(S, rng.integers(low, high, S.n) + 1j * rng.integers(low, high, S.n))


def _rand_sparse_nonneg(S: InverseSemigroup, rng: np.random.Generator) -> SFunction:
    mask = rng.random(S.n) < 0.4
    return SFunction(S, rng.integers(1, 4, S.n) * mask)


def _rand_rpd(S: InverseSemigroup, rng: np.random.Generator) -> SFunction:
    xi = random_xi(S, rng)
    return restricted_convolve(xi, tilde_involution(xi))


def _rand_symmetric(S: InverseSemigroup, rng: np.random.Generator) -> SFunction:
    """u = u~, usually indefinite."""
    w = random_xi(S, rng)
    return (w + tilde_involution(w)) * 0.5


def _rand_candidate(S: InverseSemigroup, rng: np.random.Generator) -> SFunction:
    if rng.random() < 0.5:
        return _rand_rpd(S, rng)
    return _rand_symmetric(S, rng)


def _sup(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)), initial=0.0))


def _values(f: SFunction) -> list[list[float]]:
    return complex_pairs(f.values)


# --- semigroup_core ---


@register(
    "semigroup_core.restricted_star_agrees",
    "the involution of S_r restricts to x -> x* on S, 0* = 0 and (x.y)* = y*.x*",
)
def restricted_star_agrees(S: InverseSemigroup, trial: Trial) -> Outcome:
    Sr = restricted_semigroup(S)
    t = _Tally()
    for x in range(S.n):
        t.record(Sr.star[x] == S.star[x], witness={"element": x})
    t.record(Sr.star[Sr.zero] == Sr.zero, witness={"element": int(Sr.zero)})
    for x in range(S.n):
        for y in range(S.n):
            p = restricted_product(S, x, y)
            if p is None:
                continue
            q = restricted_product(S, int(S.star[y]), int(S.star[x]))
            t.record(q == S.star[p], witness={"x": x, "y": y})
    return t.outcome()


@register(
    "semigroup_core.idempotents_commute",
    "idempotents commute, E is closed and contains every ss*",
)
def idempotents_commute(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    E = idempotents(S)
    t.record(commuting_idempotents(S), witness={"idempotents": sorted(E)})
    t.record(
        all(int(S.table[e, e]) == e for e in E) and len(E) == int(S.idempotent_mask.sum()),
        witness={"idempotents": sorted(E)},
    )
    return t.outcome()


@register(
    "semigroup_core.restricted_semigroup_valid",
    "adjoin a zero element 0 and put x.y = xy if x*x = yy*, 0 otherwise",
)
def restricted_semigroup_valid(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    Sr = restricted_semigroup(S)
    again = validate_table(Sr.n, Sr.table, star=Sr.star)
    t.record(again.zero == S.n and Sr.n == S.n + 1, witness={"zero": again.zero})
    expected = np.where(S.domain_idempotent[:, None] == S.range_idempotent[None, :], S.table, S.n)
    bad = np.argwhere(Sr.table[: S.n, : S.n] != expected)
    t.record(bad.size == 0, float(bad.shape[0]), witness=lambda: {"pair": bad[0].tolist()})
    return t.outcome()


@register(
    "semigroup_core.delta_product_rule",
    "delta_s . delta_t = delta_st if s*s = tt*, 0 otherwise",
)
def delta_product_rule(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    deltas = [delta(S, x) for x in range(S.n)]
    for s in range(S.n):
        for u in range(S.n):
            got = restricted_convolve(deltas[s], deltas[u]).values
            p = restricted_product(S, s, u)
            want = deltas[p].values if p is not None else np.zeros(S.n)
            residual = _sup(got, want)
            t.record(residual == 0.0, residual, witness={"s": s, "t": u})
    return t.outcome()


@register(
    "semigroup_core.direct_product_zero_free",
    "G x chain has no zero for a nontrivial group G",
    applies=_nontrivial_group,
)
def direct_product_zero_free(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for k in (2, 3):
        P = direct_product(S, chain_semilattice(k))
        t.record(not has_zero(P), witness={"product": P.label, "zero": P.zero})
    return t.outcome()


# --- function_algebra ---


@register("function_algebra.associativity", "(f.g).h = f.(g.h)")
def associativity(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        f, g, h = (_rand_int(S, trial.rng) for _ in range(3))
        left = restricted_convolve(restricted_convolve(f, g), h)
        right = restricted_convolve(f, restricted_convolve(g, h))
        residual = _sup(left.values, right.values)
        t.record(residual == 0.0, residual, witness=lambda: {"f": _values(f), "g": _values(g), "h": _values(h)})
    return t.outcome()


@register("function_algebra.tilde_antimultiplicative", "(f.g)~ = g~.f~")
def tilde_antimultiplicative(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        f, g = random_xi(S, trial.rng), random_xi(S, trial.rng)
        left = tilde_involution(restricted_convolve(f, g))
        right = restricted_convolve(tilde_involution(g), tilde_involution(f))
        residual = _sup(left.values, right.values)
        limit = trial.limit(norm_p(f, 1) * norm_p(g, 1))
        t.record(residual <= limit, residual, witness=lambda: {"f": _values(f), "g": _values(g)})
    return t.outcome()


@register("function_algebra.support_lemma", "supp(f.g~) = (supp f).(supp g)*")
def support_lemma(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        f, g = _rand_sparse_nonneg(S, trial.rng), _rand_sparse_nonneg(S, trial.rng)
        got = support(restricted_convolve(f, tilde_involution(g)))
        want = restricted_set_product(S, support(f), star_set(S, support(g)))
        t.record(got == want, float(len(got ^ want)), witness=lambda: {"f": _values(f), "g": _values(g)})

        f, g = random_xi(S, trial.rng), random_xi(S, trial.rng)
        mask = f.values * (trial.rng.random(S.n) < 0.5)
        f = SFunction(S, mask)
        got = support(restricted_convolve(f, tilde_involution(g)))
        want = restricted_set_product(S, support(f), star_set(S, support(g)))
        t.record(got <= want, float(len(got - want)), witness=lambda: {"f": _values(f), "g": _values(g)})
    return t.outcome()


@register("function_algebra.polarization", "4 f.g~ = sum over k of i^k (f + i^k g).(f + i^k g)~")
def polarization(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        f, g = random_xi(S, trial.rng), random_xi(S, trial.rng)
        lhs = polarization_rhs(f, g)
        rhs = 4.0 * restricted_convolve(f, tilde_involution(g))
        residual = _sup(lhs.values, rhs.values)
        limit = trial.limit((norm_p(f, 1) + norm_p(g, 1)) ** 2)
        t.record(residual <= limit, residual, witness=lambda: {"f": _values(f), "g": _values(g)})
    return t.outcome()


@register("function_algebra.submultiplicative", "||f.g||_1 <= ||f||_1 ||g||_1")
def submultiplicative(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        f, g = random_xi(S, trial.rng), random_xi(S, trial.rng)
        bound = norm_p(f, 1) * norm_p(g, 1)
        excess = max(0.0, norm_p(restricted_convolve(f, g), 1) - bound)
        t.record(excess <= trial.limit(bound), excess, witness=lambda: {"f": _values(f), "g": _values(g)})
    return t.outcome()


@register("function_algebra.identity_law", "1_E . f = f = f . 1_E with 1_E the sum of delta_e")
def identity_law(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    e = algebra_identity(S)
    for _ in range(trial.trials):
        f = _rand_int(S, trial.rng)
        residual = max(
            _sup(restricted_convolve(e, f).values, f.values),
            _sup(restricted_convolve(f, e).values, f.values),
        )
        t.record(residual == 0.0, residual, witness=lambda: {"f": _values(f)})
    return t.outcome()


# --- representations ---


@register(
    "representations.regular_restricted",
    "lambda_r and rho_r are restricted representations",
)
def regular_restricted(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for rep in (lambda_r(S), rho_r(S)):
        report = is_restricted_representation(rep)
        t.record(report.verdict, witness=lambda: {"representation": rep.name, **report.to_dict()})
    return t.outcome()


@register(
    "representations.matrix_functional_agree",
    "(lambda_r(s)f)(x) = f(s*x)[ss* = xx*] and (rho_r(u)f)(x) = f(xu)[uu* = x*x]",
)
def matrix_functional_agree(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    lam, rho = lambda_r(S), rho_r(S)
    for _ in range(trial.trials):
        f = random_xi(S, trial.rng)
        residual = 0.0
        for s in range(S.n):
            residual = max(
                residual,
                _sup(lam[s] @ f.values, lambda_r_apply(S, s, f).values),
                _sup(rho[s] @ f.values, rho_r_apply(S, s, f).values),
            )
        t.record(residual <= trial.limit(), residual, witness=lambda: {"f": _values(f)})
    return t.outcome()


@register(
    "representations.commutation",
    "lambda_r~(f) rho_r~(g) = rho_r~(g) lambda_r~(f)",
)
def commutation(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        f, g = random_xi(S, trial.rng), random_xi(S, trial.rng)
        C = lift_lambda(f).commutator(lift_rho(g))
        residual = float(np.max(np.abs(C), initial=0.0))
        t.record(residual <= trial.limit(), residual, witness=lambda: {"f": _values(f), "g": _values(g)})
    return t.outcome()


@register("representations.positivity", "rho_r~(phi) >= 0 for phi in P_r(S)")
def positivity(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        phi = _rand_rpd(S, trial.rng)
        P = lift_rho(phi).matrix
        asym = _sup(P, P.conj().T)
        w = np.linalg.eigvalsh((P + P.conj().T) / 2)
        radius = float(np.max(np.abs(w), initial=0.0))
        limit = GRAM_TOL.psd_relative * max(1.0, radius)
        residual = max(asym, -float(w[0]))
        t.record(residual <= limit, residual, witness=lambda: {"phi": _values(phi)})
    return t.outcome()


@register(
    "representations.gram_identity",
    "<rho_r~(phi) delta_x, delta_y> = (lambda_r(y) phi)(x)",
)
def gram_identity(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        phi = _rand_int(S, trial.rng)
        P = lift_rho(phi).matrix
        shifted = np.stack([lambda_r_apply(S, y, phi).values for y in range(S.n)])
        residual = max(_sup(P, shifted), _sup(P, gram_rpd(phi)))
        t.record(residual == 0.0, residual, witness=lambda: {"phi": _values(phi)})
    return t.outcome()


@register(
    "representations.lift_lambda_homomorphism",
    "lambda_r~(f.g) = lambda_r~(f) lambda_r~(g)",
)
def lift_lambda_homomorphism(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        f, g = random_xi(S, trial.rng), random_xi(S, trial.rng)
        left = lift_lambda(restricted_convolve(f, g)).matrix
        right = (lift_lambda(f) @ lift_lambda(g)).matrix
        residual = _sup(left, right)
        limit = trial.limit(norm_p(f, 1) * norm_p(g, 1))
        t.record(residual <= limit, residual, witness=lambda: {"f": _values(f), "g": _values(g)})
    return t.outcome()


@register(
    "representations.sigma_r_roundtrip",
    "restricted representations of S correspond to representations of S_r killing 0",
)
def sigma_r_roundtrip(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for rep in (lambda_r(S), rho_r(S)):
        extended = extend_to_Sr(rep)
        report = is_star_representation(extended)
        t.record(report.verdict, witness=lambda: {"representation": rep.name, **report.to_dict()})
        back = restrict_from_Sr(extended)
        residual = _sup(back.matrices, rep.matrices)
        t.record(residual == 0.0, residual, witness={"representation": rep.name, "step": "restrict"})
        again = extend_to_Sr(back)
        residual = _sup(again.matrices, extended.matrices)
        t.record(residual == 0.0, residual, witness={"representation": rep.name, "step": "extend"})

    Sr = restricted_semigroup(S)
    try:
        restrict_from_Sr(trivial_representation(Sr))
        t.record(False, witness={"representation": "trivial", "step": "zero not rejected"})
    except ZeroNotKilledError:
        t.record(True)
    return t.outcome()


@register(
    "representations.coefficient_extendible",
    "u(x) = <pi(x) xi, xi> is in P_{r,e}(S) for restricted pi, with constant at most ||xi||^2",
)
def coefficient_extendible(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        xi = random_xi(S, trial.rng).values
        bound = float(np.vdot(xi, xi).real)
        for rep in (lambda_r(S), rho_r(S)):
            u = coefficient_function(rep, xi)
            report = is_extendible_rpd(u)
            excess = max(0.0, (report.constant or 0.0) - bound)
            ok = report.verdict and excess <= 1e-8 * max(1.0, bound)
            t.record(ok, excess, witness=lambda: {"representation": rep.name, "xi": complex_pairs(xi)})
    return t.outcome()


# --- positive_definite ---


@register(
    "positive_definite.factorization_roundtrip",
    "phi in P_{r,e}(S) iff phi = xi . xi~",
)
def factorization_roundtrip(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        phi = _rand_rpd(S, trial.rng)
        report = is_extendible_rpd(phi)
        try:
            error = godement_factorize(phi).reconstruction_error
            factored = True
        except NotRPDError:
            error, factored = 0.0, False
        t.record(report.verdict and factored, error, witness=lambda: {"phi": _values(phi)})

        u = _rand_symmetric(S, trial.rng)
        report = is_extendible_rpd(u)
        try:
            godement_factorize(u)
            factored = True
        except NotRPDError:
            factored = False
        t.record(report.verdict == factored, witness=lambda: {"u": _values(u), "extendible": report.verdict})
    return t.outcome()


@register(
    "positive_definite.finite_case_collapse",
    "on a finite S, P_r(S) = P_{r,e}(S) with conj(u) = M 1_E and constant sum_e u(e)",
)
def finite_case_collapse(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    ones = algebra_identity(S).values
    E = sorted(idempotents(S))
    for _ in range(trial.trials):
        u = _rand_candidate(S, trial.rng)
        M = gram_rpd(u)
        scale = norm_p(u, 1)
        residual = _sup(M @ ones, np.conj(u.values))
        t.record(residual <= trial.limit(scale), residual, witness=lambda: {"u": _values(u)})
        if not is_rpd(u).verdict:
            continue
        report = is_extendible_rpd(u)
        expected = float(np.sum(u.values[E]).real)
        gap = abs((report.constant or 0.0) - expected)
        t.record(
            report.verdict and gap <= 1e-8 * max(1.0, scale),
            gap,
            witness=lambda: {"u": _values(u), "constant": report.constant},
        )
    return t.outcome()


@register(
    "positive_definite.group_coincidence",
    "P(S) and P_r(S) coincide for groups",
    applies=is_group,
)
def group_coincidence(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for k in range(trial.trials):
        u = _rand_candidate(S, trial.rng) if k % 3 else random_xi(S, trial.rng)
        residual = _sup(gram_pd(u), gram_rpd(u))
        same = is_pd(u).verdict == is_rpd(u).verdict
        t.record(residual == 0.0 and same, residual, witness=lambda: {"u": _values(u)})
    return t.outcome()


@register(
    "positive_definite.chain_characterization",
    "on the chain under max, u in P(S) iff u >= 0 and u is decreasing; u = 1 is in P_r(S)",
    applies=_small_chain,
)
def chain_characterization(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for values in itertools.product(SUITE_DEFAULTS.chain_grid_values, repeat=S.n):
        u = SFunction(S, np.array(values, dtype=float))
        t.record(is_pd(u).verdict == chain_is_pd_oracle(u), witness={"u": list(values)})
    for _ in range(trial.trials):
        u = SFunction(S, trial.rng.integers(-1, 4, S.n).astype(float))
        t.record(is_pd(u).verdict == chain_is_pd_oracle(u), witness=lambda: {"u": _values(u)})
    one = SFunction(S, np.ones(S.n))
    t.record(is_rpd(one).verdict, witness={"u": "constant 1"})
    return t.outcome()


@register(
    "positive_definite.tau_cone",
    "extension by zero is an affine isomorphism of P_r(S) onto P_0(S_r)",
    applies=_zero_free,
)
def tau_cone(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        u, w = _rand_int(S, trial.rng), _rand_int(S, trial.rng)
        a, b = (int(v) for v in trial.rng.integers(0, 4, 2))
        v = tau_extend(u)
        residual = max(
            _sup(tau_restrict(v).values, u.values),
            _sup(tau_extend(a * u + b * w).values, (a * v + b * tau_extend(w)).values),
        )
        c = trial.rng.integers(-3, 4, S.n + 1) + 1j * trial.rng.integers(-3, 4, S.n + 1)
        full = np.vdot(c, gram_pd(v) @ c)
        restricted = np.vdot(c[: S.n], gram_rpd(u) @ c[: S.n])
        residual = max(residual, abs(full - restricted))
        t.record(residual == 0.0, residual, witness=lambda: {"u": _values(u), "w": _values(w)})

        cand = _rand_candidate(S, trial.rng)
        same = is_rpd(cand).verdict == is_pd(tau_extend(cand)).verdict
        t.record(same, witness=lambda: {"u": _values(cand)})
    return t.outcome()


@register(
    "positive_definite.extendible_cone_correspondence",
    "P_{0,e}(S_r) is mapped isomorphically onto P_{r,e}(S)",
)
def extendible_cone_correspondence(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        u = _rand_candidate(S, trial.rng)
        left = is_extendible_rpd(u)
        right = is_extendible_pd(tau_extend(u))
        gap = 0.0
        if left.verdict and right.verdict:
            gap = abs(left.constant - right.constant)
        ok = left.verdict == right.verdict and gap <= 1e-8 * max(1.0, abs(left.constant or 0.0))
        t.record(ok, gap, witness=lambda: {"u": _values(u)})
    return t.outcome()


@register(
    "positive_definite.unitization_extension",
    "v in P_e(T) with constant c extends to a positive definite w on T^1 with w(1) = c",
    applies=_restricted_has_no_identity,
)
def unitization_extension(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        v = tau_extend(_rand_rpd(S, trial.rng))
        base = is_extendible_pd(v)
        if not base.verdict:
            t.record(False, witness=lambda: {"v": _values(v)})
            continue
        c = base.constant
        w = unitization_extend(v, c)
        unit = is_extendible_pd(w)
        gap = abs(unit.constant - c) if unit.verdict else math.inf
        ok = is_pd(w).verdict and gap <= 1e-6 * max(1.0, c)
        t.record(ok, 0.0 if math.isinf(gap) else gap, witness=lambda: {"v": _values(v), "constant": c})
    return t.outcome()


@register(
    "positive_definite.tuple_oracle",
    "sum c_i conj(c_j) u(x_j* x_i) >= 0 for all finite tuples, with repetitions",
)
def tuple_oracle(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(trial.trials):
        u = _rand_candidate(S, trial.rng)
        m = int(trial.rng.integers(1, SUITE_DEFAULTS.max_tuple_length + 1))
        xs = [int(x) for x in trial.rng.integers(0, S.n, m)]
        cs = (trial.rng.standard_normal(m) + 1j * trial.rng.standard_normal(m)) / np.sqrt(2.0)
        d = np.zeros(S.n, dtype=np.complex128)
        np.add.at(d, xs, cs)
        limit = 1e-8 * max(1.0, float(np.sum(np.abs(cs))) ** 2 * norm_p(u, 1))

        q_pd, q_rpd = quadratic_form_pd(u, xs, cs), quadratic_form_rpd(u, xs, cs)
        residual = max(
            abs(q_pd - np.vdot(d, gram_pd(u) @ d)),
            abs(q_rpd - np.vdot(d, gram_rpd(u) @ d)),
        )
        ok = residual <= limit
        if is_pd(u).verdict:
            ok = ok and q_pd.real >= -limit
        if is_rpd(u).verdict:
            ok = ok and q_rpd.real >= -limit
        ext = is_extendible_rpd(u)
        if ext.verdict:
            ok = ok and extendibility_gap(u, xs, cs, ext.constant) >= -limit * max(1.0, ext.constant)
        t.record(ok, residual, witness=lambda: {"u": _values(u), "xs": xs, "cs": complex_pairs(cs)})
    return t.outcome()


def _push_negative(u: SFunction, e: int, decide: Callable[[SFunction], Any]) -> tuple[SFunction, Any]:
    """Subtract t delta_e, doubling t, until the Gram matrix has a clearly negative eigenvalue."""
    step = 1.0
    for _ in range(64):
        v = u - step * delta(u.base, e)
        report = decide(v)
        if report.min_eigenvalue < -SUITE_DEFAULTS.negative_margin:
            return v, report
        step *= 2.0
    return v, report


@register(
    "positive_definite.witness_soundness",
    "every failed verdict ships a witness whose quadratic form is negative",
)
def witness_soundness(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    E = sorted(idempotents(S))
    for _ in range(trial.trials):
        u = _rand_rpd(S, trial.rng)
        e = E[int(trial.rng.integers(0, len(E)))]
        for decide in (is_pd, is_rpd):
            v, report = _push_negative(u, e, decide)
            value = evaluate_witness(report, v) if report.witness is not None else 0j
            ok = not report.verdict and value.real < -report.tolerance
            t.record(ok, max(0.0, value.real), witness=lambda: {"u": _values(v), "check": report.check})

        v = u + 1j * delta(S, e)
        report = is_rpd(v)
        value = evaluate_witness(report, v) if report.witness is not None else 0j
        ok = report.violation == "symmetry" and abs(value.imag) > report.tolerance
        t.record(ok, witness=lambda: {"u": _values(v), "check": "rpd symmetry"})
    return t.outcome()


@register(
    "positive_definite.functional_consistency",
    "u in P_{r,e}(S) defines a positive functional on the restricted algebra",
)
def functional_consistency(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    E = sorted(idempotents(S))
    inner = max(1, trial.trials // 10)
    for _ in range(trial.trials):
        u = _rand_rpd(S, trial.rng)
        seed = int(trial.rng.integers(0, 2**32))
        passes = positive_functional_check(u, inner, seed).verdict
        t.record(passes and is_extendible_rpd(u).verdict, witness=lambda: {"u": _values(u)})

        e = E[int(trial.rng.integers(0, len(E)))]
        v = u - (2.0 * abs(u[e]) + 1.0) * delta(S, e)
        report = positive_functional_check(v, inner, seed)
        value = evaluate_witness(report, v) if report.witness is not None else 0j
        ok = not report.verdict and value.real < 0 and not is_extendible_rpd(v).verdict
        t.record(ok, witness=lambda: {"u": _values(v)})
    return t.outcome()


@register(
    "positive_definite.random_rpd_deterministic",
    "seeded generators reproduce the same certified output",
)
def random_rpd_deterministic(S: InverseSemigroup, trial: Trial) -> Outcome:
    t = _Tally()
    for _ in range(min(trial.trials, 5)):
        seed = int(trial.rng.integers(0, 2**32))
        try:
            first, second = random_rpd(S, seed), random_rpd(S, seed)
        except AlgebraError as e:
            t.record(False, witness={"seed": seed, "error": e.describe()})
            continue
        t.record(np.array_equal(first.values, second.values), witness={"seed": seed})
    return t.outcome()
