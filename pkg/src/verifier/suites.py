"""Check suites behind the CLI subcommands.

Every suite draws from a single seeded generator, evaluates one family of
identities or inequalities and records its worst case in a ``CheckLedger``.
"""

import logging
from typing import Callable, Dict, Optional

import numpy as np

from src.claim.cases import classify_spectrum, flip_label, oriented_mean, umbilicity_threshold
from src.claim.proof_steps import (
    eq_r_excess,
    f_dominance_gap,
    ha_gap,
    lambda_identity_residual,
    mu3_bound_gap,
    power_sum_residuals,
    q1_bound,
    q2_bound,
    q3_bound,
    r1_gap,
)
from src.claim.quantities import claim_bound, q_decomposed, q_direct
from src.claim.spectrum import ShapeSpectrum, flip_orientation, shape_spectrum
from src.curvature.ambient import PLANE_PAIRS, AmbientRestriction, gauss_induced
from src.curvature.generators import random_admissible_ambient, random_algebraic_tensor
from src.curvature.shape import ShapeOperator
from src.curvature.tensor import invariants, make_curvature_tensor
from src.search.config import SearchConfig
from src.search.epsilon import epsilon0_threshold
from src.search.runner import SearchReport, maximize_margin
from src.search.sampling import SearchFamily
from src.slices.integrals import FOUR_PI_SQ, integrate_slice, slice_hypersurface
from src.utils.rng import run_rng
from src.utils.settings import VerifierSettings
from src.verifier.checks import CheckLedger
from src.warped.geometry import (
    KAPPA_TOL,
    KappaPair,
    TangentProjection,
    kappa,
    pattern_order,
    pattern_point,
    warped_closed_forms,
)
from src.warped.lemma import lcf_classify, lcf_weyl
from src.warped.presets import WarpedPreset
from src.warped.rotsym import P4_TOL, rotsym_margin

logger = logging.getLogger(__name__)

NON_PATTERN_DISTANCE = 0.1
NON_PATTERN_WEYL = 1e-3
CLASSIFY_TOL = 1e-9


class WorstCase:
    """Running maximum of a residual and the case that produced it."""

    def __init__(self) -> None:
        self.value = -np.inf
        self.witness: Optional[Dict] = None
        self.count = 0

    def update(self, value: float, witness: Callable[[], Dict]) -> None:
        self.count += 1
        if value > self.value:
            self.value = float(value)
            self.witness = witness()

    def record(self, ledger: CheckLedger, name: str, tolerance: float, message: str = "") -> None:
        if self.count == 0:
            ledger.check_true(name, True, samples=0, message="no applicable cases")
            return
        ledger.check_at_most(name, self.value, tolerance, self.count, self.witness, message)


def _point_witness(amb: AmbientRestriction, spec: ShapeSpectrum) -> Dict:
    return {
        "spectrum": spec.to_dict(),
        "sigma": amb.sigma,
        "coordinate_sectionals": amb.coordinate_sectionals().tolist(),
    }


def _random_principal(rng: np.random.Generator) -> np.ndarray:
    return rng.normal(size=4) * rng.uniform(0.0, 2.0) + rng.uniform(-2.0, 2.0)


def _one_negative(rng: np.random.Generator) -> np.ndarray:
    pos = np.abs(rng.normal(size=3)) + 1e-3
    return np.r_[pos, -pos.sum()]


def _three_negative(rng: np.random.Generator) -> np.ndarray:
    neg = -np.abs(rng.normal(size=3)) - 1e-3
    return np.r_[-neg.sum(), neg]


def identities_suite(ledger: CheckLedger, samples: int, seed: int, settings: VerifierSettings) -> None:
    """Tensor invariants, the Q decomposition, power sums and the proof's inequalities."""
    rng = run_rng(seed)
    names = [
        "core.einstein_trace",
        "core.weyl_trace",
        "core.ricci_split",
        "core.bianchi_roundtrip",
        "claim.decomposition",
        "claim.lambda_identity",
        "claim.power_sum_mu4",
        "claim.power_sum_mu3",
        "claim.mu3_bound",
        "proof.eq_r",
        "proof.ha",
        "proof.r1",
        "proof.q1",
        "proof.q2",
        "proof.q3",
        "proof.f_dominance",
        "symmetry.q_invariance",
        "symmetry.bound_invariance",
        "symmetry.spectrum_invariance",
    ]
    worst = {name: WorstCase() for name in names}
    label_mismatches = 0

    for _ in range(samples):
        dim = int(rng.integers(3, 6))
        tensor = random_algebraic_tensor(rng, dim)
        inv = invariants(tensor)
        scale = max(1.0, float(np.max(np.abs(tensor.comp))))
        witness_t = lambda: {"dim": tensor.dim, "comp": tensor.comp.tolist()}  # noqa: E731
        worst["core.einstein_trace"].update(abs(np.trace(inv.einstein)) / scale, witness_t)
        worst["core.weyl_trace"].update(inv.weyl_trace_residual / scale, witness_t)
        worst["core.ricci_split"].update(
            abs(inv.ric_norm_sq - inv.einstein_norm_sq - inv.scalar**2 / dim) / scale**2, witness_t
        )
        worst["core.bianchi_roundtrip"].update(
            make_curvature_tensor(dim, tensor.comp).bianchi_residual() / scale, witness_t
        )

        # Decomposition on admissible and arbitrary ambients alike
        if rng.uniform() < 0.5:
            amb = random_admissible_ambient(rng)
        else:
            amb = AmbientRestriction.from_tensor(random_algebraic_tensor(rng, 4))
        spec = shape_spectrum(_random_principal(rng))
        q = q_direct(gauss_induced(amb, spec.shape_operator()))
        worst["claim.decomposition"].update(
            abs(q_decomposed(amb, spec) - q), lambda: _point_witness(amb, spec),
        )
        worst["claim.lambda_identity"].update(
            abs(lambda_identity_residual(spec)), lambda: spec.to_dict()
        )
        fourth, third = power_sum_residuals(spec)
        worst["claim.power_sum_mu4"].update(abs(fourth), lambda: spec.to_dict())
        worst["claim.power_sum_mu3"].update(abs(third), lambda: spec.to_dict())

        traceless = shape_spectrum(rng.normal(size=4) * rng.uniform(0.1, 3.0))
        worst["claim.mu3_bound"].update(
            mu3_bound_gap(traceless) / max(1.0, traceless.a_norm_sq**1.5), lambda: traceless.to_dict()
        )

        # Proof steps need an admissible ambient; orientation is fixed to H >= 0
        adm = random_admissible_ambient(rng)
        h = rng.uniform(0.0, 2.0)
        worst["proof.eq_r"].update(eq_r_excess(adm), lambda: _point_witness(adm, spec))
        worst["proof.ha"].update(
            ha_gap(adm, spec) / max(1.0, 12.0 * spec.mean_curvature**2 * spec.a_norm_sq + 3.0 * adm.a_ring_norm_sq),
            lambda: _point_witness(adm, spec),
        )
        q_adm = q_direct(gauss_induced(adm, spec.shape_operator()))
        worst["proof.q1"].update(
            (q_adm - q1_bound(spec)) / max(1.0, abs(q_adm)), lambda: _point_witness(adm, spec)
        )

        spec_b = shape_spectrum(_one_negative(rng) * rng.uniform(0.1, 3.0) + h)
        q_b = q_direct(gauss_induced(adm, spec_b.shape_operator()))
        worst["proof.q2"].update(
            (q_b - q2_bound(spec_b)) / max(1.0, abs(q_b)), lambda: _point_witness(adm, spec_b)
        )

        spec_c = shape_spectrum(_three_negative(rng) * rng.uniform(0.1, 3.0) + h)
        worst["proof.r1"].update(
            r1_gap(adm, spec_c) / max(1.0, spec_c.a_norm_sq), lambda: _point_witness(adm, spec_c)
        )
        q_c = q_direct(gauss_induced(adm, spec_c.shape_operator()))
        worst["proof.q3"].update(
            (q_c - q3_bound(spec_c)) / max(1.0, abs(q_c)), lambda: _point_witness(adm, spec_c)
        )

        mu_far = np.asarray(spec_c.traceless)
        stretch = np.sqrt(umbilicity_threshold(h) / spec_c.a_norm_sq) * rng.uniform(1.0, 3.0)
        spec_far = shape_spectrum(mu_far * stretch + h)
        worst["proof.f_dominance"].update(
            f_dominance_gap(spec_far) / max(1.0, spec_far.a_norm_sq**2), lambda: spec_far.to_dict()
        )

        # Orientation flip: same frame, negated principal curvatures
        flipped_q = q_direct(gauss_induced(amb, ShapeOperator(4, tuple(-x for x in spec.principal))))
        flipped = flip_orientation(spec)
        scale_q = max(1.0, abs(q))
        worst["symmetry.q_invariance"].update(abs(flipped_q - q) / scale_q, lambda: _point_witness(amb, spec))
        bound = claim_bound(spec.mean_curvature).bound
        worst["symmetry.bound_invariance"].update(
            abs(claim_bound(flipped.mean_curvature).bound - bound) / max(1.0, bound), lambda: spec.to_dict()
        )
        worst["symmetry.spectrum_invariance"].update(
            max(
                abs(flipped.a_norm_sq - spec.a_norm_sq),
                abs(flipped.gauss_kronecker - spec.gauss_kronecker),
            )
            / max(1.0, spec.a_norm_sq**2),
            lambda: spec.to_dict(),
        )
        if classify_spectrum(flipped) != flip_label(classify_spectrum(spec), oriented_mean(spec)):
            label_mismatches += 1

    worst["core.einstein_trace"].record(ledger, "core.einstein_trace", settings.identity_tol)
    worst["core.weyl_trace"].record(ledger, "core.weyl_trace", settings.identity_tol)
    worst["core.ricci_split"].record(ledger, "core.ricci_split", settings.decomposition_tol)
    worst["core.bianchi_roundtrip"].record(ledger, "core.bianchi_roundtrip", 1e-12)
    worst["claim.decomposition"].record(ledger, "claim.decomposition", settings.decomposition_tol)
    for name in ("claim.lambda_identity", "claim.power_sum_mu4", "claim.power_sum_mu3", "claim.mu3_bound"):
        worst[name].record(ledger, name, settings.identity_tol)
    for name in ("proof.eq_r", "proof.ha", "proof.r1", "proof.q1", "proof.q2", "proof.q3", "proof.f_dominance"):
        worst[name].record(ledger, name, settings.identity_tol)
    for name in ("symmetry.q_invariance", "symmetry.bound_invariance", "symmetry.spectrum_invariance"):
        worst[name].record(ledger, name, 1e-12)

    ledger.check_true(
        "symmetry.case_equivariance",
        label_mismatches == 0,
        samples=samples,
        message=f"{label_mismatches} mismatches",
    )

    equality = max(
        abs(mu3_bound_gap(shape_spectrum([3.0 * m, -m, -m, -m]))) / m**3 for m in (0.25, 0.5, 1.0, 2.0)
    )
    ledger.check_at_most("claim.mu3_bound_equality", equality, settings.identity_tol, samples=4)


def _pattern_distance(mu: np.ndarray) -> float:
    """Distance from mu to the union of the lines spanned by permutations of (1, 1, 1, -3)."""
    best = np.inf
    for p in range(4):
        v = np.ones(4)
        v[p] = -3.0
        best = min(best, float(mu @ mu - (mu @ v) ** 2 / (v @ v)))
    return float(np.sqrt(max(best, 0.0)))


def _random_warped(rng: np.random.Generator, h_max: float = 2.0):
    k = np.sort(rng.uniform(0.0, 1.0, size=2))
    direction = rng.normal(size=4)
    t = direction / np.linalg.norm(direction) * rng.uniform() ** 0.25
    return (
        KappaPair(float(k[0]), float(k[1])),
        TangentProjection(tuple(t)),
        float(rng.uniform(-3.0, 3.0)),
        float(rng.uniform(-h_max, h_max)),
        int(rng.integers(1, 5)),
    )


def lemma_suite(ledger: CheckLedger, samples: int, seed: int, settings: VerifierSettings) -> None:
    """Conformal flatness of pattern spectra over warped ambients, and its converse."""
    rng = run_rng(seed)
    weyl_exact = WorstCase()
    gauss1 = WorstCase()
    closed_forms = WorstCase()
    non_pattern_weyl = np.inf
    non_pattern_witness: Optional[Dict] = None
    disagreements = 0

    for _ in range(samples):
        k, tangent, m, h, position = _random_warped(rng)
        amb, spec = pattern_point(k, tangent, m, h, position)
        induced = gauss_induced(amb, spec.shape_operator())
        weyl_exact.update(
            invariants(induced).weyl_norm_sq,
            lambda: {"k": [k.kappa1, k.kappa2], "T": list(tangent.components), "m": m, "H": h},
        )

        t = tangent.vector[pattern_order(m, h, position)]
        lam = np.asarray(spec.principal)
        expected = np.array(
            [k.kappa2 + k.delta * (t[i] ** 2 + t[j] ** 2) + lam[i] * lam[j] for i, j in PLANE_PAIRS]
        )
        actual = np.array([induced.comp[i, j, i, j] for i, j in PLANE_PAIRS])
        gauss1.update(
            float(np.max(np.abs(actual - expected))) / max(1.0, float(np.max(np.abs(expected)))),
            lambda: spec.to_dict(),
        )

        sigma, a_diag, a_ring = warped_closed_forms(k, TangentProjection(tuple(t)))
        closed_forms.update(
            max(abs(amb.sigma - sigma), float(np.max(np.abs(np.diag(amb.a) - a_diag))), abs(amb.a_ring_norm_sq - a_ring)),
            lambda: {"k": [k.kappa1, k.kappa2], "T": t.tolist()},
        )

        # Pattern spectrum: classification and the reduced formula must agree
        mu = np.asarray(spec.traceless)
        pattern = lcf_classify(mu, CLASSIFY_TOL).pattern
        flat = float(np.max(np.abs(lcf_weyl(mu)))) <= CLASSIFY_TOL * max(1.0, spec.a_norm_sq)
        disagreements += int(pattern != flat or not pattern)

        # Non-pattern spectrum at distance >= 0.1 from the pattern set
        while True:
            free = rng.normal(size=4)
            free = (free - free.mean()) / np.linalg.norm(free - free.mean()) * rng.uniform(0.5, 3.0)
            if _pattern_distance(free) >= NON_PATTERN_DISTANCE:
                break
        free_weyl = float(np.max(np.abs(lcf_weyl(free))))
        if free_weyl < non_pattern_weyl:
            non_pattern_weyl, non_pattern_witness = free_weyl, {"mu": free.tolist()}
        free_pattern = lcf_classify(free, CLASSIFY_TOL).pattern
        disagreements += int(free_pattern or free_weyl <= CLASSIFY_TOL)

    weyl_exact.record(ledger, "lemma.pattern_weyl_vanishes", settings.weyl_exact_tol)
    gauss1.record(ledger, "lemma.gauss_coordinate_planes", 1e-12)
    closed_forms.record(ledger, "warped.closed_forms", 1e-12)
    ledger.check_at_least(
        "lemma.non_pattern_weyl",
        non_pattern_weyl,
        NON_PATTERN_WEYL,
        samples=samples,
        witness=non_pattern_witness,
        message=f"distance >= {NON_PATTERN_DISTANCE}",
    )
    ledger.check_true(
        "lemma.classify_agreement",
        disagreements == 0,
        samples=2 * samples,
        message=f"{disagreements} disagreements",
    )


def rotsym_suite(ledger: CheckLedger, samples: int, seed: int, settings: VerifierSettings) -> None:
    """The rotsym inequality chain on random admissible warped data."""
    rng = run_rng(seed)
    steps = WorstCase()
    p4 = WorstCase()
    closed = WorstCase()
    unit = WorstCase()
    printed_worst = 0.0
    printed_witness: Optional[Dict] = None

    for _ in range(samples):
        k, tangent, m, h, position = _random_warped(rng, h_max=3.0)
        chain = rotsym_margin(k, tangent, m, h, position)
        witness = lambda: {  # noqa: E731
            "k": [k.kappa1, k.kappa2],
            "T": list(tangent.components),
            "m": m,
            "H": h,
            "position": position,
            **chain.to_dict(),
        }
        scale = max(1.0, abs(chain.q))
        steps.update(chain.worst_step, witness)
        p4.update(abs(chain.p4_residual) / max(1.0, 12.0 * m**4), witness)
        closed.update(abs(chain.closed_form_residual) / scale, witness)
        unit.update(chain.margin / scale, witness)
        if abs(chain.printed_form_residual) > printed_worst:
            printed_worst = abs(chain.printed_form_residual)
            printed_witness = witness()

    steps.record(ledger, "rotsym.chain_monotone", settings.chain_tol)
    closed.record(ledger, "rotsym.closed_form", settings.chain_tol)
    unit.record(ledger, "rotsym.unit_bound", settings.chain_tol)
    p4.record(ledger, "rotsym.p4_identity", P4_TOL)
    ledger.add_finding(
        "rotsym.printed_identity",
        {"max_abs_residual": printed_worst, "witness": printed_witness},
        "Q differs from the variant carrying (6 + |A0|^2 + 4H^2)|T|^2; "
        "the closed form with (6 kappa2 + 4H^2 - |A0|^2)|T|^2 matches",
    )


def claim_search(
    ledger: CheckLedger, config: SearchConfig, settings: VerifierSettings, prefix: str = "search"
) -> SearchReport:
    """Run the falsification search and record its checks."""
    report = maximize_margin(config)
    ledger.check_true(
        f"{prefix}.accounting",
        report.accepted + report.rejected == config.samples,
        samples=config.samples,
        witness={"histogram": report.case_histogram, "rejected": report.rejection_reasons},
    )
    if report.max_margin is None:
        ledger.check_true(f"{prefix}.max_margin", False, samples=0, message="every sample was rejected")
    else:
        ledger.check_at_most(
            f"{prefix}.max_margin",
            report.max_margin,
            settings.margin_tol,
            samples=report.accepted,
            witness={"index": report.argmax_index, **report.argmax.to_dict()},
            message="bare bound" if config.bare_bound else "",
        )
    if config.family is SearchFamily.WARPED:
        ledger.check_at_most(
            f"{prefix}.warped_weyl_exact",
            report.max_weyl_norm_sq,
            settings.weyl_exact_tol,
            samples=report.accepted,
        )
    return report


def epsilon0_suite(ledger: CheckLedger, settings: VerifierSettings) -> None:
    report = epsilon0_threshold()
    ledger.check_at_most(
        "epsilon0.closed_form", abs(report.root - report.closed_form), settings.identity_tol, witness=report.to_dict()
    )
    ledger.check_true(
        "epsilon0.sign_change",
        report.gap_below > 0 > report.gap_above,
        samples=2,
        witness={"gap_below": report.gap_below, "gap_above": report.gap_above},
    )
    ledger.add_finding(
        "epsilon0.printed_value",
        {"derived": report.root, "printed": report.printed_value, "factor": report.discrepancy_factor},
        "printed constant sqrt((368 sqrt3 - 598)/46) equals sqrt(46) times the derived "
        "sqrt((8 sqrt3 - 13)/46): a factor 46 inside the radical",
    )


def slice_suite(
    ledger: CheckLedger,
    preset: WarpedPreset,
    t: float,
    settings: VerifierSettings,
    monte_carlo: bool = False,
    mc_samples: int = 100_000,
    seed: int = 0,
) -> None:
    """Integrals of one slice and the inequality they witness."""
    geometry = slice_hypersurface(preset, t)
    report = integrate_slice(geometry, monte_carlo=monte_carlo, samples=mc_samples, seed=seed)
    k = kappa(preset, t)
    witness = {**geometry.to_dict(), **report.to_dict()}

    ledger.check_at_most(
        "slice.gauss_equation",
        abs(geometry.intrinsic_sec - (k.kappa2 + geometry.mean_curvature**2)),
        settings.integral_tol * max(1.0, geometry.intrinsic_sec),
        witness=witness,
    )
    ledger.check_at_most(
        "slice.gbc_integral",
        abs(report.gbc_integral - 2.0 * FOUR_PI_SQ),
        settings.integral_tol * 2.0 * FOUR_PI_SQ,
        witness=witness,
    )
    ledger.check_at_most(
        "slice.euler_integer",
        abs(report.euler_number - round(report.euler_number)),
        settings.integral_tol,
        witness=witness,
    )
    if k.kappa2 <= 1.0 + KAPPA_TOL:
        ledger.check_at_least("slice.slack_nonnegative", report.slack, -settings.integral_tol, witness=witness)
    else:
        ledger.add_finding("slice.outside_hypothesis", k.kappa2, "kappa2 > 1 at this slice; slack not asserted")
    if monte_carlo:
        ledger.check_true(
            "slice.monte_carlo_agreement",
            bool(report.mc_agrees),
            samples=mc_samples,
            witness={"estimate": report.mc_estimate, "stderr": report.mc_stderr},
        )
    ledger.add_finding("slice.integrals", witness, "analytic values for the slice")
