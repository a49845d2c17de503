"""Monte-Carlo verification campaign over random NPT Bell-diagonal qutrits.

Each trial samples an NPT coefficient table from its own seed, runs the
complete pipeline and checks every identity the construction promises:
ground-eigenvector property, Schmidt rank 2, the rank certificate of the
coefficient matrix, the three-fold degeneracy of the negative eigenvalue,
the witness spectrum, the filtered state's spectrum and the white-noise
threshold semantics on a p-grid. Trials are pure functions of their seed,
so campaigns parallelize and aggregate order-independently.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .filtering import add_white_noise, filter_report, robustness_compare
from .linalg import expectation, kron, partial_transpose
from .simplex import (
    GENERATOR_NAME,
    build_state,
    lambda_min_multiplicity,
    pt_block,
    sample_npt,
)
from .weyl import weyl
from .witness import construct_witness_vector, detect, witness_operator

#: default white-noise grid for threshold-semantics checks
NOISE_GRID = tuple(np.linspace(0.0, 1.0, 21))

#: grid points this close to a threshold are excluded from the comparison
THRESHOLD_BAND = 1e-6

#: residual names in fixed reporting order
RESIDUAL_KEYS = (
    "block_eigen_residual",
    "alpha_shift_residual",
    "eigenvector_residual",
    "expectation_minus_lambda",
    "abs_det_C",
    "schmidt_third_relative",
    "witness_spectrum_dev",
    "witness_trace_identity",
    "mirror_negative_part",
    "filter_fixpoint_residual",
    "sigma_trace_dev",
    "sigma_negative_part",
    "sigma_lambda_ratio_dev",
)


@dataclass
class TrialResult:
    seed: int
    coefficients: np.ndarray
    failures: list = field(default_factory=list)
    residuals: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class CampaignResult:
    count: int
    master_seed: int
    residual_max: dict
    failed_trials: list

    @property
    def ok(self) -> bool:
        return not self.failed_trials


def trial_seeds(master_seed: int, count: int) -> list:
    """Disjoint per-trial integer seeds derived from one master seed."""
    words = np.random.SeedSequence(master_seed).generate_state(count, dtype=np.uint64)
    return [int(w) for w in words]


def run_trial(seed: int, noise_grid=NOISE_GRID) -> TrialResult:
    """Sample one NPT state from ``seed`` and check the full invariant battery."""
    coeffs = sample_npt(seed)
    result = TrialResult(seed=seed, coefficients=np.asarray(coeffs.c))
    res = result.residuals

    def check(name, condition, detail=""):
        if not condition:
            result.failures.append(f"{name}: {detail}")

    wc = construct_witness_vector(coeffs)
    rho = build_state(coeffs)
    rho_pt = partial_transpose(rho, 3, 3)
    pt_eigs = np.linalg.eigvalsh(rho_pt)

    check(
        "negative_count",
        int(np.sum(pt_eigs < -1e-12)) == 3,
        f"{int(np.sum(pt_eigs < -1e-12))} negative eigenvalues",
    )
    mult = lambda_min_multiplicity(pt_eigs)
    check("lambda_min_multiplicity", mult == 3, f"multiplicity {mult}")

    lam = wc.lambda_min
    block_res = max(
        float(np.abs(pt_block(coeffs, m) @ wc.u[m] - lam * wc.u[m]).max()) for m in range(3)
    )
    res["block_eigen_residual"] = block_res
    check("block_eigenvectors", block_res <= 1e-10, f"residual {block_res:.3e}")
    w10 = weyl(3, 1, 0)
    check(
        "u_shift_relation",
        all(np.array_equal(wc.u[(m + 2) % 3], w10 @ wc.u[m]) for m in (0, 2)),
        "u_{m+2} differs from W_{1,0} u_m",
    )
    alpha_res = max(
        float(np.abs(np.roll(wc.alpha[m], -1) - wc.alpha[(m + 2) % 3]).max()) for m in range(3)
    )
    res["alpha_shift_residual"] = alpha_res
    check("alpha_shift_relation", alpha_res <= 1e-12, f"residual {alpha_res:.3e}")

    eig_res = float(np.abs(rho_pt @ wc.phi - lam * wc.phi).max())
    res["eigenvector_residual"] = eig_res
    check("eigenvector_property", eig_res <= 1e-10, f"residual {eig_res:.3e}")

    exp_dev = abs(expectation(rho_pt, wc.phi).real - lam)
    res["expectation_minus_lambda"] = exp_dev
    check("expectation_equals_lambda", exp_dev <= 1e-10, f"deviation {exp_dev:.3e}")

    res["abs_det_C"] = abs(wc.det_C)
    check("det_C_vanishes", abs(wc.det_C) <= 1e-10, f"|det C| {abs(wc.det_C):.3e}")
    check(
        "minor_nonzero",
        float(np.abs(wc.minors).max()) > 1e-9,
        f"max minor {np.abs(wc.minors).max():.3e}",
    )

    mu = wc.schmidt.coefficients
    third = float(mu[2] / mu[0]) if mu.size > 2 else 0.0
    res["schmidt_third_relative"] = third
    check(
        "schmidt_rank_2",
        wc.schmidt.schmidt_rank == 2 and mu[1] > 1e-9 and third < 1e-9,
        f"coefficients {mu}",
    )

    wop = witness_operator(wc)
    w_eigs = np.linalg.eigvalsh(wop.W)
    expected = np.sort(
        [wop.mu0**2, wop.mu1**2, wop.mu0 * wop.mu1, -wop.mu0 * wop.mu1, 0, 0, 0, 0, 0]
    )
    spec_dev = float(np.abs(w_eigs - expected).max())
    res["witness_spectrum_dev"] = spec_dev
    check("witness_spectrum", spec_dev <= 1e-9, f"deviation {spec_dev:.3e}")

    value = detect(wop, rho)
    trace_dev = abs(value - lam)
    res["witness_trace_identity"] = trace_dev
    check("witness_detects", value < 0 and trace_dev <= 1e-10, f"trace(W rho) {value!r}")

    mirror_floor = float(np.linalg.eigvalsh(wop.mirror)[0])
    res["mirror_negative_part"] = max(0.0, -mirror_floor)
    check("mirror_psd", mirror_floor >= -1e-10, f"floor {mirror_floor:.3e}")

    rep = filter_report(rho, wc)
    fix_res = float(
        np.abs(kron(rep.P_A, rep.P_B.T) @ wc.phi - wc.phi).max()
    )
    res["filter_fixpoint_residual"] = fix_res
    check("filter_fixpoint", fix_res <= 1e-10, f"residual {fix_res:.3e}")

    sigma_eigs = np.linalg.eigvalsh(rep.sigma)
    res["sigma_negative_part"] = max(0.0, -float(sigma_eigs[0]))
    check("sigma_psd", sigma_eigs[0] >= -1e-10, f"floor {sigma_eigs[0]:.3e}")
    trace_dev = abs(float(np.trace(rep.sigma).real) - 1.0)
    res["sigma_trace_dev"] = trace_dev
    check("sigma_unit_trace", trace_dev <= 1e-12, f"deviation {trace_dev:.3e}")

    ratio_dev = abs(float(rep.sigma_pt_spectrum[0]) - lam / rep.q)
    res["sigma_lambda_ratio_dev"] = ratio_dev
    check("sigma_pt_minimum", ratio_dev <= 1e-9, f"deviation {ratio_dev:.3e}")
    check(
        "sigma_single_negative",
        int(np.sum(rep.sigma_pt_spectrum < -1e-12)) == 1,
        f"spectrum {rep.sigma_pt_spectrum}",
    )

    verdict = robustness_compare(rep, 3)
    if verdict is not None:
        check(
            "robustness_equivalence",
            verdict == (rep.q < 4.0 / 9.0),
            f"q {rep.q!r}, thresholds {rep.p_rho_max!r} / {rep.p_sigma_max!r}",
        )

    points = list(noise_grid)
    points += [rep.p_rho_max - 1e-6, rep.p_rho_max + 1e-6]
    points += [rep.p_sigma_max - 1e-6, rep.p_sigma_max + 1e-6]
    for p in points:
        if not 0.0 <= p <= 1.0:
            continue
        if abs(p - rep.p_rho_max) >= THRESHOLD_BAND - 1e-15:
            detected = detect(wop, add_white_noise(rho, p)) < 0.0
            check(
                "rho_threshold_semantics",
                detected == (p < rep.p_rho_max),
                f"p={p!r} detected={detected} threshold={rep.p_rho_max!r}",
            )
        if abs(p - rep.p_sigma_max) >= THRESHOLD_BAND - 1e-15:
            noisy = add_white_noise(rep.sigma, p)
            npt = float(np.linalg.eigvalsh(partial_transpose(noisy, 2, 2))[0]) < 0.0
            check(
                "sigma_threshold_semantics",
                npt == (p < rep.p_sigma_max),
                f"p={p!r} npt={npt} threshold={rep.p_sigma_max!r}",
            )
    return result


def run_campaign(count: int, master_seed: int, jobs: int = 1) -> CampaignResult:
    """Run ``count`` independent trials and aggregate order-independently."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    seeds = trial_seeds(master_seed, count)
    if jobs == 1:
        results = [run_trial(s) for s in seeds]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_trial, seeds, chunksize=max(1, count // (4 * jobs))))
    residual_max = {key: 0.0 for key in RESIDUAL_KEYS}
    failed = []
    for r in results:
        for key in RESIDUAL_KEYS:
            if key in r.residuals:
                residual_max[key] = max(residual_max[key], r.residuals[key])
        if not r.ok:
            failed.append(r)
    return CampaignResult(
        count=count, master_seed=master_seed, residual_max=residual_max, failed_trials=failed
    )


def summary_text(campaign: CampaignResult) -> str:
    """Deterministic, byte-stable text summary of a campaign."""
    lines = [
        "one-copy distillability verification campaign",
        f"  trials        : {campaign.count}",
        f"  master seed   : {campaign.master_seed}",
        f"  bit generator : {GENERATOR_NAME}",
        f"  failures      : {len(campaign.failed_trials)}",
        "  residual maxima over all trials:",
    ]
    for key in RESIDUAL_KEYS:
        lines.append(f"    {key:<26s}: {campaign.residual_max[key]:.6e}")
    for trial in campaign.failed_trials:
        lines.append(f"  FAILED trial seed {trial.seed}")
        lines.append("    coefficients:")
        for row in trial.coefficients:
            lines.append("      [" + ", ".join(repr(float(x)) for x in row) + "]")
        for msg in trial.failures:
            lines.append(f"    {msg}")
    lines.append("PASS" if campaign.ok else "FAIL")
    return "\n".join(lines) + "\n"
