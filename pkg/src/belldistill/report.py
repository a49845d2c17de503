"""Machine-readable analysis reports and the coefficient-table file format.

Input files carry a coefficient table as {"d": int, "c": [[...], ...]},
row-major with c[k][l] the weight of the Bell projector with Weyl index
(k, l). Reports serialize every number as a JSON double (repr round-trips
at up to 17 significant digits) and complex entries as [re, im] pairs, so
a report reloads losslessly.
"""

import json

import numpy as np

from . import __version__
from .filtering import FilterReport, filter_report
from .simplex import (
    BOUNDARY,
    NPT,
    PPT,
    InvalidCoefficientsError,
    PTSpectrumReport,
    SimplexCoefficients,
    build_state,
    classify,
)
from .witness import WitnessConstruction, construct_witness_vector, witness_operator

#: input tables whose sum deviates from one by at most this are renormalized
RENORM_TOL = 1e-9

REASON_PPT = "no negative partial-transpose eigenvalue"
REASON_BOUNDARY = "partial transpose sits on the positivity boundary"


def complex_to_json(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def vector_to_json(v) -> list:
    return [complex_to_json(z) for z in np.asarray(v).ravel()]


def matrix_to_json(m) -> list:
    return [[complex_to_json(z) for z in row] for row in np.asarray(m)]


def real_vector_to_json(v) -> list:
    return [float(x) for x in np.asarray(v).ravel()]


def parse_coefficients(obj) -> tuple[SimplexCoefficients, bool]:
    """Coefficient table from a decoded input file, applying the renormalization rule.

    A sum within RENORM_TOL of one is silently scaled to exactly one (the
    report records that this happened); anything further off, a negative
    entry or a malformed table raises InvalidCoefficientsError.
    """
    if not isinstance(obj, dict) or "d" not in obj or "c" not in obj:
        raise InvalidCoefficientsError('input must be an object with keys "d" and "c"')
    d = obj["d"]
    if not isinstance(d, int):
        raise InvalidCoefficientsError(f'"d" must be an integer, got {d!r}')
    try:
        c = np.asarray(obj["c"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidCoefficientsError(f"coefficient table is not numeric: {exc}") from exc
    if c.shape != (d, d):
        raise InvalidCoefficientsError(f"table shape {c.shape} does not match d={d}")
    if not np.all(np.isfinite(c)):
        raise InvalidCoefficientsError("coefficient table contains non-finite entries")
    if c.min() < 0.0:
        raise InvalidCoefficientsError(f"negative coefficient {c.min()!r}")
    total = float(c.sum())
    renormalized = False
    if abs(total - 1.0) > RENORM_TOL:
        raise InvalidCoefficientsError(f"coefficients sum to {total!r}, beyond tolerance")
    if total != 1.0:
        c = c / total
        renormalized = True
    return SimplexCoefficients(d=d, c=c), renormalized


def coefficients_to_json(coeffs: SimplexCoefficients) -> dict:
    return {"d": coeffs.d, "c": [[float(x) for x in row] for row in coeffs.c]}


def classification_to_json(rep: PTSpectrumReport) -> dict:
    return {
        "eigenvalues": real_vector_to_json(rep.eigenvalues),
        "lambda_min": float(rep.lambda_min),
        "negative_count": int(rep.negative_count),
        "classification": rep.classification,
    }


def witness_to_json(wc: WitnessConstruction) -> dict:
    return {
        "lambda_min": wc.lambda_min,
        "mu0": float(wc.schmidt.coefficients[0]),
        "mu1": float(wc.schmidt.coefficients[1]),
        "u": [vector_to_json(wc.u[m]) for m in range(3)],
        "alpha": [vector_to_json(wc.alpha[m]) for m in range(3)],
        "psi": vector_to_json(wc.psi),
        "C": matrix_to_json(wc.C),
        "minors": vector_to_json(wc.minors),
        "det_C": complex_to_json(wc.det_C),
        "phi_tilde": vector_to_json(wc.phi_tilde),
        "phi": vector_to_json(wc.phi),
        "schmidt_coefficients": real_vector_to_json(wc.schmidt.coefficients),
        "schmidt_left": matrix_to_json(wc.schmidt.left_vectors.T),
        "schmidt_right": matrix_to_json(wc.schmidt.right_vectors.T),
        "schmidt_rank": wc.schmidt.schmidt_rank,
    }


def filter_to_json(rep: FilterReport) -> dict:
    return {
        "P_A": matrix_to_json(rep.P_A),
        "P_B": matrix_to_json(rep.P_B),
        "q": rep.q,
        "sigma": matrix_to_json(rep.sigma),
        "sigma_pt_spectrum": real_vector_to_json(rep.sigma_pt_spectrum),
        "p_rho_max": rep.p_rho_max,
        "p_sigma_max": rep.p_sigma_max,
        "qubit_more_robust": rep.qubit_more_robust,
        "robustness_tie": rep.robustness_tie,
    }


def analysis_report(
    coeffs: SimplexCoefficients,
    renormalized: bool = False,
    seed_used=None,
) -> dict:
    """Full pipeline report for one coefficient table.

    When the state is NPT the witness and filter sections are populated;
    otherwise they are null and ``reason`` says why.
    """
    rep = classify(coeffs)
    out = {
        "tool_version": __version__,
        "seed_used": seed_used,
        "input": coefficients_to_json(coeffs),
        "renormalized": bool(renormalized),
        "classification": classification_to_json(rep),
        "witness": None,
        "witness_spectrum": None,
        "filter": None,
        "reason": None,
    }
    if rep.classification != NPT:
        out["reason"] = REASON_PPT if rep.classification == PPT else REASON_BOUNDARY
        return out
    wc = construct_witness_vector(coeffs)
    wop = witness_operator(wc)
    out["witness"] = witness_to_json(wc)
    out["witness_spectrum"] = real_vector_to_json(np.linalg.eigvalsh(wop.W))
    out["filter"] = filter_to_json(filter_report(build_state(coeffs), wc))
    return out


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def validate_report(report: dict) -> None:
    """Re-validate a decoded report; raises ValueError on any inconsistency."""
    required = {
        "tool_version",
        "seed_used",
        "input",
        "renormalized",
        "classification",
        "witness",
        "witness_spectrum",
        "filter",
        "reason",
    }
    missing = required - set(report)
    if missing:
        raise ValueError(f"report is missing keys {sorted(missing)}")
    coeffs, _ = parse_coefficients(report["input"])
    cls = report["classification"]
    eigs = cls["eigenvalues"]
    if len(eigs) != coeffs.d**2:
        raise ValueError(f"classification lists {len(eigs)} eigenvalues for d={coeffs.d}")
    if eigs != sorted(eigs):
        raise ValueError("classification eigenvalues are not ascending")
    if cls["lambda_min"] != eigs[0]:
        raise ValueError("lambda_min does not equal the smallest eigenvalue")
    if cls["classification"] not in (NPT, PPT, BOUNDARY):
        raise ValueError(f"unknown classification {cls['classification']!r}")
    is_npt = cls["classification"] == NPT
    if is_npt and (report["witness"] is None or report["filter"] is None):
        raise ValueError("NPT report lacks witness or filter section")
    if not is_npt and report["reason"] is None:
        raise ValueError("non-NPT report lacks a reason code")
    if not is_npt and (report["witness"] is not None or report["filter"] is not None):
        raise ValueError("non-NPT report carries witness or filter data")
