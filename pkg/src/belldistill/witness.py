"""Rank-2 eigenvector construction and the one-copy distillability witness.

For an NPT Bell-diagonal qutrit pair the smallest eigenvalue of the
partially transposed state admits an eigenvector of Schmidt rank 2. It is
assembled from the ground eigenvector of a single 3 x 3 block: Weyl
conjugation propagates that eigenvector through the other blocks, a
Fourier transform turns the triple into coefficient vectors, and a fixed
two-term superposition followed by the Bell-frame swap yields the vector.
Its partially transposed projector is an entanglement witness whose
negative expectation certifies one-copy distillability.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import (
    SchmidtDecomposition,
    dag,
    expectation,
    hermitian_eigensystem,
    partial_transpose,
    schmidt_decompose,
)
from .simplex import NPT, SimplexCoefficients, build_state, classify, pt_block
from .weyl import fourier, swap_conjugation, weyl

#: |det C| above this fails rank certification
DET_TOL = 1e-10

#: at least one principal 2x2 minor of C must exceed this
MINOR_TOL = 1e-9

#: imaginary parts above this in a witness expectation signal a Hermiticity bug
IMAG_TOL = 1e-11


class NotNPTError(ValueError):
    """Witness construction requires a strictly NPT input state."""


class RankCertificationError(RuntimeError):
    """The coefficient matrix failed its rank-2 certificate.

    The construction guarantees rank 2 for NPT inputs, so this signals
    numerical breakdown rather than a mathematical possibility.
    """


@dataclass(frozen=True)
class WitnessConstruction:
    """Full trace of the rank-2 eigenvector build.

    u[m] is the ground eigenvector of block B_m (row m of a 3 x 3 array),
    alpha[m] its Fourier transform, psi the fixed mixing amplitudes, C the
    3 x 3 coefficient matrix of the pre-swap vector phi_tilde, minors its
    principal 2 x 2 minors, and phi the normalized rank-2 eigenvector with
    its Schmidt data.
    """

    lambda_min: float
    u: np.ndarray
    alpha: np.ndarray
    psi: np.ndarray
    C: np.ndarray
    minors: np.ndarray
    det_C: complex
    phi_tilde: np.ndarray
    phi: np.ndarray
    schmidt: SchmidtDecomposition


@dataclass(frozen=True)
class WitnessOperator:
    """Partially transposed projector of the witness vector, with its mirror.

    W is (|phi><phi|)^Gamma, spectrum {mu0^2, mu1^2, mu0 mu1, -mu0 mu1, 0 x5}.
    mirror = mu0^2 * 1 - W is positive semidefinite.
    """

    W: np.ndarray
    mirror: np.ndarray
    mu0: float
    mu1: float


def _principal_minor(c: np.ndarray, j: int) -> complex:
    rows = [i for i in range(3) if i != j]
    return complex(np.linalg.det(c[np.ix_(rows, rows)]))


def construct_witness_vector(coeffs: SimplexCoefficients) -> WitnessConstruction:
    """Build the Schmidt-rank-2 ground eigenvector of the partial transpose.

    Only d = 3 is supported and the input must classify as NPT; PPT and
    boundary tables are refused because the construction has no meaning
    there. The result is deterministic for identical input.
    """
    if coeffs.d != 3:
        raise ValueError(f"construction is specific to d=3, got d={coeffs.d}")
    report = classify(coeffs)
    if report.classification != NPT:
        raise NotNPTError(
            f"state classifies as {report.classification} "
            f"(lambda_min = {report.lambda_min!r}); need NPT"
        )

    b0 = pt_block(coeffs, 0)
    eig = hermitian_eigensystem(b0)
    lambda_min = float(eig.eigenvalues[0])
    u0 = eig.eigenvectors[:, 0]

    # u_{m+2} = W_{1,0} u_m keeps the relative phases the identities need;
    # only u_0 comes from an eigensolve, the other two are derived.
    w10 = weyl(3, 1, 0)
    u2 = w10 @ u0
    u1 = w10 @ u2
    u = np.array([u0, u1, u2])

    f = fourier(3)
    alpha = np.array([dag(f) @ u[m] for m in range(3)])

    psi = np.array([1.0, 0.0, -1.0], dtype=complex) / np.sqrt(2.0)
    phi_tilde = np.zeros(9, dtype=complex)
    for i in range(3):
        if psi[i] == 0.0:
            continue
        for k in range(3):
            phi_tilde[3 * k + (k + i) % 3] += psi[i] * alpha[i, k]

    c_matrix = phi_tilde.reshape(3, 3)
    det_c = complex(np.linalg.det(c_matrix))
    minors = np.array([_principal_minor(c_matrix, j) for j in range(3)])
    if abs(det_c) > DET_TOL or np.abs(minors).max() <= MINOR_TOL:
        raise RankCertificationError(
            f"|det C| = {abs(det_c):.3e}, max |minor| = {np.abs(minors).max():.3e}"
        )

    phi = swap_conjugation(3) @ phi_tilde
    schmidt = schmidt_decompose(phi, 3, 3)
    if schmidt.schmidt_rank != 2:
        raise RankCertificationError(
            f"Schmidt rank {schmidt.schmidt_rank} != 2 despite minor certificate"
        )

    for arr in (u, alpha, psi, c_matrix, minors, phi_tilde, phi):
        arr.setflags(write=False)
    return WitnessConstruction(
        lambda_min=lambda_min,
        u=u,
        alpha=alpha,
        psi=psi,
        C=c_matrix,
        minors=minors,
        det_C=det_c,
        phi_tilde=phi_tilde,
        phi=phi,
        schmidt=schmidt,
    )


def witness_operator(wc: WitnessConstruction) -> WitnessOperator:
    """Witness W = (|phi><phi|)^Gamma and its mirrored companion."""
    projector = np.outer(wc.phi, wc.phi.conj())
    w = partial_transpose(projector, 3, 3)
    mu0 = float(wc.schmidt.coefficients[0])
    mu1 = float(wc.schmidt.coefficients[1])
    mirror = mu0 ** 2 * np.eye(9) - w
    w.setflags(write=False)
    mirror.setflags(write=False)
    return WitnessOperator(W=w, mirror=mirror, mu0=mu0, mu1=mu1)


def detect(wop: WitnessOperator, test_state: np.ndarray) -> float:
    """Witness expectation trace(W rho) as a real number.

    Negative values certify one-copy distillability of ``test_state``.
    An imaginary part above IMAG_TOL raises, catching non-Hermitian input
    early.
    """
    test_state = np.asarray(test_state)
    if test_state.shape != wop.W.shape:
        raise ValueError(
            f"state shape {test_state.shape} does not match witness {wop.W.shape}"
        )
    value = complex(np.trace(wop.W @ test_state))
    if abs(value.imag) > IMAG_TOL:
        raise ValueError(f"witness expectation has imaginary part {value.imag:.3e}")
    return value.real


def product_vector_positivity_check(wop: WitnessOperator, trials: int, seed) -> float:
    """Minimum of <a,b|W|a,b> over random product vectors.

    Samples ``trials`` isotropically random product vectors and returns the
    smallest expectation, which for a valid witness never drops below zero
    beyond roundoff.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((trials, 3)) + 1j * rng.standard_normal((trials, 3))
    b = rng.standard_normal((trials, 3)) + 1j * rng.standard_normal((trials, 3))
    a /= np.linalg.norm(a, axis=1, keepdims=True)
    b /= np.linalg.norm(b, axis=1, keepdims=True)
    products = np.einsum("ni,nj->nij", a, b).reshape(trials, 9)
    values = np.einsum("ni,ij,nj->n", products.conj(), wop.W, products).real
    return float(values.min())


def eigenvector_residual(coeffs: SimplexCoefficients, wc: WitnessConstruction) -> float:
    """Max-norm of rho^Gamma phi - lambda_min phi for the generating state."""
    rho_pt = partial_transpose(build_state(coeffs), 3, 3)
    return float(np.abs(rho_pt @ wc.phi - wc.lambda_min * wc.phi).max())


def witness_expectation_from_state(coeffs: SimplexCoefficients, wc: WitnessConstruction) -> float:
    """<phi| rho^Gamma |phi> evaluated directly on the generating state."""
    rho_pt = partial_transpose(build_state(coeffs), 3, 3)
    return expectation(rho_pt, wc.phi).real
