"""Bell-diagonal states: construction, partial-transpose blocks and classification.

A Bell-diagonal state of two qudits is fixed by a d x d probability table
c[k, l], the weight of the Bell projector with Weyl index (k, l). The
partial transpose of such a state is block-diagonal in the Bell-unitary
frame, with d Hermitian d x d blocks; for odd d the blocks all share one
spectrum. Everything in this module works for general d >= 2.
"""

from dataclasses import dataclass, field

import numpy as np

from .linalg import dag, hermitian_eigensystem, kron, partial_transpose
from .weyl import bell_unitary, bell_vector, phase_table, weyl

#: classification labels for the partial-transpose spectrum
NPT = "NPT"
PPT = "PPT"
BOUNDARY = "BOUNDARY"

#: |lambda_min| below this counts as sitting on the PPT boundary
BOUNDARY_TOL = 1e-12

#: coefficient tables must sum to one within this tolerance
COEFF_SUM_TOL = 1e-12

#: relative tolerance for clustering degenerate eigenvalues
DEGENERACY_RTOL = 1e-9

#: the bit generator behind all sampling in this package
GENERATOR_NAME = "PCG64"


class InvalidCoefficientsError(ValueError):
    """Coefficient table violates positivity or normalization."""


class SamplingExhaustedError(RuntimeError):
    """Rejection sampling hit its retry cap; raise the cap and retry."""


@dataclass(frozen=True)
class SimplexCoefficients:
    """Probability table of a Bell-diagonal state.

    Entries must be nonnegative and sum to one within COEFF_SUM_TOL.
    """

    d: int
    c: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        if self.d < 2:
            raise InvalidCoefficientsError(f"dimension must be >= 2, got {self.d}")
        if c.shape != (self.d, self.d):
            raise InvalidCoefficientsError(
                f"coefficient table shape {c.shape} does not match d={self.d}"
            )
        if not np.all(np.isfinite(c)):
            raise InvalidCoefficientsError("coefficient table contains non-finite entries")
        if c.min() < 0.0:
            raise InvalidCoefficientsError(f"negative coefficient {c.min():.3e}")
        total = c.sum()
        if abs(total - 1.0) > COEFF_SUM_TOL:
            raise InvalidCoefficientsError(f"coefficients sum to {total!r}, not 1")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", int(self.d))


@dataclass(frozen=True)
class PTSpectrumReport:
    """Ascending partial-transpose spectrum with its NPT / PPT verdict."""

    eigenvalues: np.ndarray
    lambda_min: float
    negative_count: int
    classification: str = field(default=PPT)


def build_state(coeffs: SimplexCoefficients) -> np.ndarray:
    """Density matrix sum_kl c[k,l] |Omega_kl><Omega_kl|."""
    d = coeffs.d
    rho = np.zeros((d * d, d * d), dtype=complex)
    for k in range(d):
        for l in range(d):
            v = bell_vector(d, k, l)
            rho += coeffs.c[k, l] * np.outer(v, v.conj())
    return rho


def apply_weyl_channel(coeffs: SimplexCoefficients) -> np.ndarray:
    """Action of the Weyl channel on one side of the canonical Bell projector.

    Conjugates |Omega_00><Omega_00| by the Kraus operators W_kl (x) 1 with
    weights c[k, l]. Agrees with :func:`build_state` and serves as its
    independent cross-check.
    """
    d = coeffs.d
    omega00 = bell_vector(d, 0, 0)
    p00 = np.outer(omega00, omega00.conj())
    eye = np.eye(d)
    rho = np.zeros_like(p00)
    for k in range(d):
        for l in range(d):
            kraus = kron(weyl(d, k, l), eye)
            rho += coeffs.c[k, l] * (kraus @ p00 @ dag(kraus))
    return rho


def pt_block(coeffs: SimplexCoefficients, m: int) -> np.ndarray:
    """The m-th d x d Hermitian block of the partially transposed state.

    B_m = (1/d) sum_{k,l,y} omega^(y (k-m)) c[k,l] |l-y><l+y|, indices mod d.
    Neighbouring-by-two blocks are related by conjugation with the diagonal
    Weyl operator: B_{m+2} = W_{1,0} B_m W_{1,0}^dag.
    """
    d = coeffs.d
    if not 0 <= m < d:
        raise ValueError(f"block index {m} out of range for d={d}")
    tab = phase_table(d)
    b = np.zeros((d, d), dtype=complex)
    for k in range(d):
        for l in range(d):
            w = coeffs.c[k, l]
            if w == 0.0:
                continue
            for y in range(d):
                b[(l - y) % d, (l + y) % d] += tab[(y * (k - m)) % d] * w
    return b / d


def assemble_pt_from_blocks(coeffs: SimplexCoefficients) -> np.ndarray:
    """Partial transpose rebuilt as U^dag (sum_m |m><m| (x) B_m) U.

    Must agree with the direct partial transpose of :func:`build_state`;
    the pair of routes is used as a consistency oracle in the tests.
    """
    d = coeffs.d
    blocks = np.zeros((d * d, d * d), dtype=complex)
    for m in range(d):
        blocks[m * d:(m + 1) * d, m * d:(m + 1) * d] = pt_block(coeffs, m)
    u = bell_unitary(d)
    return dag(u) @ blocks @ u


def classify(coeffs: SimplexCoefficients) -> PTSpectrumReport:
    """Full ascending spectrum of the partial transpose and its verdict.

    NPT when lambda_min < -BOUNDARY_TOL, PPT when lambda_min > +BOUNDARY_TOL,
    BOUNDARY in the band between (downstream construction divides by
    quantities that vanish there, so the band is reported, not rounded).
    """
    rho = build_state(coeffs)
    rho_pt = partial_transpose(rho, coeffs.d, coeffs.d)
    eigenvalues = hermitian_eigensystem(rho_pt).eigenvalues
    lambda_min = float(eigenvalues[0])
    negative_count = int(np.sum(eigenvalues < -BOUNDARY_TOL))
    if lambda_min < -BOUNDARY_TOL:
        verdict = NPT
    elif lambda_min > BOUNDARY_TOL:
        verdict = PPT
    else:
        verdict = BOUNDARY
    return PTSpectrumReport(
        eigenvalues=eigenvalues,
        lambda_min=lambda_min,
        negative_count=negative_count,
        classification=verdict,
    )


def lambda_min_multiplicity(eigenvalues: np.ndarray) -> int:
    """Multiplicity of the smallest eigenvalue under relative clustering.

    Eigenvalues within DEGENERACY_RTOL times the spectral width of the
    minimum count as degenerate with it.
    """
    eigenvalues = np.asarray(eigenvalues)
    width = float(eigenvalues[-1] - eigenvalues[0])
    return int(np.sum(eigenvalues <= eigenvalues[0] + DEGENERACY_RTOL * width))


def sample_simplex(seed, d: int = 3) -> SimplexCoefficients:
    """Uniform sample from the probability simplex (flat Dirichlet), per seed.

    ``seed`` is anything numpy's default_rng accepts (an integer or a
    SeedSequence); the generator is PCG64, so results are reproducible
    across platforms. Parallel callers should derive disjoint child seeds
    from one SeedSequence rather than share a seed.
    """
    rng = np.random.default_rng(seed)
    c = rng.dirichlet(np.ones(d * d))
    c = c / c.sum()
    return SimplexCoefficients(d=d, c=c.reshape(d, d))


def sample_npt(seed, max_tries: int = 1000, d: int = 3) -> SimplexCoefficients:
    """Rejection-sample a coefficient table whose state is NPT.

    Deterministic per seed. Raises SamplingExhaustedError if no NPT table
    shows up within ``max_tries`` draws.
    """
    if max_tries < 1:
        raise ValueError(f"max_tries must be >= 1, got {max_tries}")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        c = rng.dirichlet(np.ones(d * d))
        coeffs = SimplexCoefficients(d=d, c=(c / c.sum()).reshape(d, d))
        if classify(coeffs).classification == NPT:
            return coeffs
    raise SamplingExhaustedError(f"no NPT sample within {max_tries} tries")
