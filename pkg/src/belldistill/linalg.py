"""Dense complex linear algebra for small bipartite systems.

Everything here operates on plain numpy arrays: matrices are square
complex 2-d arrays, state vectors are complex 1-d arrays, and a bipartite
space of local dimensions (dA, dB) is indexed row-major, |a,b> -> a*dB + b.
Dimensions stay tiny (at most 81), so all routines favour clarity and
deterministic output over speed.
"""

from dataclasses import dataclass

import numpy as np

#: max-norm tolerance for accepting a matrix as Hermitian
HERMITICITY_TOL = 1e-12

#: a singular / Schmidt value counts as nonzero iff > RANK_RTOL * largest
RANK_RTOL = 1e-9


def dag(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product A (x) B with complex dtype."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_transpose(m: np.ndarray, d_a: int, d_b: int) -> np.ndarray:
    """Transpose the second tensor factor of a (dA*dB) x (dA*dB) matrix.

    out[(a,b),(a',b')] = m[(a,b'),(a',b)]. The operation is an involution,
    preserves the trace and preserves Hermiticity.
    """
    m = np.asarray(m)
    n = d_a * d_b
    if m.shape != (n, n):
        raise ValueError(f"matrix shape {m.shape} does not match dims ({d_a},{d_b})")
    return m.reshape(d_a, d_b, d_a, d_b).transpose(0, 3, 2, 1).reshape(n, n)


def expectation(m: np.ndarray, v: np.ndarray) -> complex:
    """Quadratic form <v|M|v>."""
    m = np.asarray(m)
    v = np.asarray(v, dtype=complex)
    if m.shape != (v.size, v.size):
        raise ValueError(f"matrix shape {m.shape} does not match vector dim {v.size}")
    return complex(v.conj() @ m @ v)


def _fix_phase(v: np.ndarray) -> np.ndarray:
    """Rotate a vector's global phase so its largest-modulus entry is real positive.

    The first index attaining the maximum modulus is used, which makes the
    convention deterministic also for entries of equal modulus.
    """
    j = int(np.argmax(np.abs(v)))
    pivot = v[j]
    if pivot == 0:
        return v
    return v * (abs(pivot) / pivot)


@dataclass(frozen=True)
class HermitianEigensystem:
    """Eigenvalues ascending; eigenvectors[:, i] is the unit eigenvector of eigenvalues[i]."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Sum of lambda_i |v_i><v_i|."""
        return (self.eigenvectors * self.eigenvalues) @ dag(self.eigenvectors)


def hermitian_eigensystem(h: np.ndarray) -> HermitianEigensystem:
    """Full eigendecomposition of a Hermitian matrix.

    Eigenvalues are returned in ascending order and each eigenvector carries
    the deterministic phase convention of :func:`_fix_phase`. Inside a
    degenerate cluster the returned basis is whatever the solver produces;
    callers must not rely on a particular choice there.

    Raises ValueError if ``h`` deviates from Hermiticity by more than
    HERMITICITY_TOL in max-norm; numpy raises LinAlgError in the (never
    observed at these sizes) event the iteration fails to converge.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    dev = np.abs(h - dag(h)).max()
    if dev > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian: max |H - H^dag| = {dev:.3e}")
    eigenvalues, vectors = np.linalg.eigh(h)
    vectors = vectors.copy()
    for i in range(vectors.shape[1]):
        vectors[:, i] = _fix_phase(vectors[:, i])
    eigenvalues.setflags(write=False)
    vectors.setflags(write=False)
    return HermitianEigensystem(eigenvalues=eigenvalues, eigenvectors=vectors)


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Schmidt data of a bipartite vector.

    coefficients are strictly positive and descending; left_vectors[:, i]
    and right_vectors[:, i] are the matching orthonormal local vectors, so
    the input equals sum_i coefficients[i] * kron(left[:, i], right[:, i]).
    schmidt_rank counts coefficients above RANK_RTOL times the largest.
    """

    coefficients: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray
    schmidt_rank: int

    def reconstruct(self) -> np.ndarray:
        out = np.zeros(self.left_vectors.shape[0] * self.right_vectors.shape[0], dtype=complex)
        for mu, a, b in zip(self.coefficients, self.left_vectors.T, self.right_vectors.T):
            out += mu * np.kron(a, b)
        return out


def schmidt_decompose(v: np.ndarray, d_a: int, d_b: int) -> SchmidtDecomposition:
    """Schmidt decomposition of a bipartite vector via SVD of its coefficient matrix.

    Works for any nonzero vector; for a unit vector the squared coefficients
    sum to one. Raises ValueError on a zero vector or a dimension mismatch.
    """
    v = np.asarray(v, dtype=complex)
    if v.size != d_a * d_b:
        raise ValueError(f"vector dim {v.size} does not match dims ({d_a},{d_b})")
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("cannot Schmidt-decompose the zero vector")
    coeff_matrix = v.reshape(d_a, d_b)
    u, s, vh = np.linalg.svd(coeff_matrix, full_matrices=False)
    keep = s > 0.0
    s = s[keep]
    left = u[:, keep].copy()
    right = vh[keep, :].T.copy()
    # phase freedom sits in the pair (a_i, b_i); rotate it into the convention
    for i in range(s.size):
        j = int(np.argmax(np.abs(left[:, i])))
        pivot = left[j, i]
        ph = abs(pivot) / pivot
        left[:, i] *= ph
        right[:, i] /= ph
    rank = int(np.sum(s > RANK_RTOL * s[0]))
    for arr in (s, left, right):
        arr.setflags(write=False)
    return SchmidtDecomposition(
        coefficients=s, left_vectors=left, right_vectors=right, schmidt_rank=rank
    )
