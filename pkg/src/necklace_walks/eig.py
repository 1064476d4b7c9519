"""Dense Hermitian eigendecomposition with deterministic output conventions.

All spectral code in the package funnels through :func:`eigh` so that
eigenvalue ordering and eigenvector phases are fixed once: eigenvalues
ascending, each eigenvector scaled so its largest-magnitude component is
real and positive.  Real symmetric input follows the same path with zero
imaginary parts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrixError, NumericalFailureError

HERMITICITY_TOL = 1e-12

# Relative band inside which component magnitudes count as tied when the
# phase-anchor component is picked; ties resolve to the lowest index.
_PHASE_TIE_BAND = 1e-6


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (ascending) and unit eigenvectors (columns) of a Hermitian matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.eigenvalues)


def fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Return a copy of ``vectors`` with each column's phase anchored.

    The anchor is the lowest-index component whose magnitude is within a
    small relative band of the column maximum; the column is rotated so
    that component becomes real and positive.  An exact floating-point tie
    never fires reliably, hence the band.
    """
    out = np.array(vectors, dtype=complex, copy=True)
    for col in range(out.shape[1]):
        v = out[:, col]
        mags = np.abs(v)
        top = mags.max()
        if top == 0.0:
            continue
        anchor = int(np.argmax(mags >= top * (1.0 - _PHASE_TIE_BAND)))
        out[:, col] = v * (np.conj(v[anchor]) / mags[anchor])
    return out


def eigh(matrix, hermiticity_tol: float = HERMITICITY_TOL) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian (or real symmetric) matrix.

    Parameters
    ----------
    matrix : array_like, square
        Hermitian within ``hermiticity_tol`` entrywise; it is symmetrized
        before factorization.
    hermiticity_tol : float
        Entrywise tolerance on ``|A - A^H|``.

    Returns
    -------
    EigenDecomposition
        Eigenvalues ascending; eigenvector columns unit-norm with the
        deterministic phase convention of :func:`fix_phases`.

    Raises
    ------
    InvalidMatrixError
        If the input is not square or not Hermitian within tolerance.
    NumericalFailureError
        If the underlying solver does not converge.
    """
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidMatrixError(f"expected a square matrix, got shape {a.shape}")
    deviation = np.abs(a - a.conj().T).max() if a.size else 0.0
    if deviation > hermiticity_tol:
        raise InvalidMatrixError(
            f"matrix is not Hermitian: max |A - A^H| = {deviation:.3e} "
            f"exceeds {hermiticity_tol:.1e}"
        )
    a = (a + a.conj().T) / 2.0
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"eigensolver did not converge: {exc}") from exc
    return EigenDecomposition(
        eigenvalues=np.asarray(values, dtype=float),
        eigenvectors=fix_phases(vectors),
    )
