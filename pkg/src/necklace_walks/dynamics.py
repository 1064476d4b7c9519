"""Time evolution, time-averaged distributions and mixing of the walk.

Everything here works on a :class:`~necklace_walks.bloch.FullSpectrum`.
The instantaneous vertex distribution is

    p_x(t) = | sum_a exp(-i lambda_a t) <x|psi_a><psi_a|phi_0> |^2,

its uniform average over [0, T] has the exact closed form

    pbar_x(T) = sum_{a,b} <x|psi_a><psi_a|phi_0><psi_b|x><phi_0|psi_b>
                * G(lambda_a - lambda_b, T),

with kernel G(0, T) = 1 and G(D, T) = (1 - exp(-i D T)) / (i D T), and the
T -> infinity limit keeps only pairs inside the same degenerate eigenspace.
No quadrature is involved; the quadrature route lives in
:mod:`necklace_walks.oracle` as an independent cross-check.

Total variation distance follows the un-halved convention
``sum_x |p_x - q_x|`` with range [0, 2].
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .bloch import FullSpectrum
from .errors import (
    AmbiguousDegeneracyWarning,
    InvalidParameterError,
    NumericalFailureError,
)
from .graphs import NecklaceSpec

NEGATIVE_CLAMP = 1e-12
DISTRIBUTION_SUM_TOL = 1e-9
STATE_NORM_TOL = 1e-12


def vertex_state(necklace: NecklaceSpec, j: int, m: int) -> np.ndarray:
    """Unit state concentrated on vertex (j, m), 1-based."""
    phi = np.zeros(necklace.n_vertices, dtype=complex)
    phi[necklace.flat_index(j, m)] = 1.0
    return phi


def default_degeneracy_tolerance(eigenvalues: np.ndarray) -> float:
    """Default tolerance 1e-8 * max|lambda|.

    Exact degeneracies reproduce to solver precision (~1e-12 absolute)
    while genuine gaps shrink like 1/K^2, which stays orders of magnitude
    above this threshold at usable sizes.
    """
    scale = float(np.abs(eigenvalues).max()) if len(eigenvalues) else 0.0
    return 1e-8 * (scale if scale > 0.0 else 1.0)


@dataclass(frozen=True)
class DegeneracyPartition:
    """Grouping of eigenpair indices into (numerically) equal eigenvalues."""

    groups: list[np.ndarray]
    tau_deg: float
    ambiguous: bool = field(default=False)

    @property
    def group_id(self) -> np.ndarray:
        gid = np.empty(sum(len(g) for g in self.groups), dtype=int)
        for i, g in enumerate(self.groups):
            gid[g] = i
        return gid


def degeneracy_partition(eigenvalues: np.ndarray, tau_deg: float) -> DegeneracyPartition:
    """Partition eigenvalue indices by a sorted sweep with threshold ``tau_deg``.

    Adjacent sorted values closer than ``tau_deg`` share a group.  If some
    cross-group gap falls within a factor 10 of ``tau_deg`` the grouping is
    ambiguous: an :class:`AmbiguousDegeneracyWarning` is emitted and the
    partition is flagged.
    """
    if tau_deg <= 0.0:
        raise InvalidParameterError(f"tau_deg must be positive, got {tau_deg}")
    order = np.argsort(eigenvalues, kind="stable")
    lam_sorted = eigenvalues[order]
    groups: list[np.ndarray] = []
    start = 0
    ambiguous = False
    for i in range(1, len(lam_sorted) + 1):
        if i == len(lam_sorted) or lam_sorted[i] - lam_sorted[i - 1] > tau_deg:
            groups.append(np.sort(order[start:i]))
            if i < len(lam_sorted) and lam_sorted[i] - lam_sorted[i - 1] <= 10.0 * tau_deg:
                ambiguous = True
            start = i
    if ambiguous:
        warnings.warn(
            "a spectral gap lies within 10x of tau_deg; degenerate groups "
            "may be merged or split unreliably",
            AmbiguousDegeneracyWarning,
        )
    return DegeneracyPartition(groups=groups, tau_deg=tau_deg, ambiguous=ambiguous)


def _check_state(phi0: np.ndarray, n: int) -> np.ndarray:
    phi = np.asarray(phi0, dtype=complex)
    if phi.shape != (n,):
        raise InvalidParameterError(f"initial state has shape {phi.shape}, expected ({n},)")
    norm = np.linalg.norm(phi)
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise InvalidParameterError(f"initial state norm {norm} is not 1 within {STATE_NORM_TOL}")
    return phi


def _finalize_distribution(p: np.ndarray) -> np.ndarray:
    """Clamp roundoff negatives and verify normalization."""
    low = p.min()
    if low < -NEGATIVE_CLAMP:
        raise NumericalFailureError(f"distribution entry {low} below -{NEGATIVE_CLAMP}")
    p = np.where(p < 0.0, 0.0, p)
    total = p.sum()
    if abs(total - 1.0) > DISTRIBUTION_SUM_TOL:
        raise NumericalFailureError(f"distribution sums to {total}, not 1 within {DISTRIBUTION_SUM_TOL}")
    return p


def probability_at_time(spec: FullSpectrum, phi0: np.ndarray, t: float) -> np.ndarray:
    """Vertex distribution p_x(t) of the walk started in ``phi0``."""
    if t < 0.0:
        raise InvalidParameterError(f"time must be >= 0, got {t}")
    phi = _check_state(phi0, spec.necklace.n_vertices)
    overlaps = spec.vectors.conj().T @ phi
    amplitudes = spec.vectors @ (np.exp(-1j * spec.eigenvalues * t) * overlaps)
    return _finalize_distribution(np.abs(amplitudes) ** 2)


class _PairAverager:
    """Cached pair-sum machinery shared by the averaging operations.

    Holds W[x, a] = psi_a[x] * <psi_a|phi_0>, the degeneracy partition, the
    limiting distribution and the gap-sum entering the convergence bound,
    so that sweeps over many T values reuse one setup.
    """

    def __init__(self, spec: FullSpectrum, phi0: np.ndarray, tau_deg: float | None):
        self.spec = spec
        phi = _check_state(phi0, spec.necklace.n_vertices)
        if tau_deg is None:
            tau_deg = default_degeneracy_tolerance(spec.eigenvalues)
        self.partition = degeneracy_partition(spec.eigenvalues, tau_deg)
        self.overlaps = spec.vectors.conj().T @ phi
        self.weights = spec.vectors * self.overlaps[None, :]   # (N, A)
        gid = self.partition.group_id
        self.same_group = gid[:, None] == gid[None, :]
        self.gaps = spec.eigenvalues[:, None] - spec.eigenvalues[None, :]
        pi = np.zeros(spec.necklace.n_vertices)
        for group in self.partition.groups:
            amp = self.weights[:, group].sum(axis=1)
            pi += np.abs(amp) ** 2
        self.limiting = _finalize_distribution(pi)
        cross = ~self.same_group
        inv_gap = np.where(cross, np.abs(self.gaps), 1.0)
        self._bound_sum = float(
            ((np.abs(self.overlaps) ** 2)[:, None] * cross / inv_gap).sum()
        )

    def averaged(self, T: float) -> np.ndarray:
        if T <= 0.0:
            raise InvalidParameterError(f"averaging window must be positive, got {T}")
        kernel = np.where(
            self.same_group,
            1.0 + 0.0j,
            -np.expm1(-1j * self.gaps * T) / np.where(self.same_group, 1.0, 1j * self.gaps * T),
        )
        # pbar_x = sum_{a,b} W[x,a] kernel[a,b] conj(W[x,b])
        partial = self.weights.conj() @ kernel.T
        pbar = np.einsum("xa,xa->x", self.weights, partial).real
        return _finalize_distribution(pbar)

    def bound(self, T: float) -> float:
        if T <= 0.0:
            raise InvalidParameterError(f"averaging window must be positive, got {T}")
        return 2.0 * self._bound_sum / T


def time_averaged(
    spec: FullSpectrum, phi0: np.ndarray, T: float, tau_deg: float | None = None
) -> np.ndarray:
    """Distribution averaged uniformly over measurement times in [0, T].

    Uses the exact kernel G(D, T); the D = 0 branch is taken for pairs in
    the same degenerate group of the partition at ``tau_deg``.
    """
    return _PairAverager(spec, phi0, tau_deg).averaged(T)


def limiting_distribution(
    spec: FullSpectrum, phi0: np.ndarray, tau_deg: float | None = None
) -> np.ndarray:
    """T -> infinity limit of the time-averaged distribution.

    Computed as ``sum_g |<x| P_g |phi_0>|^2`` over projectors P_g onto the
    degenerate eigenspaces, which makes the result independent of the
    basis chosen inside each degenerate group.
    """
    return _PairAverager(spec, phi0, tau_deg).limiting


def tv_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Un-halved total variation distance sum_x |p_x - q_x|, in [0, 2]."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise InvalidParameterError(f"length mismatch: {p.shape} vs {q.shape}")
    return float(np.abs(p - q).sum())


def tv_convergence_bound(
    spec: FullSpectrum, phi0: np.ndarray, T: float, tau_deg: float | None = None
) -> float:
    """Upper bound on ||pbar(T) - pi|| from overlaps and inverse gaps.

    Sums 2 |<psi_a|phi_0>|^2 / (T |lambda_a - lambda_b|) over ordered pairs
    of eigenpairs lying in different degenerate groups.  Dominates the
    exact total variation distance at every T.
    """
    return _PairAverager(spec, phi0, tau_deg).bound(T)


@dataclass(frozen=True)
class MixingResult:
    """Outcome of the geometric-grid mixing-time search.

    ``t_mix`` is the smallest grid time from which the total variation
    distance stays at or below ``epsilon`` on the rest of the grid, or
    None if that never happens up to ``grid[-1]``.
    """

    epsilon: float
    t_mix: float | None
    grid: np.ndarray
    tv_values: np.ndarray

    @property
    def tv_at_hi(self) -> float:
        return float(self.tv_values[-1])

    @property
    def found(self) -> bool:
        return self.t_mix is not None


def geometric_grid(t_lo: float, t_hi: float, ratio: float = 1.05) -> np.ndarray:
    """Times t_lo * ratio^i up to and including the first point >= t_hi."""
    if t_lo <= 0.0 or t_hi < t_lo:
        raise InvalidParameterError(f"bad grid limits ({t_lo}, {t_hi})")
    if ratio <= 1.0:
        raise InvalidParameterError(f"grid ratio must exceed 1, got {ratio}")
    count = max(0, math.ceil(math.log(t_hi / t_lo) / math.log(ratio)))
    return t_lo * ratio ** np.arange(count + 1)


def mixing_time(
    spec: FullSpectrum,
    phi0: np.ndarray,
    epsilon: float,
    t_hi: float,
    t_lo: float = 1.0,
    ratio: float = 1.05,
    tau_deg: float | None = None,
) -> MixingResult:
    """Empirical mixing time on a geometric time grid.

    Total variation is not monotone in T, so the defining condition
    "within epsilon for every later time" is enforced across the grid:
    the result is the earliest grid point after which no grid point
    exceeds ``epsilon``.
    """
    if not (0.0 < epsilon <= 2.0):
        raise InvalidParameterError(f"epsilon must lie in (0, 2], got {epsilon}")
    averager = _PairAverager(spec, phi0, tau_deg)
    grid = geometric_grid(t_lo, t_hi, ratio)
    tvs = np.array(
        [tv_distance(averager.averaged(T), averager.limiting) for T in grid]
    )
    ok_from_here = np.minimum.accumulate((tvs <= epsilon)[::-1])[::-1]
    if not ok_from_here.any():
        t_mix = None
    else:
        t_mix = float(grid[int(np.argmax(ok_from_here))])
    return MixingResult(epsilon=epsilon, t_mix=t_mix, grid=grid, tv_values=tvs)


__all__ = [
    "DegeneracyPartition",
    "MixingResult",
    "default_degeneracy_tolerance",
    "degeneracy_partition",
    "geometric_grid",
    "limiting_distribution",
    "mixing_time",
    "probability_at_time",
    "time_averaged",
    "tv_convergence_bound",
    "tv_distance",
    "vertex_state",
]
