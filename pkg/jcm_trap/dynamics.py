"""Exact resonant dynamics: precession of the dressed coordinates, the atomic inversion from both the dressed and the
bare-basis formulas, the reduced atomic density matrix and its von Neumann entropy, and sampled time series.

@since 0.1.0
"""

import math
import multiprocessing
from collections import namedtuple
from typing import Any

import numpy as np
from scipy import linalg, special

from . import constants
from .dressed import DressedCoordinates, to_dressed
from .errors import DomainError
from .logger import info
from .states import JointState
from .utils import compensated_row_sums, compensated_sum, reduced_phase, wrap_angle

CHUNK_SIZE = 1024


class TimeGrid(namedtuple('TimeGrid', ['tau'])):
    """Strictly increasing, finite, non-negative scaled times τ = λt.
    """
    __slots__ = ()

    def __new__(cls, tau: Any):
        tau = np.array(tau, dtype=float).ravel()
        tau.flags.writeable = False
        if tau.size < 1 or not np.all(np.isfinite(tau)):
            raise DomainError("A time grid needs at least one finite time")
        if tau[0] < 0 or np.any(np.diff(tau) <= 0):
            raise DomainError("Grid times must be non-negative and strictly increasing")
        return super().__new__(cls, tau)
    # End of __new__()
# End of TimeGrid()


def uniform_grid(tau_max: float, samples: int) -> TimeGrid:
    """Creates `samples` evenly spaced times on [0, tau_max].

    Raises:
    - DomainError: if tau_max <= 0 or samples < 2
    """
    if not tau_max > 0 or samples < 2:
        raise DomainError("A uniform grid needs tau_max > 0 and at least 2 samples")
    return TimeGrid(np.linspace(0.0, tau_max, int(samples)))
# End of uniform_grid()


class AtomDensity(namedtuple('AtomDensity', ['rho_ee', 'rho_eg'])):
    """The reduced atomic density matrix [[ρ_ee, ρ_eg], [ρ_eg*, 1 - ρ_ee]].
    """
    __slots__ = ()

    def __new__(cls, rho_ee: float, rho_eg: complex):
        return super().__new__(cls, float(rho_ee), complex(rho_eg))
    # End of __new__()

    @property
    def rho_gg(self) -> float:
        return 1.0 - self.rho_ee
    # End of rho_gg()

    @property
    def bloch_vector(self) -> tuple:
        """(<σ_x>, <σ_y>, <σ_z>) for σ_x = |e><g| + |g><e| and σ_y = -i|e><g| + i|g><e|.
        """
        return 2.0 * self.rho_eg.real, -2.0 * self.rho_eg.imag, 2.0 * self.rho_ee - 1.0
    # End of bloch_vector()

    def matrix(self) -> np.ndarray:
        return np.array([[self.rho_ee, self.rho_eg], [self.rho_eg.conjugate(), self.rho_gg]], dtype=complex)
    # End of matrix()
# End of AtomDensity()


class InversionSeries(namedtuple('InversionSeries', ['grid', 'sigma_z', 'label'])):
    """<σ_z> sampled on a time grid. Exact series are checked against |σ_z| <= 1.

    Instance Variables:
    - grid (TimeGrid): The sample times
    - sigma_z (np.ndarray): The inversion at each time
    - label (str): One of 'exact-dressed', 'exact-bare' or 'approx'
    """
    __slots__ = ()

    def __new__(cls, grid: TimeGrid, sigma_z: Any, label: str):
        sigma_z = np.array(sigma_z, dtype=float)
        sigma_z.flags.writeable = False
        if label not in constants.SERIES_LABELS:
            raise DomainError("Unknown series label {}".format(label))
        if sigma_z.shape != grid.tau.shape:
            raise DomainError("The series needs one value per grid time")
        if label != constants.APPROX and np.any(np.abs(sigma_z) > 1.0 + 1e-9):
            raise DomainError("An exact inversion left [-1, 1]")
        return super().__new__(cls, grid, sigma_z, label)
    # End of __new__()
# End of InversionSeries()


def rabi_frequency(n: int) -> float:
    """The scaled Rabi frequency Ω_n/λ = 2√(n+1) of the n-th dressed doublet.

    Raises:
    - DomainError: for n < 0
    """
    if n < 0:
        raise DomainError("Photon number must be >= 0, got {}".format(n))
    return 2.0 * math.sqrt(n + 1)
# End of rabi_frequency()


def rabi_frequencies(n_max: int) -> np.ndarray:
    """Return:
    - omega (np.ndarray): 2√(n+1) for n = 0..n_max
    """
    return 2.0 * np.sqrt(np.arange(n_max + 1) + 1.0)
# End of rabi_frequencies()


def _check_time(tau: float):
    if not (math.isfinite(tau) and tau >= 0):
        raise DomainError("Scaled time must be finite and >= 0, got {}".format(tau))
# End of _check_time()


def evolve(coords: DressedCoordinates, tau: float) -> DressedCoordinates:
    """Precesses every shell for a scaled time τ: φ_n -> φ_n - Ω_n τ and χ_n -> χ_n - Ω_n τ/2. Weights and θ_n are
    constants of the motion.

    Params:
    - coords (DressedCoordinates): The coordinates at τ = 0
    - tau (float): Scaled time >= 0

    Return:
    - coords (DressedCoordinates): The coordinates at τ
    """
    _check_time(tau)
    omega = rabi_frequencies(coords.n_max)
    live = coords.w >= constants.DEGENERACY_THRESHOLD
    phi = np.where(live, wrap_angle(coords.phi - reduced_phase(omega, tau)), 0.0)
    chi = np.where(live, wrap_angle(coords.chi - reduced_phase(0.5 * omega, tau)), 0.0)
    return DressedCoordinates(coords.w_minus1, coords.w, coords.theta, chi, phi, coords.b0_phase)
# End of evolve()


def inversion_dressed(coords0: DressedCoordinates, tau: float) -> float:
    """<σ_z(τ)> = -w_{-1}² + Σ D_n cos(φ_n(0) - Ω_n τ).

    Params:
    - coords0 (DressedCoordinates): The initial coordinates
    - tau (float): Scaled time >= 0

    Return:
    - sigma_z (float): The inversion at τ
    """
    _check_time(tau)
    phases = coords0.phi - reduced_phase(rabi_frequencies(coords0.n_max), tau)
    return compensated_sum(np.append(coords0.D() * np.cos(phases), -coords0.w_minus1**2))
# End of inversion_dressed()


def _dressed_rows(args: tuple) -> np.ndarray:
    """Worker for one chunk of a dressed series: (D, phi, w_minus1_sq, taus) -> inversions.
    """
    D, phi, w_minus1_sq, taus = args
    phases = phi[np.newaxis, :] - reduced_phase(rabi_frequencies(D.size - 1), taus)
    terms = np.concatenate((D * np.cos(phases), np.full((taus.size, 1), -w_minus1_sq)), axis=1)
    return compensated_row_sums(terms)
# End of _dressed_rows()


def _extended_evolution(state: JointState, tau: float) -> tuple:
    """Applies the exact 2x2 rotation of every shell {|e,n>, |g,n+1>}, including the top shell whose partner
    b_{n_max+1} starts at zero.

    Return:
    - a (np.ndarray): a_n(τ), n = 0..n_max
    - b (np.ndarray): b_n(τ), n = 0..n_max+1
    """
    rate = np.sqrt(np.arange(state.n_max + 1) + 1.0)
    angle = reduced_phase(rate, tau)
    cos, sin = np.cos(angle), np.sin(angle)
    b_next = np.append(state.b[1:], 0.0)
    a = state.a * cos - 1j * b_next * sin
    b = np.concatenate(([state.b[0]], b_next * cos - 1j * state.a * sin))
    return a, b
# End of _extended_evolution()


def evolve_bare(state: JointState, tau: float) -> JointState:
    """Evolves bare amplitudes for a scaled time τ:

        a_n(τ) = a_n cos(√(n+1)τ) - i b_{n+1} sin(√(n+1)τ),   b_{n+1}(τ) = b_{n+1} cos(√(n+1)τ) - i a_n sin(√(n+1)τ)

    with b_0 constant. The result is one photon longer than the input so no weight is lost.

    Params:
    - state (JointState): The state at τ = 0
    - tau (float): Scaled time >= 0

    Return:
    - state (JointState): The state at τ, truncated at n_max + 1
    """
    _check_time(tau)
    a, b = _extended_evolution(state, tau)
    return JointState(np.append(a, 0.0), b)
# End of evolve_bare()


def inversion_bare(state0: JointState, tau: float) -> float:
    """<σ_z(τ)> = Σ|a_n(τ)|² - Σ|b_n(τ)|² from the bare-basis evolution. Independent of the dressed coordinates.

    Params:
    - state0 (JointState): The state at τ = 0
    - tau (float): Scaled time >= 0

    Return:
    - sigma_z (float): The inversion at τ
    """
    _check_time(tau)
    a, b = _extended_evolution(state0, tau)
    return compensated_sum(np.concatenate((np.abs(a)**2, -np.abs(b)**2)))
# End of inversion_bare()


def _complex_sum(values: np.ndarray) -> complex:
    return complex(compensated_sum(values.real), compensated_sum(values.imag))
# End of _complex_sum()


def partial_trace(state: JointState) -> AtomDensity:
    """Traces the field out of a bare-basis state.

    Return:
    - rho (AtomDensity): ρ_ee = Σ|a_n|², ρ_eg = Σ a_n b_n*
    """
    return AtomDensity(compensated_sum(np.abs(state.a)**2), _complex_sum(state.a * np.conj(state.b)))
# End of partial_trace()


def field_amplitude(state: JointState) -> complex:
    """The coherent field amplitude <a> = Σ √(n+1) (a_n* a_{n+1} + b_n* b_{n+1}).
    """
    root = np.sqrt(np.arange(1, state.n_max + 1))
    terms = root * (np.conj(state.a[:-1]) * state.a[1:] + np.conj(state.b[:-1]) * state.b[1:])
    return _complex_sum(terms)
# End of field_amplitude()


def atom_density(coords0: DressedCoordinates, tau: float) -> AtomDensity:
    """The reduced atomic density matrix at τ, straight from the dressed coordinates:

        ρ_ee = ½(1 - w_{-1}²) + ½ Σ D_n cos φ_n(τ)
        ρ_eg = (w_{-1} w_0/√2) e^{-iβ} u_0 + ½ Σ w_n w_{n+1} u_{n+1} v_n*

    where u_n = e^{iχ_n}(cos(θ_n/2) + e^{-iφ_n} sin(θ_n/2)) and v_n = e^{iχ_n}(cos(θ_n/2) - e^{-iφ_n} sin(θ_n/2)),
    all at time τ.

    Params:
    - coords0 (DressedCoordinates): The initial coordinates
    - tau (float): Scaled time >= 0

    Return:
    - rho (AtomDensity): The reduced density matrix
    """
    coords = evolve(coords0, tau)
    rho_ee = 0.5 * (1.0 + inversion_dressed(coords0, tau))
    half_cos, half_sin = np.cos(0.5 * coords.theta), np.sin(0.5 * coords.theta)
    rotation = np.exp(-1j * coords.phi) * half_sin
    u = np.exp(1j * coords.chi) * (half_cos + rotation)
    v = np.exp(1j * coords.chi) * (half_cos - rotation)
    ground = coords.w_minus1 * coords.w[0] / constants.SQRT_TWO * np.exp(-1j * coords.b0_phase) * u[0]
    shells = 0.5 * coords.w[1:] * coords.w[:-1] * u[1:] * np.conj(v[:-1])
    return AtomDensity(rho_ee, _complex_sum(np.append(shells, ground)))
# End of atom_density()


def entropy(rho: AtomDensity) -> float:
    """The von Neumann entropy -Tr ρ ln ρ of the reduced atomic state, in nats, with 0 ln 0 = 0.

    Raises:
    - DomainError: if |ρ_eg|² > ρ_ee(1 - ρ_ee) beyond tolerance, or ρ_ee is outside [0, 1]
    """
    slack = constants.POSITIVITY_TOLERANCE
    if not -slack <= rho.rho_ee <= 1.0 + slack:
        raise DomainError("rho_ee must lie in [0, 1], got {}".format(rho.rho_ee))
    if abs(rho.rho_eg)**2 > rho.rho_ee * rho.rho_gg + slack:
        raise DomainError("The atomic density matrix is not positive: |rho_eg|^2 = {} > {}".format(
            abs(rho.rho_eg)**2, rho.rho_ee * rho.rho_gg))
    eigenvalues = np.clip(linalg.eigvalsh(rho.matrix()), 0.0, 1.0)
    return compensated_sum(special.entr(eigenvalues))
# End of entropy()


def entropy_series(coords0: DressedCoordinates, grid: TimeGrid) -> np.ndarray:
    """Return:
    - entropies (np.ndarray): entropy(atom_density(coords0, τ)) at every grid time
    """
    return np.array([entropy(atom_density(coords0, tau)) for tau in grid.tau])
# End of entropy_series()


def _bare_rows(args: tuple) -> np.ndarray:
    """Worker for one chunk of a bare series: (state, taus) -> inversions.
    """
    state, taus = args
    return np.array([inversion_bare(state, tau) for tau in taus])
# End of _bare_rows()


@info('Computing an exact inversion series')
def series(state0: JointState, grid: TimeGrid, which: str = constants.EXACT_DRESSED,
           workers: int = constants.WORKERS) -> InversionSeries:
    """Samples the exact inversion on a grid. The grid is split into fixed chunks, which are evaluated in order or,
    with workers > 1, on a process pool and merged back in grid order.

    Params:
    - state0 (JointState): The initial state
    - grid (TimeGrid): The sample times
    - which (str): 'exact-dressed' or 'exact-bare'
    - workers (int): The number of processes to use

    Return:
    - series (InversionSeries): The sampled inversion
    """
    chunks = [grid.tau[start:start + CHUNK_SIZE] for start in range(0, grid.tau.size, CHUNK_SIZE)]
    if which == constants.EXACT_DRESSED:
        coords = to_dressed(state0)
        D, phi, offset = coords.D(), np.array(coords.phi), coords.w_minus1**2
        worker, jobs = _dressed_rows, [(D, phi, offset, chunk) for chunk in chunks]
    elif which == constants.EXACT_BARE:
        worker, jobs = _bare_rows, [(state0, chunk) for chunk in chunks]
    else:
        raise DomainError("An exact series must be 'exact-dressed' or 'exact-bare', got {}".format(which))
    if workers > 1 and len(jobs) > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            results = pool.map(worker, jobs)
    else:
        results = [worker(job) for job in jobs]
    return InversionSeries(grid, np.concatenate(results), which)
# End of series()
