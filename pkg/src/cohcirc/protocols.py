"""The three worked applications built on synthesis + engine + detection:

* phase-state generation and attenuation ladders for phase-encoded keys,
* restorable database search by interferometric state comparison,
* feasibility of distilling Bell-cat states from raw entangled pairs.

Protocol functions return starred amplitude vectors (engine convention);
conjugate for physical values.  The comparison and identification maps
below are written directly on starred amplitudes; the discrete Fourier
transform is specified on physical amplitudes and is conjugated before
being handed to the engine.
"""

from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass

import numpy as np

from . import linalg
from .detection import ClickRecord, click_probability, sample_clicks
from .engine import apply_circuit, apply_matrix, pad_vacuum
from .errors import ContractionError, DimensionError
from .synthesis import Circuit, DilationPorts, dilate, reck_decompose

DILATION = "dilation"
EXPLICIT = "explicit"
SEARCH_MODES = (DILATION, EXPLICIT)


def dft_matrix(n: int) -> np.ndarray:
    """Unitary DFT, entries omega^(j*k)/sqrt(n) with omega = exp(2*pi*i/n)."""
    if n < 1:
        raise DimensionError("DFT size must be at least 1")
    idx = np.arange(n)
    return np.exp(2j * np.pi * np.outer(idx, idx) / n) / np.sqrt(n)


@functools.lru_cache(maxsize=None)
def _dft_circuit(n: int) -> Circuit:
    # Conjugated: the DFT is specified on physical amplitudes.
    return reck_decompose(dft_matrix(n).conj())


def generate_phase_states(n: int, alpha: complex, input_port: int = 1) -> np.ndarray:
    """Fan one coherent input out into the n phase states alpha*omega^k.

    Simulates the synthesized DFT circuit fed with sqrt(n)*alpha on
    ``input_port`` (0-based; the default second port yields
    alpha*omega^k at port k, port 0 yields n identical alpha outputs).
    Returns starred amplitudes of width n.
    """
    if n < 1:
        raise DimensionError("need at least one output state")
    port = input_port if n > 1 else 0
    if not 0 <= port < n:
        raise DimensionError(f"input port {input_port} out of range for width {n}")
    physical_in = np.zeros(n, dtype=complex)
    physical_in[port] = np.sqrt(n) * complex(alpha)
    return apply_circuit(_dft_circuit(n), physical_in.conj())


def attenuation_ladder(n: int, alpha: complex) -> np.ndarray:
    """Turn n copies of |alpha> into |alpha/sqrt(L)> for L = 1..n.

    Applies the diagonal damping map diag(1, 1/sqrt(2), ..., 1/sqrt(n))
    through its unitary dilation with n dark ancilla ports and returns
    the starred amplitudes of the n signal outputs.
    """
    if n < 1:
        raise DimensionError("need at least one rung")
    damping = np.diag(1.0 / np.sqrt(np.arange(1, n + 1))).astype(complex)
    u, ports = dilate(damping)
    starred_in = pad_vacuum(np.full(n, complex(alpha)).conj(), ports.width)
    return apply_matrix(u, starred_in)[: len(ports.output_ports)]


def comparison_map(n: int, c: float | None = None) -> np.ndarray:
    """(n+1) x (n+1) contraction comparing one datum against n references.

    Acting on starred (a0*, a1*, ..., an*), row 0 is zero and row j
    yields c*(a0* - aj*).  The largest singular value is c*sqrt(n+1),
    so the map is a contraction exactly when c <= 1/sqrt(n+1), the
    default scale.
    """
    if n < 2:
        raise DimensionError("need at least two reference states")
    scale = max_comparison_scale(n) if c is None else float(c)
    k = np.zeros((n + 1, n + 1), dtype=complex)
    k[1:, 0] = scale
    k[np.arange(1, n + 1), np.arange(1, n + 1)] = -scale
    return k


def max_comparison_scale(n: int) -> float:
    """Largest comparison scale keeping the map a contraction: 1/sqrt(n+1)."""
    return 1.0 / np.sqrt(n + 1)


def search_unitary_explicit() -> np.ndarray:
    """The explicit 6x6 unitary identifying one datum against two references.

    Rows 1-2 carry the c = 1/sqrt(3) comparison map extended by
    +-1/sqrt(6) ancilla columns, rows 3-5 regenerate the preserved
    outputs, and row 0 routes the first dark port straight through.
    It is an alternative unitary completion of the comparison map: it
    differs from the canonical dilation only by the sign of row 0.
    """
    a = np.sqrt(1 / 3)
    b = np.sqrt(1 / 6)
    hi = (2 + np.sqrt(6)) / 6
    lo = (2 - np.sqrt(6)) / 6
    t = 1 / 3
    return np.array(
        [
            [0, 0, 0, 1, 0, 0],
            [a, -a, 0, 0, -b, b],
            [a, 0, -a, 0, b, -b],
            [t, t, t, 0, a, a],
            [t, hi, lo, 0, -a, 0],
            [t, lo, hi, 0, 0, -a],
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class SearchSpec:
    """One database-search instance.

    ``data`` is the unknown amplitude, promised to match one of
    ``references``; ``c`` is the comparison scale (defaults to the
    maximum 1/sqrt(N+1)).
    """

    references: tuple[complex, ...]
    data: complex
    c: float | None = None

    def __post_init__(self):
        refs = tuple(complex(r) for r in self.references)
        object.__setattr__(self, "references", refs)
        object.__setattr__(self, "data", complex(self.data))
        if len(refs) < 2:
            raise DimensionError("need at least two reference states")
        c_max = max_comparison_scale(len(refs))
        scale = c_max if self.c is None else float(self.c)
        if scale > c_max + 1e-12:
            raise ContractionError(
                f"comparison scale {scale:.12g} exceeds the contraction bound "
                f"{c_max:.12g} for {len(refs)} references"
            )
        object.__setattr__(self, "c", scale)
        for i in range(len(refs)):
            for j in range(i + 1, len(refs)):
                if refs[i] == refs[j]:
                    warnings.warn(
                        f"references {i + 1} and {j + 1} coincide and can never be "
                        "told apart",
                        stacklevel=2,
                    )

    @property
    def n(self) -> int:
        return len(self.references)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one seeded search trial.

    ``identified`` is the 1-based reference index (which equals the
    0-based comparison-port index carrying data - reference), or None
    when the click pattern is inconclusive.  ``retained`` holds the
    untouched group-B starred amplitudes; ``consumed_ports`` lists the
    measured group-A ports.
    """

    identified: int | None
    clicks: tuple[ClickRecord, ...]
    retained: np.ndarray
    consumed_ports: tuple[int, ...]
    mode: str


@functools.lru_cache(maxsize=None)
def _search_operator(n: int, c: float, mode: str) -> np.ndarray:
    if mode == EXPLICIT:
        if n != 2:
            raise ValueError("explicit mode is only defined for two references")
        if abs(c - max_comparison_scale(2)) > 1e-12:
            raise ValueError("explicit mode fixes the comparison scale to 1/sqrt(3)")
        u = search_unitary_explicit()
    elif mode == DILATION:
        u, _ = dilate(comparison_map(n, c))
    else:
        raise ValueError(f"unknown search mode {mode!r}; expected one of {SEARCH_MODES}")
    u.flags.writeable = False
    return u


def _search_input(spec: SearchSpec) -> np.ndarray:
    starred = np.conj(np.array([spec.data, *spec.references], dtype=complex))
    return pad_vacuum(starred, 2 * (spec.n + 1))


def run_search(spec: SearchSpec, seed: int, mode: str = DILATION) -> SearchOutcome:
    """One seeded search trial.

    Propagates (data, references, dark ports) through the identification
    unitary and samples threshold detectors on the comparison ports
    1..N, where port j carries c*(data* - ref_j*).  A click at port j
    rules reference j out; the datum is identified as reference k
    exactly when every port but k clicked and port k stayed silent.
    Any other pattern is inconclusive.  The group-B ports N+1..2N+1 are
    never measured and are returned for the restoration pass.
    """
    u = _search_operator(spec.n, spec.c, mode)
    out = apply_matrix(u, _search_input(spec))
    comparison_ports = tuple(range(1, spec.n + 1))
    clicks = tuple(sample_clicks(out, comparison_ports, seed))
    clicked = {record.port for record in clicks if record.clicked}
    identified = None
    for k in comparison_ports:
        if k not in clicked and clicked == set(comparison_ports) - {k}:
            identified = k
            break
    return SearchOutcome(
        identified=identified,
        clicks=clicks,
        retained=out[spec.n + 1 :],
        consumed_ports=tuple(range(spec.n + 1)),
        mode=mode,
    )


def restore(outcome: SearchOutcome, spec: SearchSpec) -> np.ndarray:
    """Undo the search pass, recovering the data and reference states.

    The measured group-A outputs are replenished from a fresh forward
    pass of the same circuit (extra copies of the input states), joined
    with the retained group-B amplitudes, and sent through the inverse
    map.  Returns the starred input vector (data*, ref_1*, ..., 0, ...)
    regardless of what the detectors clicked.
    """
    if outcome.retained.shape[0] != spec.n + 1:
        raise DimensionError(
            f"retained group has width {outcome.retained.shape[0]}, "
            f"expected {spec.n + 1}"
        )
    u = _search_operator(spec.n, spec.c, outcome.mode)
    fresh = apply_matrix(u, _search_input(spec))
    reassembled = np.concatenate([fresh[: spec.n + 1], outcome.retained])
    return apply_matrix(u.conj().T, reassembled)


def success_probability(alpha1: complex, alpha2: complex) -> float:
    """Identification success rate for two references under equal priors:
    1 - exp(-|alpha1 - alpha2|^2 / 3)."""
    distance_sq = abs(complex(alpha1) - complex(alpha2)) ** 2
    return float(-np.expm1(-distance_sq / 3))


def analytic_success_probability(spec: SearchSpec) -> float:
    """Probability that the promised match's click pattern completes.

    Product of the click probabilities of every comparison port other
    than the matching one; reduces to ``success_probability`` for two
    references.  NaN when the datum matches no (or several) references.
    """
    matches = [j for j, r in enumerate(spec.references, start=1) if r == spec.data]
    if len(matches) != 1:
        return float("nan")
    k = matches[0]
    p = 1.0
    for j, ref in enumerate(spec.references, start=1):
        if j != k:
            p *= click_probability(spec.c * (spec.data - ref))
    return p


def search_circuit(n: int, c: float | None = None) -> tuple[Circuit, DilationPorts]:
    """Physical mesh realizing the dilated comparison map for n references.

    The triangular mesh is kept complete (theta=0 couplers included), so
    the beamsplitter count is exactly m(m-1)/2 = (n+1)(2n+1) for the
    m = 2(n+1) modes.
    """
    u, ports = dilate(comparison_map(n, c))
    return reck_decompose(u, full_mesh=True), ports


# --- Bell-cat feasibility -------------------------------------------------

BELL_TARGETS = {
    "B00": ((-1, -1), (1, 1)),
    "B10": ((1, 1), (-1, -1)),
    "B01": ((-1, 1), (1, -1)),
    "B11": ((1, -1), (-1, 1)),
}

_DEPENDENCE_TOL = 1e-12
_FEASIBILITY_SLACK = 1e-12


@dataclass(frozen=True)
class BellcatQuery:
    """Raw entangled-pair component amplitudes and the wanted cat amplitude."""

    v1: tuple[complex, complex]
    v2: tuple[complex, complex]
    alpha: complex


@dataclass(frozen=True)
class BellcatResult:
    """Verdict of the Bell-cat feasibility check.

    ``contraction`` is the realizing map (None when infeasible),
    ``max_alpha`` the largest cat amplitude reachable from the same
    inputs, and ``kernel_residual`` the explicit cross-check
    max|K (v1 + v2)|, which must vanish for any valid solution.
    """

    feasible: bool
    contraction: np.ndarray | None
    max_alpha: float
    kernel_residual: float


def bellcat_feasibility(query: BellcatQuery, bell_state: str = "B00") -> BellcatResult:
    """Decide whether a contraction maps the raw pair onto a Bell-cat.

    Looks for K with K v1 = t1 and K v2 = t2 where (t1, t2) is the
    +-alpha sign pattern of the requested Bell-cat component states.
    Linearly independent inputs determine K uniquely by inversion;
    feasibility is then sigma_max(K) <= 1 + 1e-12.  Dependent inputs
    (v2 = lambda*v1) are feasible only when lambda = -1, with the
    minimal-norm rank-one K, provided sqrt(2)*|alpha| <= |v1|.
    """
    if bell_state not in BELL_TARGETS:
        raise ValueError(f"unknown Bell-cat label {bell_state!r}")
    v1 = np.asarray(query.v1, dtype=complex)
    v2 = np.asarray(query.v2, dtype=complex)
    if v1.shape != (2,) or v2.shape != (2,):
        raise DimensionError("component vectors must have exactly two modes")
    alpha = complex(query.alpha)
    pat1, pat2 = (np.array(p, dtype=complex) for p in BELL_TARGETS[bell_state])
    norm1 = float(np.linalg.norm(v1))
    norm2 = float(np.linalg.norm(v2))
    infeasible = BellcatResult(False, None, 0.0, float("nan"))

    if norm1 == 0.0 or norm2 == 0.0:
        # K annihilates the zero input, so its target must vanish too.
        if alpha != 0:
            return infeasible
        return BellcatResult(True, np.zeros((2, 2), dtype=complex), 0.0, 0.0)

    det = v1[0] * v2[1] - v1[1] * v2[0]
    if abs(det) > _DEPENDENCE_TOL * norm1 * norm2:
        # Independent inputs: K is unique and scales linearly with alpha.
        unit_k = np.column_stack([pat1, pat2]) @ np.linalg.inv(np.column_stack([v1, v2]))
        sigma_unit = linalg.spectral_norm(unit_k)
        max_alpha = 1.0 / sigma_unit
        if abs(alpha) * sigma_unit > 1.0 + _FEASIBILITY_SLACK:
            return BellcatResult(False, None, max_alpha, float("nan"))
        k = alpha * unit_k
        residual = float(np.max(np.abs(k @ (v1 + v2))))
        return BellcatResult(True, k, max_alpha, residual)

    # Dependent inputs: v2 = lambda * v1 forces lambda * t1 = t2 = -t1.
    pivot = int(np.argmax(np.abs(v1)))
    lam = v2[pivot] / v1[pivot]
    sign_ok = abs(lam + 1.0) <= _DEPENDENCE_TOL * max(abs(lam), 1.0)
    if alpha == 0:
        zero = np.zeros((2, 2), dtype=complex)
        return BellcatResult(True, zero, norm1 / np.sqrt(2) if sign_ok else 0.0, 0.0)
    if not sign_ok:
        return infeasible
    t1 = alpha * pat1
    k = np.outer(t1, v1.conj()) / norm1**2
    max_alpha = norm1 / np.sqrt(2)
    if np.sqrt(2) * abs(alpha) > norm1 * (1.0 + _FEASIBILITY_SLACK):
        return BellcatResult(False, None, max_alpha, float("nan"))
    residual = float(np.max(np.abs(k @ (v1 + v2))))
    return BellcatResult(True, k, max_alpha, residual)
