"""Circuit synthesis: triangular-mesh decomposition of unitaries and
block dilation of contractions.

A :class:`Circuit` is an ordered element list over a fixed number of
modes.  ``compile_circuit`` multiplies the element embeddings with later
elements applied from the left, so list order is physical order: the
first element acts first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .elements import (
    Beamsplitter,
    OpticalElement,
    PhaseShifter,
    beamsplitter_matrix,
    phaseshifter_factor,
)
from .errors import ContractionError, DimensionError, SynthesisError


@dataclass(frozen=True)
class Circuit:
    """An ordered beamsplitter/phase-shifter sequence on ``width`` modes."""

    width: int
    elements: tuple[OpticalElement, ...] = ()

    def __post_init__(self):
        if self.width < 1:
            raise DimensionError("circuit width must be at least 1")
        object.__setattr__(self, "elements", tuple(self.elements))
        for element in self.elements:
            modes = (
                (element.mode1, element.mode2)
                if isinstance(element, Beamsplitter)
                else (element.mode,)
            )
            if max(modes) >= self.width:
                raise DimensionError(
                    f"element modes {modes} exceed circuit width {self.width}"
                )

    @property
    def beamsplitter_count(self) -> int:
        return sum(isinstance(e, Beamsplitter) for e in self.elements)

    @property
    def phase_shifter_count(self) -> int:
        return sum(isinstance(e, PhaseShifter) for e in self.elements)

    def followed_by(self, other: "Circuit") -> "Circuit":
        if other.width != self.width:
            raise DimensionError("circuit widths differ")
        return Circuit(self.width, self.elements + other.elements)


def compile_circuit(circuit: Circuit) -> np.ndarray:
    """Product of element embeddings, later elements multiplied from the left."""
    u = np.eye(circuit.width, dtype=complex)
    for element in circuit.elements:
        if isinstance(element, Beamsplitter):
            pair = [element.mode1, element.mode2]
            u[pair, :] = beamsplitter_matrix(element.theta, element.phi) @ u[pair, :]
        else:
            u[element.mode, :] *= phaseshifter_factor(element.phi)
    return u


def invert(circuit: Circuit) -> Circuit:
    """Circuit compiling to the conjugate transpose of the original.

    Element order is reversed; each beamsplitter gets theta -> -theta
    (same phi) and each phase shifter phi -> -phi, which is the same
    physical array traversed from the inverse direction.
    """
    inverted: list[OpticalElement] = []
    for element in reversed(circuit.elements):
        if isinstance(element, Beamsplitter):
            inverted.append(
                Beamsplitter(element.mode1, element.mode2, -element.theta, element.phi)
            )
        else:
            inverted.append(PhaseShifter(element.mode, -element.phi))
    return Circuit(circuit.width, tuple(inverted))


def reck_decompose(u, tol: float = linalg.UNITARY_TOL, full_mesh: bool = False) -> Circuit:
    """Factor a unitary into a triangular beamsplitter mesh plus phases.

    Works row by row from the bottom: each off-diagonal entry of the
    current last row is nulled by mixing its column into the diagonal
    one, peeling off a phase and recursing on the remaining block.  The
    emitted circuit uses at most N(N-1)/2 beamsplitters followed by at
    most N phase shifters and compiles back to ``u`` within ~10*tol.

    Entries already below ``tol`` normally emit nothing; with
    ``full_mesh=True`` they emit theta=0 couplers instead, so the
    layout is always the complete triangular mesh.
    """
    w = linalg.as_matrix(u).copy()
    n = w.shape[0]
    if w.shape[0] != w.shape[1]:
        raise SynthesisError(f"only square matrices can be decomposed, got {w.shape}")
    defect = linalg.unitarity_defect(w)
    if defect > tol:
        raise SynthesisError(f"input is not unitary: max|U U^dag - I| = {defect:.3e}")

    elements: list[OpticalElement] = []
    for row in range(n - 1, 0, -1):
        for col in range(row - 1, -1, -1):
            a = w[row, col]
            if abs(a) <= tol:
                w[row, col] = 0.0
                if full_mesh:
                    elements.append(Beamsplitter(col, row, 0.0, 0.0))
                continue
            b = w[row, row]
            theta = float(np.arctan2(abs(a), abs(b)))
            phi = float(np.angle(a) - np.angle(b) + np.pi / 2)
            phi = (phi + np.pi) % (2 * np.pi) - np.pi
            w[:, [col, row]] = w[:, [col, row]] @ beamsplitter_matrix(theta, phi)
            w[row, col] = 0.0
            elements.append(Beamsplitter(col, row, -theta, phi))

    # What is left is diagonal with unit-modulus entries; realize it as
    # a trailing phase-shifter layer, dropping phases that round to 0.
    for mode in range(n):
        d = w[mode, mode]
        if abs(d - 1.0) <= tol:
            continue
        elements.append(PhaseShifter(mode, -float(np.angle(d))))
    return Circuit(width=n, elements=tuple(elements))


@dataclass(frozen=True)
class DilationPorts:
    """Bookkeeping for a dilated contraction: which ports carry signal.

    Inputs enter ports ``input_ports`` (the rest must be dark, i.e.
    vacuum); the contracted outputs appear on ``output_ports``.
    """

    width: int
    input_ports: tuple[int, ...]
    output_ports: tuple[int, ...]


def dilate(k, tol: float = linalg.UNITARY_TOL) -> tuple[np.ndarray, DilationPorts]:
    """Embed a contraction K as the top-left block of a unitary.

    Returns the 2s x 2s unitary

        [[K, -(I - K K^dag)^{1/2}], [(I - K^dag K)^{1/2}, K^dag]]

    with s = max(M, N) after a rectangular K is padded square (K in the
    upper-left, ones on the remaining diagonal).  Raises
    :class:`ContractionError` when the largest singular value exceeds
    1 + tol.  Identity padding keeps the contraction property only when
    the padded-in rows/columns do not overlap K's support, so the
    padded matrix is checked again.
    """
    kk = linalg.as_matrix(k)
    m_out, n_in = kk.shape
    sigma = linalg.spectral_norm(kk)
    if sigma > 1 + tol:
        raise ContractionError(
            f"largest singular value {sigma:.12g} exceeds 1; not a contraction"
        )
    size = max(m_out, n_in)
    padded = np.zeros((size, size), dtype=complex)
    padded[:m_out, :n_in] = kk
    for i in range(min(m_out, n_in), size):
        padded[i, i] = 1.0
    if size > min(m_out, n_in):
        sigma_padded = linalg.spectral_norm(padded)
        if sigma_padded > 1 + tol:
            raise ContractionError(
                f"identity padding raises the largest singular value to "
                f"{sigma_padded:.12g}; pad the matrix with zero rows/columns "
                "yourself if the extra ports are not pass-through"
            )
    # Both complement roots come from one SVD of K; computing them with two
    # independent eigendecompositions breaks the exchange identity
    # K (I-K^dag K)^{1/2} = (I-K K^dag)^{1/2} K by ~sqrt(eps) when a
    # singular value sits at 1, which would leave the block matrix
    # unitary only to ~1e-8.
    v, s, wh = np.linalg.svd(padded)
    r = np.sqrt(np.clip(1.0 - s**2, 0.0, None))
    out_complement = (v * r) @ v.conj().T
    in_complement = (wh.conj().T * r) @ wh
    u = np.block([[padded, -out_complement], [in_complement, padded.conj().T]])
    ports = DilationPorts(
        width=2 * size,
        input_ports=tuple(range(n_in)),
        output_ports=tuple(range(m_out)),
    )
    return u, ports
