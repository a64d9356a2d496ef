"""The two physical primitives: beamsplitters and phase shifters.

Element matrices act on vectors of conjugated ("starred") coherent
amplitudes.  The beamsplitter uses the same 2x2 matrix for mode
operators and starred amplitudes; the phase shifter multiplies a
starred amplitude by exp(-i*phi) while the mode operator itself gains
exp(+i*phi).  Mode indices are 0-based everywhere in code; 1-based
port labels appear only in CLI output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DimensionError


@dataclass(frozen=True)
class Beamsplitter:
    """Two-mode coupler with reflectivity sin(theta)^2 and relative phase phi."""

    mode1: int
    mode2: int
    theta: float
    phi: float

    def __post_init__(self):
        if self.mode1 < 0 or self.mode2 < 0:
            raise DimensionError("beamsplitter modes must be non-negative")
        if self.mode1 == self.mode2:
            raise DimensionError("beamsplitter modes must be distinct")
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("beamsplitter angles must be finite")


@dataclass(frozen=True)
class PhaseShifter:
    """Single-mode element multiplying the starred amplitude by exp(-i*phi)."""

    mode: int
    phi: float

    def __post_init__(self):
        if self.mode < 0:
            raise DimensionError("phase shifter mode must be non-negative")
        if not math.isfinite(self.phi):
            raise ValueError("phase shifter angle must be finite")


OpticalElement = Union[Beamsplitter, PhaseShifter]


def beamsplitter_matrix(theta: float, phi: float) -> np.ndarray:
    """2x2 map [[cos t, i e^{-i phi} sin t], [i e^{i phi} sin t, cos t]]."""
    c = np.cos(theta)
    s = np.sin(theta)
    return np.array(
        [[c, 1j * np.exp(-1j * phi) * s], [1j * np.exp(1j * phi) * s, c]],
        dtype=complex,
    )


def phaseshifter_factor(phi: float) -> complex:
    """Multiplier exp(-i*phi) applied to the starred amplitude."""
    return complex(np.exp(-1j * phi))


def element_embedding(element: OpticalElement, width: int) -> np.ndarray:
    """Embed an element into the identity on ``width`` modes."""
    u = np.eye(width, dtype=complex)
    if isinstance(element, Beamsplitter):
        i, j = element.mode1, element.mode2
        if i >= width or j >= width:
            raise DimensionError(f"beamsplitter modes ({i}, {j}) exceed width {width}")
        block = beamsplitter_matrix(element.theta, element.phi)
        u[i, i] = block[0, 0]
        u[i, j] = block[0, 1]
        u[j, i] = block[1, 0]
        u[j, j] = block[1, 1]
    else:
        if element.mode >= width:
            raise DimensionError(f"phase shifter mode {element.mode} exceeds width {width}")
        u[element.mode, element.mode] = phaseshifter_factor(element.phi)
    return u
