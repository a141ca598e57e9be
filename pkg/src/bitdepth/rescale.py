"""Linear bit-depth rescaling.

A sample v at depth a maps to round(v * M_b / M_a) at depth b, where M_n is
the maximum value of depth n. Rounding is half-away-from-zero throughout the
toolkit. The mapping is precomputed as a lookup table using exact integer
arithmetic, so rescaling a plane is a single indexed gather.
"""
from __future__ import annotations

import numpy as np

from .frame import BitDepth, PlanarFrame


def round_half_away(x: np.ndarray) -> np.ndarray:
    """Round to nearest integer with ties away from zero (as float)."""
    x = np.asarray(x)
    return np.where(x >= 0, np.floor(x + 0.5), np.ceil(x - 0.5))


def rescale_lut(src: BitDepth, dst: BitDepth) -> np.ndarray:
    """Exact uint16 table mapping every depth-``src`` value to depth ``dst``.

    round(v*Mb/Ma) with ties up equals (2*v*Mb + Ma) // (2*Ma); inputs are
    non-negative so half-up and half-away-from-zero coincide.
    """
    m_a = src.max_value
    m_b = dst.max_value
    v = np.arange(m_a + 1, dtype=np.int64)
    out = (2 * v * m_b + m_a) // (2 * m_a)
    return out.astype(np.uint16)


def linear_rescale(frame: PlanarFrame, target_depth: BitDepth | int) -> PlanarFrame:
    """Rescale every channel of ``frame`` to ``target_depth``.

    Works in both directions; endpoints are preserved (0 -> 0, max -> max)
    and the mapping is non-decreasing.
    """
    target = target_depth if isinstance(target_depth, BitDepth) else BitDepth(target_depth)
    if target == frame.depth:
        return frame
    lut = rescale_lut(frame.depth, target)
    return frame.with_data(lut[frame.data], depth=target)
