"""Frame and sequence data model.

Samples are always held in 16-bit containers regardless of the logical bit
depth, so a 2-bit plane and a 12-bit plane share one memory layout. Frames
are immutable after construction; every operation in the toolkit returns a
new frame.
"""
from __future__ import annotations

from dataclasses import dataclass, asdict
from typing import Iterator

import numpy as np

MAX_BITS = 16


@dataclass(frozen=True, order=True)
class BitDepth:
    """Logical bits per color channel, 1..16."""

    bits: int

    def __post_init__(self) -> None:
        if not isinstance(self.bits, (int, np.integer)) or isinstance(self.bits, bool):
            raise ValueError(f"bit depth must be an integer, got {self.bits!r}")
        if not 1 <= self.bits <= MAX_BITS:
            raise ValueError(f"bit depth must be in [1, {MAX_BITS}], got {self.bits}")
        object.__setattr__(self, "bits", int(self.bits))

    @property
    def max_value(self) -> int:
        """Largest representable sample value, 2**bits - 1."""
        return (1 << self.bits) - 1

    @property
    def levels(self) -> int:
        return 1 << self.bits


@dataclass(frozen=True, eq=False)
class PlanarFrame:
    """One frame as independent color planes of unsigned samples.

    ``data`` has shape (channels, height, width), dtype uint16, and is
    marked read-only. ``channel_order`` names the planes in order, one
    letter per channel (e.g. "RGB", "Y").
    """

    data: np.ndarray
    depth: BitDepth
    channel_order: str = "RGB"

    def __post_init__(self) -> None:
        arr = np.asarray(self.data)
        if arr.ndim != 3:
            raise ValueError(f"frame data must be (channels, height, width), got shape {arr.shape}")
        if arr.shape[0] != len(self.channel_order):
            raise ValueError(
                f"channel_order {self.channel_order!r} does not match {arr.shape[0]} planes"
            )
        if arr.size == 0:
            raise ValueError("frame dimensions must be nonzero")
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError(f"frame data must be integer-typed, got {arr.dtype}")
        if arr.min() < 0 or arr.max() > self.depth.max_value:
            raise ValueError(
                f"samples out of range for {self.depth.bits}-bit frame "
                f"(max allowed {self.depth.max_value}, found {arr.max()})"
            )
        arr = np.ascontiguousarray(arr, dtype=np.uint16)
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_planes(
        cls, planes: list[np.ndarray], depth: BitDepth, channel_order: str = "RGB"
    ) -> "PlanarFrame":
        return cls(np.stack(planes, axis=0), depth, channel_order)

    @property
    def channels(self) -> int:
        return self.data.shape[0]

    @property
    def height(self) -> int:
        return self.data.shape[1]

    @property
    def width(self) -> int:
        return self.data.shape[2]

    def plane(self, index: int) -> np.ndarray:
        return self.data[index]

    def with_data(self, data: np.ndarray, depth: BitDepth | None = None) -> "PlanarFrame":
        """New frame with the same channel order; depth defaults to unchanged."""
        return PlanarFrame(data, depth or self.depth, self.channel_order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarFrame):
            return NotImplemented
        return (
            self.depth == other.depth
            and self.channel_order == other.channel_order
            and np.array_equal(self.data, other.data)
        )

    def __repr__(self) -> str:
        return (
            f"PlanarFrame({self.width}x{self.height}x{self.channels}, "
            f"{self.depth.bits}-bit, {self.channel_order})"
        )


@dataclass(frozen=True, eq=False)
class VideoSequence:
    """Ordered frames sharing geometry, depth and channel order."""

    frames: tuple[PlanarFrame, ...]
    fps: float
    name: str = ""

    def __post_init__(self) -> None:
        frames = tuple(self.frames)
        if not frames:
            raise ValueError("sequence must contain at least one frame")
        first = frames[0]
        for i, f in enumerate(frames[1:], start=1):
            if (
                f.data.shape != first.data.shape
                or f.depth != first.depth
                or f.channel_order != first.channel_order
            ):
                raise ValueError(f"frame {i} does not match the first frame's geometry/depth")
        if self.fps <= 0:
            raise ValueError(f"fps must be positive, got {self.fps}")
        object.__setattr__(self, "frames", frames)

    @property
    def width(self) -> int:
        return self.frames[0].width

    @property
    def height(self) -> int:
        return self.frames[0].height

    @property
    def channels(self) -> int:
        return self.frames[0].channels

    @property
    def depth(self) -> BitDepth:
        return self.frames[0].depth

    @property
    def channel_order(self) -> str:
        return self.frames[0].channel_order

    def __len__(self) -> int:
        return len(self.frames)

    def __iter__(self) -> Iterator[PlanarFrame]:
        return iter(self.frames)

    def __getitem__(self, index: int) -> PlanarFrame:
        return self.frames[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VideoSequence):
            return NotImplemented
        return (
            self.fps == other.fps
            and len(self) == len(other)
            and all(a == b for a, b in zip(self.frames, other.frames))
        )

    def with_frames(self, frames: list[PlanarFrame], name: str | None = None) -> "VideoSequence":
        return VideoSequence(tuple(frames), self.fps, self.name if name is None else name)

    def descriptor(self) -> "SequenceDescriptor":
        return SequenceDescriptor(
            width=self.width,
            height=self.height,
            fps=self.fps,
            bit_depth=self.depth.bits,
            channel_order=self.channel_order,
            frame_count=len(self),
        )


@dataclass(frozen=True)
class SequenceDescriptor:
    """Sidecar metadata for a raw sample file; round-trips losslessly."""

    width: int
    height: int
    fps: float
    bit_depth: int
    channel_order: str
    frame_count: int
    sample_layout: str = "planar-le16"

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0 or self.frame_count <= 0:
            raise ValueError("width, height and frame_count must be positive")
        if self.fps <= 0:
            raise ValueError("fps must be positive")
        BitDepth(self.bit_depth)
        if not self.channel_order:
            raise ValueError("channel_order must be non-empty")
        if self.sample_layout != "planar-le16":
            raise ValueError(f"unsupported sample_layout {self.sample_layout!r}")

    @property
    def channels(self) -> int:
        return len(self.channel_order)

    @property
    def frame_bytes(self) -> int:
        return self.width * self.height * self.channels * 2

    @property
    def total_bytes(self) -> int:
        return self.frame_bytes * self.frame_count

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, mapping: dict) -> "SequenceDescriptor":
        fields = ("width", "height", "fps", "bit_depth", "channel_order", "frame_count")
        missing = [k for k in fields if k not in mapping]
        if missing:
            raise ValueError(f"descriptor is missing fields: {', '.join(missing)}")
        known = set(fields) | {"sample_layout"}
        unknown = [k for k in mapping if k not in known]
        if unknown:
            raise ValueError(f"descriptor has unknown fields: {', '.join(unknown)}")
        return cls(**mapping)
