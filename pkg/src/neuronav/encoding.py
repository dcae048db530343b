"""Event coding with cue, time and place cell populations.

A detection that passed the value gate is turned into a bounded activation
vector: a one-hot cue section (what), Gaussian time cells (when) and a
regular lattice of Gaussian place cells (where), concatenated in that order.
Population-vector readout maps predicted vectors back to labels and map
positions.

All encoders are pure functions of immutable inputs and deterministic.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "TimeCellBank",
    "PlaceCellGrid",
    "EventLayout",
    "EventEncoder",
    "encode_cue",
    "build_event",
    "decode_place",
    "decode_cue",
]

DEFAULT_TOP_M = 4
DEFAULT_FLOOR = 0.05


def encode_cue(label_index: int, n_labels: int) -> np.ndarray:
    """One-hot cue activation for a known object category."""
    if n_labels < 1:
        raise ValueError("need at least one label")
    if not 0 <= label_index < n_labels:
        raise ValueError(f"label index {label_index} outside [0, {n_labels})")
    cue = np.zeros(n_labels)
    cue[label_index] = 1.0
    return cue


class TimeCellBank:
    """Gaussian time cells on fixed, strictly increasing centers.

    Cell k responds to episode time t with exp(-(t - mu_k)^2 / (2 sigma^2)),
    so activation peaks at 1.0 when t hits a center.
    """

    def __init__(self, centers, sigma: float):
        centers = np.asarray(centers, dtype=float)
        if centers.ndim != 1 or centers.size < 2:
            raise ValueError("need at least two time cell centers")
        if not np.all(np.diff(centers) > 0):
            raise ValueError("time cell centers must be strictly increasing")
        if not sigma > 0:
            raise ValueError("time cell width must be positive")
        self.centers = centers
        self.sigma = float(sigma)

    @classmethod
    def spanning(cls, span_s: float, count: int = 20, sigma: float | None = None) -> "TimeCellBank":
        """Uniform bank covering [0, span_s]; width defaults to half the spacing."""
        if count < 2:
            raise ValueError("need at least two time cells")
        if not span_s > 0:
            raise ValueError("span must be positive")
        centers = np.linspace(0.0, span_s, count)
        if sigma is None:
            sigma = 0.5 * (centers[1] - centers[0])
        return cls(centers, sigma)

    def __len__(self) -> int:
        return self.centers.size

    def activations(self, t: float) -> np.ndarray:
        """Responses of all cells at episode time t (seconds, t >= 0)."""
        if not np.isfinite(t) or t < 0:
            raise ValueError(f"episode time must be finite and non-negative, got {t}")
        return np.exp(-((t - self.centers) ** 2) / (2.0 * self.sigma**2))


class PlaceCellGrid:
    """Regular lattice of Gaussian place fields covering a rectangular arena.

    Centers sit every `pitch` meters from the minimum corner, including the
    arena edges when the extent divides evenly. Out-of-arena stimuli are
    rejected rather than clamped so upstream bugs surface immediately.
    """

    def __init__(self, bounds, pitch: float, sigma: float):
        x_min, x_max, y_min, y_max = (float(v) for v in bounds)
        if not (x_max > x_min and y_max > y_min):
            raise ValueError(f"degenerate arena bounds {bounds}")
        if not pitch > 0:
            raise ValueError("pitch must be positive")
        if not sigma > 0:
            raise ValueError("place field width must be positive")
        self.bounds = (x_min, x_max, y_min, y_max)
        self.pitch = float(pitch)
        self.sigma = float(sigma)
        # lattice includes both edges when the extent is a pitch multiple
        self.nx = int(np.floor((x_max - x_min) / pitch + 1e-9)) + 1
        self.ny = int(np.floor((y_max - y_min) / pitch + 1e-9)) + 1
        xs = x_min + pitch * np.arange(self.nx)
        ys = y_min + pitch * np.arange(self.ny)
        cx, cy = np.meshgrid(xs, ys, indexing="xy")
        self.centers = np.column_stack([cx.ravel(), cy.ravel()])

    def __len__(self) -> int:
        return self.centers.shape[0]

    def contains(self, pos) -> bool:
        x, y = pos
        x_min, x_max, y_min, y_max = self.bounds
        return bool(x_min <= x <= x_max and y_min <= y <= y_max)

    def activations(self, pos) -> np.ndarray:
        """Responses of all cells to a stimulus at world position (x, y)."""
        pos = np.asarray(pos, dtype=float)
        if pos.shape != (2,) or not np.all(np.isfinite(pos)):
            raise ValueError(f"position must be a finite (x, y) pair, got {pos}")
        if not self.contains(pos):
            raise ValueError(f"position {tuple(pos)} outside arena bounds {self.bounds}")
        d2 = ((self.centers - pos) ** 2).sum(axis=1)
        return np.exp(-d2 / (2.0 * self.sigma**2))


class EventLayout:
    """Section offsets of an event vector: [cue | time | place]."""

    def __init__(self, n_cue: int, n_time: int, n_place: int):
        if min(n_cue, n_time, n_place) < 1:
            raise ValueError("all event sections need at least one cell")
        self.n_cue = n_cue
        self.n_time = n_time
        self.n_place = n_place

    @property
    def size(self) -> int:
        return self.n_cue + self.n_time + self.n_place

    def split(self, values: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Extract the (cue, time, place) sections of an event vector."""
        values = np.asarray(values)
        if values.shape != (self.size,):
            raise ValueError(f"event vector has length {values.shape}, layout expects {self.size}")
        a = self.n_cue
        b = a + self.n_time
        return values[:a], values[a:b], values[b:]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EventLayout)
            and (self.n_cue, self.n_time, self.n_place) == (other.n_cue, other.n_time, other.n_place)
        )

    def __repr__(self) -> str:
        return f"EventLayout(n_cue={self.n_cue}, n_time={self.n_time}, n_place={self.n_place})"


def build_event(
    cue: np.ndarray,
    time_act: np.ndarray,
    place_act: np.ndarray,
    layout: EventLayout | None = None,
) -> np.ndarray:
    """Concatenate cue, time and place activations into one event vector.

    No rescaling is applied. Every component must be finite and in [0, 1];
    section lengths must match `layout` when given.
    """
    parts = [np.asarray(p, dtype=float) for p in (cue, time_act, place_act)]
    if layout is not None:
        expected = (layout.n_cue, layout.n_time, layout.n_place)
        got = tuple(p.size for p in parts)
        if got != expected:
            raise ValueError(f"section lengths {got} do not match layout {expected}")
    for name, part in zip(("cue", "time", "place"), parts):
        if part.ndim != 1 or part.size == 0:
            raise ValueError(f"{name} section must be a non-empty vector")
        if not np.all(np.isfinite(part)):
            raise ValueError(f"{name} section contains non-finite values")
        if part.min() < 0.0 or part.max() > 1.0:
            raise ValueError(f"{name} section has components outside [0, 1]")
    return np.concatenate(parts)


def decode_place(
    place_act: np.ndarray,
    grid: PlaceCellGrid,
    top_m: int = DEFAULT_TOP_M,
    floor: float = DEFAULT_FLOOR,
) -> np.ndarray | None:
    """Population-vector position estimate over the top-m most active cells.

    Returns the activation-weighted mean of the winning cells' centers, or
    None ("no event") when every activation is at or below `floor`. Ties in
    the top-m selection break toward the lowest cell index.
    """
    place_act = np.asarray(place_act, dtype=float)
    if place_act.shape != (len(grid),):
        raise ValueError(f"expected {len(grid)} place activations, got {place_act.shape}")
    if top_m < 1:
        raise ValueError("top_m must be at least 1")
    if place_act.max() <= floor:
        return None
    order = np.lexsort((np.arange(place_act.size), -place_act))[:top_m]
    weights = place_act[order]
    return (grid.centers[order] * weights[:, None]).sum(axis=0) / weights.sum()


def decode_cue(
    event: np.ndarray,
    layout: EventLayout,
    floor: float = DEFAULT_FLOOR,
) -> int | None:
    """Most active cue category of an event vector, ties toward lowest index.

    Returns None ("no event") when the whole cue section is at or below
    `floor`.
    """
    cue, _, _ = layout.split(event)
    if cue.max() <= floor:
        return None
    return int(np.argmax(cue))


class EventEncoder:
    """Bundles the three populations behind one encode/decode surface."""

    def __init__(
        self,
        labels: list[str],
        time_cells: TimeCellBank,
        place_cells: PlaceCellGrid,
        top_m: int = DEFAULT_TOP_M,
        floor: float = DEFAULT_FLOOR,
    ):
        if not labels:
            raise ValueError("need at least one label")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be unique")
        self.labels = list(labels)
        self.time_cells = time_cells
        self.place_cells = place_cells
        self.top_m = int(top_m)
        self.floor = float(floor)
        self.layout = EventLayout(len(labels), len(time_cells), len(place_cells))

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None

    def encode(self, label_index: int, t: float, pos) -> np.ndarray:
        """Event vector for a gated detection (label, time, position)."""
        return build_event(
            encode_cue(label_index, len(self.labels)),
            self.time_cells.activations(t),
            self.place_cells.activations(pos),
            self.layout,
        )

    def decode_position(self, event: np.ndarray) -> np.ndarray | None:
        _, _, place = self.layout.split(event)
        return decode_place(place, self.place_cells, self.top_m, self.floor)

    def decode_label(self, event: np.ndarray) -> int | None:
        return decode_cue(event, self.layout, self.floor)
