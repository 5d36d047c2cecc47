"""Coloured point patches of Z[xi_n] and their SVG rendering.

For n = 3, 4 the module is a lattice and a disc of it is drawn cell by cell.
For n = 8 the module is dense; a discrete subset is cut out by the star map
xi -> xi^3 and a regular octagonal window, which gives the vertex set of
an Ammann-Beenker tiling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ideals import CycIdeal, coset_representatives
from .ring import CycInt, RingIndex, cyclotomic_ring

__all__ = [
    "AB_WINDOW_RADIUS",
    "PALETTE",
    "Patch",
    "PatchPoint",
    "Window",
    "ab_patch",
    "ammann_beenker_vertices",
    "lattice_patch",
    "render_patch",
]

# Regular octagon of edge length 1: the image of the unit 4-cube under the star map.
AB_WINDOW_RADIUS = 1 / (2 * math.sin(math.pi / 8))

BOUNDARY_EPS = 1e-12

PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#42d4f4", "#f032e6", "#bfef45", "#fabed4", "#469990", "#dcbeff",
    "#9a6324", "#fffac8", "#800000", "#aaffc3", "#808000", "#000075",
)


@dataclass(frozen=True)
class PatchPoint:
    z: CycInt
    position: complex
    colour: int


@dataclass
class Patch:
    points: list[PatchPoint]
    radius: float
    cell: str  # "square", "hexagon" or "dot"

    @property
    def colours(self) -> set[int]:
        return {p.colour for p in self.points}


@dataclass(frozen=True)
class Window:
    """Regular octagon centred at 0 with vertices at angles (2k+1) pi / 8."""

    circumradius: float = AB_WINDOW_RADIUS

    @property
    def apothem(self) -> float:
        return self.circumradius * math.cos(math.pi / 8)

    def contains(self, w: np.ndarray | complex) -> np.ndarray | bool:
        """Strict interior test; points within BOUNDARY_EPS of an edge are outside."""
        w = np.asarray(w)
        inside = np.ones(w.shape, dtype=bool)
        for k in range(8):
            normal = complex(math.cos(k * math.pi / 4), math.sin(k * math.pi / 4))
            proj = w.real * normal.real + w.imag * normal.imag
            inside &= proj < self.apothem - BOUNDARY_EPS
        return inside if inside.shape else bool(inside)


def _embedding_vector(ring: RingIndex, k: int = 1) -> np.ndarray:
    return np.exp(2j * np.pi * k * np.arange(ring.degree) / ring.n)


def _colour_points(I: CycIdeal, coords: np.ndarray, cell: str, radius: float) -> Patch:
    ring = I.ring
    table = coset_representatives(I)
    emb = _embedding_vector(ring)
    pts = []
    for row in coords:
        z = CycInt(ring, tuple(int(c) for c in row))
        pts.append(PatchPoint(z, complex(row @ emb), table.colour(z)))
    return Patch(pts, radius, cell)


def lattice_patch(I: CycIdeal, radius: float) -> Patch:
    """All points of the square (n=4) or hexagonal (n=3) lattice within the radius."""
    ring = I.ring
    if ring.n not in (3, 4):
        raise ValueError(f"Z[xi_{ring.n}] is dense in the plane; only n = 3, 4 are lattices")
    # |a + b xi|^2 >= (3/4) max(a, b)^2 for n = 3, and a^2 + b^2 for n = 4
    m = math.floor(radius * (2 / math.sqrt(3) if ring.n == 3 else 1)) + 1
    ax = np.arange(-m, m + 1)
    coords = np.array([(a, b) for a in ax for b in ax], dtype=np.int64)
    pos = coords @ _embedding_vector(ring)
    coords = coords[np.abs(pos) <= radius + 1e-9]
    return _colour_points(I, coords, "square" if ring.n == 4 else "hexagon", radius)


def ammann_beenker_vertices(window: Window | None = None, radius: float = 10.0) -> list[CycInt]:
    """Points z of Z[xi_8] with |z| <= radius whose star image z* lies in the window.

    Every coordinate obeys c_j = (1/4) sum_k sigma_k(z) xi^(-kj) over the four
    embeddings, hence |c_j| <= (|z| + |z*|) / 2, which bounds the search box.
    """
    window = window or Window()
    ring = cyclotomic_ring(8)
    m = math.floor((radius + window.circumradius) / 2)
    ax = np.arange(-m, m + 1, dtype=np.int64)
    grids = np.meshgrid(ax, ax, ax, ax, indexing="ij")
    coords = np.stack([g.ravel() for g in grids], axis=1)
    pos = coords @ _embedding_vector(ring, 1)
    star = coords @ _embedding_vector(ring, 3)
    keep = (np.abs(pos) <= radius + 1e-9) & window.contains(star)
    coords = coords[keep]
    order = np.lexsort(coords.T[::-1])
    return [CycInt(ring, tuple(int(c) for c in row)) for row in coords[order]]


def ab_patch(I: CycIdeal, radius: float, window: Window | None = None) -> Patch:
    if I.ring.n != 8:
        raise ValueError("the Ammann-Beenker patch lives in Z[xi_8]")
    verts = ammann_beenker_vertices(window, radius)
    coords = np.array([z.coeffs for z in verts], dtype=np.int64).reshape(-1, 4)
    return _colour_points(I, coords, "dot", radius)


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _cell_svg(p: PatchPoint, cell: str, fill: str) -> str:
    x, y = p.position.real, -p.position.imag
    if cell == "square":
        return (f'<rect x="{_fmt(x - 0.5)}" y="{_fmt(y - 0.5)}" width="1" height="1" '
                f'fill="{fill}" stroke="#333333" stroke-width="0.03"/>')
    if cell == "hexagon":
        r = 1 / math.sqrt(3)
        corners = " ".join(
            f"{_fmt(x + r * math.cos(math.pi / 6 + k * math.pi / 3))},"
            f"{_fmt(y + r * math.sin(math.pi / 6 + k * math.pi / 3))}"
            for k in range(6)
        )
        return f'<polygon points="{corners}" fill="{fill}" stroke="#333333" stroke-width="0.03"/>'
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="0.18" fill="{fill}" stroke="#333333" stroke-width="0.02"/>'


def render_patch(patch: Patch, path: str | Path | None = None, palette=PALETTE) -> str:
    """SVG 1.1 document with one element per point; written to path if given."""
    if len(patch.points) > 100_000:
        raise ValueError("refusing to render more than 10^5 points")
    half = patch.radius + 1
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(-half)} {_fmt(-half)} {_fmt(2 * half)} {_fmt(2 * half)}">',
    ]
    for p in sorted(patch.points, key=lambda p: p.z.coeffs):
        fill = palette[(p.colour - 1) % len(palette)]
        lines.append(_cell_svg(p, patch.cell, fill))
    lines.append("</svg>")
    doc = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(doc, encoding="utf-8")
    return doc
