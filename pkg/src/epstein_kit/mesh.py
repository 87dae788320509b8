"""Triangle meshes of Epstein surfaces, domes and their normal flows, written as OBJ.

Vertices are upper half-space chart coordinates (Re xi, Im xi, t).
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .domains import ConformalMetric, PlaneDomain, UnitDisk, UpperHalfPlane
from .domes import build_dome
from .epstein import EpsteinInput, epstein_envelope
from .errors import UnsupportedError
from .halfspace import H3Point
from .schwarzian import catalog

__all__ = ["Mesh", "epstein_mesh", "dome_mesh", "flow_meshes", "write_obj", "format_obj"]


class Mesh(NamedTuple):
    vertices: np.ndarray  # (n, 3)
    faces: list  # zero-based vertex index triples
    lines: list  # zero-based index lists for polylines


def _polar_faces(levels: int, angles: int) -> list:
    # vertex 0 is the center, then ``levels`` rings of ``angles`` vertices
    faces = [(0, 1 + k, 1 + (k + 1) % angles) for k in range(angles)]
    for i in range(levels - 1):
        a, b = 1 + i * angles, 1 + (i + 1) * angles
        for k in range(angles):
            k2 = (k + 1) % angles
            faces += [(a + k, b + k, b + k2), (a + k, b + k2, a + k2)]
    return faces


def _polar_points(levels: int, angles: int, radii: np.ndarray) -> np.ndarray:
    th = 2 * np.pi * np.arange(angles) / angles
    ring = (radii[:, None] * np.exp(1j * th)[None, :]).ravel()
    return np.concatenate([[0j], ring])


def _source_points(domain: PlaneDomain, levels: int, angles: int, radius: float) -> np.ndarray:
    # hyperbolically even disk grid, carried to the source domain
    w = _polar_points(levels, angles, np.tanh(np.linspace(0, radius, levels + 1)[1:] / 2))
    if isinstance(domain, UnitDisk):
        return w
    if isinstance(domain, UpperHalfPlane):
        return 1j * (1 + w) / (1 - w)
    raise UnsupportedError(f"no mesh grid for the {domain.tag}")


def epstein_mesh(map_name: str, metric: str = "hyperbolic", s: float = 0.0, levels: int = 24,
                 angles: int = 48, radius: float = 2.5, **params) -> Mesh:
    """Epstein surface of a catalogued map over a hyperbolic polar grid of its source."""
    if metric != "hyperbolic":
        raise UnsupportedError(f"unknown metric {metric!r}; only 'hyperbolic' is meshed")
    entry = catalog(map_name, **params)
    inp = EpsteinInput(entry, ConformalMetric.hyperbolic(entry.domain))
    z = _source_points(entry.domain, levels, angles, radius)
    xi, t, _ = epstein_envelope(inp, z, s)
    verts = np.column_stack([np.real(xi), np.imag(xi), t])
    return Mesh(verts, _polar_faces(levels, angles), [])


def flow_meshes(map_name: str, steps: int = 5, dt: float = 0.5, **kwargs) -> list:
    """Equidistant surfaces at flow times 0, dt, ..., (steps - 1) dt."""
    return [epstein_mesh(map_name, s=k * dt, **kwargs) for k in range(steps)]


def _clip(verts: np.ndarray, faces: list, keep: np.ndarray):
    # keep triangles whose three vertices are kept, then drop unused vertices
    tri = [f for f in faces if keep[f[0]] and keep[f[1]] and keep[f[2]]]
    used = sorted({i for f in tri for i in f})
    index = {old: new for new, old in enumerate(used)}
    return verts[used], [tuple(index[i] for i in f) for f in tri]


def _face_patch(face, resolution: int, extent: float):
    disk = face.plane.boundary
    if disk.is_half_plane:
        p, direction = disk.line
        d = complex(direction) / abs(direction)
        # vertical half-plane over the line: offsets along it by log-spaced heights
        x = np.linspace(-extent, extent, 2 * resolution + 1)
        h = np.exp(np.linspace(-math.log(extent), math.log(extent), resolution + 1))
        X, T = np.meshgrid(x, h, indexing="ij")
        xi = p + X.ravel() * d
        verts = np.column_stack([xi.real, xi.imag, T.ravel()])
        m = h.size
        faces = []
        for i in range(x.size - 1):
            for j in range(m - 1):
                a, b = i * m + j, (i + 1) * m + j
                faces += [(a, b, b + 1), (a, b + 1, a + 1)]
    else:
        c, R = disk.center, disk.radius
        levels, angles = resolution, 2 * resolution
        r = np.linspace(0, 1, levels + 1)[1:]
        w = _polar_points(levels, angles, r)
        xi = c + R * w
        t = R * np.sqrt(np.clip(1 - np.abs(w) ** 2, 0, None))
        verts = np.column_stack([xi.real, xi.imag, t])
        faces = _polar_faces(levels, angles)
    # a vertex stays when its point (lifted slightly off the boundary) lies in the piece
    keep = np.array([face.region(H3Point(complex(v[0], v[1]), max(v[2], 1e-300))) for v in verts])
    return _clip(verts, faces, keep)


def dome_mesh(domain: PlaneDomain, resolution: int = 32, extent: float = 8.0, ridge_points: int = 65) -> Mesh:
    """Face patches of a finitely bent dome plus one polyline per ridge."""
    dome = build_dome(domain)
    all_verts, all_faces, lines, offset = [], [], [], 0
    for face in dome.faces:
        v, f = _face_patch(face, resolution, extent)
        all_verts.append(v)
        all_faces += [tuple(i + offset for i in tri) for tri in f]
        offset += len(v)
    for ridge in dome.ridges:
        pts = ridge.points(ridge_points)
        all_verts.append(np.array([[p.xi.real, p.xi.imag, p.t] for p in pts]))
        lines.append(list(range(offset, offset + len(pts))))
        offset += len(pts)
    return Mesh(np.vstack(all_verts), all_faces, lines)


def format_obj(mesh: Mesh, comment: str | None = None) -> str:
    out = [f"# {line}" for line in (comment or "").splitlines()]
    out += [f"v {x:.12g} {y:.12g} {z:.12g}" for x, y, z in mesh.vertices]
    out += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.faces]
    out += ["l " + " ".join(str(i + 1) for i in line) for line in mesh.lines]
    return "\n".join(out) + "\n"


def write_obj(mesh: Mesh, path, comment: str | None = None) -> Path:
    path = Path(path)
    path.write_text(format_obj(mesh, comment))
    return path
