"""Projection math and grid geometry on the WGS84 ellipsoid.

Supported coordinate reference systems:

  * EPSG:4326  - geographic longitude/latitude (degrees),
  * EPSG:3395  - World Mercator (ellipsoidal),
  * EPSG:32601-32660 / 32701-32760 - UTM north/south zones, computed with the
    Krueger series in the transverse Mercator flavour carried to sixth order
    in the third flattening, which is accurate to well under a millimetre
    anywhere inside a zone's usable extent.

All projection functions accept scalars or numpy arrays and broadcast
elementwise. Everything here is pure and safe to call from any thread.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, OutOfDomainError, UnsupportedCrsError

# WGS84 ellipsoid
WGS84_A = 6378137.0
WGS84_F = 1.0 / 298.257223563
_E2 = WGS84_F * (2.0 - WGS84_F)          # first eccentricity squared
_E = math.sqrt(_E2)
_N = WGS84_F / (2.0 - WGS84_F)           # third flattening

UTM_K0 = 0.9996
UTM_FALSE_EASTING = 500000.0
UTM_FALSE_NORTHING_SOUTH = 10000000.0

MAX_PROJECTED_LAT_DEG = 84.0
MAX_UTM_LON_DELTA_DEG = 30.0
_DOMAIN_SLACK_DEG = 1e-9

# Rectifying radius: A = a/(1+n) * (1 + n^2/4 + n^4/64 + n^6/256)
_RECT_A = WGS84_A / (1.0 + _N) * (1.0 + _N**2 / 4.0 + _N**4 / 64.0 + _N**6 / 256.0)

# Krueger series coefficients to n^6 (forward: alpha, inverse: beta).
_ALPHA = (
    _N / 2 - 2 * _N**2 / 3 + 5 * _N**3 / 16 + 41 * _N**4 / 180
    - 127 * _N**5 / 288 + 7891 * _N**6 / 37800,
    13 * _N**2 / 48 - 3 * _N**3 / 5 + 557 * _N**4 / 1440 + 281 * _N**5 / 630
    - 1983433 * _N**6 / 1935360,
    61 * _N**3 / 240 - 103 * _N**4 / 140 + 15061 * _N**5 / 26880
    + 167603 * _N**6 / 181440,
    49561 * _N**4 / 161280 - 179 * _N**5 / 168 + 6601661 * _N**6 / 7257600,
    34729 * _N**5 / 80640 - 3418889 * _N**6 / 1995840,
    212378941 * _N**6 / 319334400,
)
_BETA = (
    _N / 2 - 2 * _N**2 / 3 + 37 * _N**3 / 96 - _N**4 / 360
    - 81 * _N**5 / 512 + 96199 * _N**6 / 604800,
    _N**2 / 48 + _N**3 / 15 - 437 * _N**4 / 1440 + 46 * _N**5 / 105
    - 1118711 * _N**6 / 3870720,
    17 * _N**3 / 480 - 37 * _N**4 / 840 - 209 * _N**5 / 4480
    + 5569 * _N**6 / 90720,
    4397 * _N**4 / 161280 - 11 * _N**5 / 504 - 830251 * _N**6 / 7257600,
    4583 * _N**5 / 161280 - 108847 * _N**6 / 3991680,
    20648693 * _N**6 / 638668800,
)


# ---------------------------------------------------------------------------
# CRS codes

def is_supported_crs(epsg: int) -> bool:
    return epsg == 4326 or epsg == 3395 or 32601 <= epsg <= 32660 or 32701 <= epsg <= 32760


def validate_crs(epsg: int) -> int:
    """Return ``epsg`` if supported, else raise UnsupportedCrsError."""
    if not isinstance(epsg, (int, np.integer)) or not is_supported_crs(int(epsg)):
        raise UnsupportedCrsError(f"unsupported CRS code: {epsg!r}")
    return int(epsg)


def is_geographic(epsg: int) -> bool:
    return epsg == 4326


def is_utm(epsg: int) -> bool:
    return 32601 <= epsg <= 32660 or 32701 <= epsg <= 32760


def utm_zone(epsg: int) -> int:
    return epsg % 100


def utm_is_south(epsg: int) -> bool:
    return 32701 <= epsg <= 32760


def utm_central_lon(epsg: int) -> float:
    """Central meridian of a UTM zone, degrees east."""
    return (utm_zone(epsg) - 1) * 6 - 180 + 3


# ---------------------------------------------------------------------------
# Grid geometry

@dataclass(frozen=True)
class GeoTransform:
    """North-up axis-aligned affine mapping from pixel (col, row) to CRS x/y.

    ``origin_x``/``origin_y`` locate the outer corner of pixel (0, 0);
    ``pixel_w`` is positive, ``pixel_h`` negative (rows grow southward).
    """

    origin_x: float
    origin_y: float
    pixel_w: float
    pixel_h: float

    def __post_init__(self):
        if not (self.pixel_w > 0):
            raise InvalidArgumentError(f"pixel_w must be > 0, got {self.pixel_w}")
        if not (self.pixel_h < 0):
            raise InvalidArgumentError(f"pixel_h must be < 0, got {self.pixel_h}")


def apply_geotransform(gt: GeoTransform, col, row):
    """Map (col, row) pixel coordinates to CRS (x, y). Accepts arrays."""
    x = gt.origin_x + np.multiply(col, gt.pixel_w)
    y = gt.origin_y + np.multiply(row, gt.pixel_h)
    return x, y


def invert_geotransform(gt: GeoTransform, x, y):
    """Map CRS (x, y) to continuous (col, row); exact inverse of apply."""
    col = (np.asarray(x, dtype=float) - gt.origin_x) / gt.pixel_w
    row = (np.asarray(y, dtype=float) - gt.origin_y) / gt.pixel_h
    if np.ndim(col) == 0:
        return float(col), float(row)
    return col, row


@dataclass(frozen=True)
class BoundingBox:
    """Axis-aligned box in a CRS; min strictly below max on both axes."""

    minx: float
    maxx: float
    miny: float
    maxy: float
    crs: int

    def __post_init__(self):
        if not (self.minx < self.maxx and self.miny < self.maxy):
            raise InvalidArgumentError(
                f"degenerate bounding box: x [{self.minx}, {self.maxx}], "
                f"y [{self.miny}, {self.maxy}]"
            )
        validate_crs(self.crs)

    @property
    def width(self) -> float:
        return self.maxx - self.minx

    @property
    def height(self) -> float:
        return self.maxy - self.miny

    @property
    def area(self) -> float:
        return self.width * self.height

    def _check_same_crs(self, other: "BoundingBox"):
        if self.crs != other.crs:
            raise InvalidArgumentError(
                f"CRS mismatch: {self.crs} vs {other.crs}"
            )

    def intersects(self, other: "BoundingBox") -> bool:
        self._check_same_crs(other)
        return (self.minx < other.maxx and other.minx < self.maxx
                and self.miny < other.maxy and other.miny < self.maxy)

    def intersection(self, other: "BoundingBox") -> "BoundingBox | None":
        """Box overlap, or None when the interiors are disjoint."""
        self._check_same_crs(other)
        if not self.intersects(other):
            return None
        return BoundingBox(max(self.minx, other.minx), min(self.maxx, other.maxx),
                           max(self.miny, other.miny), min(self.maxy, other.maxy),
                           self.crs)

    def hull(self, other: "BoundingBox") -> "BoundingBox":
        self._check_same_crs(other)
        return BoundingBox(min(self.minx, other.minx), max(self.maxx, other.maxx),
                           min(self.miny, other.miny), max(self.maxy, other.maxy),
                           self.crs)

    def contains(self, other: "BoundingBox", tol: float = 0.0) -> bool:
        self._check_same_crs(other)
        return (self.minx <= other.minx + tol and self.maxx >= other.maxx - tol
                and self.miny <= other.miny + tol and self.maxy >= other.maxy - tol)


# ---------------------------------------------------------------------------
# Projections

def _wrap_lon(delta):
    """Wrap longitude offsets into (-180, 180]."""
    return -np.remainder(180.0 - np.asarray(delta, dtype=float), 360.0) + 180.0


def _scalarize(was_scalar, *arrays):
    if was_scalar:
        return tuple(float(a) for a in arrays)
    return arrays


def _check(condition_bad, message):
    if np.any(condition_bad):
        raise OutOfDomainError(message)


def _tau_from_taup(taup):
    """Invert tan(conformal latitude) -> tan(latitude) by Newton iteration."""
    e2m = 1.0 - _E2
    tau = taup / e2m
    for _ in range(6):
        sigma = np.sinh(_E * np.arctanh(_E * tau / np.hypot(1.0, tau)))
        taupa = tau * np.hypot(1.0, sigma) - sigma * np.hypot(1.0, tau)
        tau = tau + (taup - taupa) * (1.0 + e2m * tau**2) / (
            e2m * np.hypot(1.0, tau) * np.hypot(1.0, taupa))
    return tau


def _tm_forward(lon, lat, lon0):
    """Transverse Mercator core: returns (eta, xi) in rectifying units."""
    lam = np.radians(_wrap_lon(lon - lon0))
    phi = np.radians(lat)
    tau = np.tan(phi)
    sigma = np.sinh(_E * np.arctanh(_E * tau / np.hypot(1.0, tau)))
    taup = tau * np.hypot(1.0, sigma) - sigma * np.hypot(1.0, tau)
    cos_lam = np.cos(lam)
    xi_p = np.arctan2(taup, cos_lam)
    eta_p = np.arcsinh(np.sin(lam) / np.hypot(taup, cos_lam))
    xi = xi_p.copy() if isinstance(xi_p, np.ndarray) else xi_p
    eta = eta_p.copy() if isinstance(eta_p, np.ndarray) else eta_p
    for j, a in enumerate(_ALPHA, start=1):
        xi = xi + a * np.sin(2 * j * xi_p) * np.cosh(2 * j * eta_p)
        eta = eta + a * np.cos(2 * j * xi_p) * np.sinh(2 * j * eta_p)
    return eta, xi


def _tm_inverse(eta, xi, lon0):
    """Inverse of ``_tm_forward``; returns (lon, lat) in degrees."""
    xi_p = xi
    eta_p = eta
    for j, b in enumerate(_BETA, start=1):
        xi_p = xi_p - b * np.sin(2 * j * xi) * np.cosh(2 * j * eta)
        eta_p = eta_p - b * np.cos(2 * j * xi) * np.sinh(2 * j * eta)
    sinh_eta = np.sinh(eta_p)
    cos_xi = np.cos(xi_p)
    taup = np.sin(xi_p) / np.hypot(sinh_eta, cos_xi)
    lam = np.arctan2(sinh_eta, cos_xi)
    tau = _tau_from_taup(taup)
    lon = _wrap_lon(lon0 + np.degrees(lam))
    lat = np.degrees(np.arctan(tau))
    return lon, lat


def forward_project(epsg: int, lon, lat):
    """Project geographic (lon, lat) degrees into CRS coordinates (metres).

    EPSG:4326 returns the input unchanged. Raises OutOfDomainError for
    latitudes beyond +/-84 deg on projected CRS, or longitudes farther than
    30 deg from a UTM zone's central meridian.
    """
    validate_crs(epsg)
    lon_a = np.asarray(lon, dtype=float)
    lat_a = np.asarray(lat, dtype=float)
    scalar = lon_a.ndim == 0 and lat_a.ndim == 0
    _check(np.abs(lon_a) > 180.0 + _DOMAIN_SLACK_DEG,
           "longitude outside [-180, 180]")
    if epsg == 4326:
        _check(np.abs(lat_a) > 90.0 + _DOMAIN_SLACK_DEG,
               "latitude outside [-90, 90]")
        return _scalarize(scalar, lon_a + 0.0, lat_a + 0.0)
    _check(np.abs(lat_a) > MAX_PROJECTED_LAT_DEG + _DOMAIN_SLACK_DEG,
           f"latitude beyond +/-{MAX_PROJECTED_LAT_DEG} deg")
    if epsg == 3395:
        x = WGS84_A * np.radians(lon_a)
        s = np.sin(np.radians(lat_a))
        y = WGS84_A * (np.arctanh(s) - _E * np.arctanh(_E * s))
        return _scalarize(scalar, x, y)
    lon0 = utm_central_lon(epsg)
    _check(np.abs(_wrap_lon(lon_a - lon0)) > MAX_UTM_LON_DELTA_DEG + _DOMAIN_SLACK_DEG,
           f"longitude farther than {MAX_UTM_LON_DELTA_DEG} deg from the "
           f"central meridian of EPSG:{epsg}")
    eta, xi = _tm_forward(lon_a, lat_a, lon0)
    x = UTM_FALSE_EASTING + UTM_K0 * _RECT_A * eta
    y = UTM_K0 * _RECT_A * xi
    if utm_is_south(epsg):
        y = y + UTM_FALSE_NORTHING_SOUTH
    return _scalarize(scalar, x, y)


def inverse_project(epsg: int, x, y):
    """Inverse of ``forward_project``; returns (lon, lat) in degrees."""
    validate_crs(epsg)
    x_a = np.asarray(x, dtype=float)
    y_a = np.asarray(y, dtype=float)
    scalar = x_a.ndim == 0 and y_a.ndim == 0
    if epsg == 4326:
        _check(np.abs(x_a) > 180.0 + _DOMAIN_SLACK_DEG, "longitude outside [-180, 180]")
        _check(np.abs(y_a) > 90.0 + _DOMAIN_SLACK_DEG, "latitude outside [-90, 90]")
        return _scalarize(scalar, x_a + 0.0, y_a + 0.0)
    if epsg == 3395:
        _check(np.abs(x_a) > WGS84_A * math.pi * (1 + 1e-12) + 1e-6,
               "easting outside the World Mercator domain")
        lon = np.degrees(x_a / WGS84_A)
        taup = np.sinh(y_a / WGS84_A)
        lat = np.degrees(np.arctan(_tau_from_taup(taup)))
        _check(np.abs(lat) > MAX_PROJECTED_LAT_DEG + 1e-6,
               f"northing beyond the +/-{MAX_PROJECTED_LAT_DEG} deg latitude limit")
        return _scalarize(scalar, lon, lat)
    lon0 = utm_central_lon(epsg)
    yy = y_a - (UTM_FALSE_NORTHING_SOUTH if utm_is_south(epsg) else 0.0)
    eta = (x_a - UTM_FALSE_EASTING) / (UTM_K0 * _RECT_A)
    xi = yy / (UTM_K0 * _RECT_A)
    lon, lat = _tm_inverse(eta, xi, lon0)
    _check(np.abs(lat) > MAX_PROJECTED_LAT_DEG + 1e-6,
           f"northing beyond the +/-{MAX_PROJECTED_LAT_DEG} deg latitude limit")
    _check(np.abs(_wrap_lon(lon - lon0)) > MAX_UTM_LON_DELTA_DEG + 1e-6,
           f"easting farther than {MAX_UTM_LON_DELTA_DEG} deg from the "
           f"central meridian of EPSG:{epsg}")
    return _scalarize(scalar, lon, lat)


def transform_point(src: int, dst: int, x, y):
    """Transform coordinates between CRS. src == dst is the exact identity."""
    validate_crs(src)
    validate_crs(dst)
    if src == dst:
        x_a = np.asarray(x, dtype=float)
        y_a = np.asarray(y, dtype=float)
        if x_a.ndim == 0 and y_a.ndim == 0:
            return float(x_a), float(y_a)
        return x_a, y_a
    lon, lat = inverse_project(src, x, y)
    return forward_project(dst, lon, lat)


# Curvature floor used to bound how far a projected edge can bulge between
# densification samples (sagitta ~ chord^2 / (8 r); 6.3e6 m is below any
# curvature radius these projections produce in-domain, and the extra /2
# doubles the margin).
_SAGITTA_RADIUS = 6.3e6 / 2.0


def reproject_bbox(b: BoundingBox, dst: int, densify_n: int = 21) -> BoundingBox:
    """Axis-aligned hull in ``dst`` of a box's densified boundary.

    The hull is padded by a curvature bound on the bulge of edge curves
    between samples, so the result conservatively contains the true image of
    the whole box. With src == dst the box is returned unchanged.
    """
    validate_crs(dst)
    if densify_n < 1:
        raise InvalidArgumentError("densify_n must be >= 1")
    if b.crs == dst:
        return b
    t = np.linspace(0.0, 1.0, densify_n + 2)  # corners + densify_n interior points
    ones = np.ones_like(t)
    edges = [
        (b.minx + t * b.width, b.miny * ones),   # south
        (b.minx + t * b.width, b.maxy * ones),   # north
        (b.minx * ones, b.miny + t * b.height),  # west
        (b.maxx * ones, b.miny + t * b.height),  # east
    ]
    minx = miny = math.inf
    maxx = maxy = -math.inf
    max_gap_sq = 0.0
    for ex, ey in edges:
        tx, ty = transform_point(b.crs, dst, ex, ey)
        minx = min(minx, float(np.min(tx)))
        maxx = max(maxx, float(np.max(tx)))
        miny = min(miny, float(np.min(ty)))
        maxy = max(maxy, float(np.max(ty)))
        gaps = np.diff(tx) ** 2 + np.diff(ty) ** 2
        max_gap_sq = max(max_gap_sq, float(np.max(gaps)))
    pad = max_gap_sq / _SAGITTA_RADIUS
    return BoundingBox(minx - pad, maxx + pad, miny - pad, maxy + pad, dst)
