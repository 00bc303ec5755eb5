#!/usr/bin/env python3
"""Regenerate tests/fixtures/geodesy_reference.json.

The fixture holds reference projection values computed independently of the
library under test. Two classical transverse-Mercator formulations are
evaluated side by side in 50-digit mpmath arithmetic:

  * Redfearn's series as published in the GDA technical manual, and
  * the USGS "Map Projections - A Working Manual" series (Snyder eq. 8-9ff),

plus exact anchors that involve no series at all: numerical quadrature of the
meridian-arc integral for central-meridian points, and quadrature of the
ellipsoidal Mercator integral. A fixture value is only emitted when the
methods agree to < 2e-4 m, far below the 1e-2 m at which the values are
asserted; disagreement aborts the run.

All points stay within 3 degrees of the UTM central meridian, where the
truncation error of both series is at the micrometer level.

Requires mpmath (available in the dev environment only; the generated JSON is
checked in, so the test suite itself has no mpmath dependency).
"""

import json
import math
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50

# WGS84
A = mp.mpf(6378137)
F = 1 / mp.mpf("298.257223563")
E2 = F * (2 - F)
E = mp.sqrt(E2)
EP2 = E2 / (1 - E2)
K0 = mp.mpf("0.9996")

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "geodesy_reference.json"

AGREE_TOL = mp.mpf("2e-4")  # metres


def meridian_arc_quad(phi):
    """Exact meridian arc length from the equator, by quadrature."""
    integrand = lambda t: A * (1 - E2) / (1 - E2 * mp.sin(t) ** 2) ** mp.mpf("1.5")
    return mp.quad(integrand, [0, phi])


def meridian_arc_series(phi):
    e4, e6 = E2 ** 2, E2 ** 3
    a0 = 1 - E2 / 4 - 3 * e4 / 64 - 5 * e6 / 256
    a2 = mp.mpf(3) / 8 * (E2 + e4 / 4 + 15 * e6 / 128)
    a4 = mp.mpf(15) / 256 * (e4 + 3 * e6 / 4)
    a6 = 35 * e6 / 3072
    return A * (a0 * phi - a2 * mp.sin(2 * phi) + a4 * mp.sin(4 * phi) - a6 * mp.sin(6 * phi))


def utm_params(epsg):
    zone = epsg % 100
    south = 32700 <= epsg <= 32760
    lon0 = mp.mpf((zone - 1) * 6 - 180 + 3)
    return lon0, (mp.mpf(10000000) if south else mp.mpf(0))


def wrap_delta_deg(lon, lon0):
    d = mp.mpf(lon) - lon0
    while d > 180:
        d -= 360
    while d < -180:
        d += 360
    return d


def tm_redfearn(lon, lat, lon0, false_n):
    """Transverse Mercator, Redfearn's series (GDA technical manual form)."""
    phi = mp.radians(mp.mpf(lat))
    omega = mp.radians(wrap_delta_deg(lon, lon0))
    s, c = mp.sin(phi), mp.cos(phi)
    t = mp.tan(phi)
    nu = A / mp.sqrt(1 - E2 * s ** 2)
    rho = A * (1 - E2) / (1 - E2 * s ** 2) ** mp.mpf("1.5")
    psi = nu / rho
    m = meridian_arc_series(phi)

    e_terms = (
        1
        + omega ** 2 / 6 * c ** 2 * (psi - t ** 2)
        + omega ** 4 / 120 * c ** 4
        * (4 * psi ** 3 * (1 - 6 * t ** 2) + psi ** 2 * (1 + 8 * t ** 2) - psi * 2 * t ** 2 + t ** 4)
        + omega ** 6 / 5040 * c ** 6 * (61 - 479 * t ** 2 + 179 * t ** 4 - t ** 6)
    )
    easting = 500000 + K0 * nu * omega * c * e_terms

    n_acc = (
        m
        + nu * s * omega ** 2 / 2 * c
        + nu * s * omega ** 4 / 24 * c ** 3 * (4 * psi ** 2 + psi - t ** 2)
        + nu * s * omega ** 6 / 720 * c ** 5
        * (8 * psi ** 4 * (11 - 24 * t ** 2) - 28 * psi ** 3 * (1 - 6 * t ** 2)
           + psi ** 2 * (1 - 32 * t ** 2) - psi * 2 * t ** 2 + t ** 4)
        + nu * s * omega ** 8 / 40320 * c ** 7 * (1385 - 3111 * t ** 2 + 543 * t ** 4 - t ** 6)
    )
    northing = false_n + K0 * n_acc
    return easting, northing


def tm_snyder(lon, lat, lon0, false_n):
    """Transverse Mercator, USGS Working Manual series (Snyder eq. 8-9, 8-10)."""
    phi = mp.radians(mp.mpf(lat))
    omega = mp.radians(wrap_delta_deg(lon, lon0))
    s, c = mp.sin(phi), mp.cos(phi)
    t2 = mp.tan(phi) ** 2
    nu = A / mp.sqrt(1 - E2 * s ** 2)
    big_a = omega * c
    cc = EP2 * c ** 2
    m = meridian_arc_series(phi)

    x = K0 * nu * (
        big_a
        + (1 - t2 + cc) * big_a ** 3 / 6
        + (5 - 18 * t2 + t2 ** 2 + 72 * cc - 58 * EP2) * big_a ** 5 / 120
    )
    y = K0 * (
        m
        + nu * mp.tan(phi) * (
            big_a ** 2 / 2
            + (5 - t2 + 9 * cc + 4 * cc ** 2) * big_a ** 4 / 24
            + (61 - 58 * t2 + t2 ** 2 + 600 * cc - 330 * EP2) * big_a ** 6 / 720
        )
    )
    return 500000 + x, false_n + y


def mercator_closed(lon, lat):
    phi = mp.radians(mp.mpf(lat))
    x = A * mp.radians(mp.mpf(lon))
    y = A * (mp.atanh(mp.sin(phi)) - E * mp.atanh(E * mp.sin(phi)))
    return x, y


def mercator_quad_y(lat):
    phi = mp.radians(mp.mpf(lat))
    integrand = lambda t: A * (1 - E2) / ((1 - E2 * mp.sin(t) ** 2) * mp.cos(t))
    return mp.quad(integrand, [0, phi])


def check(label, a, b, tol=AGREE_TOL):
    if abs(a - b) > tol:
        raise SystemExit(f"oracle disagreement for {label}: {a} vs {b} (|d|={abs(a-b)})")


def utm_point(epsg, lon, lat):
    lon0, fn = utm_params(epsg)
    e1, n1 = tm_redfearn(lon, lat, lon0, fn)
    e2, n2 = tm_snyder(lon, lat, lon0, fn)
    check(f"utm {epsg} ({lon},{lat}) easting", e1, e2)
    check(f"utm {epsg} ({lon},{lat}) northing", n1, n2)
    if wrap_delta_deg(lon, lon0) == 0:
        n_exact = fn + K0 * meridian_arc_quad(mp.radians(mp.mpf(lat)))
        check(f"utm {epsg} CM northing quad", n1, n_exact)
        check(f"utm {epsg} CM easting", e1, mp.mpf(500000), mp.mpf("1e-9"))
    return {"epsg": epsg, "lon": float(lon), "lat": float(lat),
            "x": float(e1), "y": float(n1), "method": "redfearn+snyder"}


def mercator_point(lon, lat):
    x, y = mercator_closed(lon, lat)
    check(f"mercator ({lon},{lat}) y quad", y, mercator_quad_y(lat), mp.mpf("1e-6"))
    return {"epsg": 3395, "lon": float(lon), "lat": float(lat),
            "x": float(x), "y": float(y), "method": "closed-form+quadrature"}


def bbox_hull_utm_to_mercator(epsg, minx, maxx, miny, maxy, n_edge=1001):
    """Dense-boundary image of a projected box in EPSG:3395, via oracle inverse.

    The inverse of the forward oracle is found per boundary point with
    mpmath's multidimensional root solver on the forward map itself, so no
    separate inverse series enters the fixture.
    """
    lon0, fn = utm_params(epsg)

    def inverse(x, y):
        def fun(lon, lat):
            e, n = tm_redfearn(lon, lat, lon0, fn)
            return e - x, n - y
        lon_guess = lon0 + mp.degrees((x - 500000) / (K0 * A))
        lat_guess = mp.degrees((y - fn) / (K0 * A))
        lon, lat = mp.findroot(fun, (lon_guess, lat_guess))
        return lon, lat

    pts = []
    for i in range(n_edge):
        f = mp.mpf(i) / (n_edge - 1)
        pts.append((minx + f * (maxx - minx), miny))
        pts.append((minx + f * (maxx - minx), maxy))
        pts.append((minx, miny + f * (maxy - miny)))
        pts.append((maxx, miny + f * (maxy - miny)))
    xs, ys = [], []
    corners = []
    for x, y in pts:
        lon, lat = inverse(x, y)
        mx, my = mercator_closed(lon, lat)
        xs.append(mx)
        ys.append(my)
    for x, y in [(minx, miny), (maxx, miny), (minx, maxy), (maxx, maxy)]:
        lon, lat = inverse(x, y)
        mx, my = mercator_closed(lon, lat)
        corners.append([float(mx), float(my)])
    return {
        "src_epsg": epsg, "dst_epsg": 3395,
        "src_box": [float(minx), float(maxx), float(miny), float(maxy)],
        "hull": [float(min(xs)), float(max(xs)), float(min(ys)), float(max(ys))],
        "corners": corners,
        "n_edge": n_edge,
    }


def main():
    points = [
        mercator_point(0, 0),
        mercator_point(90, 0),
        mercator_point(-43.2, -22.9),   # Rio de Janeiro
        mercator_point(10, 50),
        mercator_point(179, 80),
        mercator_point("-77.05", "-12.05"),
        utm_point(32723, "-43.2", "-22.9"),   # zone 23S, Rio
        utm_point(32723, -45, "-22.9"),       # on the central meridian
        utm_point(32723, "-46.5", -20),
        utm_point(32623, -44, 10),            # zone 23N
        utm_point(32601, -176, 65),           # zone 1N
        utm_point(32601, 180, 55),            # dateline wrap: delta = -3 deg
        utm_point(32660, "178.5", 30),        # zone 60N
        utm_point(32733, "13.5", "-8.8"),     # zone 33S, Luanda
    ]
    bbox = bbox_hull_utm_to_mercator(32723, mp.mpf(660000), mp.mpf(700000),
                                     mp.mpf(7450000), mp.mpf(7490000))
    out = {
        "version": 1,
        "ellipsoid": {"a": 6378137.0, "inv_f": 298.257223563},
        "k0": 0.9996,
        "agreement_tolerance_m": float(AGREE_TOL),
        "points": points,
        "bbox_cases": [bbox],
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    print(f"wrote {OUT} ({len(points)} points)")


if __name__ == "__main__":
    main()
