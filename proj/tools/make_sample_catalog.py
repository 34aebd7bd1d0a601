#!/usr/bin/env python3
"""Writes a deterministic USGS-format earthquake catalog for tests and demos.

Events cluster around well-known seismic zones with a uniform background
over the contiguous US. A handful of malformed rows exercise the loader's
skip path.
"""

import argparse
import csv
import math
import random
from datetime import datetime, timedelta, timezone

HEADER = [
    "time", "latitude", "longitude", "depth", "mag", "magType", "nst", "gap",
    "dmin", "rms", "net", "id", "updated", "place", "type", "horizontalError",
    "depthError", "magError", "magNst", "status", "locationSource", "magSource",
]

# (label, lat, lon, spread in degrees, net, weight)
ZONES = [
    ("Ridgecrest, CA", 35.7, -117.6, 0.6, "ci", 18),
    ("Parkfield, CA", 35.9, -120.4, 0.5, "nc", 8),
    ("The Geysers, CA", 38.8, -122.8, 0.3, "nc", 8),
    ("Petrolia, CA", 40.3, -124.3, 0.5, "nc", 5),
    ("Anchorage, Alaska", 61.3, -149.9, 1.5, "ak", 14),
    ("Adak, Alaska", 51.9, -176.6, 1.0, "av", 5),
    ("Pahala, Hawaii", 19.3, -155.4, 0.4, "hv", 9),
    ("Cushing, Oklahoma", 36.0, -96.8, 0.8, "ok", 7),
    ("Yellowstone National Park, Wyoming", 44.6, -110.6, 0.4, "uu", 6),
    ("Tonopah, Nevada", 38.1, -117.9, 0.9, "nn", 7),
    ("Lone Pine, CA", 36.6, -118.1, 0.5, "ci", 5),
    ("Idaho City, Idaho", 44.0, -115.6, 0.7, "mb", 3),
    ("Ridgely, Tennessee", 36.3, -89.5, 0.6, "nm", 4),
    ("Pawnee, Oklahoma", 36.4, -96.9, 0.4, "ok", 3),
    ("Puerto Rico region", 18.0, -66.8, 0.4, "pr", 4),
]
BACKGROUND_WEIGHT = 12
DIRECTIONS = ["N", "NNE", "NE", "ENE", "E", "ESE", "SE", "SSE",
              "S", "SSW", "SW", "WSW", "W", "WNW", "NW", "NNW"]
START = datetime(2022, 1, 1, tzinfo=timezone.utc)
SPAN_MS = 2 * 365 * 24 * 3600 * 1000


def iso(t: datetime) -> str:
    return t.strftime("%Y-%m-%dT%H:%M:%S.") + f"{t.microsecond // 1000:03d}Z"


def magnitude(rng: random.Random) -> float:
    # Gutenberg-Richter with b = 1 above a completeness magnitude of 1.0.
    return round(min(1.0 + rng.expovariate(math.log(10)), 7.4), 2)


def event(rng: random.Random, seq: int) -> list:
    total = sum(z[5] for z in ZONES) + BACKGROUND_WEIGHT
    pick = rng.uniform(0, total)
    zone = None
    for z in ZONES:
        if pick < z[5]:
            zone = z
            break
        pick -= z[5]
    if zone:
        label, lat0, lon0, spread, net = zone[:5]
        lat = lat0 + rng.gauss(0, spread)
        lon = lon0 + rng.gauss(0, spread / max(math.cos(math.radians(lat0)), 0.2))
    else:
        label, net = "contiguous US", "us"
        lat, lon = rng.uniform(25.0, 49.0), rng.uniform(-124.5, -67.0)
    lon = max(-179.99, min(179.99, lon))
    t = START + timedelta(milliseconds=rng.randrange(SPAN_MS))
    mag = magnitude(rng)
    dist = rng.randint(1, 60)
    place = f"{dist} km {rng.choice(DIRECTIONS)} of {label}"
    eid = f"{net}{70000000 + seq}"
    return [
        iso(t), f"{lat:.4f}", f"{lon:.4f}", f"{rng.uniform(0.5, 35):.2f}", f"{mag:.2f}",
        "ml" if mag < 4 else "mw", rng.randint(5, 90), rng.randint(20, 250),
        f"{rng.uniform(0.001, 1.5):.4f}", f"{rng.uniform(0.05, 0.9):.2f}", net, eid,
        iso(t + timedelta(days=rng.randint(1, 60))), place, "earthquake",
        f"{rng.uniform(0.1, 5):.2f}", f"{rng.uniform(0.2, 10):.2f}",
        f"{rng.uniform(0.05, 0.3):.3f}", rng.randint(3, 40), "reviewed", net, net,
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=20240607)
    ap.add_argument("--out", default="data/earthquakes_sample.csv")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rows = [event(rng, i) for i in range(args.rows)]

    bad = [list(r) for r in rows[:5]]
    bad[0][1] = "91.0000"                # latitude out of range
    bad[1][4] = ""                       # missing magnitude
    bad[2][0] = "not-a-time"             # malformed timestamp
    bad[3][2] = "nan"                    # non-finite longitude
    for i, r in enumerate(bad[:4]):
        r[11] = f"bad{i}"
    # bad[4] keeps its id: a duplicate of the first row.
    for k, r in enumerate(bad):
        rows.insert(1000 * (k + 1), r)

    with open(args.out, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(HEADER)
        w.writerows(rows)


if __name__ == "__main__":
    main()
