#!/usr/bin/env python3
"""Regenerate the packaged example datasets (deterministic, no RNG)."""

from __future__ import annotations

import csv
import pathlib

DATA_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "vizsmith" / "data"

SPECIES_RANGES = {
    # species: (sepalLength, sepalWidth, petalLength, petalWidth) ranges
    "setosa": ((4.3, 5.8), (2.9, 4.4), (1.0, 1.9), (0.1, 0.6)),
    "versicolor": ((4.9, 7.0), (2.0, 3.4), (3.0, 5.1), (1.0, 1.8)),
    "virginica": ((4.9, 7.9), (2.2, 3.8), (4.5, 6.9), (1.4, 2.5)),
}


# Index permutations (coprime with 50) decorrelate the four measures so the
# points scatter instead of lining up on a diagonal.
STRIDES = (1, 37, 17, 29)


def write_iris() -> None:
    rows = []
    for offset, (species, ranges) in enumerate(SPECIES_RANGES.items()):
        for i in range(50):
            values = []
            for (lo, hi), stride in zip(ranges, STRIDES):
                frac = ((i * stride + offset * 13) % 50) / 49
                values.append(round(lo + frac * (hi - lo), 2))
            rows.append([*values, species])
    with open(DATA_DIR / "iris.csv", "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["sepalLength", "sepalWidth", "petalLength", "petalWidth", "species"])
        writer.writerows(rows)


MAKES = [
    ("Chevrolet", "us"), ("Ford", "us"), ("Plymouth", "us"), ("AMC", "us"),
    ("Dodge", "us"), ("Toyota", "japan"), ("Datsun", "japan"), ("Honda", "japan"),
    ("Mazda", "japan"), ("Volkswagen", "europe"), ("Peugeot", "europe"),
    ("Audi", "europe"), ("Fiat", "europe"), ("Volvo", "europe"), ("Saab", "europe"),
]
MODELS = ["100", "200", "GL", "GT", "Custom", "Deluxe", "Sport", "Wagon"]
CYLINDERS = [4, 6, 8, 4, 4, 6, 4, 8]


def write_cars() -> None:
    rows = []
    for i in range(60):
        make, origin = MAKES[i % len(MAKES)]
        model_name = MODELS[i % len(MODELS)]
        cylinders = CYLINDERS[i % len(CYLINDERS)]
        mpg = round(12 + (i * 7) % 30 + (i % 3) * 0.5, 1)
        displacement = 85 + (i * 13) % 300
        horsepower = 52 + (i * 11) % 170
        weight = 1800 + (i * 97) % 2600
        acceleration = round(10 + (i * 3) % 14 + (i % 2) * 0.5, 1)
        year = 70 + i % 13
        rows.append([
            f"{make} {model_name} {i + 1}",
            mpg, cylinders, displacement, horsepower, weight, acceleration,
            year, origin,
        ])
    with open(DATA_DIR / "cars.csv", "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow([
            "Car", "MPG", "Cylinders", "Displacement", "Horsepower", "Weight",
            "Acceleration", "Model", "Origin",
        ])
        writer.writerows(rows)


if __name__ == "__main__":
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    write_iris()
    write_cars()
    print(f"wrote datasets to {DATA_DIR}")
