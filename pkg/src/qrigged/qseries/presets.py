"""Character preset registry: named fermionic/bosonic identity pairs.

Presets live in versioned JSON data files, one per family, so the concrete
sums are reviewable data rather than code.  Every preset must declare the
order to which it has been verified; the registry refuses files without
one.  Fractional exponents are handled by the series layer's uniform
rescaling q -> q^(1/d); the d actually used is recorded in the report.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from pathlib import Path as FilePath
from typing import Optional

from ..qalg import TruncatedSeries
from .sums import (AffineForm, BosonicSumSpec, Congruence, FermionicSumSpec,
                   PochhammerFactor, SeriesComparison, compare_series,
                   eval_bosonic, eval_fermionic)


class UnknownPresetError(KeyError):
    """Raised for a preset name absent from the registry."""


class PresetFormatError(ValueError):
    """Raised for malformed or incomplete preset files."""


ENV_PRESET_DIR = "QRIGGED_PRESET_DIR"
_BUILTIN_DIR = FilePath(__file__).parent / "presets"


def _frac(text) -> Fraction:
    return Fraction(str(text))


def _parse_affine(data, dim: int) -> AffineForm:
    coeffs = [_frac(x) for x in data]
    if len(coeffs) != dim + 1:
        raise PresetFormatError(
            f"affine form needs {dim + 1} coefficients (constant first)")
    return AffineForm(coeffs[0], tuple(coeffs[1:]))


def _parse_factor(data, dim: int) -> PochhammerFactor:
    length = data.get("length")
    return PochhammerFactor(
        sign=int(data.get("sign", 1)),
        exponent=_frac(data["exponent"]),
        step=_frac(data.get("step", 1)),
        length=None if length is None else _parse_affine(length, dim),
        power=int(data.get("power", -1)),
    )


def _parse_fermionic(data) -> FermionicSumSpec:
    dim = int(data["dim"])
    return FermionicSumSpec(
        dim=dim,
        quadratic=tuple(tuple(_frac(x) for x in row)
                        for row in data.get("quadratic", [])),
        linear=tuple(_frac(x) for x in data.get("linear", ["0"] * dim)),
        constant=_frac(data.get("constant", 0)),
        factors=tuple(_parse_factor(f, dim) for f in data.get("factors", [])),
        congruences=tuple(
            Congruence(_parse_affine(c["form"], dim), int(c["modulus"]))
            for c in data.get("congruences", [])),
        inequalities=tuple(_parse_affine(f, dim)
                           for f in data.get("inequalities", [])),
    )


def _parse_bosonic(data) -> BosonicSumSpec:
    theta = data.get("theta")
    kwargs = {}
    if theta is not None:
        kwargs = {
            "parity": int(theta.get("parity", 1)),
            "a2": _frac(theta["quadratic"]),
            "a1": _frac(theta.get("linear", 0)),
            "a0": _frac(theta.get("constant", 0)),
        }
    return BosonicSumSpec(
        prefactors=tuple(_parse_factor(f, 0)
                         for f in data.get("prefactors", [])),
        **kwargs,
    )


@dataclass(frozen=True)
class CharacterPreset:
    name: str
    version: int
    declared_order: int
    offset: Fraction
    fermionic: FermionicSumSpec
    bosonic: BosonicSumSpec
    note: str = ""
    negative_control: bool = False

    @staticmethod
    def from_dict(data: dict) -> "CharacterPreset":
        for key in ("name", "version", "declared_order", "fermionic", "bosonic"):
            if key not in data:
                raise PresetFormatError(f"preset is missing required key {key!r}")
        order = data["declared_order"]
        if not isinstance(order, int) or order < 1:
            raise PresetFormatError(
                "declared_order must be a positive integer; the registry "
                "refuses presets without a declared verification order")
        return CharacterPreset(
            name=str(data["name"]),
            version=int(data["version"]),
            declared_order=order,
            offset=_frac(data.get("offset", 0)),
            fermionic=_parse_fermionic(data["fermionic"]),
            bosonic=_parse_bosonic(data["bosonic"]),
            note=str(data.get("note", "")),
            negative_control=bool(data.get("negative_control", False)),
        )


@dataclass(frozen=True)
class CharacterReport:
    preset: str
    order: int
    fermionic: TruncatedSeries
    bosonic: TruncatedSeries
    comparison: SeriesComparison
    rescale_denominator: int

    @property
    def equal(self) -> bool:
        return self.comparison.equal

    def as_dict(self) -> dict:
        def side(s: TruncatedSeries) -> dict:
            return {"offset": str(s.offset), "step": str(s.step),
                    "coeffs": [str(c) for c in s.coeffs]}

        return {
            "preset": self.preset,
            "order": self.order,
            "fermionic": side(self.fermionic),
            "bosonic": side(self.bosonic),
            "rescale_denominator": self.rescale_denominator,
            **self.comparison.as_dict(),
        }


class PresetRegistry:
    """Loads preset files from the built-in directory or an override."""

    def __init__(self, directory: Optional[str] = None):
        if directory is None:
            directory = os.environ.get(ENV_PRESET_DIR) or str(_BUILTIN_DIR)
        self.directory = FilePath(directory)
        self._presets: dict[str, CharacterPreset] = {}
        for path in sorted(self.directory.glob("*.json")):
            with open(path, "r", encoding="utf-8") as fh:
                preset = CharacterPreset.from_dict(json.load(fh))
            if preset.name in self._presets:
                raise PresetFormatError(f"duplicate preset name {preset.name!r}")
            self._presets[preset.name] = preset

    def names(self) -> list[str]:
        return sorted(self._presets)

    def get(self, name: str) -> CharacterPreset:
        try:
            return self._presets[name]
        except KeyError:
            raise UnknownPresetError(
                f"unknown preset {name!r}; available: {', '.join(self.names())}"
            ) from None

    def version_summary(self) -> str:
        return ",".join(f"{p.name}@{p.version}" for p in
                        map(self.get, self.names()))


def character(preset: CharacterPreset | str, order: Optional[int] = None,
              registry: Optional[PresetRegistry] = None) -> CharacterReport:
    """Evaluate both sides of a preset and compare to the requested order
    (default: the preset's declared order)."""
    if isinstance(preset, str):
        registry = registry or PresetRegistry()
        preset = registry.get(preset)
    n = preset.declared_order if order is None else order
    fermi = eval_fermionic(preset.fermionic, n).shift(preset.offset)
    bose = eval_bosonic(preset.bosonic, n).shift(preset.offset)
    comparison = compare_series(fermi, bose)
    d = lcm(fermi.step.denominator, bose.step.denominator,
            fermi.offset.denominator, bose.offset.denominator)
    return CharacterReport(preset.name, n, fermi, bose, comparison, d)
