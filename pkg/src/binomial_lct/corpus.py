"""The bundled example ideals (``binomial_lct/ideals/*.ideal``)."""

from __future__ import annotations

from importlib import resources

from .ideal import GeneralBinomialIdeal, parse_ideal


def names() -> list[str]:
    root = resources.files(__package__) / "ideals"
    return sorted(p.name[: -len(".ideal")] for p in root.iterdir() if p.name.endswith(".ideal"))


def path(name: str):
    return resources.files(__package__) / "ideals" / f"{name}.ideal"


def text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")


def load(name: str) -> GeneralBinomialIdeal:
    return parse_ideal(text(name))
