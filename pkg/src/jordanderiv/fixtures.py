"""The three worked examples, shipped as JSON problem files under ``data/``."""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .formats import ProblemFile, load_problem

FIXTURE_NAMES = ("example1", "t2_witness", "m4_witness")


def fixture_path(name: str, directory: Optional[Union[str, Path]] = None) -> Path:
    if directory is not None:
        return Path(directory) / f"{name}.json"
    return Path(str(resources.files("jordanderiv") / "data" / f"{name}.json"))


def load_fixture(name: str, directory: Optional[Union[str, Path]] = None) -> ProblemFile:
    return load_problem(fixture_path(name, directory), require_map=True)
