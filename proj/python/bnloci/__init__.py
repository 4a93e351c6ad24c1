"""Brill-Noether loci, Pflueger's rho_k, the gonality invariant kappa and
non-containment certificates."""

from pathlib import Path

from ._core import *  # noqa: F401,F403
from ._core import Ledger


def known_ledger_path() -> Path:
    """Path of the shipped ledger of externally established non-containments."""
    return Path(__file__).resolve().parent / "data" / "known.json"


def known_ledger() -> Ledger:
    return Ledger.load(str(known_ledger_path()))
