"""
solenoid_lab: towers of finite-index normal subgroups of finitely
presented groups, their finite quotients, and bihomogeneity certificates.

Main entry points: :class:`tower.Tower`, :func:`model.model_catalog`,
:func:`cosets.enumerate_cosets`, and the ``solenoid-lab`` command.
"""

from .words import GeneratorSet, Presentation, Word, parse_word, reduce
from .cosets import CosetTable, LimitExceeded, RelatorViolation, SubgroupSpec, enumerate_cosets
from .finite import FiniteGroup, GroupHom, Subgroup
from .model import FiniteSolenoidModel
from .tower import Tower, TowerSpec, Verdict

__version__ = "0.1.0"

__all__ = [
    "GeneratorSet",
    "Presentation",
    "Word",
    "parse_word",
    "reduce",
    "CosetTable",
    "LimitExceeded",
    "RelatorViolation",
    "SubgroupSpec",
    "enumerate_cosets",
    "FiniteGroup",
    "GroupHom",
    "Subgroup",
    "FiniteSolenoidModel",
    "Tower",
    "TowerSpec",
    "Verdict",
]
