"""Self-orthogonality of q-ary images and subfield-trace codes via dual-basis power sums."""

__version__ = "0.1.0"

from .basis_lab import Basis, DualBasisPair, dual_basis, is_basis, power_sum, power_sum_profile
from .codes import CyclicCode, LinearCode, ScalableCode, image_code, trace_code
from .criteria import image_selforth, trace_selforth
from .ff_core import FieldTower, default_tower
from .forms import GeneralTable, Hermitian, canonical

__all__ = [
    "Basis",
    "CyclicCode",
    "DualBasisPair",
    "FieldTower",
    "GeneralTable",
    "Hermitian",
    "LinearCode",
    "ScalableCode",
    "canonical",
    "default_tower",
    "dual_basis",
    "image_code",
    "image_selforth",
    "is_basis",
    "power_sum",
    "power_sum_profile",
    "trace_code",
    "trace_selforth",
]
