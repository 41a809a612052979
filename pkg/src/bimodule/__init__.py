"""
Bimodule Package

Contains:
- Bimodule, BimoduleMap: bimodules by action matrices and their maps
- regular, trivial, one-dimensional, augmentation and dual bimodules
- corner_modules: P = eA, Q = Ae, B = eAe
- balanced_tensor, inducedness_check
- reduce_module: X -> X / (zX + Xz)
"""

from .bimodule import (
    Bimodule, BimoduleMap, CornerModules,
    regular_bimodule, trivial_bimodule, one_dimensional_bimodule, augmentation_bimodule,
    dual_bimodule, corner_modules,
)
from .tensor import BalancedTensor, InducednessWitness, balanced_tensor, inducedness_check
from .reduction import reduce_module

__all__ = [
    'Bimodule', 'BimoduleMap', 'CornerModules',
    'regular_bimodule', 'trivial_bimodule', 'one_dimensional_bimodule', 'augmentation_bimodule',
    'dual_bimodule', 'corner_modules',
    'BalancedTensor', 'InducednessWitness', 'balanced_tensor', 'inducedness_check',
    'reduce_module',
]
