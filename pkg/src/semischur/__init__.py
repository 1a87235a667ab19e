"""Schur rings over finite semigroups."""
from .partitions import Partition, bell, enumerate_partitions
from .schur import SchurMode, enumerate_schur_rings, is_schur_ring, omega
from .table import CayleyTable, validate

__all__ = [
    "CayleyTable",
    "Partition",
    "SchurMode",
    "bell",
    "enumerate_partitions",
    "enumerate_schur_rings",
    "is_schur_ring",
    "omega",
    "validate",
]
