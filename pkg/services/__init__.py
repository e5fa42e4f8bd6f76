"""Instance, verification and benchmark services."""

from .instance_io import (
    read_instance,
    write_instance,
    read_matrix,
    write_matrix,
    read_sidecar,
    write_sidecar,
    SIDECAR_SUFFIX,
)
from .generator_service import GeneratorService
from .verification_service import VerificationService, VerifyGuardError
from .bench_service import BenchCase, BenchService

__all__ = [
    "read_instance",
    "write_instance",
    "read_matrix",
    "write_matrix",
    "read_sidecar",
    "write_sidecar",
    "SIDECAR_SUFFIX",
    "GeneratorService",
    "VerificationService",
    "VerifyGuardError",
    "BenchCase",
    "BenchService",
]
