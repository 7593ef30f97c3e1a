from ._fbzhu import (
    parse, basis, partition_count, mul, circ, member, reduce, witness,
    normal_form, a2_mul, structure_map, verify, verify_all, registry_ids,
    conjecture_probe,
)

__all__ = [
    "parse", "basis", "partition_count", "mul", "circ", "member", "reduce",
    "witness", "normal_form", "a2_mul", "structure_map", "verify",
    "verify_all", "registry_ids", "conjecture_probe",
]
