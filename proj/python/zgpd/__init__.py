"""Z2-equivariant groupoids under the injective model structure."""

from ._zgpd import (
    Map,
    ZTwoGroupoid,
    ZgpdError,
    check_univalence,
    check_universe_maps,
    classify_roundtrip,
    compose,
    deserialize,
    factorize,
    is_fibrant,
    path_object_report,
    run_cli,
    standard,
    to_one,
    universe_counts,
)

__all__ = [
    "Map",
    "ZTwoGroupoid",
    "ZgpdError",
    "check_univalence",
    "check_universe_maps",
    "classify_roundtrip",
    "compose",
    "deserialize",
    "factorize",
    "is_fibrant",
    "path_object_report",
    "run_cli",
    "standard",
    "to_one",
    "universe_counts",
]
