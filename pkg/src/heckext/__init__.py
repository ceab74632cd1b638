"""Exact extension-dimension computations for characters of affine
pro-p Iwahori-Hecke algebras: a closed-form engine, an independent
linear-algebra oracle over the prime field, block decomposition and
diagram-orbit comparison, plus ready-made group datums."""

from .coxeter import INFINITE, AffineCoxeterDatum, CoxeterError
from .document import (
    DocumentError,
    GroupDatum,
    dump_document,
    load_document,
    parse_document,
)
from .formula import ExtResult, ext_dimension
from .hecke import (
    HeckeCharacter,
    HeckeCharacterError,
    enumerate_hecke_characters,
    format_spec,
    hecke_character,
    is_supersingular,
    parse_spec,
)
from .oracle import TheoryMismatchError, oracle_ext_dimension, verify_solution
from .presets import Preset, PresetError, build_preset, sl2, sl_n, u11, u21
from .quiver import (
    DiagramAutomorphism,
    ExtQuiver,
    blocks,
    build_quiver,
    compare_partitions,
    l_packets,
    to_dot,
)
from .torus import (
    Character,
    TorusDatum,
    TorusError,
    c_value,
    character,
    enumerate_characters,
    s_lambda,
    trivial_character,
    twist,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "AffineCoxeterDatum",
    "CoxeterError",
    "DocumentError",
    "GroupDatum",
    "dump_document",
    "load_document",
    "parse_document",
    "ExtResult",
    "ext_dimension",
    "HeckeCharacter",
    "HeckeCharacterError",
    "enumerate_hecke_characters",
    "format_spec",
    "hecke_character",
    "is_supersingular",
    "parse_spec",
    "TheoryMismatchError",
    "oracle_ext_dimension",
    "verify_solution",
    "Preset",
    "PresetError",
    "build_preset",
    "sl2",
    "sl_n",
    "u11",
    "u21",
    "DiagramAutomorphism",
    "ExtQuiver",
    "blocks",
    "build_quiver",
    "compare_partitions",
    "l_packets",
    "to_dot",
    "Character",
    "TorusDatum",
    "TorusError",
    "c_value",
    "character",
    "enumerate_characters",
    "s_lambda",
    "trivial_character",
    "twist",
    "__version__",
]
