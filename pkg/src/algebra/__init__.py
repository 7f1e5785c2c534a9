"""Valued field, chains and the G-module X = B × G."""

from .chains import (
    Chain,
    ChainMembershipError,
    ChainSyntaxError,
    DescendingOmegaChain,
    FiniteChain,
    LexProductChain,
    OrdinalChain,
    Ordering,
    RationalIntervalChain,
    Segment,
    Side,
    Verdict,
    WellOrderedChainError,
    parse_chain,
)
from .field import (
    PLUS_INFINITY,
    ZERO,
    AbsValue,
    FieldConfig,
    InvalidFieldConfig,
    ZeroInversionError,
    abs_value,
    uniformizer_power,
    valuation,
)
from .gmodule import (
    G0,
    IDENTITY,
    ZERO_NORM,
    BaseInterval,
    GModule,
    GroupElement,
    NormValue,
    XElement,
    is_module_map,
    trivial_module,
)
from .ordinals import Ordinal, OrdinalSyntaxError

__all__ = [
    "AbsValue",
    "BaseInterval",
    "Chain",
    "ChainMembershipError",
    "ChainSyntaxError",
    "DescendingOmegaChain",
    "FieldConfig",
    "FiniteChain",
    "G0",
    "GModule",
    "GroupElement",
    "IDENTITY",
    "InvalidFieldConfig",
    "LexProductChain",
    "NormValue",
    "Ordinal",
    "OrdinalChain",
    "OrdinalSyntaxError",
    "Ordering",
    "PLUS_INFINITY",
    "RationalIntervalChain",
    "Segment",
    "Side",
    "Verdict",
    "WellOrderedChainError",
    "XElement",
    "ZERO",
    "ZERO_NORM",
    "ZeroInversionError",
    "abs_value",
    "is_module_map",
    "parse_chain",
    "trivial_module",
    "uniformizer_power",
    "valuation",
]
