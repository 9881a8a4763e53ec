"""Massey products and the coindeterminacy invariant for finite differential
graded algebras over F2."""

from ._core import (
    ChainElement,
    CoindetResult,
    ContractError,
    DefinednessResult,
    Error,
    FourfoldBracket,
    Homology,
    HomologyClass,
    ParseError,
    Presentation,
    Refusal,
    TripleBracket,
    WellDefinednessReport,
    brute_force_coindet,
    brute_force_fourfold_defined,
    brute_force_triple,
    coindet_well_definedness_check,
    coindeterminacy,
    fixture,
    fixture_names,
    fourfold_bracket,
    half_strict_defined,
    is_fourfold_defined,
    left_div_subgroup,
    random_presentation,
    right_div_subgroup,
    triple_bracket,
)

__version__ = "1.0.0"

__all__ = [
    "ChainElement",
    "CoindetResult",
    "ContractError",
    "DefinednessResult",
    "Error",
    "FourfoldBracket",
    "Homology",
    "HomologyClass",
    "ParseError",
    "Presentation",
    "Refusal",
    "TripleBracket",
    "WellDefinednessReport",
    "brute_force_coindet",
    "brute_force_fourfold_defined",
    "brute_force_triple",
    "coindet_well_definedness_check",
    "coindeterminacy",
    "fixture",
    "fixture_names",
    "fourfold_bracket",
    "half_strict_defined",
    "is_fourfold_defined",
    "left_div_subgroup",
    "random_presentation",
    "right_div_subgroup",
    "triple_bracket",
]
