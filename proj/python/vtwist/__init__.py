from ._vtwist import (
    TheoryAlarm,
    census_37b,
    characters,
    conic,
    cubic_field,
    e37b_field,
    family,
    short_quartic_matches,
    twist_value,
)

__all__ = [
    "TheoryAlarm",
    "census_37b",
    "characters",
    "conic",
    "cubic_field",
    "e37b_field",
    "family",
    "short_quartic_matches",
    "twist_value",
]
