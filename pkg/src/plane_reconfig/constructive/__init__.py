"""Generators that turn the constructive arguments into validated move sequences."""

from .convex import convex_cat_to_star, convex_path_to_path
from .peeling import peeling_connect
from .rotation import rotation_to_star
from .sequence import ConstructionError, MoveSequence, Walk
from .stars import (double_star_to_star, fan_to_radial, radial_path, radial_to_fan, star_to_star_general,
                    straighten_hull, triple_star_to_star, well_separated_to_star)

__all__ = [
    "ConstructionError", "MoveSequence", "Walk",
    "convex_cat_to_star", "convex_path_to_path", "double_star_to_star", "fan_to_radial",
    "peeling_connect", "radial_path", "radial_to_fan", "rotation_to_star", "star_to_star_general",
    "straighten_hull", "triple_star_to_star", "well_separated_to_star",
]
