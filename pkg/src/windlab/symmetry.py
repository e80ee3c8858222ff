"""The three coordinate involutions shared by words and polynomials."""

from enum import Enum


class Symmetry(Enum):
    SWAP_XY = "swap"
    INV_X = "inv_x"
    INV_Y = "inv_y"
