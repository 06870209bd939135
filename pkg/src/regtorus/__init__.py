"""Equivariant weight polynomials and S_n-characters on the isotypic
components of the cohomology of the regular elements of a maximal torus of SL_n.
"""

from .combinat import Partition, WreathClass, partitions, wreath_classes
from .formulas import (
    p_chi,
    p_prime,
    p_wreath,
    trace_PT,
    trace_ST,
    trace_ST_total,
    trace_T,
    trace_Tn1m,
)
from .numkit import CPoly, CycNum, QPoly
from .reps import betti_numbers, decompose, isotypic_character

__version__ = "0.1.0"
