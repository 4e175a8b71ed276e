"""Homaloidal types, Hudson's test and degenerations of plane Cremona maps."""
from .errors import (CremonaError, HorizonError, ImproperTypeError,
                     NotHomaloidalError, ParseError, PreconditionError)
from .lattice import (HomaloidalType, IntegerMatrix, LatticeVector,
                      characteristic_matrix, dual_type, hudson_test, is_proper,
                      noether_check, sigma0_matrix)
from .enumeration import (enumerate_noether, enumerate_proper, family_3m,
                          family_de_jonquieres, family_sub2)
from .degeneration import (analyze, class_inclusion, degree_plus_one_holds,
                           in_closure_plus_one, theorem1_battery)
from .halphen import (bertini_matrix, lambda_a, nu_b_closed_form, nu_b_power,
                      obstruction_candidates)
from .polynomial import Poly
from .maps import (MapTriple, ProjPoint, compose, is_contracted, is_inverse_pair,
                   jacobian, multiplicity_at, pair_degeneration, primitive_part)

__version__ = "0.1.0"
