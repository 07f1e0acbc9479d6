"""Height and weight partitions of the semiregular nilpotent orbits D_r(a_k)."""

from .closed_form import (FormulaSource, boundary_height, boundary_weight, height_closed,
                          regular_height, regular_weight, table_height, theorem_weight)
from .grading import (HeightLayers, OrbitSpec, WeightedDiagram, divisible_count, dynkin_weights,
                      height, height_layers, height_partition, valid_specs,
                      weight_partition_bruteforce)
from .partition import IntPartition, mdiff, msum, transpose
from .roots import (Root, RootSystemD, cartan_pairing, divides, extend_rank, generate_by_closure,
                    generate_by_family, highest_root, pairing, root_system)
from .verify import VerificationReport, verify_grid, verify_orbit

__version__ = "0.1.0"
