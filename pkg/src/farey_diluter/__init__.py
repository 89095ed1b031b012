"""Dilution planning for free-flowing microfluidic diluters on Farey lattices."""
from .approx import (Approximation, LatticeComparison, TargetCF, compare_lattices,
                     find_closest_fast, find_closest_oracle, parse_target)
from .fsd import (FsdSequence, bs_sequence, fsd_sequence, reduced_farey, verify_theorems)
from .hydro import (WATER_20C, ChannelSpec, FluidProps, flux_profile, reynolds,
                    validate_laminar)
from .layout import (NetworkModel, build_network, emit_description, emit_schematic,
                     parse_description)
from .mixplan import (DilutionPlan, InletStates, MixTree, NotRepresentableError, inlet_states,
                      make_plan, replay_tree, throughput_options)
from .rational import FareySeq, farey_neighbors_check, farey_sequence, make_fraction

__version__ = "0.1.0"
