"""Signed product cordial labelings: graph families, labeling schemes and an
exhaustive search oracle."""

from .errors import (BadParameter, InvalidEdge, InvalidVertex, LengthMismatch,
                     SpecParseError, SPCError, TooLarge, UnknownVariant)
from .families import (FamilySpec, build, bull, corona_empty, cycle, helm,
                       helm_dumbbell, parse_spec, path, path_square, splitting_graph,
                       star, wheel)
from .graph import Graph, degree, make_graph, validate
from .labeling import (CordialityReport, SignedLabeling, evaluate, induced_edge_sign,
                       negate)
from .schemes import (ExpectedCounts, SchemeId, SchemeOutput, corona_scheme,
                      helm_dumbbell_scheme, path_square_scheme, run_scheme,
                      spltg_bull_scheme, spltg_star_scheme)
from .search import (AgreementReport, SearchOptions, SearchResult, count_spc,
                     search_spc, verify_scheme_against_oracle)

__version__ = "0.1.0"
