"""Saturation numbers of virus graphs K^s_t: exhaustive search, constructions and formulas."""
from .canon import canonical_form, is_isomorphic
from .constructions import (
    AttachmentSpec,
    beta_gamma,
    build_family_member,
    ehm_graph,
    enumerate_family_members,
    k33_extremal,
    theorem4_construction,
)
from .errors import (
    CapacityError,
    ConstraintViolation,
    Graph6ParseError,
    HypothesisError,
    InternalConsistencyError,
    PreconditionError,
    SatlabError,
)
from .formulas import csat_extremal_family_id, sat_formula
from .graph import Graph, complete, copies, empty, join, union
from .graph6 import decode, encode
from .saturation import ALL, CONNECTED, NONE_FOUND, check_saturation, is_saturated, saturation_search
from .structure import classify_kt_copies, derive_core, role_avoiding_vertex, structural_audit
from .virus import VirusPattern, contains_virus, find_virus

__version__ = "0.1.0"
