"""Graphs with rings embedded in surfaces, list colouring on them, and
checkers for hyperbolicity, discharging bounds and sleeve decompositions."""

from .surface_core import (EGraph, Face, FaceWalk, ParseError, RingSpec, SurfaceSummary,
                           SurgeryError, ValidationError, are_isomorphic, canonical_code,
                           curve_cut, cut_cycle, excise_cylinder, from_planar_embedding,
                           from_rotation_lists, parse_egr, planarize_crossings, serialize_egr,
                           surface_summary, trace_faces)
from .topology import (SIGMA, SIGMA_HAT, Curve, Frame, build_frame, check_frame_optimal, distance,
                       edge_width, enumerate_disk_curves, is_flat_separation, is_null_homotopic,
                       optimize_frame, segments)
from .coloring import (ColoringError, ResourceError, count_extensions, extract_kernel,
                       is_critical, solve)
from .hyperbolic import (Constants, check_cheeger, check_discharging, check_strong_hyperbolic,
                         classify_structure, derive_constants)
from .sleeve import (SleeveCertificate, SleeveDecomposition, adjoin_sleeve, find_sleeve,
                     sleeve_decompose, validate_decomposition)
from .verdicts import Verdict

__version__ = "0.1.0"
