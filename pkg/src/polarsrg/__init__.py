"""Exact constructions and checks for strongly regular graphs from hyperbolic quadrics.

Modules: ``gf`` (small finite fields), ``projgeom`` (points and subspaces),
``quadric`` (Q+(2n+1, q), polarity, generators, ovoids), ``srg`` (the graphs
G_n(q) and NO+(2n+2, 2) and their parameters), ``cliques`` (maximal cliques
and their classes), ``iso`` (isomorphism witnesses), ``export`` and ``cli``.
"""

__version__ = "0.1.0"

from .gf import FieldCtx, field_new  # noqa: E402
from .projgeom import Subspace, contains, enumerate_points, meet, normalize, span, theta  # noqa: E402
from .quadric import (LineType, QuadricCtx, SectionTag, SectionType,  # noqa: E402
                      enumerate_generators, extend_partial_ovoid, form_eval,
                      is_ovoid, is_partial_ovoid, line_type, perp, polar,
                      quadric_new, section_type)
from .srg import (EdgeLabel, LabeledGraph, SrgParams, Spectrum,  # noqa: E402
                  build_gn, build_no_plus, complement,
                  distance_two_subgraph_diameter, spectrum_of,
                  theoretical_params, verify_srg)
from .cliques import (CliqueClass, CliqueRecord, classify_all,  # noqa: E402
                      classify_clique, delsarte_bound, maximal_cliques)
from .iso import iso_check  # noqa: E402
