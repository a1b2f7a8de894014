"""Exact toolkit for the tesseract, 120-cell and 600-cell.

Construction over Q(sqrt5), full incidence enumeration with exact
predicates, metric tables (angles, boundary content, hypervolume), the
axonometric plane projection, the four-sphere vertex locator, rotation-group
pole-number accounting, and validation of the published data tables.
"""

from .build import (CANONICAL_FRAME, CELL_120, CELL_600, CORNER_FRAME,
                    Polytope, SchlafliDescriptor, TESSERACT, build_120cell,
                    build_600cell, build_tesseract, min_squared_distance,
                    normalize_unit_edge, rescale)
from .golden import (GoldenNumber, PHI, Point4, SQRT5, Vec4, Vector4,
                     golden_sqrt, rank_and_kernel)
from .incidence import (IncidenceComplex, IncidenceProfile, StructureError,
                        adjacency_lists, build_complex, complex_to_json,
                        enumerate_cells, enumerate_edges, enumerate_faces,
                        incidence_profile)
from .measure import (MetricsReport, angle_between, boundary_content,
                      cell_cell_angle, cell_volume, distance, edge_edge_angle,
                      face_face_angle, hypervolume, inradius, metrics_report)
from .projection import (AXONOMETRIC, Point2, ProjectionMatrix, Wireframe,
                      emit_csv, emit_svg, project, project_polytope,
                      render_png)
from .spheres import (DegenerateCentersError, SphereSystem, residuals,
                      solve_vertex)
from .symmetry import (PoleIdentity, SymmetryProfile, flag_count,
                       pole_identity, symmetry_profile)
from .tables import (AdjacencyDiff, JointRecord, TableFormatError,
                     TableRecord, ValidationReport, bundled_path,
                     cross_check_adjacency, load_joints, load_table,
                     modal_edge_length, validate, write_joints_csv,
                     write_vertices_csv)

__version__ = "0.1.0"
