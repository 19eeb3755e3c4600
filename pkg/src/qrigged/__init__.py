"""Exact computation of unrestricted Kostka polynomials two independent
ways (fermionic sums over rigged configurations, energy sums over crystal
paths) and truncated q-series identity verification (Bailey machinery,
fermionic/bosonic character sums)."""

__version__ = "0.1.0"

from .qalg import (IntPolynomial, PochhammerSpec, TruncatedSeries,
                   NonInvertibleSeriesError, DivergentProductError,
                   pochhammer, pochhammer_qq, poly_add, poly_mul, q_binomial,
                   series_add, series_from_poly, series_invert, series_mul)
from .combinat import (Composition, Partition, Tableau, charge,
                       enumerate_ssyt, kostka_foulkes, kostka_number)
from .crystals import (Path, RowFactor, UnsupportedFactorShapeError, e_op,
                       enumerate_paths, f_op, intrinsic_energy,
                       is_highest_weight, local_energy, r_matrix)
from .rc import (Configuration, InvalidRiggedConfigurationError,
                 MultiplicityArray, RiggedConfiguration, cocharge,
                 enumerate_rc, lower_bound, rc_from_json, rc_to_json,
                 validate, vacancy)
from .bijection import check_statistic, path_to_rc, rc_to_path
from .kostka import (GLOBAL_NORMALIZATION, KostkaInstance, calibrate,
                     fermionic_kostka, fermionic_kostka_closed_form,
                     kostka_foulkes_via_paths, path_kostka, restricted_kostka,
                     verify_identity)
